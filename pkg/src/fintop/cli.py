"""Command-line interface.

Subcommands: ``enum-topologies``, ``enum-words``, ``op`` (run any public
operation on values in the shared text formats), ``verify`` (run a named
suite), ``gram`` (pairing matrices), ``table`` (count tables).

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hopf, pictures, ribbon, tpartitions, wqsym
from .errors import FintopError
from .lincomb import LinComb
from .linalg import exact_rank
from .qpoly import parse_qpoly, qpoly_eval
from .serialize import emit_csv_matrix, emit_json, label_to_text, render_lincomb
from .suites import SUITE_NAMES, run_suite
from .topology import Topology, enumerate_topologies, refinement_leq, topology_of_word
from .words import (
    ascent_set,
    j_involution,
    pack,
    packed_words,
    restrict_word,
    standardize,
    std_fiber,
    word_from_text,
    word_to_text,
)

USAGE_ERROR = 2


def _topo(text: str) -> Topology:
    return Topology.from_text(text)


def _word(text: str):
    return word_from_text(text)


def _intset(text: str) -> set[int]:
    return set(word_from_text(text))


def _matrix(text: str) -> list[list[int]]:
    return [[int(v) for v in row.split(",")] for row in text.split(";") if row.strip()]


def _point(text: str) -> tuple:
    return tuple(Fraction(tok) for tok in text.split(","))


def _set_text(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


# Each op: (argument parsers, callable, result renderer tag). Renderers:
# 'word', 'lincomb', 'topology', 'bool', 'int', 'text', 'sets', 'factors',
# 'words', 'stanley', 'report'.
OPS = {
    "pack": ((_word,), pack, "word"),
    "restrict-word": ((_word, _intset), restrict_word, "word"),
    "std": ((_word,), standardize, "word"),
    "j": ((_word,), j_involution, "word"),
    "ascent-set": ((_word,), lambda f: sorted(ascent_set(f)), "sets_flat"),
    "make-topology": ((_topo,), lambda t: t, "topology"),
    "open-sets": ((_topo,), lambda t: t.open_sets(), "sets"),
    "topology-of-word": ((_word,), topology_of_word, "topology"),
    "restrict-std": ((_topo, _intset), lambda t, y: t.restrict(y), "topology"),
    "iota": ((_topo,), lambda t: t.complement(), "topology"),
    "classes": ((_topo,), lambda t: t.classes, "sets"),
    "bar": ((_topo,), lambda t: t.collapse(), "topology"),
    "c-defect": ((_topo,), lambda t: t.class_defect(), "int"),
    "is-t0": ((_topo,), lambda t: t.is_t0(), "bool"),
    "refinement-leq": ((_topo, _topo), refinement_leq, "bool"),
    "product-dot": ((_topo, _topo), hopf.product_dot, "topology"),
    "product-down": ((_topo, _topo), hopf.product_down, "topology"),
    "coproduct": ((_topo,), hopf.coproduct, "lincomb"),
    "decompose-dot": ((_topo,), lambda t: hopf.decompose(t, "dot"), "factors"),
    "decompose-down": ((_topo,), lambda t: hopf.decompose(t, "down"), "factors"),
    "indec-class": ((_topo,), hopf.indecomposability_class, "text"),
    "theta-q": ((_topo,), hopf.theta_q, "lincomb"),
    "antipode": ((_topo,), hopf.antipode_label, "lincomb"),
    "ribbon-expand": ((_topo,), ribbon.ribbon_expansion, "lincomb"),
    "ribbon-product-dot": ((_topo, _topo), ribbon.ribbon_product_dot, "lincomb"),
    "ribbon-product-down": ((_topo, _topo), ribbon.ribbon_product_down, "lincomb"),
    "ribbon-coproduct": ((_topo,), ribbon.ribbon_coproduct, "lincomb"),
    "pictures": ((_topo, _topo), pictures.pictures_count, "int"),
    "wqsym-product": ((_word, _word), wqsym.wqsym_product, "lincomb"),
    "wqsym-coproduct": ((_word,), wqsym.wqsym_coproduct, "lincomb"),
    "shuffle": ((_word, _word), wqsym.shuffle_product, "lincomb"),
    "fqsym-product": ((_word, _word), wqsym.fqsym_product, "lincomb"),
    "varpi": ((_word,), lambda f: wqsym.varpi(LinComb.term(f)), "lincomb"),
    "word-leq": ((_word, _word), wqsym.word_leq, "bool"),
    "word-leq-prime": ((_word, _word), wqsym.word_leq_prime, "bool"),
    "phi": ((str, _word), wqsym.phi, "lincomb"),
    "std-fiber": ((_word,), std_fiber, "words"),
    "gamma-q": ((_topo,), tpartitions.gamma_q, "lincomb"),
    "generalized-partitions": (
        (_topo,),
        lambda t: [f for f, _ in tpartitions.generalized_partitions(t)],
        "words",
    ),
    "strict-partitions": ((_topo,), tpartitions.strict_partitions, "words"),
    "linear-extensions": ((_topo,), tpartitions.linear_extensions, "words"),
    "l-morphism": ((_topo,), tpartitions.L_morphism, "lincomb"),
    "stanley": ((_topo,), tpartitions.stanley_decomposition, "stanley"),
    "order-iso-check": ((int,), wqsym.order_iso_check, "report"),
    "qpoly-add": (
        (parse_qpoly, parse_qpoly),
        lambda a, b: a + b,
        "qpoly",
    ),
    "qpoly-mul": ((parse_qpoly, parse_qpoly), lambda a, b: a * b, "qpoly"),
    "qpoly-neg": ((parse_qpoly,), lambda a: -a, "qpoly"),
    "qpoly-eval": ((parse_qpoly, _point), qpoly_eval, "text"),
    "exact-rank": ((_matrix,), exact_rank, "int"),
}


def _render_result(result, tag: str, fmt: str) -> str:
    if tag == "lincomb":
        return emit_json(result) if fmt == "json" else render_lincomb(result)
    if tag == "word":
        return json.dumps({"word": word_to_text(result)}) if fmt == "json" else word_to_text(result)
    if tag == "topology":
        return json.dumps({"topology": result.key}) if fmt == "json" else result.key
    if tag == "bool":
        return json.dumps({"value": bool(result)}) if fmt == "json" else str(bool(result)).lower()
    if tag == "int":
        return json.dumps({"value": result}) if fmt == "json" else str(result)
    if tag in ("text", "qpoly"):
        text = result.to_text() if tag == "qpoly" else str(result)
        return json.dumps({"value": text}) if fmt == "json" else text
    if tag == "sets":
        items = [list(s) for s in result]
        if fmt == "json":
            return json.dumps({"sets": items})
        return "\n".join(_set_text(s) for s in result)
    if tag == "sets_flat":
        if fmt == "json":
            return json.dumps({"positions": list(result)})
        return _set_text(result)
    if tag == "factors":
        keys = [f.key for f in result.factors]
        if fmt == "json":
            return json.dumps({"kind": result.kind, "factors": keys})
        return " | ".join(keys)
    if tag == "words":
        texts = [word_to_text(w) for w in result]
        if fmt == "json":
            return json.dumps({"words": texts})
        return "\n".join(texts)
    if tag == "stanley":
        data = {
            word_to_text(f): [word_to_text(g) for g in downset]
            for f, downset in sorted(result.items())
        }
        if fmt == "json":
            return json.dumps({"down_sets": data})
        return "\n".join(f"{f}: {' '.join(gs)}" for f, gs in data.items())
    if tag == "report":
        if fmt == "json":
            return json.dumps(
                {
                    "n": result["n"],
                    "pairs": result["pairs"],
                    "ok": result["ok"],
                    "mismatch": repr(result["mismatch"]) if result["mismatch"] else None,
                }
            )
        return f"n={result['n']} pairs={result['pairs']} ok={str(result['ok']).lower()}"
    raise AssertionError(tag)


def _cmd_enum_topologies(args) -> int:
    for t in enumerate_topologies(args.n, cap=args.cap):
        print(t.key)
    return 0


def _cmd_enum_words(args) -> int:
    for w in packed_words(args.n, cap=args.cap):
        print(word_to_text(w))
    return 0


def _cmd_op(args) -> int:
    if args.name not in OPS:
        print(f"unknown operation {args.name!r}", file=sys.stderr)
        return USAGE_ERROR
    parsers, fn, tag = OPS[args.name]
    if len(args.args) != len(parsers):
        print(
            f"operation {args.name} takes {len(parsers)} argument(s), got {len(args.args)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    values = [p(a) for p, a in zip(parsers, args.args)]
    result = fn(*values)
    print(_render_result(result, tag, args.format))
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, max_degree=args.max_degree, slow=args.slow)
    if args.format == "json":
        print(json.dumps(report.as_dict()))
    else:
        status = "ok" if report.ok else "FAILED"
        print(
            f"suite {report.suite}: {report.passed}/{report.attempted} checks passed "
            f"(max degree {report.max_degree}, {report.seconds:.1f}s) {status}"
        )
        if report.counterexample:
            print(f"first counterexample: {report.counterexample}")
    return 0 if report.ok else 1


def _cmd_gram(args) -> int:
    if args.degree > 4 or (args.degree == 4 and not args.slow):
        print("gram matrices above degree 3 need --slow", file=sys.stderr)
        return USAGE_ERROR
    labels, matrix = pictures.gram_matrix(args.degree)
    if args.format == "json":
        payload = {
            "labels": [t.key for t in labels],
            "matrix": matrix,
        }
        if args.rank:
            rank = exact_rank(matrix)
            payload["rank"] = rank
            payload["kernel"] = len(matrix) - rank
        print(json.dumps(payload))
        return 0
    out = emit_csv_matrix(labels, matrix)
    sys.stdout.write(out)
    if args.rank:
        rank = exact_rank(matrix)
        print(f"rank,{rank}")
        print(f"kernel,{len(matrix) - rank}")
    return 0


def _cmd_table(args) -> int:
    from .goldens import FUBINI  # reference values live with the goldens

    if args.kind == "counts":
        limit = 6 if args.slow else 5
        if args.max > limit:
            print(
                f"counts beyond n={limit} exceed the cap"
                + ("" if args.slow else " (use --slow for n=6)"),
                file=sys.stderr,
            )
            return USAGE_ERROR
        values = [len(enumerate_topologies(n, cap=6)) for n in range(1, args.max + 1)]
    elif args.kind == "fubini":
        if args.max > 7:
            print("word counts beyond n=7 exceed the cap", file=sys.stderr)
            return USAGE_ERROR
        values = [len(packed_words(n, cap=7)) for n in range(1, args.max + 1)]
    else:  # indec
        limit = 6 if args.slow else 5
        if args.max > limit:
            print("indecomposable counts beyond the cap", file=sys.stderr)
            return USAGE_ERROR
        rows = {"I": [], "downI": [], "BI": []}
        for n in range(1, args.max + 1):
            topos = enumerate_topologies(n, cap=6)
            n_dot = sum(1 for t in topos if hopf.is_indecomposable(t, "dot"))
            n_down = sum(1 for t in topos if hopf.is_indecomposable(t, "down"))
            n_bi = sum(
                1
                for t in topos
                if hopf.is_indecomposable(t, "dot") and hopf.is_indecomposable(t, "down")
            )
            rows["I"].append(n_dot)
            rows["downI"].append(n_down)
            rows["BI"].append(n_bi)
        if args.format == "json":
            print(json.dumps(rows))
        elif args.format == "csv":
            for name, vals in rows.items():
                print(name + "," + ",".join(map(str, vals)))
        else:
            for name, vals in rows.items():
                print(f"{name}: " + ", ".join(map(str, vals)))
        return 0
    if args.format == "json":
        print(json.dumps({"values": values}))
    elif args.format == "csv":
        print(",".join(map(str, values)))
    else:
        print(", ".join(map(str, values)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fintop",
        description="Exact computations in the Hopf algebra of finite topologies",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum-topologies", help="list all topologies on n points")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=6)
    p.set_defaults(fn=_cmd_enum_topologies)

    p = sub.add_parser("enum-words", help="list all packed words of length n")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=8)
    p.set_defaults(fn=_cmd_enum_words)

    p = sub.add_parser("op", help="run one operation on text-format inputs")
    p.add_argument("name", help="operation name, e.g. pack, gamma-q, pictures")
    p.add_argument("args", nargs="*")
    p.set_defaults(fn=_cmd_op)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--slow", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gram", help="pairing Gram matrix of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", action="store_true")
    p.add_argument("--slow", action="store_true")
    p.set_defaults(fn=_cmd_gram)

    p = sub.add_parser("table", help="count tables")
    p.add_argument("kind", choices=("counts", "indec", "fubini"))
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--slow", action="store_true")
    p.set_defaults(fn=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FintopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
