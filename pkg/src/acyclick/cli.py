"""Command-line front end.

Every subcommand reads a graph file (``n m`` header plus ``u v`` edge
lines), prints deterministic text by default, and prints one stable JSON
object with ``--format json``. Exit codes: 0 ok, 1 failed selftest or
internal error, 2 usage, 3 unreadable file, 4 malformed input, 5 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .coxeter import conjugate_elements, word_from_text
from .errors import AcyclickError, CapExceededError, GraphError, OrientationError
from .graphs import Graph, edge_index, parse_graph
from .kappa import (
    interval,
    interval_of_class,
    kappa_classes_bfs,
    kappa_count,
    nu_signature,
    theta,
)
from .orientations import (
    bits_text,
    count_acyclic,
    enumerate_acyclic,
    orientation_from_bits,
)
from .selftest import SelftestConfig, run_selftest
from .tutte import tutte

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_INPUT = 4
EXIT_CAP = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep run() free of SystemExit
        raise UsageError(message)


@dataclass
class CommandResult:
    """Outcome of one CLI invocation."""

    status: str
    payload: dict
    format: str = "text"
    exit_code: int = 0
    lines: list[str] = field(default_factory=list)

    def render(self) -> str:
        if self.format == "json":
            doc = {"status": self.status, **self.payload}
            return json.dumps(doc, sort_keys=True)
        return "\n".join(self.lines)


def _build_parser() -> _Parser:
    parser = _Parser(prog="acyclick", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count-acyc", parents=[common],
                       help="number of acyclic orientations")
    p.add_argument("file")

    p = sub.add_parser("count-kappa", parents=[common],
                       help="number of click classes")
    p.add_argument("file")
    p.add_argument("--method", choices=("bfs", "recursion", "tutte"),
                   default="recursion")
    p.add_argument("--max-edges", type=int, default=30)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list acyclic orientations")
    p.add_argument("file")
    p.add_argument("--classes", action="store_true",
                   help="group the orientations by click class")
    p.add_argument("--max-edges", type=int, default=30)

    p = sub.add_parser("signature", parents=[common],
                       help="cycle-basis flow signature of an orientation")
    p.add_argument("file")
    p.add_argument("bits")

    p = sub.add_parser("same-class", parents=[common],
                       help="whether two orientations are click-equivalent")
    p.add_argument("file")
    p.add_argument("bits1")
    p.add_argument("bits2")

    p = sub.add_parser("interval", parents=[common],
                       help="vertices on directed low-to-high paths of an edge")
    p.add_argument("file")
    p.add_argument("bits")
    p.add_argument("--edge", nargs=2, type=int, required=True,
                   metavar=("U", "V"))
    p.add_argument("--class", dest="class_level", action="store_true",
                   help="interval of the whole click class")

    p = sub.add_parser("theta", parents=[common],
                       help="map a click class across deletion/contraction")
    p.add_argument("file")
    p.add_argument("bits")
    p.add_argument("--edge", nargs=2, type=int, required=True,
                   metavar=("U", "V"))

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial")
    p.add_argument("file")
    p.add_argument("--eval", nargs=2, type=int, metavar=("X", "Y"))

    p = sub.add_parser("conjugate", parents=[common],
                       help="conjugacy of two Coxeter elements")
    p.add_argument("file")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("selftest", parents=[common],
                       help="run the cross-validation suite")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--random-n6", type=int, default=0)
    p.add_argument("--seed", type=int, default=61803)
    return parser


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _edge_ref(g: Graph, u: int, v: int) -> int:
    return edge_index(g, u, v)


def _signature_text(values) -> str:
    return ",".join(str(x) for x in values)


def _cmd_count_acyc(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    count = count_acyclic(g)
    return {"count": count}, [str(count)]


def _cmd_count_kappa(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    if args.method == "bfs":
        count = len(kappa_classes_bfs(g, max_edges=args.max_edges))
    elif args.method == "tutte":
        count = tutte(g).evaluate(1, 0)
    else:
        count = kappa_count(g)
    return {"count": count, "method": args.method}, [str(count)]


def _cmd_enumerate(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    if args.classes:
        classes = kappa_classes_bfs(g, max_edges=args.max_edges)
        payload = {
            "classes": [
                {
                    "representative": bits_text(c.representative),
                    "size": c.size,
                    "signature": list(c.signature.values),
                    "members": [bits_text(o) for o in c.members],
                }
                for c in classes
            ]
        }
        lines = []
        for i, c in enumerate(classes):
            lines.append(
                f"class {i}: size={c.size} representative={bits_text(c.representative)}"
                f" signature={_signature_text(c.signature.values)}"
            )
            lines.extend(f"  {bits_text(o)}" for o in c.members)
        return payload, lines
    texts = [bits_text(o) for o in enumerate_acyclic(g, max_edges=args.max_edges)]
    return {"orientations": texts}, texts


def _cmd_signature(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    o = orientation_from_bits(g, args.bits)
    sig = nu_signature(o)
    payload = {"values": list(sig.values), "fingerprint": sig.graph_fingerprint}
    return payload, [_signature_text(sig.values)]


def _cmd_same_class(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    o1 = orientation_from_bits(g, args.bits1)
    o2 = orientation_from_bits(g, args.bits2)
    same = nu_signature(o1) == nu_signature(o2)
    return {"same_class": same}, ["true" if same else "false"]


def _cmd_interval(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    o = orientation_from_bits(g, args.bits)
    e = _edge_ref(g, *args.edge)
    iv = interval_of_class(o, e) if args.class_level else interval(o, e)
    payload = {
        "vertices": list(iv.vertices),
        "relations": [list(r) for r in iv.relations],
        "empty": iv.empty,
    }
    text = "empty" if iv.empty else " ".join(str(x) for x in iv.vertices)
    return payload, [text]


def _cmd_theta(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    o = orientation_from_bits(g, args.bits)
    e = _edge_ref(g, *args.edge)
    image = theta(o, e)
    cls = image.kappa_class
    payload = {
        "kind": image.kind,
        "representative": bits_text(cls.representative),
        "signature": list(cls.signature.values),
        "target": {
            "n": cls.graph.n,
            "edges": [list(pair) for pair in cls.graph.edges],
        },
    }
    return payload, [f"{image.kind} {bits_text(cls.representative)}"]


def _cmd_tutte(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    poly = tutte(g)
    if args.eval is not None:
        x, y = args.eval
        value = poly.evaluate(x, y)
        return {"value": value, "x": x, "y": y}, [str(value)]
    triples = [list(t) for t in poly.terms()]
    lines = [f"{i} {j} {c}" for i, j, c in poly.terms()]
    lines.append(str(poly))
    return {"terms": triples, "pretty": str(poly)}, lines


def _cmd_conjugate(args) -> tuple[dict, list[str]]:
    g = _load_graph(args.file)
    w1 = word_from_text(args.word1)
    w2 = word_from_text(args.word2)
    check = conjugate_elements(g, w1, w2)
    payload = {
        "conjugate": check.conjugate,
        "left_signature": list(check.left_signature.values),
        "right_signature": list(check.right_signature.values),
    }
    lines = [
        "true" if check.conjugate else "false",
        f"left: {_signature_text(check.left_signature.values)}",
        f"right: {_signature_text(check.right_signature.values)}",
    ]
    return payload, lines


def _cmd_selftest(args) -> tuple[dict, list[str]]:
    config = SelftestConfig(max_n=args.max_n, random_n6=args.random_n6,
                            seed=args.seed)
    outcomes = run_selftest(config)
    lines = [
        f"[{'PASS' if c.ok else 'FAIL'}] {c.name} (checked {c.checked})"
        + (f": {c.detail}" if c.detail else "")
        for c in outcomes
    ]
    passed = all(c.ok for c in outcomes)
    lines.append("selftest passed" if passed else "selftest FAILED")
    payload = {
        "checks": [
            {"name": c.name, "ok": c.ok, "checked": c.checked, "detail": c.detail}
            for c in outcomes
        ],
        "passed": passed,
    }
    return payload, lines


_HANDLERS = {
    "count-acyc": _cmd_count_acyc,
    "count-kappa": _cmd_count_kappa,
    "enumerate": _cmd_enumerate,
    "signature": _cmd_signature,
    "same-class": _cmd_same_class,
    "interval": _cmd_interval,
    "theta": _cmd_theta,
    "tutte": _cmd_tutte,
    "conjugate": _cmd_conjugate,
    "selftest": _cmd_selftest,
}


def run(argv: list[str]) -> CommandResult:
    """Dispatch one invocation; never raises or exits."""
    fmt = "text"
    try:
        args = _build_parser().parse_args(argv)
        fmt = args.format
        payload, lines = _HANDLERS[args.command](args)
        code = EXIT_OK
        if args.command == "selftest" and not payload["passed"]:
            code = EXIT_FAIL
        return CommandResult("ok", payload, fmt, code, lines)
    except UsageError as exc:
        return _error(str(exc), fmt, EXIT_USAGE)
    except FileNotFoundError as exc:
        return _error(str(exc), fmt, EXIT_FILE)
    except CapExceededError as exc:
        return _error(str(exc), fmt, EXIT_CAP)
    except (GraphError, OrientationError) as exc:
        return _error(str(exc), fmt, EXIT_INPUT)
    except AcyclickError as exc:
        return _error(str(exc), fmt, EXIT_FAIL)


def _error(message: str, fmt: str, code: int) -> CommandResult:
    return CommandResult(
        "error", {"error": message}, fmt, code, [f"error: {message}"]
    )


def main() -> None:
    result = run(sys.argv[1:])
    output = result.render()
    if output:
        stream = sys.stderr if result.status == "error" else sys.stdout
        print(output, file=stream)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
