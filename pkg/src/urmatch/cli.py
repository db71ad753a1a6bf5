"""Command-line interface: graph files, JSON reports, oracle and self-test drivers.

Exit codes: 0 answer computed, 2 input/parse error, 3 oracle guard exceeded,
4 internal cross-check disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .decomposition import gallai_edmonds
from .families import random_graph
from .graph_core import Graph, bipartition
from .matching import Matching, maximum_matching
from .oracle import (
    DEFAULT_MAX_M,
    DEFAULT_MAX_N,
    GuardLimitError,
    enumerate_labeled_graphs,
    oracle_every_ur,
    oracle_some_ur,
)
from .recognition import InternalCheckError, RecognitionReport, every_ur, some_ur
from .ur_core import is_uniquely_restricted

ORACLE_LIMIT_ENV = "URMATCH_ORACLE_LIMIT"


class GraphParseError(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str) -> Graph:
    """Parse the graph file format.

    Header ``n <N>`` followed by one ``<u> <v>`` edge per line; ``#`` starts a
    comment, blank lines are ignored, CRLF is tolerated.  Edges are stored as
    unordered pairs; repeating a pair in either orientation is an error.
    """
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphParseError("malformed header, expected 'n <count>'", line_no)
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphParseError(f"malformed edge line {line!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"malformed edge line {line!r}", line_no) from None
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range in edge ({u}, {v})", line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge ({key[0]}, {key[1]})", line_no)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphParseError("missing header 'n <count>'", 1)
    return Graph.from_edges(n, edges)


def render_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _parse_matching_arg(g: Graph, text: str) -> Matching:
    edges = []
    text = text.strip()
    if text:
        for part in text.split(","):
            bits = part.strip().split("-")
            if len(bits) != 2:
                raise ValueError(f"malformed matching edge {part.strip()!r}")
            try:
                edges.append((int(bits[0].strip()), int(bits[1].strip())))
            except ValueError:
                raise ValueError(f"malformed matching edge {part.strip()!r}") from None
    return Matching.from_edges(g, edges)


def _witness_json(report: RecognitionReport):
    if report.witness is None:
        return None
    return [list(e) for e in sorted(report.witness.edges)]


def _report_json(path: str, g: Graph, report: RecognitionReport, runtime_ms: int,
                 all_failures: bool) -> dict:
    out = {
        "input": path,
        "n": g.n,
        "m": g.m,
        "property": report.property,
        "answer": report.answer,
        "witness": _witness_json(report),
        "failure": report.failure,
        "runtime_ms": runtime_ms,
    }
    if all_failures:
        out["all_failures"] = list(report.failures)
    return out


def _format_witness(report: RecognitionReport) -> str:
    assert report.witness is not None
    return ",".join(f"{u}-{v}" for u, v in sorted(report.witness.edges))


def _cmd_check(args) -> int:
    props = ["some", "every"] if args.property == "both" else [args.property]
    prefix_path = len(args.files) > 1
    for path in args.files:
        g = parse_graph(_read(path))
        # one decomposition shared by both deciders when both are requested
        ge = gallai_edmonds(g) if args.property == "both" else None
        reports = []
        for prop in props:
            t0 = time.perf_counter()
            if prop == "some":
                rep = some_ur(g, ge=ge, all_failures=args.all_failures)
            else:
                rep = every_ur(g, ge=ge, all_failures=args.all_failures)
            ms = int((time.perf_counter() - t0) * 1000)
            reports.append((prop, rep, ms))
        if args.json:
            payload = [_report_json(path, g, rep, ms, args.all_failures) for _, rep, ms in reports]
            print(json.dumps(payload[0] if len(payload) == 1 else payload))
        else:
            lead = f"{path}: " if prefix_path else ""
            for prop, rep, _ms in reports:
                tag = f" {rep.failure}" if rep.failure else ""
                name = f"{prop} " if args.property == "both" else ""
                print(f"{lead}{name}{str(rep.answer).lower()}{tag}")
                if args.witness and rep.witness is not None and rep.answer:
                    print(f"{lead}witness {_format_witness(rep)}")
    return 0


def _cmd_is_ur(args) -> int:
    g = parse_graph(_read(args.file))
    m = _parse_matching_arg(g, args.matching)
    print(str(is_uniquely_restricted(g, m)).lower())
    return 0


def _cmd_decompose(args) -> int:
    g = parse_graph(_read(args.file))
    ge = gallai_edmonds(g)
    if args.json:
        payload = {
            "input": args.file,
            "n": g.n,
            "m": g.m,
            "d_set": sorted(ge.d_set),
            "a_set": sorted(ge.a_set),
            "c_set": sorted(ge.c_set),
            "d_components": [sorted(c) for c in ge.d_components],
            "gb": {
                "n": ge.gb.n,
                "edges": [list(e) for e in ge.gb.sorted_edges()],
                "a_side": sorted(ge.gb_sides[0]),
                "component_side": sorted(ge.gb_sides[1]),
            },
            "contraction_map": [list(entry) for entry in ge.contraction_map],
        }
        print(json.dumps(payload))
    else:
        print("d_set", " ".join(map(str, sorted(ge.d_set))))
        print("a_set", " ".join(map(str, sorted(ge.a_set))))
        print("c_set", " ".join(map(str, sorted(ge.c_set))))
        for i, comp in enumerate(ge.d_components):
            print(f"d_component {i}:", " ".join(map(str, sorted(comp))))
        print(f"gb n={ge.gb.n} edges", " ".join(f"{u}-{v}" for u, v in ge.gb.sorted_edges()))
    return 0


def _oracle_limits(force: bool) -> tuple[int, int]:
    if force:
        return sys.maxsize, sys.maxsize
    max_n = DEFAULT_MAX_N
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env is not None:
        try:
            max_n = int(env)
        except ValueError:
            raise ValueError(f"{ORACLE_LIMIT_ENV} must be an integer, got {env!r}") from None
    return max_n, DEFAULT_MAX_M if max_n <= DEFAULT_MAX_N else max_n * (max_n - 1) // 2


def _cmd_oracle(args) -> int:
    g = parse_graph(_read(args.file))
    max_n, max_m = _oracle_limits(args.force)
    fn = oracle_some_ur if args.property == "some" else oracle_every_ur
    print(str(fn(g, max_n=max_n, max_m=max_m)).lower())
    return 0


def _selftest_instance(g: Graph, max_n: int, max_m: int) -> list[str]:
    problems = []
    rs = some_ur(g)
    re = every_ur(g, cross_validate=True)
    if rs.answer != oracle_some_ur(g, max_n=max_n, max_m=max_m):
        problems.append("some_ur disagrees with oracle")
    if re.answer != oracle_every_ur(g, max_n=max_n, max_m=max_m):
        problems.append("every_ur disagrees with oracle")
    parts = bipartition(g)
    if parts is not None:
        rg = every_ur(g, route_bipartite=False, cross_validate=True)
        if rg.answer != re.answer:
            problems.append("bipartite and general every_ur routes disagree")
    if rs.answer:
        w = rs.witness
        if w is None or len(w.edges) != len(maximum_matching(g).edges) \
                or not is_uniquely_restricted(g, w):
            problems.append("some_ur witness is not a maximum uniquely restricted matching")
    return problems


def _cmd_selftest(args) -> int:
    if args.nmax > 6:
        print("selftest: --nmax above 6 is not supported (exhaustive sweep)", file=sys.stderr)
        return 2
    disagreements = 0
    exhaustive = 0
    for n in range(args.nmax + 1):
        for g in enumerate_labeled_graphs(n):
            exhaustive += 1
            for msg in _selftest_instance(g, DEFAULT_MAX_N, DEFAULT_MAX_M):
                disagreements += 1
                print(f"disagreement on n={n} edges={sorted(g.edges)}: {msg}", file=sys.stderr)
    rng = random.Random(args.seed)
    for _ in range(args.random):
        n = rng.randrange(7, 11)
        p = rng.choice([0.2, 0.4, 0.6])
        g = random_graph(n, p, rng)
        for msg in _selftest_instance(g, 12, 64):
            disagreements += 1
            print(f"disagreement on random n={n} edges={sorted(g.edges)}: {msg}", file=sys.stderr)
    print(f"selftest: {exhaustive} exhaustive + {args.random} random instances, "
          f"{disagreements} disagreements")
    return 0 if disagreements == 0 else 4


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urmatch",
        description="Decide whether some / every maximum matching of a graph is uniquely restricted.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the polynomial deciders on graph files")
    p_check.add_argument("files", nargs="+")
    p_check.add_argument("--property", choices=["some", "every", "both"], required=True)
    p_check.add_argument("--json", action="store_true")
    p_check.add_argument("--witness", action="store_true")
    p_check.add_argument("--all-failures", action="store_true", dest="all_failures")
    p_check.set_defaults(fn=_cmd_check)

    p_isur = sub.add_parser("is-ur", help="test one explicit matching")
    p_isur.add_argument("file")
    p_isur.add_argument("--matching", required=True, help='edges as "u-v,u-v,..."')
    p_isur.set_defaults(fn=_cmd_is_ur)

    p_dec = sub.add_parser("decompose", help="print the Gallai-Edmonds decomposition")
    p_dec.add_argument("file")
    p_dec.add_argument("--json", action="store_true")
    p_dec.set_defaults(fn=_cmd_decompose)

    p_oracle = sub.add_parser("oracle", help="brute-force reference answer (guarded)")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--property", choices=["some", "every"], required=True)
    p_oracle.add_argument("--force", action="store_true", help="disable the size guard")
    p_oracle.set_defaults(fn=_cmd_oracle)

    p_self = sub.add_parser("selftest", help="cross-validate the deciders against the oracle")
    p_self.add_argument("--nmax", type=int, default=5)
    p_self.add_argument("--random", type=int, default=200)
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(fn=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except GuardLimitError as exc:
        print(f"oracle guard: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"internal cross-check disagreement: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
