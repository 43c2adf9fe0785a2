"""``chordpack`` command line: one subcommand per pipeline stage.

Graph-consuming subcommands read graph6 lines from stdin (or ``--input``)
and answer one line per graph.  Witnesses are printed as
``v0 v1 ... | a-b c-d`` (cycle, then chords), several cycles joined by
`` ; ``.  ``--json`` switches every answer to one JSON object per line.

Caps can be overridden with ``CHORDED_PACK_CAPS``, e.g.
``CHORDED_PACK_CAPS="exact_n=40,oracle_n=14,budget=500000"``.

Exit codes: 0 success, 1 usage or operational error, 2 violations found
(``verify`` and ``suite`` only).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterator
from dataclasses import dataclass

from . import __version__
from .chorded import Found, find_chorded_2connected
from .cycles import ChordedCycle, find_chorded_cycle
from .errors import CapacityExceeded, ChordPackError
from .generators import extremal_g1, extremal_g2, random_delta2_graph
from .graph import EXACT_MAX_N, Graph, delta_2
from .graph6 import parse_graph6, serialize_graph6
from .harness import lemma_suite, oracle_pack_exists, sweep, validate_witness
from .oracle import ORACLE_MAX_N
from .packing import DEFAULT_BUDGET, Witness, exact_min_system, pack_chorded_cycles
from .structure import block_decomposition, is_two_connected

__all__ = ["main", "CliConfig", "find_chorded", "load_caps"]

CAPS_ENV = "CHORDED_PACK_CAPS"


@dataclass(frozen=True)
class CliConfig:
    exact_n: int = EXACT_MAX_N
    oracle_n: int = ORACLE_MAX_N
    budget: int = DEFAULT_BUDGET


class UsageError(Exception):
    pass


def load_caps(text: str | None) -> CliConfig:
    """Parse ``key=value`` pairs separated by commas."""
    if not text:
        return CliConfig()
    values = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or key not in ("exact_n", "oracle_n", "budget"):
            raise UsageError(f"bad {CAPS_ENV} entry {item!r}")
        try:
            val = int(raw)
        except ValueError:
            raise UsageError(f"bad {CAPS_ENV} value {item!r}") from None
        if val <= 0:
            raise UsageError(f"{CAPS_ENV} caps must be positive: {item!r}")
        values[key] = val
    if values.get("exact_n", 0) > EXACT_MAX_N:
        raise UsageError(f"exact_n cannot exceed {EXACT_MAX_N}")
    return CliConfig(**values)


def find_chorded(g: Graph) -> tuple[ChordedCycle | None, str]:
    """The chorded cycle reported by ``find-chorded``, with the route that produced it."""
    if g.n >= 4 and is_two_connected(g):
        res = find_chorded_2connected(g)
        if isinstance(res, Found):
            return res.cycle, res.route
        return None, "exhaustive"
    return find_chorded_cycle(g), "exhaustive"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chordpack", description="Chorded-cycle packing toolkit.")
    parser.add_argument("--version", action="version", version=f"chordpack {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output everywhere")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--input", metavar="PATH", help="read graph6 from a file instead of stdin")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("delta2", parents=[common], help="minimum neighbourhood union over nonadjacent pairs")
    sub.add_parser("blocks", parents=[common], help="block decomposition as JSON")
    sub.add_parser("find-chorded", parents=[common], help="one chorded cycle or 'none'")
    p = sub.add_parser("min-system", parents=[common], help="minimum-order system of R disjoint chorded cycles")
    p.add_argument("--r", type=int, required=True)
    p = sub.add_parser("pack", parents=[common], help="search for S disjoint chorded cycles")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--budget", type=int)
    p = sub.add_parser("oracle", parents=[common], help="brute-force existence of S disjoint chorded cycles")
    p.add_argument("--s", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="theorem sweep over a graph6 stream (JSON report)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--mode", choices=["verify", "hunt-boundary"], default="verify")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")
    p = sub.add_parser("gen", parents=[common], help="extremal graph in graph6")
    p.add_argument("--family", choices=["g1", "g2"], required=True)
    p.add_argument("--s", type=int, required=True)
    p = sub.add_parser("rand", parents=[common], help="seeded random graph with delta_2 >= T")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p = sub.add_parser("suite", parents=[common], help="run one lemma property suite (JSON report)")
    p.add_argument("--scope", required=True, choices=["two_path", "degree2", "v2", "c_mini", "five_path", "degree3", "six_cycle"])
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--instances", type=int, default=1000)
    p.add_argument("--corrupt", action="store_true", help="inject a non-minimal system as a negative control")
    return parser


def _graphs(args) -> Iterator[tuple[str, Graph]]:
    if args.input:
        with open(args.input) as fh:
            yield from _parse_lines(fh)
    else:
        yield from _parse_lines(sys.stdin)


def _parse_lines(lines) -> Iterator[tuple[str, Graph]]:
    for line in lines:
        text = line.strip()
        if text:
            yield text, parse_graph6(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _format_cycles(cycles: list[dict]) -> str:
    parts = []
    for c in cycles:
        verts = " ".join(str(v) for v in c["cycle"])
        chords = " ".join(f"{a}-{b}" for a, b in c["chords"])
        parts.append(f"{verts} | {chords}")
    return " ; ".join(parts)


def _checked(g: Graph, cycles: list[dict], s: int | None = None) -> list[dict]:
    problems = validate_witness(g, cycles, s)
    if problems:
        raise ChordPackError(f"refusing to print an invalid witness: {problems}")
    return cycles


def _require(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapacityExceeded(f"n={g.n} above the cap {cap}")


def _value(x):
    return "inf" if x == float("inf") else x


def _run(args, caps: CliConfig, out) -> int:
    cmd = args.command
    if cmd == "gen":
        g = extremal_g1(args.s) if args.family == "g1" else extremal_g2(args.s)
        text = serialize_graph6(g)
        out.write((_dump({"graph6": text}) if args.json else text) + "\n")
        return 0
    if cmd == "rand":
        for k in range(args.count):
            g = random_delta2_graph(args.n, args.t, args.seed + k)
            text = serialize_graph6(g)
            out.write((_dump({"graph6": text, "seed": args.seed + k}) if args.json else text) + "\n")
        return 0
    if cmd == "verify":
        mode = "hunt_boundary" if args.mode == "hunt-boundary" else "verify"
        lines = open(args.input) if args.input else sys.stdin
        try:
            summary = sweep(
                lines,
                args.s,
                mode,
                jobs=args.jobs,
                oracle_cap=caps.oracle_n,
                budget=args.budget or caps.budget,
            )
        finally:
            if args.input:
                lines.close()
        out.write(_dump(summary.to_dict(timing=args.timing)) + "\n")
        return summary.exit_code()
    if cmd == "suite":
        summary = lemma_suite(args.scope, args.bound, args.seed, args.instances, args.corrupt)
        out.write(_dump(summary.to_dict()) + "\n")
        return summary.exit_code()

    for text, g in _graphs(args):
        if cmd == "delta2":
            val = _value(delta_2(g))
            line = _dump({"graph6": text, "delta2": val}) if args.json else str(val)
        elif cmd == "blocks":
            dec = block_decomposition(g)
            line = _dump(
                {
                    "blocks": [sorted(b) for b in dec.blocks],
                    "cut_vertices": sorted(dec.cut_vertices),
                    "leaf_blocks": list(dec.leaf_blocks),
                }
            )
        elif cmd == "find-chorded":
            _require(g, caps.exact_n)
            cyc, route = find_chorded(g)
            cycles = [] if cyc is None else _checked(g, [cyc.to_dict()])
            if args.json:
                line = _dump({"graph6": text, "found": cyc is not None, "route": route, "cycles": cycles})
            else:
                line = "none" if cyc is None else _format_cycles(cycles)
        elif cmd == "min-system":
            _require(g, caps.exact_n)
            sys_ = exact_min_system(g, args.r)
            cycles = [] if sys_ is None else _checked(g, [c.to_dict() for c in sys_.cycles], args.r)
            if args.json:
                payload = {"graph6": text, "found": sys_ is not None, "cycles": cycles}
                if sys_ is not None:
                    payload["total_vertices"] = sys_.total_vertices
                line = _dump(payload)
            else:
                line = "none" if sys_ is None else _format_cycles(cycles)
        elif cmd == "pack":
            _require(g, caps.exact_n)
            res = pack_chorded_cycles(g, args.s, args.budget or caps.budget)
            kind = type(res).__name__
            cycles = []
            if isinstance(res, Witness):
                cycles = _checked(g, [c.to_dict() for c in res.system.cycles], args.s)
            if args.json:
                line = _dump(
                    {"graph6": text, "outcome": kind, "strategy": res.strategy, "flags": list(res.flags), "cycles": cycles}
                )
            else:
                line = f"{kind}: {_format_cycles(cycles)}" if cycles else kind
                if res.flags:
                    line += " [" + ",".join(res.flags) + "]"
        elif cmd == "oracle":
            exists, sys_ = oracle_pack_exists(g, args.s, caps.oracle_n)
            cycles = [] if sys_ is None else _checked(g, [c.to_dict() for c in sys_.cycles], args.s)
            if args.json:
                line = _dump({"graph6": text, "exists": exists, "cycles": cycles})
            else:
                line = "true" if exists else "false"
        else:  # pragma: no cover - argparse rejects anything else
            raise UsageError(f"unknown command {cmd}")
        out.write(line + "\n")
        out.flush()
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        caps = load_caps(os.environ.get(CAPS_ENV))
        args = parser.parse_args(argv)
        for name in ("s", "r", "budget", "jobs", "count", "bound", "instances"):
            val = getattr(args, name, None)
            if val is not None and val < 1:
                raise UsageError(f"--{name} must be positive")
        return _run(args, caps, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ChordPackError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
