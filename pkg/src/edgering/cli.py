"""``edgering`` command-line interface."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TextIO

from .augment import augment, render_augmented
from .altpath import collapse_cycle, cycles_alternating_connected, generalized_alternating_connected
from .crosscheck import cross_check
from .cycles import DEFAULT_CYCLE_CAP, CycleDesc, disjoint_odd_pairs, enumerate_cycles, find_cycle
from .errors import CapacityError, EdgeringError
from .model import EdgeRef, MixedGraph, format_monomial, graph_to_json, load_graph
from .normality import NormalityReport, decide, witness_for_pair
from .oracle.semigroup import DEFAULT_DEGREE_BOUND, oracle_normality
from .random_graphs import seeded_graphs

COMMANDS = ("decide", "normalize", "witness", "cycles", "connect", "augment", "oracle", "verify")


@dataclass
class RunConfig:
    command: str
    path: str | None = None
    monomials: bool = False
    json: bool = False
    cycle_cap: int = DEFAULT_CYCLE_CAP
    degree_bound: int = DEFAULT_DEGREE_BOUND
    coeff_cap: int | None = None
    seed: int | None = None
    samples: int = 500
    odd_only: bool = False
    cycle1: list[int] | None = None
    cycle2: list[int] | None = None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _vertex_list(text: str) -> list[int]:
    try:
        verts = [int(x) - 1 for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None
    if not verts or min(verts) < 0:
        raise argparse.ArgumentTypeError("vertex lists are 1-based and nonempty")
    return verts


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgering", description="Normality of edge rings of signed and mixed graphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", help="graph file (stdin when omitted)")
    p.add_argument("--monomials", action="store_true", help="input lists generator monomials")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.add_argument("--cycle-cap", type=_positive, default=DEFAULT_CYCLE_CAP)
    p.add_argument("--degree-bound", type=_positive, default=DEFAULT_DEGREE_BOUND)
    p.add_argument("--coeff-cap", type=_positive, default=None)
    p.add_argument("--seed", type=int, default=None, help="verify: check seeded random graphs instead of a file")
    p.add_argument("--samples", type=_positive, default=500, help="verify --seed: number of graphs")
    p.add_argument("--odd-only", action="store_true", help="cycles: list odd cycles only")
    p.add_argument("--cycle1", type=_vertex_list, help="connect: vertices of the first cycle, e.g. '1 2 3'")
    p.add_argument("--cycle2", type=_vertex_list, help="connect: vertices of the second cycle")
    return p


# ----------------------------------------------------------------- helpers


def _frac(x) -> str | int:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ordered(w: dict[EdgeRef, object]) -> list[tuple[EdgeRef, object]]:
    return sorted(((r, x) for r, x in w.items() if x), key=lambda rx: (rx[0].kind != "signed", rx[0].id))


def _weights_json(g: MixedGraph, w: dict[EdgeRef, object]) -> dict[str, object]:
    return {g.label(r): _frac(x) for r, x in _ordered(w)}


def _weights_text(g: MixedGraph, w: dict[EdgeRef, object]) -> str:
    return ", ".join(f"{g.label(r)}: {_frac(x)}" for r, x in _ordered(w)) or "(none)"


def _cycle_json(g: MixedGraph, c: CycleDesc) -> dict:
    out = {
        "vertices": [v + 1 for v in c.vertices],
        "edges": [g.label(e) for e in c.edges],
        "signed_edges": c.signed_count,
    }
    if c.signatures is not None:
        out["signatures"] = {str(v + 1): s for v, s in sorted(c.signatures.items())}
    return out


def _report_json(g: MixedGraph, report: NormalityReport) -> dict:
    data = {
        "normal": report.normal,
        "graph": graph_to_json(g),
        "graph_kind": report.graph_kind,
        "checked_pairs": report.checked_pairs,
        "generators": [format_monomial(v) for v in report.generators],
        "generator_vectors": [list(v) for v in report.generators],
        "exceptional_pairs": [
            {
                "cycle1": _cycle_json(g, p.pair.c1),
                "cycle2": _cycle_json(g, p.pair.c2),
                "monomial": format_monomial(p.m_pi),
            }
            for p in report.exceptional_pairs
        ],
    }
    if not report.normal:
        data["certificates"] = [_witness_json(g, witness_for_pair(g, p)) for p in report.exceptional_pairs]
    return data


def _witness_json(g: MixedGraph, w) -> dict:
    return {
        "monomial": format_monomial(w.monomial),
        "vector": list(w.monomial),
        "half_weights": _weights_json(g, w.half_weights),
        "lattice_weights": _weights_json(g, w.lattice_weights),
        "doubled_weights": _weights_json(g, w.doubled_weights),
    }


def _dump(data: dict, out: TextIO) -> None:
    out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------- commands


def _cmd_decide(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    report = decide(g, cfg.cycle_cap)
    if cfg.json:
        _dump({"command": "decide", **_report_json(g, report)}, out)
    elif report.normal:
        out.write("NORMAL\n")
    else:
        out.write("NOT NORMAL\n")
        out.write("generators: " + ", ".join(format_monomial(v) for v in report.generators) + "\n")
    return 0


def _cmd_normalize(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    gens = decide(g, cfg.cycle_cap).generators
    if cfg.json:
        _dump({"command": "normalize", "generators": [format_monomial(v) for v in gens]}, out)
    else:
        for v in gens:
            out.write(format_monomial(v) + "\n")
    return 0


def _cmd_witness(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    report = decide(g, cfg.cycle_cap)
    if report.normal:
        if cfg.json:
            _dump({"command": "witness", "normal": True, "witness": None}, out)
        else:
            out.write("NORMAL (no witness)\n")
        return 0
    pair = report.exceptional_pairs[0]
    w = witness_for_pair(g, pair)
    if cfg.json:
        _dump(
            {
                "command": "witness",
                "normal": False,
                "cycle1": _cycle_json(g, pair.pair.c1),
                "cycle2": _cycle_json(g, pair.pair.c2),
                "witness": _witness_json(g, w),
            },
            out,
        )
        return 0
    double = format_monomial(tuple(2 * x for x in w.monomial))
    out.write(f"witness: {format_monomial(w.monomial)}  vector {list(w.monomial)}\n")
    out.write(f"cycle 1: {pair.pair.c1.describe(g)}\n")
    out.write(f"cycle 2: {pair.pair.c2.describe(g)}\n")
    out.write(f"cone (half weights): {_weights_text(g, w.half_weights)}\n")
    out.write(f"lattice (integer weights): {_weights_text(g, w.lattice_weights)}\n")
    out.write(f"square {double} in k[G]: {_weights_text(g, w.doubled_weights)}\n")
    return 0


def _cmd_cycles(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    cycles = enumerate_cycles(g, cfg.cycle_cap, odd_only=cfg.odd_only)
    if cfg.json:
        _dump({"command": "cycles", "odd_only": cfg.odd_only, "cycles": [_cycle_json(g, c) for c in cycles]}, out)
        return 0
    for c in cycles:
        tag = "odd " if c.is_odd else "even"
        out.write(f"{tag} {c.describe(g)}\n")
    if not cycles:
        out.write("no odd cycles\n" if cfg.odd_only else "no cycles\n")
    return 0


def _connect(g: MixedGraph, c1: CycleDesc, c2: CycleDesc):
    if g.has_directed:
        return generalized_alternating_connected(g, c1, c2)
    return cycles_alternating_connected(g, c1, c2)


def _cmd_connect(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    if (cfg.cycle1 is None) != (cfg.cycle2 is None):
        raise EdgeringError("give both --cycle1 and --cycle2, or neither")
    if cfg.cycle1 is not None:
        pairs = [(find_cycle(g, cfg.cycle1, cfg.cycle_cap), find_cycle(g, cfg.cycle2, cfg.cycle_cap))]
    else:
        pairs = _odd_pairs(g, cfg.cycle_cap)
    rows = []
    for c1, c2 in pairs:
        walk = _connect(g, c1, c2)
        rows.append((c1, c2, walk))
    if cfg.json:
        _dump(
            {
                "command": "connect",
                "pairs": [
                    {
                        "cycle1": _cycle_json(g, c1),
                        "cycle2": _cycle_json(g, c2),
                        "connected": walk is not None,
                        "walk": None if walk is None else [g.label(e) for e in walk.edges],
                    }
                    for c1, c2, walk in rows
                ],
            },
            out,
        )
        return 0
    for c1, c2, walk in rows:
        head = f"{[v + 1 for v in c1.vertices]} ~ {[v + 1 for v in c2.vertices]}"
        if walk is None:
            out.write(f"{head}: NONE\n")
        else:
            out.write(f"{head}: {walk.describe(g)}\n")
    if not rows:
        out.write("no disjoint odd cycle pairs\n")
    return 0


def _odd_pairs(g: MixedGraph, cap: int) -> list[tuple[CycleDesc, CycleDesc]]:
    """Disjoint odd pairs; for mixed graphs found in the augmented graph and collapsed."""
    if not g.has_directed:
        return [(p.c1, p.c2) for p in disjoint_odd_pairs(g, cap)]
    a = augment(g)
    seen, out = set(), []
    for p in disjoint_odd_pairs(a.signed_graph, cap):
        c1, c2 = collapse_cycle(a, p.c1), collapse_cycle(a, p.c2)
        key = frozenset((c1.edges, c2.edges))
        if key not in seen:
            seen.add(key)
            out.append((c1, c2))
    return out


def _cmd_augment(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    a = augment(g)
    if cfg.json:
        _dump(
            {
                "command": "augment",
                "graph": graph_to_json(a.signed_graph),
                "artificial": {str(t + 1): [d.tail + 1, d.head + 1] for d, t in sorted(a.artificial.items(), key=lambda kv: kv[1])},
            },
            out,
        )
    else:
        out.write(render_augmented(a))
    return 0


def _oracle_json(g: MixedGraph, v) -> dict:
    data = {
        "verdict": v.label,
        "degree_bound": v.degree_bound,
        "coeff_cap": v.coeff_cap,
        "checked": v.checked,
        "witness": None if v.witness is None else list(v.witness),
    }
    if v.witness is not None:
        data["witness_monomial"] = format_monomial(v.witness)
        data["lattice_weights"] = _weights_json(g, v.witness_t1.lattice)
        data["cone_weights"] = _weights_json(g, v.witness_t1.cone)
        data["multiple"] = v.multiple
        data["multiple_weights"] = None if v.multiple_weights is None else _weights_json(g, v.multiple_weights)
    return data


def _cmd_oracle(cfg: RunConfig, g: MixedGraph, out: TextIO) -> int:
    v = oracle_normality(g, cfg.degree_bound, cfg.coeff_cap)
    if cfg.json:
        _dump({"command": "oracle", **_oracle_json(g, v)}, out)
        return 0
    out.write(f"{v.label} (degree bound {v.degree_bound}, coeff cap {v.coeff_cap}, {v.checked} T1 vectors checked)\n")
    if v.witness is not None:
        out.write(f"witness: {format_monomial(v.witness)}  vector {list(v.witness)}\n")
        out.write(f"lattice: {_weights_text(g, v.witness_t1.lattice)}\n")
        out.write(f"cone: {_weights_text(g, v.witness_t1.cone)}\n")
        if v.multiple is None:
            out.write(f"no multiple k*witness with k <= {v.coeff_cap} found in k[G] within cap\n")
        else:
            out.write(f"{v.multiple}*witness in k[G]: {_weights_text(g, v.multiple_weights)}\n")
    return 0


def _check_json(g: MixedGraph, chk) -> dict:
    return {
        "agree": chk.agree,
        "reason": chk.reason,
        "decision": "NORMAL" if chk.report.normal else "NOT NORMAL",
        "generators": [format_monomial(v) for v in chk.report.generators],
        "oracle": _oracle_json(g, chk.oracle),
        "inexpressible": [] if chk.generation is None else [list(v) for v in chk.generation.inexpressible],
        "beyond_window": chk.beyond_window,
    }


def _cmd_verify(cfg: RunConfig, g: MixedGraph | None, out: TextIO) -> int:
    if g is not None:
        chk = cross_check(g, cfg.degree_bound, cfg.coeff_cap, cfg.cycle_cap)
        if cfg.json:
            _dump({"command": "verify", **_check_json(g, chk)}, out)
        else:
            out.write(("AGREE" if chk.agree else "DISAGREE") + f": {chk.reason}\n")
        return 0 if chk.agree else 1
    graphs = seeded_graphs("mixed", cfg.samples, cfg.seed, max_vertices=8, max_edges=12)
    bad = []
    for k, h in enumerate(graphs):
        chk = cross_check(h, cfg.degree_bound, cfg.coeff_cap, cfg.cycle_cap)
        if not chk.agree:
            bad.append((k, h, chk))
    if cfg.json:
        _dump(
            {
                "command": "verify",
                "seed": cfg.seed,
                "samples": cfg.samples,
                "agree": not bad,
                "disagreements": [{"index": k, "graph": graph_to_json(h), **_check_json(h, c)} for k, h, c in bad],
            },
            out,
        )
    else:
        for k, h, c in bad:
            out.write(f"DISAGREE graph {k}: {c.reason}\n{h!r}\n")
        out.write(f"{'AGREE' if not bad else 'DISAGREE'}: {cfg.samples - len(bad)}/{cfg.samples} graphs (seed {cfg.seed})\n")
    return 1 if bad else 0


HANDLERS = {
    "decide": _cmd_decide,
    "normalize": _cmd_normalize,
    "witness": _cmd_witness,
    "cycles": _cmd_cycles,
    "connect": _cmd_connect,
    "augment": _cmd_augment,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig, data: bytes | str | None, out: TextIO) -> int:
    g = None
    if not (cfg.command == "verify" and cfg.seed is not None and data is None):
        g = load_graph(data or b"", cfg.monomials)
    return HANDLERS[cfg.command](cfg, g, out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_intermixed_args(argv)
    cfg = RunConfig(
        command=ns.command,
        path=ns.file,
        monomials=ns.monomials,
        json=ns.json,
        cycle_cap=ns.cycle_cap,
        degree_bound=ns.degree_bound,
        coeff_cap=ns.coeff_cap,
        seed=ns.seed,
        samples=ns.samples,
        odd_only=ns.odd_only,
        cycle1=ns.cycle1,
        cycle2=ns.cycle2,
    )
    try:
        if cfg.path is not None:
            with open(cfg.path, "rb") as fh:
                data = fh.read()
        elif cfg.command == "verify" and cfg.seed is not None:
            data = None
        else:
            data = sys.stdin.buffer.read()
        return run(cfg, data, sys.stdout)
    except CapacityError as exc:
        print(f"edgering: {exc}", file=sys.stderr)
        return 2
    except (EdgeringError, OSError) as exc:
        print(f"edgering: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
