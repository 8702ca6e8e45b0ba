"""Command line front end.

Every subcommand reads instances from the line-oriented file formats in
core and writes solutions to standard output in a fixed grammar, so a
repeated invocation is byte identical:

    pairs        R1={<edge tokens>} R2={<vertex tokens>} w=<int>
    assignments  f: <tok>=<val> ... w=<int>   (zeros omitted)
    vertex sets  <label>={<vertex tokens>} size=<int>

Tokens are listed in ascending dense id order. With --json each solution
becomes one JSON object per line with the same ordering; the objects
round-trip through pair_from_json and assignment_from_json. Statistics
go to standard error as key=value lines. Exit codes: 0 when the command
completed (decision answers are printed, not encoded), 1 for usage or
input errors, 2 when a size guard refused the computation.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import re
import sys
from pathlib import Path
from typing import Sequence

from .characterize import (
    is_minimal_rdf_theorem,
    is_minimal_rhf_theorem,
    is_minimal_rhs_theorem,
    is_po_minimal_rdf_theorem,
)
from .core import (
    BoundedRdInstance,
    Correspondence,
    Graph,
    GraphFile,
    Hypergraph,
    HypergraphFile,
    RhsPair,
    RomanAssignment,
    is_rdf,
    is_rhf,
    is_rhs,
    parse_graph_text,
    parse_hypergraph_text,
    serialize_graph_file,
    serialize_hypergraph_file,
    weight_pair,
)
from .enumeration import (
    BRUTE_ENUM_RHF_LIMIT,
    BRUTE_ENUM_RHS_LIMIT,
    brute_enumerate_minimal_rhf,
    brute_enumerate_minimal_rhs,
    enumerate_minimal_rhs,
    gen_random,
    gen_tight,
    minimal_pair_for_r2,
)
from .errors import GuardRefused, InputError
from .extend import (
    ext_ds_split,
    ext_rhf_general,
    ext_rhf_surjective,
    ext_rhs,
    bounded_ext_rd,
)
from .optimize import (
    _rvc_decide_counted,
    edge_hypergraph,
    exact_min_rhf,
    exact_min_rhs,
    greedy_rhf,
    greedy_rhs,
    incidence_hypergraph,
    rec_min,
    rvc_enumerate,
)
from .reduce import (
    ds_split_to_rhs,
    is_hypergraph_rdf,
    rd_to_rhf,
    rhf_to_rd_gadget,
    rhf_to_rhs,
    rhs_to_rhf,
    two_section,
    vc_to_rvc,
)

EMPTY_PAIR = RhsPair(frozenset(), frozenset())


# ---------------------------------------------------------------------------
# Solution formatting


def format_pair(h: Hypergraph, pair: RhsPair) -> str:
    r1 = ",".join(h.edge_tokens[i] for i in sorted(pair.r1))
    r2 = ",".join(h.vertex_tokens[x] for x in sorted(pair.r2))
    return f"R1={{{r1}}} R2={{{r2}}} w={weight_pair(pair)}"


def format_assignment(tokens: Sequence[str], f: Sequence[int]) -> str:
    cells = "".join(
        f"{tokens[v]}={val} " for v, val in enumerate(f) if val
    )
    return f"f: {cells}w={sum(f)}"


def format_vertex_set(
    tokens: Sequence[str], chosen: Sequence[int], label: str
) -> str:
    body = ",".join(tokens[v] for v in sorted(chosen))
    return f"{label}={{{body}}} size={len(set(chosen))}"


def pair_to_json(h: Hypergraph, pair: RhsPair) -> str:
    return json.dumps(
        {
            "r1": [h.edge_tokens[i] for i in sorted(pair.r1)],
            "r2": [h.vertex_tokens[x] for x in sorted(pair.r2)],
            "w": weight_pair(pair),
        },
        sort_keys=True,
    )


def pair_from_json(h: Hypergraph, line: str) -> RhsPair:
    obj = _load_json_object(line)
    pair = RhsPair.from_tokens(h, obj.get("r1", []), obj.get("r2", []))
    if obj.get("w") != weight_pair(pair):
        raise InputError("json pair carries the wrong weight")
    return pair


def assignment_to_json(tokens: Sequence[str], f: Sequence[int]) -> str:
    return json.dumps(
        {
            "ones": [tokens[v] for v, val in enumerate(f) if val == 1],
            "twos": [tokens[v] for v, val in enumerate(f) if val == 2],
            "w": sum(f),
        },
        sort_keys=True,
    )


def assignment_from_json(
    tokens: Sequence[str], line: str
) -> RomanAssignment:
    obj = _load_json_object(line)
    ids = {t: v for v, t in enumerate(tokens)}
    vals = [0] * len(tokens)
    for level, key in ((1, "ones"), (2, "twos")):
        for t in obj.get(key, []):
            if t not in ids:
                raise InputError(f"unknown token {t!r} in json solution")
            vals[ids[t]] = level
    if obj.get("w") != sum(vals):
        raise InputError("json assignment carries the wrong weight")
    return tuple(vals)


def set_to_json(
    tokens: Sequence[str], chosen: Sequence[int]
) -> str:
    picked = sorted(set(chosen))
    return json.dumps(
        {"set": [tokens[v] for v in picked], "size": len(picked)},
        sort_keys=True,
    )


def _load_json_object(line: str) -> dict:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad json solution: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("json solution must be one object")
    return obj


# ---------------------------------------------------------------------------
# Option and solution-file parsing

_PAIR_OPTION = re.compile(r"R1=(?P<r1>[^;]*);R2=(?P<r2>.*)\Z")


def parse_pair_option(h: Hypergraph, text: str) -> RhsPair:
    m = _PAIR_OPTION.fullmatch(text.strip())
    if m is None:
        raise InputError('pair option must look like "R1=e1,e2;R2=x1"')
    r1 = [t for t in m["r1"].split(",") if t]
    r2 = [t for t in m["r2"].split(",") if t]
    return RhsPair.from_tokens(h, r1, r2)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def _parse_solution_text(
    text: str,
) -> tuple[dict[str, int], list[str], list[str]]:
    """assign/preset1/preset2 lines of a bare solution file."""
    assigns: dict[str, int] = {}
    p1: list[str] = []
    p2: list[str] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "assign":
            if len(args) != 2 or args[1] not in ("0", "1", "2"):
                raise InputError(
                    f"assign line needs vertex and 0|1|2 (line {no})"
                )
            if args[0] in assigns:
                raise InputError(
                    f"duplicate assign for {args[0]!r} (line {no})"
                )
            assigns[args[0]] = int(args[1])
        elif kind == "preset1":
            p1.extend(args)
        elif kind == "preset2":
            p2.extend(args)
        else:
            raise InputError(
                f"unknown directive {kind!r} in solution file (line {no})"
            )
    return assigns, p1, p2


def _solution_pair(h: Hypergraph, text: str) -> RhsPair:
    assigns, p1, p2 = _parse_solution_text(text)
    if assigns:
        raise InputError("this reduction maps pair solutions, not assign lines")
    return RhsPair.from_tokens(h, p1, p2)


def _solution_assignment(
    tokens: Sequence[str], text: str
) -> RomanAssignment:
    assigns, p1, p2 = _parse_solution_text(text)
    if p1 or p2:
        raise InputError("this reduction maps assignments, not preset lines")
    ids = {t: v for v, t in enumerate(tokens)}
    vals = [0] * len(tokens)
    for t, val in assigns.items():
        if t not in ids:
            raise InputError(f"unknown token {t!r} in solution file")
        vals[ids[t]] = val
    return tuple(vals)


# ---------------------------------------------------------------------------
# Shared handler pieces


def _stat(key: str, value: int) -> None:
    print(f"{key}={value}", file=sys.stderr)


def _require_tau(hf: HypergraphFile, what: str) -> Correspondence:
    if hf.tau is None:
        raise InputError(f"{what} needs tau lines in the instance file")
    return hf.tau


def _pair_line(h: Hypergraph, pair: RhsPair, as_json: bool) -> str:
    return pair_to_json(h, pair) if as_json else format_pair(h, pair)


def _assignment_line(
    tokens: Sequence[str], f: Sequence[int], as_json: bool
) -> str:
    if as_json:
        return assignment_to_json(tokens, f)
    return format_assignment(tokens, f)


def _set_line(
    tokens: Sequence[str], chosen: Sequence[int], label: str, as_json: bool
) -> str:
    if as_json:
        return set_to_json(tokens, chosen)
    return format_vertex_set(tokens, chosen, label)


def _print_pair(h: Hypergraph, pair: RhsPair, as_json: bool) -> None:
    print(_pair_line(h, pair, as_json))


def _print_assignment(
    tokens: Sequence[str], f: Sequence[int], as_json: bool
) -> None:
    print(_assignment_line(tokens, f, as_json))


def _print_set(
    tokens: Sequence[str], chosen: Sequence[int], label: str, as_json: bool
) -> None:
    print(_set_line(tokens, chosen, label, as_json))


def _split_partition(g: Graph) -> tuple[list[int], list[int]]:
    """Degree-based clique/independent partition attempt.

    The m vertices of largest degree form a clique exactly when the graph
    is split, for m the last position i with degree >= i-1; the downstream
    validation rejects every other graph.
    """
    deg = [g.neighbors_mask(v).bit_count() for v in range(g.n_vertices)]
    order = sorted(range(g.n_vertices), key=lambda v: (-deg[v], v))
    m = 0
    for i, v in enumerate(order, 1):
        if deg[v] >= i - 1:
            m = i
    return order[:m], order[m:]


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_check(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("min-rdf", "po-min-rdf"):
        gf = parse_graph_text(_read_text(args.file))
        checker = (
            is_minimal_rdf_theorem
            if kind == "min-rdf"
            else is_po_minimal_rdf_theorem
        )
        ok = checker(gf.graph, gf.assignment)
        print(f"minimal: {str(ok).lower()}")
        return 0
    hf = parse_hypergraph_text(_read_text(args.file))
    h = hf.hypergraph
    if kind == "min-rhs":
        pair = (
            parse_pair_option(h, args.pair)
            if args.pair is not None
            else hf.preset
        )
        print(f"minimal: {str(is_minimal_rhs_theorem(h, pair)).lower()}")
        return 0
    if kind == "min-rhf":
        tau = _require_tau(hf, "check min-rhf")
        ok = is_minimal_rhf_theorem(h, tau, hf.assignment)
        print(f"minimal: {str(ok).lower()}")
        return 0
    # witness: plain validity of whatever solution the input carries
    if args.pair is not None or hf.preset != EMPTY_PAIR:
        pair = (
            parse_pair_option(h, args.pair)
            if args.pair is not None
            else hf.preset
        )
        ok = is_rhs(h, pair)
    elif hf.tau is not None:
        ok = is_rhf(h, hf.tau, hf.assignment)
    else:
        raise InputError(
            "witness check needs a pair (option or preset lines) "
            "or tau plus assign lines"
        )
    print(f"valid: {str(ok).lower()}")
    return 0


def _cmd_ext_rhs(args: argparse.Namespace) -> int:
    hf = parse_hypergraph_text(_read_text(args.file))
    ans = ext_rhs(hf.hypergraph, hf.preset)
    if ans.decision:
        print("yes")
        _print_pair(hf.hypergraph, ans.witness, args.json)
    else:
        print("no")
    return 0


def _cmd_ext_rhf(args: argparse.Namespace) -> int:
    hf = parse_hypergraph_text(_read_text(args.file))
    tau = _require_tau(hf, "ext-rhf")
    if args.general:
        ans = ext_rhf_general(
            hf.hypergraph, tau, hf.assignment, strategy=args.strategy
        )
    else:
        ans = ext_rhf_surjective(hf.hypergraph, tau, hf.assignment)
    if ans.decision:
        print("yes")
        _print_assignment(
            hf.hypergraph.vertex_tokens, ans.witness, args.json
        )
    else:
        print("no")
    return 0


def _cmd_ext_rd_bounded(args: argparse.Namespace) -> int:
    gf = parse_graph_text(_read_text(args.file))
    inst = BoundedRdInstance.build(gf.graph, gf.assignment, gf.upper)
    ans = bounded_ext_rd(inst)
    if ans.decision:
        print("yes")
        _print_assignment(gf.graph.vertex_tokens, ans.witness, args.json)
    else:
        print("no")
    return 0


def _cmd_ext_ds_split(args: argparse.Namespace) -> int:
    gf = parse_graph_text(_read_text(args.file))
    u = [v for v, val in enumerate(gf.assignment) if val]
    ans = ext_ds_split(gf.graph, _split_partition(gf.graph), u)
    if ans.decision:
        print("yes")
        _print_set(gf.graph.vertex_tokens, sorted(ans.witness), "D", args.json)
    else:
        print("no")
    return 0


def _cmd_enum_rhs(args: argparse.Namespace) -> int:
    hf = parse_hypergraph_text(_read_text(args.file))
    h = hf.hypergraph

    def sink(pair: RhsPair) -> None:
        _print_pair(h, pair, args.json)

    stats = enumerate_minimal_rhs(h, weight_cap=args.cap, sink=sink)
    _stat("emitted", stats.emitted)
    _stat("nodes", stats.nodes)
    _stat("max_gap", stats.max_gap)
    return 0


def _cmd_min_rhs(args: argparse.Namespace) -> int:
    hf = parse_hypergraph_text(_read_text(args.file))
    h = hf.hypergraph
    if args.method == "exact":
        res = exact_min_rhs(h)
        _print_pair(h, res.witness, args.json)
        _stat("nodes", res.nodes)
    elif args.method == "greedy":
        pair, _ = greedy_rhs(h)
        _print_pair(h, pair, args.json)
    else:
        pairs = brute_enumerate_minimal_rhs(h)
        best = min(
            pairs,
            key=lambda p: (
                weight_pair(p),
                tuple(sorted(p.r1)),
                tuple(sorted(p.r2)),
            ),
        )
        _print_pair(h, best, args.json)
        _stat("solutions", len(pairs))
    return 0


def _cmd_min_rhf(args: argparse.Namespace) -> int:
    hf = parse_hypergraph_text(_read_text(args.file))
    h = hf.hypergraph
    tau = _require_tau(hf, "min-rhf")
    if args.method == "exact":
        res = exact_min_rhf(h, tau)
        _print_assignment(h.vertex_tokens, res.witness, args.json)
        _stat("nodes", res.nodes)
    elif args.method == "greedy":
        f, _ = greedy_rhf(h, tau)
        _print_assignment(h.vertex_tokens, f, args.json)
    else:
        fs = brute_enumerate_minimal_rhf(h, tau)
        if not fs:
            raise InputError("the instance admits no Roman hitting function")
        best = min(fs, key=lambda f: (sum(f), f))
        _print_assignment(h.vertex_tokens, best, args.json)
        _stat("solutions", len(fs))
    return 0


def _cmd_rvc(args: argparse.Namespace) -> int:
    gf = parse_graph_text(_read_text(args.file))
    g = gf.graph
    if args.mode == "decide":
        ans, nodes = _rvc_decide_counted(g, args.k)
        print("yes" if ans else "no")
        _stat("nodes", nodes)
        return 0
    h = edge_hypergraph(g)

    def sink(pair: RhsPair) -> None:
        _print_pair(h, pair, args.json)

    stats = rvc_enumerate(g, args.k, sink=sink)
    _stat("emitted", stats.emitted)
    _stat("nodes", stats.nodes)
    _stat("max_gap", stats.max_gap)
    return 0


def _cmd_rec(args: argparse.Namespace) -> int:
    gf = parse_graph_text(_read_text(args.file))
    res = rec_min(gf.graph)
    _print_pair(incidence_hypergraph(gf.graph), res.witness, args.json)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    name = args.name
    sol_text = (
        _read_text(args.map_solution)
        if args.map_solution is not None
        else None
    )
    src_text = _read_text(args.file)

    if name == "rd-to-rhf":
        gf = parse_graph_text(src_text)
        ro = rd_to_rhf(gf.graph)
        h2, tau2 = ro.instance
        out = serialize_hypergraph_file(
            HypergraphFile(h2, tau2, (0,) * h2.n_vertices, EMPTY_PAIR)
        )
        mapped = None
        if sol_text is not None:
            f2 = _solution_assignment(h2.vertex_tokens, sol_text)
            if not is_rhf(h2, tau2, f2):
                raise InputError("solution is not an rhf of the target")
            f = ro.backward(f2)
            mapped = _assignment_line(gf.graph.vertex_tokens, f, args.json)
    elif name == "rhf-to-rhs":
        hf = parse_hypergraph_text(src_text)
        tau = _require_tau(hf, "reduce rhf-to-rhs")
        ro = rhf_to_rhs(hf.hypergraph, tau)
        h2 = ro.instance
        out = serialize_hypergraph_file(
            HypergraphFile(h2, None, (0,) * h2.n_vertices, EMPTY_PAIR)
        )
        mapped = None
        if sol_text is not None:
            f = ro.backward(_solution_pair(h2, sol_text))
            mapped = _assignment_line(
                hf.hypergraph.vertex_tokens, f, args.json
            )
    elif name == "rhs-to-rhf":
        hf = parse_hypergraph_text(src_text)
        if args.k is None:
            raise InputError("reduce rhs-to-rhf needs -k")
        ro = rhs_to_rhf(hf.hypergraph, args.k)
        h2, tau2 = ro.instance
        out = serialize_hypergraph_file(
            HypergraphFile(h2, tau2, (0,) * h2.n_vertices, EMPTY_PAIR)
        )
        mapped = None
        if sol_text is not None:
            pair = ro.backward(
                _solution_assignment(h2.vertex_tokens, sol_text)
            )
            mapped = _pair_line(hf.hypergraph, pair, args.json)
    elif name == "rhf-to-rd":
        hf = parse_hypergraph_text(src_text)
        tau = _require_tau(hf, "reduce rhf-to-rd")
        ro = rhf_to_rd_gadget(hf.hypergraph, tau)
        g2 = ro.instance
        out = serialize_graph_file(
            GraphFile(g2, (0,) * g2.n_vertices, (2,) * g2.n_vertices)
        )
        mapped = None
        if sol_text is not None:
            f = ro.backward(_solution_assignment(g2.vertex_tokens, sol_text))
            mapped = _assignment_line(
                hf.hypergraph.vertex_tokens, f, args.json
            )
    elif name == "vc-to-rvc":
        gf = parse_graph_text(src_text)
        ro = vc_to_rvc(gf.graph)
        g2 = ro.instance
        out = serialize_graph_file(
            GraphFile(g2, (0,) * g2.n_vertices, (2,) * g2.n_vertices)
        )
        mapped = None
        if sol_text is not None:
            cover = ro.backward(
                _solution_pair(edge_hypergraph(g2), sol_text)
            )
            mapped = _set_line(
                gf.graph.vertex_tokens, sorted(cover), "C", args.json
            )
    elif name == "ds-split-to-rhs":
        gf = parse_graph_text(src_text)
        ro = ds_split_to_rhs(gf.graph, _split_partition(gf.graph))
        h2 = ro.instance
        out = serialize_hypergraph_file(
            HypergraphFile(h2, None, (0,) * h2.n_vertices, EMPTY_PAIR)
        )
        mapped = None
        if sol_text is not None:
            dom = ro.backward(_solution_pair(h2, sol_text))
            mapped = _set_line(
                gf.graph.vertex_tokens, sorted(dom), "D", args.json
            )
    elif name == "two-section":
        hf = parse_hypergraph_text(src_text)
        g2 = two_section(hf.hypergraph)
        out = serialize_graph_file(
            GraphFile(g2, (0,) * g2.n_vertices, (2,) * g2.n_vertices)
        )
        ro = None
        mapped = None
        if sol_text is not None:
            f = _solution_assignment(g2.vertex_tokens, sol_text)
            if not is_rdf(g2, f):
                raise InputError("solution is not an rdf of the target")
            assert is_hypergraph_rdf(hf.hypergraph, f)
            mapped = _assignment_line(
                hf.hypergraph.vertex_tokens, f, args.json
            )
    else:
        raise InputError(f"unknown reduction {name!r}")

    _write_text(args.out, out)
    print(f"offset={ro.offset if ro is not None else 0}")
    if mapped is not None:
        print(mapped)
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "tight":
        h = gen_tight(args.n)
        hf = HypergraphFile(h, None, (0,) * h.n_vertices, EMPTY_PAIR)
    else:
        hf = gen_random(
            args.nv,
            args.ne,
            args.density,
            args.seed,
            with_tau=args.with_tau,
            with_preset=args.with_preset,
        )
    print(serialize_hypergraph_file(hf), end="")
    return 0


def _oracle_rhs_part(
    payload: tuple[Hypergraph, int, int],
) -> list[RhsPair]:
    h, part, jobs = payload
    out = []
    for r2m in range(part, 1 << h.n_vertices, jobs):
        pair = minimal_pair_for_r2(h, r2m)
        if pair is not None:
            out.append(pair)
    return out


def _assignment_at(idx: int, n: int) -> RomanAssignment:
    vals = []
    for _ in range(n):
        idx, r = divmod(idx, 3)
        vals.append(r)
    return tuple(vals)


def _oracle_rhf_part(
    payload: tuple[Hypergraph, Correspondence, int, int],
) -> list[RomanAssignment]:
    h, tau, part, jobs = payload
    out = []
    for idx in range(part, 3**h.n_vertices, jobs):
        f = _assignment_at(idx, h.n_vertices)
        if is_minimal_rhf_theorem(h, tau, f):
            out.append(f)
    return out


def _cmd_oracle(args: argparse.Namespace) -> int:
    hf = parse_hypergraph_text(_read_text(args.file))
    h = hf.hypergraph
    jobs = args.jobs
    if jobs < 1:
        raise InputError("job count must be at least 1")
    if args.kind == "rhs":
        if jobs == 1:
            pairs = brute_enumerate_minimal_rhs(h)
        else:
            size = h.n_vertices + h.n_edges
            if size > BRUTE_ENUM_RHS_LIMIT:
                raise GuardRefused(
                    f"brute enumeration is limited to "
                    f"{BRUTE_ENUM_RHS_LIMIT} vertices plus edges, got {size}"
                )
            with multiprocessing.Pool(jobs) as pool:
                parts = pool.map(
                    _oracle_rhs_part, [(h, p, jobs) for p in range(jobs)]
                )
            pairs = sorted(
                (p for chunk in parts for p in chunk),
                key=lambda p: p.r2_mask(),
            )
        for pair in pairs:
            _print_pair(h, pair, args.json)
        _stat("solutions", len(pairs))
        return 0
    tau = _require_tau(hf, "oracle rhf")
    if jobs == 1:
        fs = brute_enumerate_minimal_rhf(h, tau)
    else:
        if h.n_vertices > BRUTE_ENUM_RHF_LIMIT:
            raise GuardRefused(
                f"brute rhf enumeration is limited to "
                f"{BRUTE_ENUM_RHF_LIMIT} vertices, got {h.n_vertices}"
            )
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(
                _oracle_rhf_part, [(h, tau, p, jobs) for p in range(jobs)]
            )
        fs = sorted(f for chunk in parts for f in chunk)
    for f in fs:
        _print_assignment(h.vertex_tokens, f, args.json)
    _stat("solutions", len(fs))
    return 0


# ---------------------------------------------------------------------------
# Parser assembly


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as input errors (exit 1)."""

    def error(self, message: str) -> None:
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="rhs-tool",
        description="Roman hitting sets, functions, and their relatives.",
    )
    sub = top.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="minimality or validity of a solution")
    p.add_argument(
        "kind",
        choices=["min-rhs", "min-rhf", "min-rdf", "po-min-rdf", "witness"],
    )
    p.add_argument("file")
    p.add_argument("--pair", help='pair solution, e.g. "R1=1,2;R2=c"')
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("ext-rhs", help="minimal rhs extension of the preset")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ext_rhs)

    p = sub.add_parser("ext-rhf", help="minimal rhf extension of the assignment")
    p.add_argument("file")
    p.add_argument("--general", action="store_true")
    p.add_argument(
        "--strategy", choices=["sweep", "witness"], default="sweep"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ext_rhf)

    p = sub.add_parser(
        "ext-rd-bounded", help="minimal rdf between assign and upper"
    )
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ext_rd_bounded)

    p = sub.add_parser(
        "ext-ds-split",
        help="minimal dominating set above the assigned vertices",
    )
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ext_ds_split)

    p = sub.add_parser("enum-rhs", help="every minimal rhs, one per line")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None, help="weight cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enum_rhs)

    p = sub.add_parser("min-rhs", help="minimum weight rhs")
    p.add_argument("file")
    p.add_argument(
        "--method", choices=["exact", "greedy", "brute"], default="exact"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_min_rhs)

    p = sub.add_parser("min-rhf", help="minimum weight rhf")
    p.add_argument("file")
    p.add_argument(
        "--method", choices=["exact", "greedy", "brute"], default="exact"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_min_rhf)

    p = sub.add_parser("rvc", help="Roman vertex cover")
    p.add_argument("mode", choices=["decide", "enum"])
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True, help="weight budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rvc)

    p = sub.add_parser("rec", help="minimum Roman edge cover")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rec)

    p = sub.add_parser("reduce", help="translate an instance")
    p.add_argument(
        "name",
        choices=[
            "rd-to-rhf",
            "rhf-to-rhs",
            "rhs-to-rhf",
            "rhf-to-rd",
            "vc-to-rvc",
            "ds-split-to-rhs",
            "two-section",
        ],
    )
    p.add_argument("file")
    p.add_argument("out")
    p.add_argument("-k", type=int, default=None, help="budget (rhs-to-rhf)")
    p.add_argument(
        "--map-solution",
        metavar="SOLFILE",
        help="map a target solution back to the source instance",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("gen", help="write a generated instance to stdout")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    pt = fam.add_parser("tight", help="n disjoint 2-element edges")
    pt.add_argument("n", type=int)
    pr = fam.add_parser("random", help="seeded random hypergraph")
    pr.add_argument("nv", type=int)
    pr.add_argument("ne", type=int)
    pr.add_argument("density", type=float)
    pr.add_argument("--seed", type=int, required=True)
    pr.add_argument("--with-tau", action="store_true")
    pr.add_argument("--with-preset", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force enumeration oracle")
    p.add_argument("kind", choices=["rhs", "rhf"])
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
