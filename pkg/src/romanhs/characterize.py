"""Minimality checks for Roman hitting structures.

Every solution notion gets two independent checkers. The structural one
decides minimality through local conditions (disjointness, private edges or
neighbors, minimal hitting or dominating subsets) and reports the first
violated condition by name. The brute-force one goes back to the
definition: the candidate must be valid and every single-step reduction of
it invalid. Validity is upward closed in each order, so single-step
reductions find a strictly smaller valid object whenever one exists at all;
tests pit the two checkers against each other on exhaustive corpora.

This module also houses the extensibility witness: a planned 2-set together
with a map that assigns each member a privately hit edge other than its
corresponding one. check_extension_witness evaluates the witness
constraints; the search for a witness lives in the extend module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import (
    Correspondence,
    EdgeIndex,
    Graph,
    Hypergraph,
    RhsPair,
    VertexId,
    bits,
    frozenset_of,
    is_rdf,
    is_rhf,
    is_rhs,
    level_mask,
    mask_of,
    validate_assignment,
)
from .errors import GuardRefused, InputError

# brute-force oracles refuse instances with more vertices+edges than this
BRUTE_SIZE_LIMIT = 24


def private_neighborhood(
    g: Graph, d: Iterable[VertexId], v: VertexId
) -> frozenset[VertexId]:
    """Closed neighbors of v that no other member of d reaches: N[v]-N[d-{v}]."""
    dm = mask_of(d)
    if not (dm >> v) & 1:
        raise InputError("vertex is not a member of the given set")
    reach = g.closed_set_mask(dm & ~(1 << v))
    return frozenset_of(g.closed_mask(v) & ~reach)


@dataclass(frozen=True)
class PrivateNeighborReport:
    """Private neighborhood of every member of one vertex set."""

    members: frozenset[VertexId]
    entries: tuple[tuple[VertexId, frozenset[VertexId]], ...]


def private_neighborhood_report(g: Graph, d: Iterable[VertexId]) -> PrivateNeighborReport:
    dm = mask_of(d)
    entries = tuple(
        (v, private_neighborhood(g, frozenset_of(dm), v)) for v in bits(dm)
    )
    return PrivateNeighborReport(frozenset_of(dm), entries)


# ---------------------------------------------------------------------------
# Structural minimality checkers. Each returns the identifier of the first
# violated condition, or None when the candidate is minimal; the is_*
# wrappers reduce that to a boolean. The conditions imply validity, so the
# checkers are total: they answer correctly even for invalid candidates.
# ---------------------------------------------------------------------------


def minimal_rhs_violation(h: Hypergraph, pair: RhsPair) -> str | None:
    """Minimal rhs: R1 edges untouched by R2, R2 a minimal hitting set of the rest."""
    pair.validate(h)
    r1m = pair.r1_mask()
    r2m = pair.r2_mask()
    for i in bits(r1m):
        if h.edge_members[i] & r2m:
            return "r1-edge-hit-by-r2"
    rest = [h.edge_members[i] for i in range(h.n_edges) if not (r1m >> i) & 1]
    if any(not e & r2m for e in rest):
        return "unhit-edge"
    for x in bits(r2m):
        if not any(e & r2m == 1 << x for e in rest):
            return "redundant-r2-vertex"
    return None


def is_minimal_rhs_theorem(h: Hypergraph, pair: RhsPair) -> bool:
    return minimal_rhs_violation(h, pair) is None


def minimal_rhf_violation(
    h: Hypergraph, tau: Correspondence, f: Sequence[int]
) -> str | None:
    """Minimal rhf, via four conditions.

    The correspondence must be injective on the 1-set; corresponding edges
    of 1-vertices must avoid the 2-set; every 2-vertex needs a private edge
    other than its corresponding one; and the 2-set must be a minimal
    hitting set of the edges whose correspondence preimage holds no
    1-vertex.
    """
    tau.validate(h)
    f = validate_assignment(f, h.n_vertices)
    ones = level_mask(f, 1)
    twos = level_mask(f, 2)
    seen = 0
    for x in bits(ones):
        e = 1 << tau.mapping[x]
        if seen & e:
            return "tau-collision-on-ones"
        seen |= e
    for x in bits(ones):
        if h.edge_members[tau.mapping[x]] & twos:
            return "one-vertex-edge-hit-by-two"
    for x in bits(twos):
        xbit = 1 << x
        if not any(
            h.edge_members[i] & twos == xbit
            for i in range(h.n_edges)
            if i != tau.mapping[x]
        ):
            return "two-vertex-without-private-edge"
    family = [
        h.edge_members[i] for i in range(h.n_edges) if not (seen >> i) & 1
    ]
    if any(not e & twos for e in family):
        return "unhit-edge"
    for x in bits(twos):
        if not any(e & twos == 1 << x for e in family):
            return "redundant-two-vertex"
    return None


def is_minimal_rhf_theorem(
    h: Hypergraph, tau: Correspondence, f: Sequence[int]
) -> bool:
    return minimal_rhf_violation(h, tau, f) is None


def _domination_violation(g: Graph, ones: int, twos: int) -> str | None:
    # the 2-set must dominate the subgraph induced on 0- and 2-vertices,
    # and every member must keep a private dominee there
    full = (1 << g.n_vertices) - 1
    sub = full & ~ones
    for u in bits(sub):
        if not g.closed_mask(u) & twos:
            return "undominated-vertex"
    for v in bits(twos):
        reach = 0
        for w in bits(twos & ~(1 << v)):
            reach |= g.closed_mask(w) & sub
        if not (g.closed_mask(v) & sub) & ~reach:
            return "redundant-two-vertex"
    return None


def minimal_rdf_violation(g: Graph, f: Sequence[int]) -> str | None:
    """Minimal rdf: no 1 next to a 2, every 2 privately dominates someone
    besides itself, and the 2-set minimally dominates the 0/2 subgraph."""
    f = validate_assignment(f, g.n_vertices)
    ones = level_mask(f, 1)
    twos = level_mask(f, 2)
    if g.closed_set_mask(twos) & ones:
        return "one-adjacent-to-two"
    full = (1 << g.n_vertices) - 1
    sub = full & ~ones
    for v in bits(twos):
        reach = 0
        for w in bits(twos & ~(1 << v)):
            reach |= g.closed_mask(w) & sub
        if not (g.closed_mask(v) & sub) & ~reach & ~(1 << v):
            return "two-vertex-without-private-neighbor"
    return _domination_violation(g, ones, twos)


def is_minimal_rdf_theorem(g: Graph, f: Sequence[int]) -> bool:
    return minimal_rdf_violation(g, f) is None


def po_minimal_rdf_violation(g: Graph, f: Sequence[int]) -> str | None:
    """Minimality when values may only drop to 0: the private-neighbor
    condition is waived, the other two conditions stay."""
    f = validate_assignment(f, g.n_vertices)
    ones = level_mask(f, 1)
    twos = level_mask(f, 2)
    if g.closed_set_mask(twos) & ones:
        return "one-adjacent-to-two"
    return _domination_violation(g, ones, twos)


def is_po_minimal_rdf_theorem(g: Graph, f: Sequence[int]) -> bool:
    return po_minimal_rdf_violation(g, f) is None


# ---------------------------------------------------------------------------
# Extensibility witness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionWitness:
    """Certificate that an assignment can grow into a minimal rhf.

    r2 is the planned 2-set; it must contain the current 2s and stay inside
    the current 1s and 2s. rho assigns every member an edge it hits alone,
    different from its corresponding edge.
    """

    r2: frozenset[VertexId]
    rho: tuple[tuple[VertexId, EdgeIndex], ...]

    @classmethod
    def build(
        cls, r2: Iterable[VertexId], rho: Mapping[VertexId, EdgeIndex]
    ) -> "ExtensionWitness":
        return cls(frozenset(r2), tuple(sorted(rho.items())))

    def rho_map(self) -> dict[VertexId, EdgeIndex]:
        return dict(self.rho)


def check_extension_witness(
    h: Hypergraph,
    tau: Correspondence,
    f: Sequence[int],
    w: ExtensionWitness,
) -> bool:
    """Evaluate the witness constraints against an assignment.

    The correspondence must be injective on the assignment's 1-set (apply
    the promotion closure first when it is not); a malformed witness is an
    input error. Constraints: every member's certificate edge differs from
    its corresponding edge and meets the planned 2-set in that member only;
    corresponding edges of the remaining 1s avoid the planned 2-set; and
    every edge without correspondence preimage that is swallowed by the
    certificate and remaining-1 edges must meet the planned 2-set (such an
    edge could never gain a private hitter or a fresh 1 later).
    """
    tau.validate(h)
    f = validate_assignment(f, h.n_vertices)
    ones = level_mask(f, 1)
    twos = level_mask(f, 2)
    seen = 0
    for x in bits(ones):
        e = 1 << tau.mapping[x]
        if seen & e:
            raise InputError(
                "correspondence collides on 1-vertices; apply the promotion "
                "closure before checking witnesses"
            )
        seen |= e
    r2m = mask_of(w.r2)
    if twos & ~r2m or r2m & ~(ones | twos):
        raise InputError("witness 2-set must contain the 2s and avoid the 0s")
    rho = w.rho_map()
    if set(rho) != set(w.r2) or len(w.rho) != len(w.r2):
        raise InputError("witness map must cover exactly the witness 2-set")
    if any(not 0 <= i < h.n_edges for i in rho.values()):
        raise InputError("witness map targets an unknown edge index")

    for x, i in rho.items():
        if i == tau.mapping[x]:
            return False
        if h.edge_members[i] & r2m != 1 << x:
            return False
    for x in bits(ones & ~r2m):
        if h.edge_members[tau.mapping[x]] & r2m:
            return False
    covered = 0
    for x in bits(ones & ~r2m):
        covered |= h.edge_members[tau.mapping[x]]
    for x in bits(r2m):
        covered |= h.edge_members[rho[x]]
    for i in bits(h.all_edges_mask & ~tau.range_mask):
        e = h.edge_members[i]
        if not e & ~covered and not e & r2m:
            return False
    return True


# ---------------------------------------------------------------------------
# Definition-level brute-force oracles
# ---------------------------------------------------------------------------


def _guard(size: int) -> None:
    if size > BRUTE_SIZE_LIMIT:
        raise GuardRefused(
            f"brute-force minimality oracle is limited to "
            f"{BRUTE_SIZE_LIMIT} vertices+edges, got {size}"
        )


def brute_minimal_rhs(h: Hypergraph, pair: RhsPair) -> bool:
    """Valid, and no single removal from R1 or R2 stays valid."""
    _guard(h.n_vertices + h.n_edges)
    pair.validate(h)
    if not is_rhs(h, pair):
        return False
    for i in pair.r1:
        if is_rhs(h, RhsPair(pair.r1 - {i}, pair.r2)):
            return False
    for x in pair.r2:
        if is_rhs(h, RhsPair(pair.r1, pair.r2 - {x})):
            return False
    return True


def brute_minimal_rhf(
    h: Hypergraph, tau: Correspondence, f: Sequence[int]
) -> bool:
    """Valid, and no single one-step lowering of a value stays valid."""
    _guard(h.n_vertices + h.n_edges)
    f = validate_assignment(f, h.n_vertices)
    if not is_rhf(h, tau, f):
        return False
    for x, v in enumerate(f):
        if v and is_rhf(h, tau, f[:x] + (v - 1,) + f[x + 1 :]):
            return False
    return True


def brute_minimal_rdf(g: Graph, f: Sequence[int]) -> bool:
    """Valid, and no single one-step lowering of a value stays valid."""
    _guard(2 * g.n_vertices)
    f = validate_assignment(f, g.n_vertices)
    if not is_rdf(g, f):
        return False
    for x, v in enumerate(f):
        if v and is_rdf(g, f[:x] + (v - 1,) + f[x + 1 :]):
            return False
    return True


def brute_minimal_po_rdf(g: Graph, f: Sequence[int]) -> bool:
    """Valid, and zeroing any single nonzero value breaks validity."""
    _guard(2 * g.n_vertices)
    f = validate_assignment(f, g.n_vertices)
    if not is_rdf(g, f):
        return False
    for x, v in enumerate(f):
        if v and is_rdf(g, f[:x] + (0,) + f[x + 1 :]):
            return False
    return True
