"""Geodesic and hyperplane-chain decomposition machinery for the
vertex-transitive case (the whole group acting on its own cube complex,
one orbit): hyperplane-pair invariants, decent geodesics, recursive
decompositions into single edges and good subsegments, alternating chain
decompositions of tree arcs, and the double-centralizer classification of
decent pairs.

The combinatorial constants are computed for general orbit count q, but the
executors implement the single-orbit case q = 1.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    DegenerateArcError,
    NotDecentError,
    PreconditionError,
    UnreducedWordError,
)
from .graph import DefGraph, VertexSet
from .words import (
    Hyperplane,
    NormalForm,
    _nf,
    hyperplane_at,
    inv_codes,
    normal_codes,
    realize_pair_span,
    reduce_codes,
    vertex_mask,
)
from . import trees as T
from . import subgroups as S


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

def pieces_bound(q: int, vertex_count: int) -> int:
    """Bound on the number of subsegments in the good decomposition:
    q^q * max(7, 2q)^(q^2 * V)."""
    return q ** q * max(7, 2 * q) ** (q * q * vertex_count)


def chain_constant(q: int, vertex_count: int) -> int:
    """Single constant bounding both the short-piece length and the piece
    count in the alternating chain decomposition: the gap bound is
    2 * N_q * V and the count bound is N_q^V."""
    nq = pieces_bound(q, vertex_count)
    return max(2 * nq * vertex_count, nq ** vertex_count)


# ---------------------------------------------------------------------------
# hyperplane pairs
# ---------------------------------------------------------------------------

class HyperplanePair(NamedTuple):
    u: Hyperplane
    w: Hyperplane
    base: NormalForm      # start vertex of the realizing geodesic
    between: tuple        # canonical codes of the realizing geodesic word

    @property
    def graph(self):
        return self.base.graph

    def between_nf(self) -> NormalForm:
        return _nf(self.graph, self.between)


def pair_from_word(
    graph: DefGraph, word_codes, i: int, j: int, base: NormalForm = None
) -> HyperplanePair:
    """Build the pair of the crossings at positions i < j of a reduced word,
    together with the geodesic realizing exactly the walls separating them.

    The word reorders (trace-equivalently) as B * A * C where A is the
    dependence interval of the two crossings; the realizing geodesic starts
    at base * B and reads A.  Raises if the two crossings are transverse.
    """
    if i == j:
        raise PreconditionError("a pair needs two distinct crossings")
    if i > j:
        i, j = j, i
    word_codes = tuple(word_codes)
    if len(reduce_codes(graph.adj, word_codes)) != len(word_codes):
        raise UnreducedWordError("word is not reduced")
    bcodes, acodes = realize_pair_span(graph, word_codes, i, j)
    start = base.codes if base is not None else ()
    b = _nf(graph, normal_codes(graph, start + bcodes))
    between = normal_codes(graph, acodes)
    u = hyperplane_at(graph, b.codes, between[0])
    w_base = normal_codes(graph, b.codes + between[:-1])
    w = hyperplane_at(graph, w_base, between[-1])
    return HyperplanePair(u, w, b, between)


class PairInvariants(NamedTuple):
    delta: VertexSet       # labels of all walls in the span, ends included
    delta_size: int
    counts: dict           # per-label counts over the strictly separating walls


def delta_invariants(pair: HyperplanePair) -> PairInvariants:
    graph = pair.graph
    if len(pair.between) < 1:
        raise PreconditionError("invalid pair")
    delta = graph.vset_mask(vertex_mask(pair.between))
    counts = {v: 0 for v in graph.vertices}
    for c in pair.between[1:-1]:
        counts[graph.vertices[c >> 1]] += 1
    return PairInvariants(delta, len(delta), counts)


# ---------------------------------------------------------------------------
# decency
# ---------------------------------------------------------------------------

class DecencyReport(NamedTuple):
    decent: bool
    witnesses: dict        # label -> (i, j) prefix positions with the label
                           # in the axis support of the subword
    missing: tuple         # labels with no witness


def is_decent(graph: DefGraph, word) -> DecencyReport:
    """A geodesic is decent (single-orbit case) iff every label it crosses
    appears in the axis support of the difference of two of its vertices:
    for each label v there are prefix positions i < j with v in
    Gamma(subword(i, j))."""
    codes = word.codes if hasattr(word, "codes") else tuple(word)
    if len(reduce_codes(graph.adj, codes)) != len(codes):
        raise UnreducedWordError("word is not reduced")
    n = len(codes)
    labels = [graph.vertices[i] for i in graph.vset_mask(vertex_mask(codes)).indices()]
    witnesses = {}
    missing = []
    for v in labels:
        iv = graph.index(v)
        found = None
        for i in range(n):
            for j in range(i + 1, n + 1):
                sub = _nf(graph, normal_codes(graph, codes[i:j]))
                if not sub:
                    continue
                if iv in set(k >> 1 for k in _core_codes(graph, sub)):
                    found = (i, j)
                    break
            if found:
                break
        if found:
            witnesses[v] = found
        else:
            missing.append(v)
    return DecencyReport(not missing, witnesses, tuple(missing))


def _core_codes(graph, nf_elem):
    from .words import cyclic_reduce_codes

    _, core = cyclic_reduce_codes(graph, nf_elem.codes)
    return core


def pair_is_decent(pair: HyperplanePair) -> DecencyReport:
    return is_decent(pair.graph, pair.between)


# ---------------------------------------------------------------------------
# good decompositions (q = 1)
# ---------------------------------------------------------------------------

EDGE = "edge"
GOOD = "good"

class Piece(NamedTuple):
    start: int
    end: int            # codes[start:end]
    tag: str            # "edge" | "good"
    word: tuple


class Decomposition(NamedTuple):
    pieces: tuple
    bound: int          # piece-count bound for this graph at q = 1
    vertex_count: int

    @property
    def ok(self):
        return len(self.pieces) <= self.bound


def decompose_good(graph: DefGraph, word) -> Decomposition:
    """Recursive single-orbit decomposition: a geodesic is good iff every
    label it uses appears at least twice; otherwise the unique edge of some
    once-occurring label splits it into three parts and the outer parts
    recurse.  Single edges are their own pieces."""
    codes = word.codes if hasattr(word, "codes") else tuple(word)
    if len(reduce_codes(graph.adj, codes)) != len(codes):
        raise UnreducedWordError("word is not reduced")

    pieces = []

    def rec(lo, hi):
        n = hi - lo
        if n == 0:
            return
        if n == 1:
            pieces.append(Piece(lo, hi, EDGE, codes[lo:hi]))
            return
        counts = {}
        for c in codes[lo:hi]:
            counts[c >> 1] = counts.get(c >> 1, 0) + 1
        solo = sorted(iv for iv, k in counts.items() if k == 1)
        if not solo:
            pieces.append(Piece(lo, hi, GOOD, codes[lo:hi]))
            return
        iv = solo[0]
        pos = next(k for k in range(lo, hi) if codes[k] >> 1 == iv)
        rec(lo, pos)
        pieces.append(Piece(pos, pos + 1, EDGE, codes[pos:pos + 1]))
        rec(pos + 1, hi)

    rec(0, len(codes))
    return Decomposition(tuple(pieces), pieces_bound(1, len(graph)), len(graph))


# ---------------------------------------------------------------------------
# chain decompositions of tree arcs (q = 1)
# ---------------------------------------------------------------------------

class ChainPiece(NamedTuple):
    kind: str            # "mu" | "nu"
    edge_span: tuple     # (first edge index, last edge index) within the arc, or ()
    length: int          # tree length
    pair: object         # HyperplanePair for nu pieces, else None
    decency: object      # DecencyReport for nu pieces, else None


class ChainReport(NamedTuple):
    pieces: tuple
    s: int               # number of nu pieces
    constant: int        # the q = 1 chain constant for this graph
    bounds_ok: bool
    arc_length: int


def decompose_chain(beta: T.TreeArc, q: int = 1) -> ChainReport:
    """Alternating decomposition mu_0 nu_1 mu_1 ... nu_s mu_s of a tree arc:
    nu pieces are sub-arcs of tree length > 2q whose first and last edges
    form a decent pair of walls; mu pieces are what remains.  Candidate nu
    spans are scanned longest-first and accepted greedily when disjoint."""
    if q != 1:
        raise PreconditionError("only the single-orbit executor is implemented")
    graph = beta.graph
    iv = graph.index(beta.label)
    word = beta.word()
    vpos = [k for k, c in enumerate(word) if c >> 1 == iv]
    m = len(vpos)
    if m == 0:
        raise DegenerateArcError("arc crosses no edge")
    start = beta.start.rep_nf()

    candidates = []
    for i in range(m):
        for j in range(i + 2, m):
            candidates.append((j - i, i, j))
    candidates.sort(key=lambda t: (-t[0], t[1]))

    taken = []
    used = [False] * m
    for span, i, j in candidates:
        if any(used[k] for k in range(i, j + 1)):
            continue
        pair = pair_from_word(graph, word, vpos[i], vpos[j], base=start)
        rep = pair_is_decent(pair)
        if rep.decent:
            taken.append((i, j, pair, rep))
            for k in range(i, j + 1):
                used[k] = True
    taken.sort()

    pieces = []
    cursor = 0
    for i, j, pair, rep in taken:
        pieces.append(ChainPiece("mu", (cursor, i - 1) if i > cursor else (), i - cursor, None, None))
        pieces.append(ChainPiece("nu", (i, j), j - i + 1, pair, rep))
        cursor = j + 1
    pieces.append(ChainPiece("mu", (cursor, m - 1) if cursor < m else (), m - cursor, None, None))

    const = chain_constant(q, len(graph))
    s = len(taken)
    bounds_ok = (
        s <= const
        and all(p.length <= const for p in pieces if p.kind == "mu")
        and all(p.length > 2 * q for p in pieces if p.kind == "nu")
    )
    return ChainReport(tuple(pieces), s, const, bounds_ok, m)


# ---------------------------------------------------------------------------
# double-centralizer classification of decent pairs (G = whole group, q = 1)
# ---------------------------------------------------------------------------

CENTRALIZER_CASE = "centralizer_case"
CYCLIC_CASE = "cyclic_case"


class PairClassification(NamedTuple):
    case: str
    stabilizer: S.SubgroupForm      # pointwise stabilizer of both walls
    element: NormalForm             # cyclic case: the label-irreducible g
    double_centralizer_support: VertexSet
    axis_stats: dict


def classify_decent_pair(pair: HyperplanePair, q: int = 1) -> PairClassification:
    """Wall-pair stabilizers are conjugates of the visual subgroup on
    Delta^perp; the double centralizer is read off by star-perp calculus.
    Either it equals the stabilizer, or (for a decent pair) it is the
    centralizer of a single generator whose axis carries the whole span."""
    graph = pair.graph
    rep = pair_is_decent(pair)
    if not rep.decent:
        raise NotDecentError("pair is not decent (missing %s)" % (rep.missing,))
    inv = delta_invariants(pair)
    sigma = graph.perp(inv.delta)
    stab = S.parabolic(graph, sigma, pair.base)
    zz = graph.perp_closed(graph.perp_closed(sigma))
    if zz == sigma:
        return PairClassification(
            CENTRALIZER_CASE, stab, None, zz, {"walls": len(pair.between)}
        )
    if inv.delta_size != 1:
        raise PreconditionError(
            "double centralizer grew on a pair with %d labels" % inv.delta_size
        )
    x = inv.delta.names()[0]
    if zz != graph.star(x):
        raise PreconditionError("double centralizer is not the star of %s" % x)
    ix = graph.index(x)
    sign = 1 if pair.between[0] & 1 else -1
    g = _nf(
        graph,
        normal_codes(
            graph,
            pair.base.codes + (2 * ix + (1 if sign > 0 else 0),) + inv_codes(pair.base.codes),
        ),
    )
    total = len(pair.between)
    stats = {
        "walls": total,
        "skewered": total,
        "exceptions": 0,
        "exception_bound": 2 * q,
        "translation_length": 1,
    }
    return PairClassification(CYCLIC_CASE, stab, g, zz, stats)
