"""The simplicial trees obtained by collapsing all hyperplanes except those
with one fixed label: vertices are cosets of the subgroup generated by the
other vertices, edges are hyperplanes with the chosen label.

Distances, translation lengths, elliptic/loxodromic classification, arc
stabilizers and truncated almost-stabilizers all live here.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DegenerateArcError, OutOfRangeError
from .graph import DefGraph
from .words import (
    NormalForm,
    _nf,
    ball_codes,
    count_vertex,
    cyclic_reduce_codes,
    inv_codes,
    normal_codes,
    realize_pair_span,
    strip_suffix_in,
    vertex_mask,
)
from . import subgroups as S
from .elements import li_components, primitive_root


class TreeVertex(NamedTuple):
    graph: DefGraph
    label: str           # the tree's label v
    rep: tuple           # canonical minimal representative of g * A_{V - v}

    def rep_nf(self) -> NormalForm:
        return _nf(self.graph, self.rep)

    def __str__(self):
        return "%s*A[-%s]" % (self.rep_nf(), self.label)


def tree_vertex(graph: DefGraph, v: str, g: NormalForm) -> TreeVertex:
    iv = graph.index(v)
    allowed = graph.full & ~(1 << iv)
    return TreeVertex(graph, v, strip_suffix_in(graph, g.codes, allowed))


def translate_vertex(g: NormalForm, tv: TreeVertex) -> TreeVertex:
    graph = tv.graph
    moved = normal_codes(graph, g.codes + tv.rep)
    iv = graph.index(tv.label)
    return TreeVertex(graph, tv.label, strip_suffix_in(graph, moved, graph.full & ~(1 << iv)))


def tv_distance(graph: DefGraph, v: str, g, h) -> int:
    """Number of v-labelled hyperplanes separating the two cosets: the count
    of v-letters in the reduced form of g^-1 h (any representatives work)."""
    iv = graph.index(v)
    gc = g.rep if isinstance(g, TreeVertex) else g.codes
    hc = h.rep if isinstance(h, TreeVertex) else h.codes
    return count_vertex(normal_codes(graph, inv_codes(gc) + tuple(hc)), iv)


def tv_translation_length(graph: DefGraph, v: str, g: NormalForm) -> int:
    """Count of v-letters in the cyclic core; positive iff g is loxodromic."""
    iv = graph.index(v)
    _, core = cyclic_reduce_codes(graph, g.codes)
    return count_vertex(core, iv)


class TreeArc(NamedTuple):
    graph: DefGraph
    label: str
    start: TreeVertex
    end: TreeVertex

    @property
    def length(self) -> int:
        return tv_distance(self.graph, self.label, self.start, self.end)

    def word(self) -> tuple:
        """Canonical geodesic word realizing the arc, read from start.rep."""
        return normal_codes(self.graph, inv_codes(self.start.rep) + self.end.rep)


def arc(graph: DefGraph, v: str, start: NormalForm, end: NormalForm) -> TreeArc:
    p = tree_vertex(graph, v, start)
    q = tree_vertex(graph, v, end)
    if p.rep == q.rep:
        raise DegenerateArcError("arc endpoints coincide")
    return TreeArc(graph, v, p, q)


def arc_vertex_path(beta: TreeArc) -> list:
    """The tree vertices along the arc, from start to end."""
    graph = beta.graph
    iv = graph.index(beta.label)
    word = beta.word()
    base = list(beta.start.rep)
    out = [beta.start]
    for c in word:
        base.append(c)
        if c >> 1 == iv:
            out.append(tree_vertex(graph, beta.label, _nf(graph, normal_codes(graph, tuple(base)))))
    return out


def arc_stabilizer(beta: TreeArc) -> S.SubgroupForm:
    """Pointwise stabilizer of the arc: a parabolic subgroup conjugate to the
    visual subgroup on the common link of the label set spanned between the
    first and last edge hyperplanes."""
    graph = beta.graph
    iv = graph.index(beta.label)
    word = beta.word()
    vpos = [k for k, c in enumerate(word) if c >> 1 == iv]
    if not vpos:
        raise DegenerateArcError("arc crosses no edge")
    bcodes, acodes = realize_pair_span(graph, word, vpos[0], vpos[-1])
    base = _nf(graph, normal_codes(graph, beta.start.rep + bcodes))
    delta = graph.vset_mask(vertex_mask(acodes))
    return S.parabolic(graph, graph.perp(delta), base)


class AlmostStabilizerResult(NamedTuple):
    elements: tuple       # NormalForms in D(beta, s) with |g| <= radius
    s: int
    radius: int           # the truncation radius actually used
    arc_length: int


def almost_stabilizer(beta: TreeArc, s: int, radius: int) -> AlmostStabilizerResult:
    """Ball-truncated slice of the almost-stabilizer: all elements of word
    length <= radius moving both arc endpoints at most s.  The full set is
    typically infinite; the radius is reported alongside."""
    length = beta.length
    if not (0 <= s < length / 2):
        raise OutOfRangeError("s must satisfy 0 <= s < length/2")
    graph = beta.graph
    v = beta.label
    found = []
    for codes in ball_codes(graph, radius):
        g = _nf(graph, codes)
        p2 = translate_vertex(g, beta.start)
        if tv_distance(graph, v, beta.start, p2) > s:
            continue
        q2 = translate_vertex(g, beta.end)
        if tv_distance(graph, v, beta.end, q2) > s:
            continue
        found.append(g)
    return AlmostStabilizerResult(tuple(found), s, radius, length)


class DichotomyReport(NamedTuple):
    fixers: tuple          # elements fixing the trimmed arc
    loxodromics: tuple     # loxodromic elements (axis contains the trimmed arc)
    shared_root: NormalForm  # common primitive root of the loxodromic parts, or None
    trimmed_endpoints: tuple  # the two TreeVertex endpoints of beta^s
    ok: bool               # every element classified into exactly one side


def classify_almost_stabilizer(beta: TreeArc, result: AlmostStabilizerResult) -> DichotomyReport:
    """Check the elliptic/loxodromic dichotomy on a truncated almost-stabilizer:
    elliptic members must fix the arc trimmed by floor(s/2) at both ends,
    loxodromic members must translate along an axis containing the trimmed arc,
    with all their loxodromic parts powers of one primitive root."""
    graph = beta.graph
    v = beta.label
    iv = graph.index(v)
    t = result.s // 2
    path = arc_vertex_path(beta)
    p1, q1 = path[t], path[len(path) - 1 - t]
    fixers = []
    loxo = []
    roots = set()
    ok = True
    for g in result.elements:
        ell = tv_translation_length(graph, v, g)
        if ell == 0:
            if translate_vertex(g, p1) == p1 and translate_vertex(g, q1) == q1:
                fixers.append(g)
            else:
                ok = False
        else:
            on_axis = (
                tv_distance(graph, v, p1, translate_vertex(g, p1)) == ell
                and tv_distance(graph, v, q1, translate_vertex(g, q1)) == ell
            )
            if not on_axis:
                ok = False
            lox_parts = [
                c for c in li_components(g).components
                if count_vertex(cyclic_reduce_codes(graph, c.codes)[1], iv)
            ]
            if len(lox_parts) != 1:
                ok = False
            else:
                r, _ = primitive_root(lox_parts[0])
                roots.add(min(r, r.inv(), key=lambda x: x.codes))
            loxo.append(g)
    shared = None
    if roots:
        if len(roots) != 1:
            ok = False
        shared = next(iter(sorted(roots, key=lambda x: x.codes)))
    return DichotomyReport(tuple(fixers), tuple(loxo), shared, (p1, q1), ok)
