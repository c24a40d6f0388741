"""Per-element invariants: axis support, label-irreducible decomposition,
primitive roots, commutation, and structured centralizers."""

from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import IdentityElementError, InvalidSubgroupError
from .graph import VertexSet
from .words import (
    NormalForm,
    _nf,
    cyclic_reduce_codes,
    identity,
    inv_codes,
    multiply,
    normal_codes,
    prefix_codes,
    vertex_mask,
)


def gamma(g: NormalForm) -> VertexSet:
    """Labels appearing on an axis of g: the support of its cyclic core."""
    _, core = cyclic_reduce_codes(g.graph, g.codes)
    return g.graph.vset_mask(vertex_mask(core))


def commutes(g: NormalForm, h: NormalForm) -> bool:
    graph = g.graph
    word = g.codes + h.codes + inv_codes(g.codes) + inv_codes(h.codes)
    return not normal_codes(graph, word)


class LIDecomposition(NamedTuple):
    components: tuple        # NormalForms g_1 ... g_k, pairwise commuting
    supports: tuple          # VertexSets Gamma(g_i), the join factors of Gamma(g)
    conjugator: NormalForm   # x with each component of the form x * a_i * x^-1


def li_components(g: NormalForm) -> LIDecomposition:
    """Split g into its pairwise-commuting label-irreducible components,
    grouped by the maximal join decomposition of Gamma(g)."""
    if not g:
        raise IdentityElementError("identity has no label-irreducible parts")
    graph = g.graph
    xc, core = cyclic_reduce_codes(graph, g.codes)
    factors = graph.join_decomposition(graph.vset_mask(vertex_mask(core)))
    comps = []
    xinv = inv_codes(xc)
    for fac in factors:
        sub = tuple(c for c in core if fac.mask >> (c >> 1) & 1)
        comps.append(_nf(graph, normal_codes(graph, xc + sub + xinv)))
    return LIDecomposition(tuple(comps), tuple(factors), _nf(graph, xc))


def is_label_irreducible(g: NormalForm) -> bool:
    if not g:
        return False
    graph = g.graph
    _, core = cyclic_reduce_codes(graph, g.codes)
    return len(graph.join_decomposition(graph.vset_mask(vertex_mask(core)))) == 1


def primitive_root(g: NormalForm):
    """Write g = root**n with n maximal; the root is not a proper power.

    If g = r**n with r cyclically reduced, the points 1, r, ..., r**n are
    collinear, so r appears among the prefixes of the cyclic core of length
    |core|/n.  Candidate exponents must divide every per-vertex letter count
    of the core; candidates are verified by multiplication.
    """
    if not g:
        raise IdentityElementError("identity has no primitive root")
    graph = g.graph
    xc, core = cyclic_reduce_codes(graph, g.codes)
    m = len(core)
    counts = {}
    for c in core:
        counts[c >> 1] = counts.get(c >> 1, 0) + 1
    gcd = 0
    for k in counts.values():
        while k:
            gcd, k = k, gcd % k
    core_nf = _nf(graph, core)
    for n in range(gcd, 1, -1):
        if m % n:
            continue
        if any(k % n for k in counts.values()):
            continue
        for pref in prefix_codes(graph, core, m // n):
            cand = _nf(graph, pref)
            if cand ** n == core_nf:
                root = _nf(graph, normal_codes(graph, xc + pref + inv_codes(xc)))
                return root, n
    return g, 1


class CentralizerForm(NamedTuple):
    conjugator: NormalForm       # x
    cyclic_roots: tuple          # primitive roots h_i of the core's components
    parabolic_support: VertexSet  # Delta = Gamma(core)^perp

    def graph(self):
        return self.conjugator.graph


def centralizer(g: NormalForm) -> CentralizerForm:
    """Structured centralizer Z(g) = x * (<h_1> x ... x <h_k> x A_Delta) * x^-1."""
    if not g:
        raise IdentityElementError(
            "centralizer of the identity is the whole group; not representable"
        )
    graph = g.graph
    xc, core = cyclic_reduce_codes(graph, g.codes)
    core_nf = _nf(graph, core)
    dec = li_components(core_nf)
    roots = []
    for comp in dec.components:
        r, _ = primitive_root(comp)
        roots.append(r)
    support = graph.perp(graph.vset_mask(vertex_mask(core)))
    return CentralizerForm(_nf(graph, xc), tuple(roots), support)


def _component_matches(comp: NormalForm, roots, support_mask) -> bool:
    """One label-irreducible piece lies in the structured product iff it is
    a power of one of the roots or is supported in the parabolic part."""
    if not (vertex_mask(comp.codes) & ~support_mask):
        return True
    for r in roots:
        lr = len(r.codes)
        if lr == 0 or len(comp.codes) % lr:
            continue
        k = len(comp.codes) // lr
        if r ** k == comp or r ** (-k) == comp:
            return True
    return False


def membership_centralizer(cf: CentralizerForm, h: NormalForm) -> bool:
    """Decide h in Z(g) from the structured form: conjugate by x^-1, split
    into label-irreducible components, and match each against the root powers
    or the parabolic support."""
    graph = h.graph
    if not isinstance(cf, CentralizerForm):
        raise InvalidSubgroupError("malformed centralizer form")
    x = cf.conjugator
    hc = _nf(graph, normal_codes(graph, inv_codes(x.codes) + h.codes + x.codes))
    if not hc:
        return True
    for comp in li_components(hc).components:
        if not _component_matches(comp, cf.cyclic_roots, cf.parabolic_support.mask):
            return False
    return True


def increasing_labels_search(
    g: NormalForm, h: NormalForm, budget: int
) -> Optional[NormalForm]:
    """Breadth-first search for k in <g, h> with Gamma(k) containing
    Gamma(g) u Gamma(h), over products of at most `budget` factors from
    {g, g^-1, h, h^-1}.  None signals budget exhaustion, never nonexistence.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    graph = g.graph
    target = gamma(g).mask | gamma(h).mask
    gens = [g, g.inv(), h, h.inv()]
    seen = {identity(graph)}
    frontier = [identity(graph)]
    for _ in range(budget):
        nxt = []
        for w in frontier:
            for s in gens:
                k = multiply(w, s)
                if k in seen:
                    continue
                seen.add(k)
                if target & ~gamma(k).mask == 0:
                    return k
                nxt.append(k)
        frontier = nxt
    return None
