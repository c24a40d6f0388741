"""Automorphisms built from the visual splittings of the group: transvections
from the one-vertex HNN splittings (twists, folds, mixed), and partial
conjugations from visual amalgams.  Includes soundness checks and bounded
non-innerness certificates via conjugacy-length growth.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    GraphMismatchError,
    InvalidSplittingError,
    NotInCentralizerError,
)
from .graph import DefGraph
from .words import (
    NormalForm,
    _nf,
    cyclic_reduce_codes,
    inv_codes,
    normal_codes,
    vertex_mask,
)

TWIST = "twist"
FOLD = "fold"
MIXED = "mixed_transvection"
PARTIAL_CONJUGATION = "partial_conjugation"


class SplittingData(NamedTuple):
    kind: str                    # "hnn" | "amalgam"
    vertex: str                  # HNN: the splitting vertex (stable letter)
    parts: tuple                 # amalgam: (Delta_A, Delta_B, Delta_C) as VertexSets

    @classmethod
    def hnn(cls, graph: DefGraph, v: str):
        graph.index(v)
        return cls("hnn", v, ())

    @classmethod
    def amalgam(cls, graph: DefGraph, part_a, part_b, part_c):
        return cls("amalgam", "", (graph.vset(part_a), graph.vset(part_b), graph.vset(part_c)))


class DlsAutomorphism(NamedTuple):
    graph: DefGraph
    splitting: SplittingData
    twist_element: NormalForm        # z
    kind: str
    generator_images: dict           # vertex name -> NormalForm

    def image(self, v: str) -> NormalForm:
        return self.generator_images[v]

    def describe(self):
        imgs = ", ".join(
            "%s->%s" % (v, self.generator_images[v])
            for v in self.graph.vertices
            if len(self.generator_images[v].codes) != 1
            or self.generator_images[v].codes[0] != 2 * self.graph.index(v) + 1
        )
        return "%s[z=%s%s]" % (self.kind, self.twist_element, "; " + imgs if imgs else "")


def _identity_images(graph: DefGraph) -> dict:
    return {v: _nf(graph, (2 * i + 1,)) for i, v in enumerate(graph.vertices)}


def transvection_centralizer_mask(graph: DefGraph, v: str) -> int:
    """Support available to z for the splitting at v: vertices other than v
    whose star contains the link of v."""
    iv = graph.index(v)
    mask = graph.perp_closed(graph.link(v)).mask
    return mask & ~(1 << iv)


def build_transvection(graph: DefGraph, v: str, z: NormalForm) -> DlsAutomorphism:
    """v -> z v, other generators fixed.  Requires z to centralize the edge
    group of the splitting at v, i.e. supp(z) inside (lk v)_closed-perp - v.

    The kind records where z sits: a twist when z is central in the edge
    group, a fold when the core of z avoids lk v entirely, mixed otherwise.
    """
    if z.graph != graph:
        raise GraphMismatchError("z belongs to a different graph")
    iv = graph.index(v)
    allowed = transvection_centralizer_mask(graph, v)
    zmask = vertex_mask(z.codes)
    if zmask & ~allowed:
        bad = graph.vset_mask(zmask & ~allowed).names()[0]
        lk = graph.link(v)
        offending = [u for u in lk if not graph.has_edge(bad, u) and bad != u]
        raise NotInCentralizerError(
            "z uses %r which does not centralize the edge group%s"
            % (bad, " (fails to commute with %r)" % offending[0] if offending else "")
        )
    lk_mask = graph.link_mask(iv)
    centre_mask = lk_mask & graph.perp_closed(graph.link(v)).mask
    _, zcore = cyclic_reduce_codes(graph, z.codes)
    if not (zmask & ~centre_mask):
        kind = TWIST
    elif not (vertex_mask(zcore) & lk_mask):
        kind = FOLD
    else:
        kind = MIXED
    images = _identity_images(graph)
    images[v] = _nf(graph, normal_codes(graph, z.codes + (2 * iv + 1,)))
    return DlsAutomorphism(graph, SplittingData.hnn(graph, v), z, kind, images)


def build_partial_conjugation(
    graph: DefGraph, part_a, part_b, part_c, z: NormalForm
) -> DlsAutomorphism:
    """Fix the A side, conjugate the B side by z.  The three vertex sets must
    describe a genuine visual amalgam and z must centralize the edge group
    inside the A side."""
    da = graph.vset(part_a)
    db = graph.vset(part_b)
    dc = graph.vset(part_c)
    if (da | db).mask != graph.full:
        raise InvalidSplittingError("sides do not cover the graph")
    if (da & db).mask != dc.mask:
        raise InvalidSplittingError("sides must intersect exactly in the edge set")
    if not (da - dc) or not (db - dc):
        raise InvalidSplittingError("degenerate side")
    for u in da - dc:
        for w in db - dc:
            if graph.has_edge(u, w):
                raise InvalidSplittingError(
                    "edge %s-%s crosses the splitting" % (u, w)
                )
    if z.graph != graph:
        raise GraphMismatchError("z belongs to a different graph")
    allowed = da.mask & graph.perp_closed(dc).mask
    zmask = vertex_mask(z.codes)
    if zmask & ~allowed:
        bad = graph.vset_mask(zmask & ~allowed).names()[0]
        raise NotInCentralizerError(
            "z uses %r outside the centralizer of the edge group in the A side" % bad
        )
    images = _identity_images(graph)
    zinv = inv_codes(z.codes)
    for u in db - dc:
        iu = graph.index(u)
        images[u] = _nf(graph, normal_codes(graph, z.codes + (2 * iu + 1,) + zinv))
    split = SplittingData.amalgam(graph, da, db, dc)
    return DlsAutomorphism(graph, split, z, PARTIAL_CONJUGATION, images)


# ---------------------------------------------------------------------------
# applying, composing, inverting
# ---------------------------------------------------------------------------

def apply_images(graph: DefGraph, images: dict, g) -> NormalForm:
    codes = g.codes if isinstance(g, NormalForm) else tuple(g)
    out = []
    for c in codes:
        img = images[graph.vertices[c >> 1]].codes
        out.extend(img if c & 1 else inv_codes(img))
    return _nf(graph, normal_codes(graph, out))


def apply(phi: DlsAutomorphism, g: NormalForm) -> NormalForm:
    if g.graph != phi.graph:
        raise GraphMismatchError("element belongs to a different graph")
    return apply_images(phi.graph, phi.generator_images, g)


def compose(phi: DlsAutomorphism, psi: DlsAutomorphism) -> dict:
    """Generator-image map of phi o psi (first psi, then phi)."""
    if phi.graph != psi.graph:
        raise GraphMismatchError("automorphisms on different graphs")
    graph = phi.graph
    return {
        v: apply_images(graph, phi.generator_images, psi.generator_images[v])
        for v in graph.vertices
    }


def inverse(phi: DlsAutomorphism) -> DlsAutomorphism:
    """Same splitting, inverse twist element."""
    z = phi.twist_element.inv()
    if phi.kind == PARTIAL_CONJUGATION:
        da, db, dc = phi.splitting.parts
        return build_partial_conjugation(phi.graph, da, db, dc, z)
    return build_transvection(phi.graph, phi.splitting.vertex, z)


def is_identity_map(graph: DefGraph, images: dict) -> bool:
    return all(
        images[v].codes == (2 * graph.index(v) + 1,) for v in graph.vertices
    )


def verify_automorphism(phi, inverse_images: dict = None, graph: DefGraph = None) -> bool:
    """Soundness gate: every defining relator maps to the identity and the
    supplied (or built) inverse composes to the identity on generators.

    Accepts either a DlsAutomorphism or a raw generator-image dict together
    with `graph` and candidate `inverse_images`.
    """
    if isinstance(phi, DlsAutomorphism):
        graph = phi.graph
        images = phi.generator_images
        if inverse_images is None:
            inverse_images = inverse(phi).generator_images
    else:
        images = phi
        if graph is None:
            raise ValueError("graph required for raw image maps")
    for i, j in sorted(graph.edges):
        u = images[graph.vertices[i]].codes
        w = images[graph.vertices[j]].codes
        if normal_codes(graph, u + w + inv_codes(u) + inv_codes(w)):
            return False
    if inverse_images is not None:
        comp = {
            v: apply_images(graph, images, inverse_images[v])
            for v in graph.vertices
        }
        if not is_identity_map(graph, comp):
            return False
        comp = {
            v: apply_images(graph, inverse_images, images[v])
            for v in graph.vertices
        }
        if not is_identity_map(graph, comp):
            return False
    return True


# ---------------------------------------------------------------------------
# outer-order certificates
# ---------------------------------------------------------------------------

class OuterOrderReport(NamedTuple):
    max_power: int
    traces: dict          # probe (str) -> list of cyclic core lengths, n = 0..max_power
    certificate: str      # "NOT_INNER_UP_TO(N)" or ""
    witness: str          # probe word witnessing the certificate
    outer_powers: dict    # probe -> sorted powers n with core length differing from n=0


def outer_order_certificate(
    phi: DlsAutomorphism, probes, max_power: int
) -> OuterOrderReport:
    """Track the conjugacy length (cyclic core length) of phi^n(probe).  The
    conjugacy length is invariant under inner automorphisms, so any change
    certifies that power outer; a strictly increasing trace over the whole
    range is flagged as the certificate."""
    if not probes:
        raise ValueError("probes must be nonempty")
    graph = phi.graph
    traces = {}
    outer_powers = {}
    certificate = ""
    witness = ""
    for probe in probes:
        g = probe
        lens = []
        for n in range(max_power + 1):
            _, core = cyclic_reduce_codes(graph, g.codes)
            lens.append(len(core))
            if n < max_power:
                g = apply(phi, g)
        key = str(probe)
        traces[key] = lens
        outer_powers[key] = [n for n in range(1, max_power + 1) if lens[n] != lens[0]]
        if not certificate and all(lens[n] < lens[n + 1] for n in range(max_power)):
            certificate = "NOT_INNER_UP_TO(%d)" % max_power
            witness = key
    return OuterOrderReport(max_power, traces, certificate, witness, outer_powers)
