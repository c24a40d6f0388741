"""Words over the generators, canonical normal forms, geodesics, hyperplanes,
the median operation, and median-subalgebra closure.

Letters are encoded as small integers: ``code = 2*vertex_index + (sign > 0)``,
so ``code ^ 1`` is the inverse letter and numeric order on codes realizes the
canonical letter order (graph order on vertices, sign -1 before +1).

The canonical form of an element is the greedy one: among all reduced words in
the shuffle class, repeatedly emit the least available first letter.  This is
the lexicographically least reduced word, and its prefixes are again canonical.
"""

from __future__ import annotations

import os
from typing import Iterable, NamedTuple

from .errors import (
    ArityMismatchError,
    BallCapExceededError,
    GraphMismatchError,
    TransverseHyperplanesError,
    WordSyntaxError,
)
from .graph import DefGraph


class Letter(NamedTuple):
    vertex: str
    sign: int


# ---------------------------------------------------------------------------
# integer-code kernels
# ---------------------------------------------------------------------------

def code_of(graph: DefGraph, letter: Letter) -> int:
    i = graph.index(letter.vertex)
    if letter.sign not in (1, -1):
        raise WordSyntaxError("sign must be +-1")
    return 2 * i + (1 if letter.sign > 0 else 0)


def letter_of(graph: DefGraph, code: int) -> Letter:
    return Letter(graph.vertices[code >> 1], 1 if code & 1 else -1)


def reduce_codes(adj, codes):
    """Left-to-right stack reduction; output is a reduced word (list)."""
    out = []
    for c in codes:
        v = c >> 1
        am = adj[v]
        k = len(out) - 1
        hit = -1
        while k >= 0:
            ck = out[k]
            vk = ck >> 1
            if vk == v:
                if ck == c ^ 1:
                    hit = k
                break
            if not (am >> vk) & 1:
                break
            k -= 1
        if hit >= 0:
            del out[hit]
        else:
            out.append(c)
    return out


def canonical_codes(block, reduced):
    """Greedy least-available-first-letter form of a reduced word."""
    rem = list(reduced)
    out = []
    while rem:
        blocked = 0
        best = -1
        bi = -1
        for i, c in enumerate(rem):
            if not (blocked >> (c >> 1)) & 1 and (best < 0 or c < best):
                best = c
                bi = i
            blocked |= block[c >> 1]
        out.append(best)
        del rem[bi]
    return tuple(out)


def normal_codes(graph: DefGraph, codes) -> tuple:
    return canonical_codes(graph.block, reduce_codes(graph.adj, codes))


def inv_codes(codes):
    return tuple(c ^ 1 for c in reversed(codes))


def first_positions(block, codes):
    """(position, code) pairs of letters that shuffle to the front."""
    blocked = 0
    out = []
    for i, c in enumerate(codes):
        v = c >> 1
        if not (blocked >> v) & 1:
            out.append((i, c))
        blocked |= block[v]
    return out


def first_code_set(block, codes):
    blocked = 0
    out = set()
    for c in codes:
        v = c >> 1
        if not (blocked >> v) & 1:
            out.add(c)
        blocked |= block[v]
    return out


def last_positions(block, codes):
    """(position, code) pairs of letters that shuffle to the end."""
    blocked = 0
    out = []
    for i in range(len(codes) - 1, -1, -1):
        c = codes[i]
        v = c >> 1
        if not (blocked >> v) & 1:
            out.append((i, c))
        blocked |= block[v]
    out.reverse()
    return out


def strip_first_code(block, codes, code):
    """Remove the available occurrence of `code` from the front of the class."""
    blocked = 0
    for i, c in enumerate(codes):
        v = c >> 1
        if c == code and not (blocked >> v) & 1:
            return codes[:i] + codes[i + 1:]
        blocked |= block[v]
    raise ValueError("letter not available as a first letter")


def vertex_mask(codes):
    m = 0
    for c in codes:
        m |= 1 << (c >> 1)
    return m


def count_vertex(codes, iv):
    return sum(1 for c in codes if c >> 1 == iv)


def strip_suffix_in(graph: DefGraph, codes, allowed_mask):
    """Gate of the identity in the coset g*A_allowed: repeatedly delete last
    letters whose vertex lies in allowed_mask, then canonicalize.

    The result is the unique minimal-length coset representative.
    """
    w = list(codes)
    block = graph.block
    changed = True
    while changed and w:
        changed = False
        blocked = 0
        for i in range(len(w) - 1, -1, -1):
            v = w[i] >> 1
            if not (blocked >> v) & 1 and (allowed_mask >> v) & 1:
                del w[i]
                changed = True
                break
            blocked |= block[v]
    return canonical_codes(block, w)


# ---------------------------------------------------------------------------
# public value types
# ---------------------------------------------------------------------------

class Word:
    """An arbitrary word over the generators; no reduction is implied."""

    __slots__ = ("graph", "codes")

    def __init__(self, graph: DefGraph, letters: Iterable[Letter]):
        self.graph = graph
        self.codes = tuple(
            c if isinstance(c, int) else code_of(graph, c) for c in letters
        )

    def letters(self):
        return tuple(letter_of(self.graph, c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __repr__(self):
        return "Word(%s)" % format_codes(self.graph, self.codes)


class NormalForm:
    """Canonical reduced representative of a group element.

    Instances should be produced by normalize()/multiply()/..., never built
    from raw letters directly.
    """

    __slots__ = ("graph", "codes", "_hash")

    def __init__(self, graph: DefGraph, codes: tuple, _trusted=False):
        if not _trusted:
            codes = normal_codes(graph, codes)
        self.graph = graph
        self.codes = codes
        self._hash = hash(codes)

    def letters(self):
        return tuple(letter_of(self.graph, c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __bool__(self):
        return bool(self.codes)

    def __eq__(self, other):
        return (
            isinstance(other, NormalForm)
            and self.codes == other.codes
            and self.graph == other.graph
        )

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        return multiply(self, other)

    def inv(self) -> "NormalForm":
        return NormalForm(self.graph, inv_codes(self.codes), _trusted=True)

    def __pow__(self, n: int) -> "NormalForm":
        if n < 0:
            return self.inv() ** (-n)
        out = _nf(self.graph, ())
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def support(self):
        """Vertices whose letters appear in the normal form."""
        return self.graph.vset_mask(vertex_mask(self.codes))

    def __str__(self):
        return format_codes(self.graph, self.codes)

    def __repr__(self):
        return "<%s>" % format_codes(self.graph, self.codes)

    def sort_key(self):
        return (len(self.codes), self.codes)


def _nf(graph, codes) -> NormalForm:
    return NormalForm(graph, tuple(codes), _trusted=True)


class CyclicDecomposition(NamedTuple):
    conjugator: NormalForm   # x
    core: NormalForm         # cyclically reduced a, with g = x a x^-1 reduced


class Hyperplane:
    """A wall of the cube complex, named by its label and the canonical
    representative of the coset base*A_{lk(label)} of its positively
    oriented dual edges."""

    __slots__ = ("graph", "label", "rep", "_hash")

    def __init__(self, graph, label, rep_codes):
        self.graph = graph
        self.label = label
        self.rep = rep_codes
        self._hash = hash((label, rep_codes))

    def __eq__(self, other):
        return (
            isinstance(other, Hyperplane)
            and self.label == other.label
            and self.rep == other.rep
            and self.graph == other.graph
        )

    def __hash__(self):
        return self._hash

    def rep_nf(self) -> NormalForm:
        return _nf(self.graph, self.rep)

    def __repr__(self):
        return "Hyperplane(%s @ %s)" % (self.label, format_codes(self.graph, self.rep) )


def hyperplane_at(graph: DefGraph, base_codes, code) -> Hyperplane:
    """Hyperplane dual to the edge read by `code` at the vertex `base_codes`."""
    iv = code >> 1
    if code & 1:
        b = base_codes
    else:
        b = normal_codes(graph, tuple(base_codes) + (code,))
    rep = strip_suffix_in(graph, b, graph.link_mask(iv))
    return Hyperplane(graph, graph.vertices[iv], rep)


def translate_hyperplane(g: NormalForm, h: Hyperplane) -> Hyperplane:
    graph = h.graph
    moved = normal_codes(graph, g.codes + h.rep)
    rep = strip_suffix_in(graph, moved, graph.link_mask(graph.index(h.label)))
    return Hyperplane(graph, h.label, rep)


# ---------------------------------------------------------------------------
# parsing / formatting
# ---------------------------------------------------------------------------

def parse_word(graph: DefGraph, text: str) -> Word:
    """Whitespace-separated letters `a` / `a^-1` (or `a^k`); `1` is the
    empty word."""
    codes = []
    for tok in text.split():
        if tok == "1":
            continue
        name, _, exp = tok.partition("^")
        if not name:
            raise WordSyntaxError("bad token %r" % tok)
        if exp == "":
            power = 1
        else:
            try:
                power = int(exp)
            except ValueError:
                raise WordSyntaxError("bad exponent in %r" % tok) from None
        i = graph.index(name)
        c = 2 * i + (1 if power > 0 else 0)
        codes.extend([c] * abs(power))
    w = Word(graph, ())
    w.codes = tuple(codes)
    return w


def format_codes(graph: DefGraph, codes) -> str:
    if not codes:
        return "1"
    toks = []
    for c in codes:
        v = graph.vertices[c >> 1]
        toks.append(v if c & 1 else v + "^-1")
    return " ".join(toks)


def _coerce_codes(graph, w):
    if isinstance(w, NormalForm) or isinstance(w, Word):
        if w.graph != graph:
            raise GraphMismatchError("word belongs to a different graph")
        return w.codes
    if isinstance(w, str):
        return parse_word(graph, w).codes
    raise WordSyntaxError("expected Word, NormalForm or string")


# ---------------------------------------------------------------------------
# group operations
# ---------------------------------------------------------------------------

def normalize(graph_or_word, word=None) -> NormalForm:
    """Canonical reduced representative of a word's group element."""
    if word is None:
        w = graph_or_word
        graph = w.graph
    else:
        graph = graph_or_word
        w = word
    codes = _coerce_codes(graph, w)
    return _nf(graph, normal_codes(graph, codes))


def multiply(g: NormalForm, h: NormalForm) -> NormalForm:
    if g.graph != h.graph:
        raise GraphMismatchError("factors live on different graphs")
    return _nf(g.graph, normal_codes(g.graph, g.codes + h.codes))


def invert(g: NormalForm) -> NormalForm:
    return g.inv()


def identity(graph: DefGraph) -> NormalForm:
    return _nf(graph, ())


def conjugate(g: NormalForm, by: NormalForm) -> NormalForm:
    """by * g * by^-1"""
    graph = g.graph
    return _nf(graph, normal_codes(graph, by.codes + g.codes + inv_codes(by.codes)))


def cyclic_reduce_codes(graph: DefGraph, codes):
    """Split canonical `codes` as x a x^-1 with `a` of minimal conjugacy length."""
    block = graph.block
    x = []
    w = list(codes)
    while True:
        firsts = first_positions(block, w)
        lasts = last_positions(block, w)
        last_by_code = {}
        for pos, c in lasts:
            last_by_code[c] = pos
        choice = None
        for pos, c in firsts:
            j = last_by_code.get(c ^ 1)
            if j is not None and j != pos:
                if choice is None or c < choice[1]:
                    choice = (pos, c, j)
        if choice is None:
            break
        pos, c, j = choice
        x.append(c)
        if pos < j:
            del w[j]
            del w[pos]
        else:
            del w[pos]
            del w[j]
    return canonical_codes(block, x), canonical_codes(block, w)


def cyclic_reduce(g: NormalForm) -> CyclicDecomposition:
    xc, core = cyclic_reduce_codes(g.graph, g.codes)
    return CyclicDecomposition(_nf(g.graph, xc), _nf(g.graph, core))


def geodesic_hyperplanes(g: NormalForm) -> list:
    """Hyperplanes crossed by the canonical geodesic from 1 to g, in order."""
    graph = g.graph
    out = []
    prefix = []
    for c in g.codes:
        out.append(hyperplane_at(graph, tuple(prefix), c))
        prefix.append(c)
    return out


def median_codes(graph: DefGraph, x, y, z):
    adj, block = graph.adj, graph.block
    u = reduce_codes(adj, inv_codes(x) + tuple(y))
    v = reduce_codes(adj, inv_codes(x) + tuple(z))
    taken = list(x)
    while True:
        fu = first_code_set(block, u)
        if not fu:
            break
        fv = first_code_set(block, v)
        common = fu & fv
        if not common:
            break
        c = min(common)
        taken.append(c)
        u = strip_first_code(block, u, c)
        v = strip_first_code(block, v, c)
    return canonical_codes(block, reduce_codes(adj, taken))


def median(x: NormalForm, y: NormalForm, z: NormalForm) -> NormalForm:
    """The cubical median m(x, y, z): walk from x along letters that start
    both x^-1 y and x^-1 z until no common first letter remains."""
    if x.graph != y.graph or x.graph != z.graph:
        raise GraphMismatchError("median arguments on different graphs")
    if x == y or x == z:
        return x
    if y == z:
        return y
    return _nf(x.graph, median_codes(x.graph, x.codes, y.codes, z.codes))


def dist(g: NormalForm, h: NormalForm) -> int:
    return len(normal_codes(g.graph, inv_codes(g.codes) + h.codes))


class ClosureResult(NamedTuple):
    elements: list          # tuples of NormalForm, in generation order
    truncated: bool
    cap: int


DEFAULT_CLOSURE_CAP = 100_000


def subalgebra_closure(points, cap: int = DEFAULT_CLOSURE_CAP) -> ClosureResult:
    """Least median-closed superset of `points` (tuples of NormalForm of a
    common arity), median applied coordinatewise.  Stops with truncated=True
    once more than `cap` tuples are generated."""
    pts = []
    seen = set()
    arity = None
    for t in points:
        t = tuple(t)
        if arity is None:
            arity = len(t)
        elif len(t) != arity:
            raise ArityMismatchError("tuples of mixed arity")
        if t not in seen:
            seen.add(t)
            pts.append(t)
    if arity is None:
        return ClosureResult([], False, cap)
    fresh = list(pts)
    while fresh:
        if len(pts) > cap:
            return ClosureResult(pts, True, cap)
        new = []
        n = len(pts)
        fresh_set = set(fresh)
        for a in fresh:
            for i in range(n):
                b = pts[i]
                for j in range(i, n):
                    c = pts[j]
                    m = tuple(median(a[k], b[k], c[k]) for k in range(arity))
                    if m not in seen:
                        seen.add(m)
                        new.append(m)
                        if len(pts) + len(new) > cap:
                            pts.extend(new)
                            return ClosureResult(pts, True, cap)
        pts.extend(new)
        fresh = new
    return ClosureResult(pts, False, cap)


# ---------------------------------------------------------------------------
# balls, intervals, trace machinery
# ---------------------------------------------------------------------------

def ball_cap() -> int:
    try:
        return int(os.environ.get("RAAGTK_BALL_CAP", ""))
    except ValueError:
        return 200_000


def ball_codes(graph: DefGraph, radius: int, cap: int = None) -> list:
    """All canonical forms of length <= radius, sorted by (length, codes)."""
    if cap is None:
        cap = ball_cap()
    seen = {()}
    levels = [[()]]
    ncodes = 2 * len(graph)
    for r in range(radius):
        nxt = set()
        for w in levels[r]:
            for c in range(ncodes):
                nf = normal_codes(graph, w + (c,))
                if len(nf) == r + 1 and nf not in seen:
                    nxt.add(nf)
        if len(seen) + len(nxt) > cap:
            raise BallCapExceededError(
                "ball of radius %d exceeds cap %d" % (radius, cap)
            )
        seen.update(nxt)
        levels.append(sorted(nxt))
    out = []
    for lv in levels:
        out.extend(lv)
    return out


def ball(graph: DefGraph, radius: int, cap: int = None) -> list:
    return [_nf(graph, c) for c in ball_codes(graph, radius, cap)]


def interval_codes(graph: DefGraph, x, y, max_len: int = None):
    """Distinct vertices on geodesics from x to y (prefix closure of the
    trace x^-1 y), as canonical codes.  Optionally only those of length
    <= max_len."""
    adj, block = graph.adj, graph.block
    z = tuple(reduce_codes(adj, inv_codes(x) + tuple(y)))
    frontier = {(): z}
    seen_q = {()}
    out = []
    while frontier:
        nxt = {}
        for q, rem in frontier.items():
            p = normal_codes(graph, tuple(x) + q)
            if max_len is None or len(p) <= max_len:
                out.append(p)
            for c in first_code_set(block, rem):
                q2 = normal_codes(graph, q + (c,))
                if q2 not in seen_q:
                    seen_q.add(q2)
                    nxt[q2] = tuple(strip_first_code(block, rem, c))
        frontier = nxt
    return out


def prefix_codes(graph: DefGraph, codes, length: int):
    """Distinct prefixes of the trace `codes` having the given length."""
    block = graph.block
    frontier = {(): tuple(codes)}
    for _ in range(length):
        nxt = {}
        for q, rem in frontier.items():
            for c in first_code_set(block, rem):
                q2 = normal_codes(graph, q + (c,))
                if q2 not in nxt:
                    nxt[q2] = tuple(strip_first_code(block, rem, c))
        frontier = nxt
    return list(frontier.keys())


def reach_masks(graph: DefGraph, codes):
    """Dependence order on the positions of a reduced word.

    reach[j] is the bitmask of positions i <= j linked to j by a chain of
    pairwise non-commuting letters (j itself included).  Two crossings are
    realized by nested hyperplanes iff one reaches the other; otherwise the
    hyperplanes are transverse.
    """
    adj = graph.adj
    reach = []
    for j, cj in enumerate(codes):
        vj = cj >> 1
        m = 1 << j
        for i in range(j):
            vi = codes[i] >> 1
            if vi == vj or not (adj[vi] >> vj) & 1:
                m |= reach[i]
        reach.append(m)
    return reach


def realize_pair_span(graph: DefGraph, codes, i: int, j: int):
    """Reorder a reduced word as B * A * C where A is the dependence interval
    of positions i <= j.  Returns (B_codes, A_codes); the geodesic that starts
    at (start * B) and reads A crosses exactly the hyperplanes separating or
    equal to the crossings at i and j.
    """
    reach = reach_masks(graph, codes)
    if not (reach[j] >> i) & 1:
        raise TransverseHyperplanesError(
            "crossings %d and %d are transverse" % (i, j)
        )
    bcodes = []
    acodes = []
    for k, c in enumerate(codes):
        after_i = (reach[k] >> i) & 1
        if after_i and k <= j and (reach[j] >> k) & 1:
            acodes.append(c)
        elif not after_i:
            bcodes.append(c)
    return tuple(bcodes), tuple(acodes)
