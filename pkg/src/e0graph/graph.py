"""The excess-zero graph on the non-identity involutions of a finite group.

Vertices are the involutions; x and y are joined exactly when
l(xy) = l(x) + l(y), which happens iff N(x) and N(y) are disjoint.  N-sets
are packed into integer bitsets over the positive-root indices, so building
the graph is a pairwise AND over a vector of machine words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coxeter import (
    CoxeterGroup,
    Element,
    SpecError,
    ascending,
    descending,
    format_word,
    parse_word,
)


class InvolutionSet:
    """The non-identity involutions of a finite group, in a stable order."""

    def __init__(self, group, elements):
        self.group = group
        self.elements = elements  # sorted by (length, lexmin word)
        self.index = {e.perm: i for i, e in enumerate(elements)}
        self.by_length = {}
        for i, e in enumerate(elements):
            self.by_length.setdefault(e.length, []).append(i)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, x):
        try:
            return self.index[x.perm]
        except KeyError:
            raise ValueError(f"{x!r} is not a non-identity involution of this group")


def enumerate_involutions(group):
    """All w != 1 with w^2 = 1, via full group enumeration (cached)."""
    if not isinstance(group, CoxeterGroup):
        raise SpecError(f"{group.label} is infinite; use the ball explorer")
    cached = getattr(group, "_involutions", None)
    if cached is not None:
        return cached
    ident = group.identity_perm
    pad = group._pad
    out = []
    for p in group.enumerate_perms():
        if p != ident and p.translate(p + pad) == ident:
            out.append(Element(group, p))
    out.sort(key=Element.sort_key)
    invset = InvolutionSet(group, out)
    group._involutions = invset
    return invset


def is_adjacent(x, y):
    """Edge test: N(x) and N(y) disjoint (x, y involutions, x != y)."""
    g = x.group
    return g._n_bits(x.perm) & g._n_bits(y.perm) == 0


class E0Graph:
    """The graph itself: involution vertices plus bitset adjacency rows."""

    def __init__(self, group, vertices, nbits, adj):
        self.group = group
        self.vertices = vertices
        self.nbits = nbits  # N-set bitset per vertex
        self.adj = adj      # adjacency bitset per vertex (over vertex indices)

    def __len__(self):
        return len(self.vertices)

    def degree(self, i):
        return self.adj[i].bit_count()

    def degrees(self):
        return [row.bit_count() for row in self.adj]

    def edge_count(self):
        return sum(self.degrees()) // 2

    def edges(self):
        out = []
        for i, row in enumerate(self.adj):
            rest = row >> (i + 1)
            j = i + 1
            while rest:
                if rest & 1:
                    out.append((i, j))
                rest >>= 1
                j += 1
        return out

    def neighborhood(self, x):
        """The set of vertices adjacent to x."""
        i = self.vertices.index_of(x)
        return {self.vertices.elements[j] for j in _bit_indices(self.adj[i])}

    def to_json_dict(self):
        verts = [
            {"id": i, "word": format_word(e.word), "length": e.length}
            for i, e in enumerate(self.vertices)
        ]
        return {
            "group": self.group.label,
            "vertices": verts,
            "edges": [[i, j] for i, j in self.edges()],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_json_dict(), **kwargs)

    def to_dot(self):
        lines = [f'graph "{self.group.label}" {{']
        for i, e in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{format_word(e.word)}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def _bit_indices(bits):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def build_graph(group):
    """Build the excess-zero graph of a finite group (cached on the group)."""
    cached = getattr(group, "_e0graph", None)
    if cached is not None:
        return cached
    vertices = enumerate_involutions(group)
    nbits = [group._n_bits(e.perm) for e in vertices]
    V = len(nbits)
    adj = _pairwise_disjoint_rows(nbits, V, group.pos_count)
    g = E0Graph(group, vertices, nbits, adj)
    group._e0graph = g
    return g


def _pairwise_disjoint_rows(nbits, V, width):
    """Adjacency rows: bit j of row i set iff nbits[i] & nbits[j] == 0.

    Identity is excluded from the vertex set, so every nbits entry is
    non-zero and the diagonal comes out empty by itself.
    """
    if V == 0:
        return []
    if width > 63:
        return [
            sum((1 << j) for j, b in enumerate(nbits) if i != j and nbits[i] & b == 0)
            for i in range(V)
        ]
    arr = np.array(nbits, dtype=np.uint64)
    rows = []
    block = 2048
    for start in range(0, V, block):
        chunk = arr[start : start + block]
        disjoint = (chunk[:, None] & arr[None, :]) == 0
        packed = np.packbits(disjoint, axis=1, bitorder="little")
        for row in packed:
            rows.append(int.from_bytes(row.tobytes(), "little"))
    return rows


@dataclass
class ValencyDistribution:
    """Sorted (valency, count) pairs; rendered in the dotted i^k notation."""

    pairs: tuple

    @classmethod
    def from_graph(cls, g):
        counts = {}
        for d in g.degrees():
            counts[d] = counts.get(d, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple(sorted((int(v), int(c)) for v, c in pairs)))

    @property
    def total(self):
        return sum(c for _, c in self.pairs)

    def __str__(self):
        return ".".join(f"{v}^{c}" for v, c in self.pairs)

    def to_csv(self):
        lines = ["valency,count"]
        lines.extend(f"{v},{c}" for v, c in self.pairs)
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({"pairs": [[v, c] for v, c in self.pairs]})


def valency_distribution(g):
    return ValencyDistribution.from_graph(g)


def components_and_diameter(g):
    """Connected components plus the diameter of the component without w0.

    Reachability sets are grown one step per pass with bitset unions, so the
    work is O(diameter * edges) words.  Raises for rank-1 groups, whose "hat"
    component is empty and has no diameter.
    """
    group = g.group
    if group.rank < 2:
        raise ValueError("rank-1 group: the component away from w0 is empty, "
                         "its diameter is undefined")
    V = len(g.vertices)
    reach = [1 << v for v in range(V)]
    ecc = [0] * V
    passes = 0
    while True:
        passes += 1
        changed = False
        new = []
        for v in range(V):
            r = reach[v]
            grown = r
            for u in _bit_indices(g.adj[v]):
                grown |= reach[u]
            if grown != r:
                ecc[v] = passes
                changed = True
            new.append(grown)
        reach = new
        if not changed:
            break
    comp_masks = []
    seen = 0
    for v in range(V):
        if not (seen >> v) & 1:
            comp_masks.append(reach[v])
            seen |= reach[v]
    components = [
        frozenset(g.vertices.elements[i] for i in _bit_indices(m)) for m in comp_masks
    ]
    w0 = group.longest_element()
    w0_idx = g.vertices.index_of(w0)
    hat_masks = [m for m in comp_masks if not (m >> w0_idx) & 1]
    if len(hat_masks) != 1:
        raise ValueError(f"expected one component away from w0, found {len(hat_masks)}")
    hat = hat_masks[0]
    hat_diameter = max(ecc[v] for v in _bit_indices(hat))
    return components, hat_diameter


def graph_distance(g, x, y):
    """BFS distance between two vertices; None when disconnected."""
    i, j = g.vertices.index_of(x), g.vertices.index_of(y)
    if i == j:
        return 0
    reach = 1 << i
    frontier = reach
    d = 0
    while frontier:
        d += 1
        grown = 0
        for u in _bit_indices(frontier):
            grown |= g.adj[u]
        frontier = grown & ~reach
        if (frontier >> j) & 1:
            return d
        reach |= frontier
    return None


def neighborhood(g, x):
    return g.neighborhood(x)


def excess(group, w):
    """min l(x) + l(y) - l(w) over factorizations w = xy into involutions.

    x runs over the involutions and the identity, ordered by length, with an
    early exit once the minimum possible value 0 is achieved.  Defined for
    finite groups, where every element has such a factorization.
    """
    if not isinstance(group, CoxeterGroup):
        raise SpecError("excess is computed over finite groups only")
    invs = enumerate_involutions(group)
    lw = w.length
    ident = group.identity
    best = None
    for x in [ident] + list(invs):
        y = x.inverse() * w
        if not (y.is_identity() or y.is_involution()):
            continue
        e = x.length + y.length - lw
        if best is None or e < best:
            best = e
        if best == 0:
            return 0
    if best is None:
        raise ValueError(f"{w!r} is not a product of two involutions")
    return best


def pendant_elements(g):
    """Vertices of valency exactly 1."""
    return {e for e, row in zip(g.vertices, g.adj) if row.bit_count() == 1}


_E6_PENDANT_WORDS = (
    (2,),
    (4,),
    (5, 4, 3),
    (3, 4, 5),
    (6, 5, 4, 3, 1),
    (1, 3, 4, 5, 6),
)

# types whose longest element is central
_CENTRAL_W0 = ("B", "F", "H")


def predicted_pendants(group):
    """Closed-form pendant set for a finite irreducible group of rank >= 2.

    Central-w0 types give {w0 r : r in R}; types A_n, D_n (n odd), E6 and
    I2(m) with m odd have their own explicit word lists.
    """
    spec = group.spec
    if spec is None or spec.is_product:
        raise SpecError("pendant prediction applies to irreducible groups only")
    if not spec.is_finite:
        raise SpecError("pendant prediction applies to finite groups only")
    (family, p), = spec.factors
    n = group.rank
    if n < 2:
        raise SpecError("pendant prediction needs rank >= 2")
    w0 = group.longest_element()
    gens = [group.generator(i) for i in group.generators]

    def from_words(words):
        return {w0 * group.element_from_word(w) for w in words}

    if family in _CENTRAL_W0 or (family == "D" and p % 2 == 0):
        return {w0 * r for r in gens}
    if family == "I2":
        if p % 2 == 0:
            return {w0 * r for r in gens}
        return from_words([(1, 2), (2, 1)])
    if family == "A":
        words = []
        top = -(-n // 2)  # ceil(n/2)
        for i in range(1, top + 1):
            words.append(ascending(i, n + 1 - i))
            words.append(descending(n + 1 - i, i))
        return from_words(words)
    if family == "D":  # p odd here
        words = [(i,) for i in range(1, n - 1)]
        words.append((n, n - 2, n - 1))
        words.append((n - 1, n - 2, n))
        return from_words(words)
    if family == "E":
        if p != 6:
            return {w0 * r for r in gens}  # E7/E8 have central w0
        return from_words(_E6_PENDANT_WORDS)
    raise SpecError(f"no pendant prediction for type {spec.label}")


@dataclass
class PendantReport:
    """Computed valency-1 vertices against the closed-form prediction."""

    group_label: str
    computed: frozenset
    predicted: frozenset

    @property
    def match(self):
        return self.computed == self.predicted


def pendant_report(group):
    g = build_graph(group)
    return PendantReport(
        group.label,
        frozenset(pendant_elements(g)),
        frozenset(predicted_pendants(group)),
    )


def delta1_of_w0x(group, x):
    """Neighbours of w0 x, computed as {w in I(W) : l(xw) = l(x) - l(w)}.

    Requires w0 x to be a non-identity involution; agrees with the graph
    neighbourhood without building the graph.
    """
    w0 = group.longest_element()
    v = w0 * x
    if v.is_identity() or not v.is_involution():
        raise ValueError("w0 x is not a non-identity involution")
    lx = x.length
    out = set()
    for w in enumerate_involutions(group):
        if (x * w).length == lx - w.length:
            out.add(w)
    return out


def is_sequential(word, ambient_rank):
    """Match a type-A element against the staircase shape.

    Returns (a, rise, drop) when the element of W(A_n) given by the reduced
    word also has a reduced expression
    [a-drop, ..., a-1] + [a+rise, a+rise-1, ..., a], else None.
    """
    group = _type_a_group(ambient_rank)
    if isinstance(word, str):
        word = parse_word(word)
    x = group.element_from_word(word)
    k = len(word)
    if x.length != k:
        raise ValueError("word must be reduced")
    if k == 0:
        return None
    n = ambient_rank
    for a in range(1, n + 1):
        for rise in range(0, min(n - a, k - 1) + 1):
            drop = k - 1 - rise
            if a - drop < 1:
                continue
            cand = ascending(a - drop, a - 1) + descending(a + rise, a)
            if group.element_from_word(cand) == x:
                return (a, rise, drop)
    return None


def sequential_shapes(n):
    """The words [i..(n+1-i)] and [(n+1-i)..i] for i up to ceil(n/2)."""
    out = []
    for i in range(1, -(-n // 2) + 1):
        out.append(ascending(i, n + 1 - i))
        out.append(descending(n + 1 - i, i))
    return out


@lru_cache(maxsize=None)
def _type_a_group(n):
    return CoxeterGroup.from_spec(f"A{n}")
