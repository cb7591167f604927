"""Checker surfaces as permutation triples.

A closed oriented surface glued from n white and n black triangles with
3-colored edges is the same data as a triple of permutations: white
triangle j meets black triangle p^c(j) along its color-c edge. This module
holds the dictionary in both directions, the component / vertex / Euler
analytics, the two canonical-form types, and the dessin export.

>>> t = Triple("(1 2)", "()", "()")
>>> [len(c) for c in components(t)]
[2]
>>> euler_characteristic(t, (1, 2))
2
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple, Union

from checkersurf import kernel
from checkersurf.perm import Permutation, cycles, inverse

__all__ = [
    "Triple",
    "CompletelyLabeledSurface",
    "VertexCensus",
    "LabeledSurface",
    "CheckerSurface",
    "Dessin",
    "build_surface",
    "triple_of",
    "components",
    "euler_characteristic",
    "vertex_census",
    "genus",
    "reverse",
    "canonical_form",
    "checker_surface",
    "to_dessin",
    "disjoint_union",
    "random_triple",
]

COLORS = ("blue", "red", "yellow")

PermLike = Union[Permutation, Sequence[int], str]


def _as_images(p: PermLike) -> Tuple[int, ...]:
    """Coerce to 1-based one-line notation (trimmed)."""
    if isinstance(p, Permutation):
        return p.images
    if isinstance(p, str):
        return Permutation.from_cycle_string(p).images
    return Permutation(tuple(p)).images


class Triple:
    """An element of S_n x S_n x S_n, the (blue, red, yellow) gluing data.

    Stored at a fixed ambient degree n; equality ignores trailing points
    fixed by all three colors, matching Permutation equality componentwise.

    >>> Triple("(1 2)", "()", "()", n=3) == Triple("(1 2)", "()", "()")
    True
    """

    __slots__ = ("n", "_b", "_r", "_y")

    def __init__(self, blue: PermLike, red: PermLike, yellow: PermLike, n: int | None = None):
        ib, ir, iy = _as_images(blue), _as_images(red), _as_images(yellow)
        deg = max(len(ib), len(ir), len(iy))
        if n is None:
            n = deg
        if n < deg:
            raise ValueError("ambient degree %d below support degree %d" % (n, deg))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_b", tuple(x - 1 for x in ib) + tuple(range(len(ib), n)))
        object.__setattr__(self, "_r", tuple(x - 1 for x in ir) + tuple(range(len(ir), n)))
        object.__setattr__(self, "_y", tuple(x - 1 for x in iy) + tuple(range(len(iy), n)))

    def __setattr__(self, name, value):
        raise AttributeError("Triple is immutable")

    @classmethod
    def _from_zero_based(cls, n: int, b: Sequence[int], r: Sequence[int], y: Sequence[int]) -> "Triple":
        t = cls.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "_b", tuple(b))
        object.__setattr__(t, "_r", tuple(r))
        object.__setattr__(t, "_y", tuple(y))
        return t

    @property
    def blue(self) -> Permutation:
        return Permutation(tuple(x + 1 for x in self._b))

    @property
    def red(self) -> Permutation:
        return Permutation(tuple(x + 1 for x in self._r))

    @property
    def yellow(self) -> Permutation:
        return Permutation(tuple(x + 1 for x in self._y))

    @property
    def deg(self) -> int:
        return self.n

    def _key(self):
        m = self.n
        while m > 0 and self._b[m - 1] == m - 1 and self._r[m - 1] == m - 1 and self._y[m - 1] == m - 1:
            m -= 1
        return (self._b[:m], self._r[:m], self._y[:m])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triple):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "Triple(%s, %s, %s, n=%d)" % (self.blue, self.red, self.yellow, self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blue": [x + 1 for x in self._b],
            "red": [x + 1 for x in self._r],
            "yellow": [x + 1 for x in self._y],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Triple":
        return cls(data["blue"], data["red"], data["yellow"], n=data.get("n"))


class CompletelyLabeledSurface:
    """Explicit cell structure: 2n labeled triangles and 3n colored edges.

    Edges are (color, white_label, black_label) with 1-based labels, listed
    blue block first, then red, then yellow, each by white label.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Tuple[str, int, int]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(edges))

    def __setattr__(self, name, value):
        raise AttributeError("CompletelyLabeledSurface is immutable")

    @property
    def triangles(self) -> Tuple[Tuple[str, int], ...]:
        whites = tuple(("W", j) for j in range(1, self.n + 1))
        blacks = tuple(("B", j) for j in range(1, self.n + 1))
        return whites + blacks

    @property
    def vertices(self) -> "VertexCensus":
        return vertex_census(triple_of(self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompletelyLabeledSurface):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return "CompletelyLabeledSurface(n=%d, %d edges)" % (self.n, len(self.edges))


def build_surface(t: Triple) -> CompletelyLabeledSurface:
    """Glue white j to black p^c(j) along the color-c edge, all colors.

    >>> s = build_surface(Triple("()", "()", "()", n=3))
    >>> len(s.triangles), len(s.edges)
    (6, 9)
    """
    edges = []
    for color, arr in zip(COLORS, (t._b, t._r, t._y)):
        for w in range(t.n):
            edges.append((color, w + 1, arr[w] + 1))
    return CompletelyLabeledSurface(t.n, edges)


def triple_of(s: CompletelyLabeledSurface) -> Triple:
    """Exact inverse of build_surface, reading labels off the edges.

    Raises ValueError on malformed incidence (an edge color missing,
    doubled, or not matching whites to blacks bijectively).
    """
    n = s.n
    maps: Dict[str, List[int]] = {c: [-1] * n for c in COLORS}
    hit: Dict[str, List[bool]] = {c: [False] * n for c in COLORS}
    if len(s.edges) != 3 * n:
        raise ValueError("expected %d edges, got %d" % (3 * n, len(s.edges)))
    for color, w, b in s.edges:
        if color not in maps:
            raise ValueError("unknown edge color %r" % (color,))
        if not (1 <= w <= n and 1 <= b <= n):
            raise ValueError("edge (%r, %r, %r) out of range" % (color, w, b))
        if maps[color][w - 1] >= 0:
            raise ValueError("white %d has two %s edges" % (w, color))
        if hit[color][b - 1]:
            raise ValueError("black %d has two %s edges" % (b, color))
        maps[color][w - 1] = b - 1
        hit[color][b - 1] = True
    for color in COLORS:
        if any(v < 0 for v in maps[color]):
            raise ValueError("missing %s edges" % (color,))
    return Triple._from_zero_based(n, maps["blue"], maps["red"], maps["yellow"])


def _inv(arr: Sequence[int]) -> List[int]:
    out = [0] * len(arr)
    for i, v in enumerate(arr):
        out[v] = i
    return out


def _comp_perms(t: Triple) -> Tuple[List[int], List[int], List[int]]:
    """The three gluing words: a = y^-1 b, bgen = y^-1 r, c = r^-1 b (0-based)."""
    iy = _inv(t._y)
    ir = _inv(t._r)
    a = [iy[v] for v in t._b]
    bgen = [iy[v] for v in t._r]
    c = [ir[v] for v in t._b]
    return a, bgen, c


def components(t: Triple) -> List[Tuple[int, ...]]:
    """Orbits of the subgroup generated by y^-1 b and y^-1 r, 1-based.

    Each orbit is sorted and the orbits are ordered by minimal element.

    >>> components(Triple("(1 2)", "(3 4)", "()", n=5))
    [(1, 2), (3, 4), (5,)]
    """
    a, bgen, _ = _comp_perms(t)
    seen = [False] * t.n
    out = []
    for start in range(t.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        orbit = []
        while stack:
            x = stack.pop()
            orbit.append(x)
            for g in (a, bgen):
                nxt = g[x]
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append(nxt)
        orbit.sort()
        out.append(tuple(x + 1 for x in orbit))
    out.sort()
    return out


def _count_cycles_on(arr: Sequence[int], pts: Iterable[int]) -> int:
    pts = set(pts)
    seen = set()
    count = 0
    for start in pts:
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = arr[x]
    return count


def euler_characteristic(t: Triple, comp: Iterable[int]) -> int:
    """chi of one component: -|comp| plus the three gluing-word cycle counts.

    >>> euler_characteristic(Triple("(1 2 3)", "(1 3 2)", "()"), (1, 2, 3))
    0
    """
    comp = tuple(sorted(comp))
    if comp not in components(t):
        raise ValueError("%r is not a component of %r" % (comp, t))
    pts = [x - 1 for x in comp]
    a, bgen, c = _comp_perms(t)
    return -len(pts) + _count_cycles_on(a, pts) + _count_cycles_on(bgen, pts) + _count_cycles_on(c, pts)


class VertexCensus:
    """Vertices of the glued surface, one cycle per vertex, per color.

    Colors follow the gluing words: blue vertices are cycles of y^-1 r,
    red vertices cycles of y^-1 b, yellow vertices cycles of r^-1 b.
    A vertex's order (number of incident triangles) is twice its cycle
    length.
    """

    __slots__ = ("blue", "red", "yellow")

    def __init__(self, blue, red, yellow):
        object.__setattr__(self, "blue", tuple(blue))
        object.__setattr__(self, "red", tuple(red))
        object.__setattr__(self, "yellow", tuple(yellow))

    def __setattr__(self, name, value):
        raise AttributeError("VertexCensus is immutable")

    def orders(self, color: str) -> Tuple[int, ...]:
        return tuple(2 * len(cyc) for cyc in getattr(self, color))

    def total(self) -> int:
        return len(self.blue) + len(self.red) + len(self.yellow)

    def count_on(self, comp: Iterable[int]) -> int:
        """Vertices whose cycles lie inside the given point set."""
        pts = set(comp)
        return sum(
            1
            for color in COLORS
            for cyc in getattr(self, color)
            if set(cyc) <= pts
        )

    def __eq__(self, other):
        if not isinstance(other, VertexCensus):
            return NotImplemented
        return (self.blue, self.red, self.yellow) == (other.blue, other.red, other.yellow)

    def __repr__(self):
        return "VertexCensus(blue=%d, red=%d, yellow=%d)" % (
            len(self.blue),
            len(self.red),
            len(self.yellow),
        )


def vertex_census(t: Triple) -> VertexCensus:
    """All vertices with their cycles, 1-based points.

    >>> vertex_census(Triple("(1 2)", "()", "()")).total()
    4
    """
    a, bgen, c = _comp_perms(t)
    carrier = range(1, t.n + 1)
    to_perm = lambda arr: Permutation(tuple(x + 1 for x in arr))
    return VertexCensus(
        blue=cycles(to_perm(bgen), carrier),
        red=cycles(to_perm(a), carrier),
        yellow=cycles(to_perm(c), carrier),
    )


def genus(chi: int) -> int:
    """g with chi = 2 - 2g; odd or oversized chi signals a bug upstream.

    >>> genus(2), genus(0), genus(-2)
    (0, 1, 2)
    """
    if chi % 2 != 0 or chi > 2:
        raise ValueError("impossible Euler characteristic %r for a closed oriented component" % (chi,))
    return (2 - chi) // 2


def reverse(t: Triple) -> Triple:
    """Componentwise inverse: the same surface with colors of triangles
    swapped and orientation reversed.

    >>> reverse(Triple("(1 2 3)", "()", "()")).blue.cycle_string()
    '(1 3 2)'
    """
    return Triple._from_zero_based(t.n, _inv(t._b), _inv(t._r), _inv(t._y))


class LabeledSurface:
    """Canonical representative of a double coset: alpha black labels,
    beta white labels, unlabeled double triangles stripped.

    Equality is degree-aware; obtain instances through canonical_form.
    """

    __slots__ = ("alpha", "beta", "n", "_b", "_r", "_y")

    def __init__(self, alpha: int, beta: int, n: int, b, r, y):
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_b", tuple(b))
        object.__setattr__(self, "_r", tuple(r))
        object.__setattr__(self, "_y", tuple(y))

    def __setattr__(self, name, value):
        raise AttributeError("LabeledSurface is immutable")

    @property
    def triple(self) -> Triple:
        return Triple._from_zero_based(self.n, self._b, self._r, self._y)

    def sort_key(self):
        return (self.alpha, self.beta, self.n, self._b, self._r, self._y)

    def __eq__(self, other):
        if not isinstance(other, LabeledSurface):
            return NotImplemented
        return self.sort_key() == other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __lt__(self, other: "LabeledSurface"):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "LabeledSurface(alpha=%d, beta=%d, n=%d, %s, %s, %s)" % (
            self.alpha,
            self.beta,
            self.n,
            self.triple.blue,
            self.triple.red,
            self.triple.yellow,
        )

    def to_json(self) -> dict:
        data = self.triple.to_json()
        data["alpha"] = self.alpha
        data["beta"] = self.beta
        return data

    @classmethod
    def from_json(cls, data: dict) -> "LabeledSurface":
        t = Triple.from_json(data)
        return canonical_form(t, data.get("alpha", 0), data.get("beta", 0))

    def describe(self) -> dict:
        """Triple JSON plus components, chi, genus, and the vertex census."""
        return _describe(self.triple, self.to_json())


class CheckerSurface:
    """Canonical representative of a triple up to the label-free relabeling
    action, double triangles kept.

    The basis objects of the filtered surface algebra; also the census
    keys. Equality is degree-aware: k disjoint double triangles at degree k
    and at degree k+1 are different elements.
    """

    __slots__ = ("n", "_b", "_r", "_y")

    def __init__(self, n: int, b, r, y):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_b", tuple(b))
        object.__setattr__(self, "_r", tuple(r))
        object.__setattr__(self, "_y", tuple(y))

    def __setattr__(self, name, value):
        raise AttributeError("CheckerSurface is immutable")

    @property
    def canonical_triple(self) -> Triple:
        return Triple._from_zero_based(self.n, self._b, self._r, self._y)

    @property
    def triple(self) -> Triple:
        return self.canonical_triple

    def sort_key(self):
        return (self.n, self._b, self._r, self._y)

    def __eq__(self, other):
        if not isinstance(other, CheckerSurface):
            return NotImplemented
        return self.sort_key() == other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __lt__(self, other: "CheckerSurface"):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        t = self.canonical_triple
        return "CheckerSurface(n=%d, %s, %s, %s)" % (self.n, t.blue, t.red, t.yellow)

    @property
    def component_partition(self) -> List[Tuple[int, ...]]:
        return components(self.canonical_triple)

    @property
    def chi_by_component(self) -> List[int]:
        t = self.canonical_triple
        return [euler_characteristic(t, comp) for comp in self.component_partition]

    @property
    def genus_by_component(self) -> List[int]:
        return [genus(chi) for chi in self.chi_by_component]

    @property
    def vertices(self) -> VertexCensus:
        return vertex_census(self.canonical_triple)

    def double_triangle_count(self) -> int:
        return sum(1 for comp in self.component_partition if len(comp) == 1)

    def to_json(self) -> dict:
        return self.canonical_triple.to_json()

    def describe(self) -> dict:
        return _describe(self.canonical_triple, self.to_json())


def _describe(t: Triple, base: dict) -> dict:
    comps = components(t)
    chis = [euler_characteristic(t, comp) for comp in comps]
    census = vertex_census(t)
    base = dict(base)
    base["components"] = [list(c) for c in comps]
    base["chi"] = chis
    base["genus"] = [genus(chi) for chi in chis]
    base["vertices"] = {color: [list(c) for c in getattr(census, color)] for color in COLORS}
    return base


def canonical_form(t: Triple, alpha: int, beta: int) -> LabeledSurface:
    """Canonical representative of the double coset of t with alpha black
    and beta white labels; unlabeled double triangles stripped.

    Idempotent and constant on double cosets.

    >>> canonical_form(Triple("()", "()", "()", n=3), 0, 0).n
    0
    """
    if not (0 <= alpha <= t.n and 0 <= beta <= t.n):
        raise ValueError("alpha=%r beta=%r out of range for degree %d" % (alpha, beta, t.n))
    n2, b, r, y = kernel.canonical_code(t.n, t._b, t._r, t._y, alpha, beta, True)
    return LabeledSurface(alpha, beta, n2, b, r, y)


def checker_surface(t: Triple) -> CheckerSurface:
    """Canonical label-free form with double triangles kept.

    >>> checker_surface(Triple("()", "()", "()", n=2)).n
    2
    """
    n2, b, r, y = kernel.canonical_code(t.n, t._b, t._r, t._y, 0, 0, False)
    return CheckerSurface(n2, b, r, y)


class Dessin:
    """Bipartite ribbon graph: red and yellow vertices, one blue edge per
    point; rotations are the cycle orders. Faces are the blue vertices.
    """

    __slots__ = ("n", "red_vertices", "yellow_vertices", "faces", "edges")

    def __init__(self, n, red_vertices, yellow_vertices, faces, edges):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "red_vertices", tuple(red_vertices))
        object.__setattr__(self, "yellow_vertices", tuple(yellow_vertices))
        object.__setattr__(self, "faces", tuple(faces))
        object.__setattr__(self, "edges", tuple(edges))

    def __setattr__(self, name, value):
        raise AttributeError("Dessin is immutable")

    def chi_by_component(self) -> Dict[Tuple[int, ...], int]:
        """V - E + F per connected component, keyed by sorted point sets."""
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for cyc in self.red_vertices + self.yellow_vertices:
            for a, b in zip(cyc, cyc[1:]):
                union(a, b)
        groups: Dict[int, List[int]] = {}
        for x in range(1, self.n + 1):
            groups.setdefault(find(x), []).append(x)
        out = {}
        for pts in groups.values():
            pts_set = set(pts)
            v = sum(1 for cyc in self.red_vertices if set(cyc) <= pts_set)
            v += sum(1 for cyc in self.yellow_vertices if set(cyc) <= pts_set)
            f = sum(1 for cyc in self.faces if set(cyc) <= pts_set)
            out[tuple(sorted(pts))] = v - len(pts) + f
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "red_vertices": [list(c) for c in self.red_vertices],
            "yellow_vertices": [list(c) for c in self.yellow_vertices],
            "faces": [list(c) for c in self.faces],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        """Graphviz source; red vertices as boxes, yellow as circles."""
        lines = ["graph dessin {"]
        for i, cyc in enumerate(self.red_vertices):
            label = "(" + " ".join(str(x) for x in cyc) + ")"
            lines.append('  r%d [shape=box, label="%s"];' % (i, label))
        for i, cyc in enumerate(self.yellow_vertices):
            label = "(" + " ".join(str(x) for x in cyc) + ")"
            lines.append('  y%d [shape=circle, label="%s"];' % (i, label))
        for j, (ri, yi) in enumerate(self.edges, start=1):
            lines.append('  r%d -- y%d [label="%d"];' % (ri, yi, j))
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self):
        return "Dessin(n=%d, red=%d, yellow=%d, faces=%d)" % (
            self.n,
            len(self.red_vertices),
            len(self.yellow_vertices),
            len(self.faces),
        )


def to_dessin(t: Triple) -> Dessin:
    """Keep the blue edges; red and yellow vertices become the graph nodes.

    >>> d = to_dessin(Triple("(1 2)", "()", "()"))
    >>> len(d.red_vertices), len(d.yellow_vertices), len(d.edges)
    (1, 1, 2)
    """
    census = vertex_census(t)
    red_vertices = census.red
    yellow_vertices = census.yellow
    faces = census.blue
    red_of = {}
    for i, cyc in enumerate(red_vertices):
        for x in cyc:
            red_of[x] = i
    yellow_of = {}
    for i, cyc in enumerate(yellow_vertices):
        for x in cyc:
            yellow_of[x] = i
    edges = tuple((red_of[j], yellow_of[j]) for j in range(1, t.n + 1))
    return Dessin(t.n, red_vertices, yellow_vertices, faces, edges)


def disjoint_union(t1: Triple, t2: Triple) -> Triple:
    """Concatenate gluing data, shifting the second block of triangles."""
    n1 = t1.n
    b = t1._b + tuple(x + n1 for x in t2._b)
    r = t1._r + tuple(x + n1 for x in t2._r)
    y = t1._y + tuple(x + n1 for x in t2._y)
    return Triple._from_zero_based(n1 + t2.n, b, r, y)


def random_triple(rng, n: int) -> Triple:
    """Uniform element of S_n x S_n x S_n from a seeded generator."""
    arrs = []
    for _ in range(3):
        images = list(range(n))
        rng.shuffle(images)
        arrs.append(tuple(images))
    return Triple._from_zero_based(n, *arrs)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
