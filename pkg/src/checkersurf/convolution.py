"""Exact convolution algebras on triples of permutations of fixed degree.

Biinvariant probability measures concentrate: the product of two uniform
double-coset measures decomposes over cosets with rational coefficients
summing to 1, and as the degree grows the coefficient of the coset product
tends to 1. Everything here is exact Fraction arithmetic; no floats.

The workhorse identity: delta_p * delta_q spreads uniformly over the
classes of a0 * (h,h,h) * b0 as h runs over the inner stabilizer, so one
coset product costs (n - beta)! canonicalizations instead of a full
group-algebra convolution.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, List, Tuple

from checkersurf import kernel
from checkersurf.errors import SchemaError
from checkersurf.cosets import DoubleCoset, circledast
from checkersurf.surface import LabeledSurface, Triple

__all__ = [
    "GroupAlgebraElement",
    "CosetAlgebraElement",
    "delta_subgroup",
    "convolve",
    "coset_decomposition",
    "sigma_series",
]


def _pad(arr: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    return tuple(arr) + tuple(range(len(arr), n))


def _triple_mul(s: Triple, t: Triple, n: int) -> Triple:
    """Componentwise product (apply t first) at ambient degree n."""
    out = []
    for a, b in ((s._b, t._b), (s._r, t._r), (s._y, t._y)):
        a = _pad(a, n)
        b = _pad(b, n)
        out.append(tuple(a[b[x]] for x in range(n)))
    return Triple._from_zero_based(n, *out)


def _triple_inv(t: Triple) -> Triple:
    arrs = []
    for a in (t._b, t._r, t._y):
        inv = [0] * len(a)
        for i, v in enumerate(a):
            inv[v] = i
        arrs.append(tuple(inv))
    return Triple._from_zero_based(t.n, *arrs)


class GroupAlgebraElement:
    """Sparse exact-rational combination of group elements at degree n."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Dict[Triple, Fraction] | None = None):
        clean: Dict[Triple, Fraction] = {}
        for key, val in (coeffs or {}).items():
            if len(key._key()[0]) > n:
                raise SchemaError(
                    "group element of degree %d exceeds ambient degree %d"
                    % (len(key._key()[0]), n)
                )
            val = Fraction(val)
            if val != 0:
                clean[key] = clean.get(key, Fraction(0)) + val
                if clean[key] == 0:
                    del clean[key]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupAlgebraElement is immutable")

    @classmethod
    def delta(cls, t: Triple, n: int) -> "GroupAlgebraElement":
        """Point mass at one group element."""
        return cls(n, {t: Fraction(1)})

    def coefficient(self, t: Triple) -> Fraction:
        return self._coeffs.get(t, Fraction(0))

    def items(self) -> List[Tuple[Triple, Fraction]]:
        return sorted(self._coeffs.items(), key=lambda kv: kv[0]._key())

    def support_size(self) -> int:
        return len(self._coeffs)

    def mass(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise SchemaError("ambient degrees differ: %d vs %d" % (self.n, other.n))
        out = dict(self._coeffs)
        for key, val in other._coeffs.items():
            out[key] = out.get(key, Fraction(0)) + val
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {k: v * c for k, v in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __repr__(self):
        return "GroupAlgebraElement(n=%d, %d terms, mass=%s)" % (
            self.n,
            len(self._coeffs),
            self.mass(),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"triple": key.to_json(), "coeff": str(val)}
                for key, val in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupAlgebraElement":
        try:
            n = int(data["n"])
            coeffs: Dict[Triple, Fraction] = {}
            for term in data["terms"]:
                key = Triple.from_json(term["triple"])
                coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(term["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("malformed element data: %s" % exc) from None
        return cls(n, coeffs)


def delta_subgroup(alpha: int, n: int) -> GroupAlgebraElement:
    """Uniform probability measure on the diagonal subgroup fixing 1..alpha.

    Support size (n - alpha)!, total mass exactly 1.
    """
    if not 0 <= alpha <= n:
        raise SchemaError("alpha=%r out of range for n=%r" % (alpha, n))
    weight = Fraction(1, factorial(n - alpha))
    coeffs = {}
    for tail in permutations(range(alpha, n)):
        h = tuple(range(alpha)) + tail
        coeffs[Triple._from_zero_based(n, h, h, h)] = weight
    return GroupAlgebraElement(n, coeffs)


def convolve(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """(f * g)(x) = sum over y of f(y) g(y^-1 x); mass multiplies."""
    if f.n != g.n:
        raise SchemaError("ambient degrees differ: %d vs %d" % (f.n, g.n))
    n = f.n
    out: Dict[Triple, Fraction] = {}
    for y, fy in f._coeffs.items():
        for z, gz in g._coeffs.items():
            x = _triple_mul(y, z, n)
            val = out.get(x, Fraction(0)) + fy * gz
            if val == 0:
                out.pop(x, None)
            else:
                out[x] = val
    return GroupAlgebraElement(n, out)


class CosetAlgebraElement:
    """Sparse rational combination of double cosets at fixed degree n."""

    __slots__ = ("n", "alpha", "gamma", "_coeffs")

    def __init__(self, n: int, alpha: int, gamma: int, coeffs: Dict[DoubleCoset, Fraction]):
        clean = {}
        for key, val in coeffs.items():
            val = Fraction(val)
            if val != 0:
                clean[key] = val
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CosetAlgebraElement is immutable")

    def coefficient(self, coset: DoubleCoset) -> Fraction:
        return self._coeffs.get(coset, Fraction(0))

    def items(self) -> List[Tuple[DoubleCoset, Fraction]]:
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].surface.sort_key())

    def mass(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, CosetAlgebraElement):
            return NotImplemented
        return (self.n, self.alpha, self.gamma, self._coeffs) == (
            other.n,
            other.alpha,
            other.gamma,
            other._coeffs,
        )

    def __repr__(self):
        return "CosetAlgebraElement(n=%d, %d terms, mass=%s)" % (
            self.n,
            len(self._coeffs),
            self.mass(),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "terms": [
                {
                    "surface": coset.to_json(),
                    "coeff": str(val),
                    "value": float(val),
                }
                for coset, val in self.items()
            ],
        }


def coset_decomposition(p: DoubleCoset, q: DoubleCoset, n: int) -> CosetAlgebraElement:
    """Coefficients c^r with delta_p(n) * delta_q(n) = sum c^r delta_r(n).

    Computed by classifying a0 * (h,h,h) * b0 over h in the inner diagonal
    stabilizer; exact, nonnegative, summing to 1.
    """
    if p.beta != q.alpha:
        raise SchemaError(
            "inner label counts differ: left beta=%d, right alpha=%d" % (p.beta, q.alpha)
        )
    if n < p.degree or n < q.degree:
        raise SchemaError(
            "degree %d cannot embed representatives of degrees %d and %d"
            % (n, p.degree, q.degree)
        )
    alpha, beta, gamma = p.alpha, p.beta, q.beta
    a = [_pad(arr, n) for arr in (p.surface._b, p.surface._r, p.surface._y)]
    b = [_pad(arr, n) for arr in (q.surface._b, q.surface._r, q.surface._y)]
    counts: Dict[tuple, int] = {}
    rng_pts = range(n)
    canonical_code = kernel.canonical_code
    for tail in permutations(range(beta, n)):
        h = tuple(range(beta)) + tail
        prods = []
        for c in range(3):
            ac = a[c]
            bc = b[c]
            prods.append(tuple(ac[h[bc[x]]] for x in rng_pts))
        key = canonical_code(n, prods[0], prods[1], prods[2], alpha, gamma, True)
        counts[key] = counts.get(key, 0) + 1
    total = factorial(n - beta)
    coeffs = {}
    for key, cnt in counts.items():
        n2, cb, cr, cy = key
        coset = DoubleCoset(LabeledSurface(alpha, gamma, n2, cb, cr, cy))
        coeffs[coset] = Fraction(cnt, total)
    return CosetAlgebraElement(n, alpha, gamma, coeffs)


def sigma_series(p: DoubleCoset, q: DoubleCoset, n_range: Iterable[int]) -> List[Fraction]:
    """The concentration coefficients: weight of the coset product inside
    the decomposition, one exact value per degree."""
    target = circledast(p, q)
    out = []
    for n in n_range:
        decomp = coset_decomposition(p, q, n)
        out.append(decomp.coefficient(target))
    return out
