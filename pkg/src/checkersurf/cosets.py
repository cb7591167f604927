"""The category of double cosets and its associative product.

Objects are label counts; a morphism from beta to alpha is a double coset,
canonically a labeled surface with alpha black and beta white labels. The
product has two independent realizations kept in agreement by tests:

* circledast: multiply representatives with a block-swap involution
  between them and canonicalize; the value is constant once the swap
  blocks clear both representatives' degrees, and that constancy is
  asserted at runtime (j0 and j0+1 must agree).
* concat_geometric: remove the beta labeled white triangles of the left
  factor and the beta labeled black triangles of the right factor, glue
  the freed boundaries color to color, and canonicalize the resulting
  cell complex.

>>> p = DoubleCoset.from_triple(Triple("(1 2)", "()", "()"), 0, 0)
>>> circledast(p, p).surface.n
4
"""

from __future__ import annotations

from typing import Tuple

from checkersurf.errors import InvariantError, SchemaError
from checkersurf.perm import Permutation
from checkersurf.surface import LabeledSurface, Triple, canonical_form

__all__ = [
    "Theta",
    "DoubleCoset",
    "theta",
    "circledast",
    "circledast_with_reps",
    "concat_geometric",
    "star",
]


class Theta:
    """The block-swap involution at block size j and offset beta."""

    __slots__ = ("j", "beta")

    def __init__(self, j: int, beta: int):
        if j < 1 or beta < 0:
            raise ValueError("need j >= 1 and beta >= 0, got j=%r beta=%r" % (j, beta))
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, value):
        raise AttributeError("Theta is immutable")

    def permutation(self) -> Permutation:
        return Permutation(tuple(x + 1 for x in _theta_images(self.j, self.beta)))


def _theta_images(j: int, beta: int, n: int | None = None) -> Tuple[int, ...]:
    """0-based images on range(n), n defaulting to beta + 2j."""
    size = beta + 2 * j
    if n is None:
        n = size
    if n < size:
        raise ValueError("ambient %d below beta + 2j = %d" % (n, size))
    th = list(range(n))
    for i in range(j):
        th[beta + i] = beta + j + i
        th[beta + j + i] = beta + i
    return tuple(th)


def theta(j: int, beta: int) -> Permutation:
    """Involution fixing 1..beta and swapping the next two j-blocks.

    >>> theta(1, 0).cycle_string()
    '(1 2)'
    >>> theta(2, 1).cycle_string()
    '(2 4)(3 5)'
    """
    return Theta(j, beta).permutation()


class DoubleCoset:
    """A morphism of the coset category: beta white labels in, alpha black
    labels out, canonical labeled surface as the representative."""

    __slots__ = ("surface",)

    def __init__(self, surface: LabeledSurface):
        object.__setattr__(self, "surface", surface)

    def __setattr__(self, name, value):
        raise AttributeError("DoubleCoset is immutable")

    @classmethod
    def from_triple(cls, t: Triple, alpha: int, beta: int) -> "DoubleCoset":
        return cls(canonical_form(t, alpha, beta))

    @classmethod
    def identity(cls, beta: int) -> "DoubleCoset":
        """The identity morphism at object beta: beta labeled double
        triangles."""
        return cls.from_triple(Triple("()", "()", "()", n=beta), beta, beta)

    @property
    def alpha(self) -> int:
        return self.surface.alpha

    @property
    def beta(self) -> int:
        return self.surface.beta

    @property
    def degree(self) -> int:
        return self.surface.n

    def __eq__(self, other):
        if not isinstance(other, DoubleCoset):
            return NotImplemented
        return self.surface == other.surface

    def __hash__(self):
        return hash(("DoubleCoset", self.surface))

    def __lt__(self, other: "DoubleCoset"):
        return self.surface.sort_key() < other.surface.sort_key()

    def __repr__(self):
        return "DoubleCoset(alpha=%d, beta=%d, n=%d)" % (self.alpha, self.beta, self.degree)

    def to_json(self) -> dict:
        return self.surface.to_json()

    @classmethod
    def from_json(cls, data: dict) -> "DoubleCoset":
        return cls(LabeledSurface.from_json(data))


def _pad(arr: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    return tuple(arr) + tuple(range(len(arr), n))


def _shift_product(tp: Triple, tq: Triple, alpha: int, beta: int, gamma: int, j: int) -> LabeledSurface:
    """canonical_form(rep_p * Theta_j[beta] * rep_q) at ambient beta + 2j."""
    n = beta + 2 * j
    if n < tp.n or n < tq.n:
        raise ValueError("shift j=%d too small for degrees %d, %d" % (j, tp.n, tq.n))
    th = _theta_images(j, beta, n)
    out = []
    for pa, qa in ((tp._b, tq._b), (tp._r, tq._r), (tp._y, tq._y)):
        pa = _pad(pa, n)
        qa = _pad(qa, n)
        out.append(tuple(pa[th[qa[x]]] for x in range(n)))
    return canonical_form(Triple._from_zero_based(n, *out), alpha, gamma)


def circledast_with_reps(tp: Triple, tq: Triple, alpha: int, beta: int, gamma: int) -> LabeledSurface:
    """Shift product from arbitrary representatives of the two cosets.

    Constancy of the value at the stabilized shift is rechecked at j0 and
    j0 + 1 on every call; disagreement raises InvariantError.
    """
    j0 = max(tp.n, tq.n, 1)
    first = _shift_product(tp, tq, alpha, beta, gamma, j0)
    second = _shift_product(tp, tq, alpha, beta, gamma, j0 + 1)
    if first != second:
        raise InvariantError(
            "shift stabilization failed: values at j=%d and j=%d differ" % (j0, j0 + 1)
        )
    return first


def circledast(p: DoubleCoset, q: DoubleCoset) -> DoubleCoset:
    """The coset product: morphism composition beta -> alpha after gamma -> beta.

    >>> e = DoubleCoset.identity(1)
    >>> p = DoubleCoset.from_triple(Triple("(1 2)", "()", "()"), 1, 1)
    >>> circledast(p, e) == p and circledast(e, p) == p
    True
    """
    if p.beta != q.alpha:
        raise SchemaError(
            "inner label counts differ: left beta=%d, right alpha=%d" % (p.beta, q.alpha)
        )
    return DoubleCoset(
        circledast_with_reps(p.surface.triple, q.surface.triple, p.alpha, p.beta, q.beta)
    )


def concat_geometric(P: LabeledSurface, Q: LabeledSurface) -> LabeledSurface:
    """Geometric realization of the product over explicit cells.

    Remove Q's labeled black triangles and P's labeled white triangles,
    glue the freed boundaries color to color (P's white j against Q's
    black j), renumber, canonicalize. The result keeps P's alpha black
    labels and Q's gamma white labels.
    """
    if isinstance(P, DoubleCoset):
        P = P.surface
    if isinstance(Q, DoubleCoset):
        Q = Q.surface
    if P.beta != Q.alpha:
        raise SchemaError(
            "inner label counts differ: left beta=%d, right alpha=%d" % (P.beta, Q.alpha)
        )
    beta = P.beta
    np_, nq = P.n, Q.n
    n_res = nq + np_ - beta
    # result whites: Q's whites first (labels 1..gamma stay in place), then
    # P's surviving whites; result blacks: P's blacks first (labels 1..alpha
    # stay in place), then Q's surviving blacks.
    arrs = []
    for pc, qc in ((P._b, Q._b), (P._r, Q._r), (P._y, Q._y)):
        col = []
        for w in range(nq):
            t = qc[w]
            if t < beta:
                col.append(pc[t])  # edge passes through the glued boundary
            else:
                col.append(np_ + t - beta)
        for w in range(beta, np_):
            col.append(pc[w])
        arrs.append(tuple(col))
    glued = Triple._from_zero_based(n_res, *arrs)
    return canonical_form(glued, P.alpha, Q.beta)


def star(p: DoubleCoset) -> DoubleCoset:
    """The involution: componentwise inverse, labels swap sides."""
    t = p.surface.triple
    inv = Triple._from_zero_based(
        t.n,
        _invert(t._b),
        _invert(t._r),
        _invert(t._y),
    )
    return DoubleCoset.from_triple(inv, p.beta, p.alpha)


def _invert(arr: Tuple[int, ...]):
    out = [0] * len(arr)
    for i, v in enumerate(arr):
        out[v] = i
    return tuple(out)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
