"""Spherical function of a checker surface against a unit tensor.

Two independent computations of the same number. The direct path builds
the n-fold tensor power of a unit vector xi in C^db x C^dr x C^dy, lets
the triple permute the colored slots, and takes the inner product. The
combinatorial path sums over index assignments to the edges: each white
triangle contributes an entry of xi, each black triangle a conjugated
entry, glued edges sharing their index. Agreement of the two paths on
every input is the point of this module.
"""

from __future__ import annotations

import random
from typing import List, Sequence, Tuple

import numpy as np

from checkersurf.errors import BudgetError, SchemaError

__all__ = [
    "Tensor3",
    "spherical_assignment_sum",
    "spherical_oracle",
]

UNIT_NORM_TOLERANCE = 1e-12

DEFAULT_MAX_ASSIGNMENTS = 10**8

DEFAULT_MAX_ORACLE_ENTRIES = 2**22


class Tensor3:
    """A complex tensor with one axis per edge color."""

    __slots__ = ("dims", "entries")

    def __init__(self, entries, dims: Tuple[int, int, int] | None = None):
        arr = np.asarray(entries, dtype=complex)
        if dims is not None:
            dims = tuple(int(d) for d in dims)
            if len(dims) != 3 or any(d < 1 for d in dims):
                raise SchemaError("dims must be three positive integers, got %r" % (dims,))
            arr = arr.reshape(dims)
        if arr.ndim != 3:
            raise SchemaError("tensor must have exactly three axes, got shape %r" % (arr.shape,))
        if any(d < 1 for d in arr.shape):
            raise SchemaError("tensor axes must be positive, got shape %r" % (arr.shape,))
        object.__setattr__(self, "dims", tuple(int(d) for d in arr.shape))
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor3 is immutable")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def normalized(self) -> "Tensor3":
        nrm = self.norm
        if nrm == 0:
            raise SchemaError("cannot normalize the zero tensor")
        return Tensor3(self.entries / nrm)

    @classmethod
    def random_unit(cls, rng: random.Random, dims: Sequence[int]) -> "Tensor3":
        """Unit tensor with Gaussian entries drawn from a seeded generator."""
        db, dr, dy = (int(d) for d in dims)
        flat = [complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0)) for _ in range(db * dr * dy)]
        return cls(flat, dims=(db, dr, dy)).normalized()

    def to_json(self) -> dict:
        flat = self.entries.reshape(-1)
        return {
            "dims": list(self.dims),
            "re": [float(z.real) for z in flat],
            "im": [float(z.imag) for z in flat],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tensor3":
        try:
            dims = tuple(int(d) for d in data["dims"])
            re = [float(x) for x in data["re"]]
            im = [float(x) for x in data.get("im") or [0.0] * len(re)]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("malformed tensor data: %s" % exc) from None
        if len(dims) != 3:
            raise SchemaError("dims must have three entries, got %r" % (dims,))
        size = dims[0] * dims[1] * dims[2]
        if len(re) != size or len(im) != size:
            raise SchemaError(
                "entry count %d/%d does not match dims product %d" % (len(re), len(im), size)
            )
        flat = [complex(a, b) for a, b in zip(re, im)]
        return cls(flat, dims=dims)

    def __repr__(self):
        return "Tensor3(dims=%r, norm=%.6f)" % (self.dims, self.norm)


def _require_unit(xi: Tensor3) -> None:
    if abs(xi.norm - 1.0) > UNIT_NORM_TOLERANCE:
        raise SchemaError("spherical vector must have unit norm, got %r" % xi.norm)


def _maps(surface) -> Tuple[int, List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    n = surface.n
    imgs = [tuple(surface._b), tuple(surface._r), tuple(surface._y)]
    invs = []
    for img in imgs:
        inv = [0] * n
        for w, b in enumerate(img):
            inv[b] = w
        invs.append(tuple(inv))
    return n, imgs, invs


def _white_components(n, imgs, invs) -> List[List[int]]:
    """Connected pieces of the triangle adjacency graph, whites listed in
    traversal order so each new white touches an earlier one."""
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        order = [start]
        head = 0
        while head < len(order):
            w = order[head]
            head += 1
            for c1 in range(3):
                black = imgs[c1][w]
                for c2 in range(3):
                    nxt = invs[c2][black]
                    if not seen[nxt]:
                        seen[nxt] = True
                        order.append(nxt)
        comps.append(order)
    return comps


def spherical_assignment_sum(
    surface,
    xi: Tensor3,
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
) -> complex:
    """Sum over edge-index assignments, one xi factor per white triangle
    and one conjugated factor per black triangle.

    Evaluates component by component with partial products: a black's
    factor is multiplied in as soon as its last edge receives an index.
    Raises BudgetError when the multiply-add count would exceed
    max_assignments.
    """
    _require_unit(xi)
    n, imgs, invs = _maps(surface)
    if n == 0:
        return complex(1.0)
    db, dr, dy = xi.dims
    plain = xi.entries
    conj = np.conjugate(xi.entries)
    counter = [0]

    def component_sum(order: List[int]) -> complex:
        pos = {w: d for d, w in enumerate(order)}
        k = len(order)
        # black b completes at the last of its three whites in the order
        completing: List[List[Tuple[int, int, int]]] = [[] for _ in range(k)]
        blacks = sorted({imgs[c][w] for w in order for c in range(3)})
        for b in blacks:
            wb, wr, wy = invs[0][b], invs[1][b], invs[2][b]
            depth = max(pos[wb], pos[wr], pos[wy])
            completing[depth].append((wb, wr, wy))
        idx_i = {w: 0 for w in order}
        idx_j = {w: 0 for w in order}
        idx_k = {w: 0 for w in order}
        total = complex(0.0)

        def descend(depth: int, product: complex) -> None:
            nonlocal total
            if depth == k:
                total += product
                return
            w = order[depth]
            for i in range(db):
                idx_i[w] = i
                for j in range(dr):
                    idx_j[w] = j
                    for kk in range(dy):
                        idx_k[w] = kk
                        factor = product * plain[i, j, kk]
                        counter[0] += 1
                        for wb, wr, wy in completing[depth]:
                            factor *= conj[idx_i[wb], idx_j[wr], idx_k[wy]]
                            counter[0] += 1
                        if counter[0] > max_assignments:
                            raise BudgetError(
                                "assignment enumeration exceeded %d multiply-adds"
                                % max_assignments
                            )
                        descend(depth + 1, factor)

        descend(0, complex(1.0))
        return total

    value = complex(1.0)
    for comp in _white_components(n, imgs, invs):
        value *= component_sum(comp)
    return value


def spherical_oracle(
    t,
    xi: Tensor3,
    max_entries: int = DEFAULT_MAX_ORACLE_ENTRIES,
) -> complex:
    """Inner product of the slot-permuted tensor power against itself.

    The blue coordinate permutes the blue slots of the n factors, red and
    yellow likewise. Raises BudgetError when the tensor power would hold
    more than max_entries entries.
    """
    _require_unit(xi)
    n, imgs, invs = _maps(t)
    if n == 0:
        return complex(1.0)
    db, dr, dy = xi.dims
    size = (db * dr * dy) ** n
    if size > max_entries:
        raise BudgetError(
            "tensor power needs %d entries, budget is %d" % (size, max_entries)
        )
    v = xi.entries
    for _ in range(n - 1):
        v = np.multiply.outer(v, xi.entries)
    axes = [0] * (3 * n)
    for slot in range(n):
        for c in range(3):
            axes[3 * slot + c] = 3 * invs[c][slot] + c
    rho_v = np.transpose(v, axes)
    return complex(np.vdot(v, rho_v))
