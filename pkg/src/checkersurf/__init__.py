"""Combinatorial calculus of checker triangulated surfaces.

Permutation triples and their surfaces, double-coset canonical forms and
the shift product, exact convolution algebras with the concentration
phenomenon, spherical-function evaluation, and the filtered surface
algebra with its Poisson bracket.
"""

from checkersurf.perm import Permutation, compose, inverse, cycles, identity
from checkersurf.surface import (
    Triple,
    CheckerSurface,
    LabeledSurface,
    Dessin,
    build_surface,
    triple_of,
    components,
    euler_characteristic,
    vertex_census,
    genus,
    reverse,
    canonical_form,
    checker_surface,
    to_dessin,
    disjoint_union,
    random_triple,
)
from checkersurf.cosets import DoubleCoset, circledast, concat_geometric, star, theta
from checkersurf.convolution import (
    GroupAlgebraElement,
    CosetAlgebraElement,
    convolve,
    delta_subgroup,
    coset_decomposition,
    sigma_series,
)
from checkersurf.spherical import (
    Tensor3,
    spherical_assignment_sum,
    spherical_oracle,
)
from checkersurf.ik import (
    IKElement,
    ik_product,
    lift,
    project,
    poisson_bracket,
    graded_product,
)
from checkersurf.errors import (
    CheckersurfError,
    SchemaError,
    BudgetError,
    InvariantError,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "compose",
    "inverse",
    "cycles",
    "identity",
    "Triple",
    "CheckerSurface",
    "LabeledSurface",
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
    "DoubleCoset",
    "circledast",
    "concat_geometric",
    "star",
    "theta",
    "GroupAlgebraElement",
    "CosetAlgebraElement",
    "convolve",
    "delta_subgroup",
    "coset_decomposition",
    "sigma_series",
    "Tensor3",
    "spherical_assignment_sum",
    "spherical_oracle",
    "IKElement",
    "ik_product",
    "lift",
    "project",
    "poisson_bracket",
    "graded_product",
    "CheckersurfError",
    "SchemaError",
    "BudgetError",
    "InvariantError",
    "__version__",
]
