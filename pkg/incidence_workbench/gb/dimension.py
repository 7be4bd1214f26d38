import itertools
from dataclasses import dataclass, field

import sympy
from absl import logging

from incidence_workbench.algebra.field import RATIONALS, Scalar
from incidence_workbench.algebra.numberfield import as_univariate, rational_factors, squarefree_part
from incidence_workbench.algebra.order import Monomial, monomial_divides
from incidence_workbench.algebra.polynomial import Polynomial, univariate, univariate_ring
from incidence_workbench.gb.ideal import GroebnerBasis


@dataclass(frozen=True)
class SchemeSummary:
  krull_dimension: int
  vector_space_dimension: int | None = None
  # Minimal polynomial of multiplication by each variable, as a polynomial in that variable.
  minimal_polynomials: dict[str, Polynomial] = field(default_factory=dict)


@dataclass(frozen=True)
class MinimalPolynomialFactors:
  variable: str
  polynomial: sympy.Poly
  squarefree: sympy.Poly
  factors: tuple[sympy.Poly, ...]


def krull_dimension(gb: GroebnerBasis) -> int:
  """Largest set of variables containing the support of no leading monomial; -1 for {1}."""
  if gb.is_unit():
    return -1
  supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials()]
  width = len(gb.ring.variables)
  for size in range(width, -1, -1):
    for chosen in itertools.combinations(range(width), size):
      if not any(support <= set(chosen) for support in supports):
        return size
  raise AssertionError(f'No independent variable set for {gb.elements}.')


def staircase(gb: GroebnerBasis) -> list[Monomial]:
  """Monomials outside the leading-term ideal of a zero-dimensional basis."""
  leads = gb.leading_monomials()
  bounds: list[int | None] = [None] * len(gb.ring.variables)
  for lead in leads:
    if len(used := [(i, e) for i, e in enumerate(lead) if e]) == 1:
      i, e = used[0]
      if bounds[i] is None or e < bounds[i]:
        bounds[i] = e
  if any(bound is None for bound in bounds):
    raise ValueError(f'The quotient by {list(map(str, gb.elements))} is not finite dimensional.')
  return [m for m in itertools.product(*map(range, bounds))
          if not any(monomial_divides(lead, m) for lead in leads)]


def _minimal_polynomial(gb: GroebnerBasis, name: str, bound: int) -> Polynomial:
  ring, order = gb.ring, gb.order
  coefficients = ring.coefficients
  normalize = coefficients.normalize
  variable = ring.gen(name)

  # Rows are (vector, combination of powers) with the vector's largest monomial as its pivot, scaled
  # to 1. Reducing the normal form of the next power to zero yields the first linear relation.
  pivots: dict[Monomial, tuple[dict[Monomial, Scalar], dict[int, Scalar]]] = {}
  power = ring.one()
  for k in range(bound + 1):
    vector = dict(gb.reduce(power).terms)
    combination: dict[int, Scalar] = {k: coefficients.one}
    while present := [m for m in vector if m in pivots]:
      m = max(present, key=order.key)
      factor = vector[m]
      row, row_combination = pivots[m]
      for monomial, c in row.items():
        if (value := normalize(vector.get(monomial, 0) - factor * c)) == 0:
          vector.pop(monomial, None)
        else:
          vector[monomial] = value
      for j, c in row_combination.items():
        combination[j] = normalize(combination.get(j, 0) - factor * c)

    if not vector:
      return univariate([combination.get(j, 0) for j in range(k, -1, -1)],
                        univariate_ring(coefficients, name))
    pivot = max(vector, key=order.key)
    inverse = coefficients.inverse(vector[pivot])
    pivots[pivot] = ({m: normalize(c * inverse) for m, c in vector.items()},
                     {j: normalize(c * inverse) for j, c in combination.items()})
    power = gb.reduce(power * variable)
  raise AssertionError(f'Powers of {name} are independent beyond dimension {bound}.')


def zero_dim_summary(gb: GroebnerBasis) -> SchemeSummary:
  if (dimension := krull_dimension(gb)) != 0:
    raise ValueError(f'Expected a zero-dimensional ideal. Got dimension {dimension} instead.')
  basis = staircase(gb)
  minimal = {name: _minimal_polynomial(gb, name, len(basis)) for name in gb.ring.variables}
  described = ', '.join(f'{name}: {f}' for name, f in minimal.items())
  logging.info(f'Quotient of dimension {len(basis)}, minimal polynomials {described}.')
  return SchemeSummary(0, len(basis), minimal)


def summarize(gb: GroebnerBasis) -> SchemeSummary:
  """zero_dim_summary when the scheme is finite, otherwise just its dimension."""
  if (dimension := krull_dimension(gb)) == 0:
    return zero_dim_summary(gb)
  return SchemeSummary(dimension)


def minimal_polynomial_factors(summary: SchemeSummary) -> list[MinimalPolynomialFactors]:
  """Squarefree parts and irreducible rational factors of each minimal polynomial."""
  result = []
  for name, f in sorted(summary.minimal_polynomials.items()):
    if f.ring.coefficients != RATIONALS:
      raise ValueError(f'Minimal polynomial {f} is not over Q.')
    poly = as_univariate(f)
    result.append(MinimalPolynomialFactors(variable=name,
                                           polynomial=poly,
                                           squarefree=squarefree_part(poly),
                                           factors=tuple(rational_factors(poly))))
  return result
