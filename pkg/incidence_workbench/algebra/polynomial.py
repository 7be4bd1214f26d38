from dataclasses import dataclass
from typing import Iterable, Sequence

from incidence_workbench.algebra.field import RATIONALS, CoefficientRing, Scalar
from incidence_workbench.algebra.order import (DEGREVLEX, Monomial, MonomialOrder, monomial_divides,
                                               monomial_mul, monomial_quotient)


@dataclass(frozen=True)
class PolynomialRing:
  coefficients: CoefficientRing
  variables: tuple[str, ...]

  def __post_init__(self) -> None:
    if len(set(self.variables)) != len(self.variables):
      raise ValueError(f'Variable names {self.variables} repeat.')

  @property
  def unit(self) -> Monomial:
    return (0,) * len(self.variables)

  def constant(self, value: Scalar) -> 'Polynomial':
    return Polynomial(self, {self.unit: value})

  def zero(self) -> 'Polynomial':
    return Polynomial(self, {})

  def one(self) -> 'Polynomial':
    return self.constant(1)

  def gen(self, name: str) -> 'Polynomial':
    index = self.index(name)
    return Polynomial(self, {tuple(int(i == index) for i in range(len(self.variables))): 1})

  def gens(self) -> list['Polynomial']:
    return [self.gen(name) for name in self.variables]

  def index(self, name: str) -> int:
    try:
      return self.variables.index(name)
    except ValueError as e:
      e.add_note(f'Variable "{name}" is not one of {self.variables}.')
      raise

  def without(self, name: str) -> 'PolynomialRing':
    return PolynomialRing(self.coefficients, tuple(v for v in self.variables if v != name))

  def with_coefficients(self, coefficients: CoefficientRing) -> 'PolynomialRing':
    return PolynomialRing(coefficients, self.variables)


class Polynomial:
  """Sparse exact polynomial: a map from exponent tuples to nonzero coefficients."""
  __slots__ = ('ring', 'terms')

  def __init__(self, ring: PolynomialRing, terms: dict[Monomial, Scalar]) -> None:
    normalize = ring.coefficients.normalize
    width = len(ring.variables)
    cleaned: dict[Monomial, Scalar] = {}
    for monomial, coefficient in terms.items():
      if len(monomial) != width:
        raise ValueError(f'Monomial {monomial} does not have {width} exponents.')
      if (value := normalize(coefficient)) != 0:
        cleaned[monomial] = value
    self.ring = ring
    self.terms = cleaned

  @classmethod
  def _trusted(cls, ring: PolynomialRing, terms: dict[Monomial, Scalar]) -> 'Polynomial':
    polynomial = cls.__new__(cls)
    polynomial.ring = ring
    polynomial.terms = terms
    return polynomial

  def _check_ring(self, other: 'Polynomial') -> None:
    if other.ring != self.ring:
      raise ValueError(f'Polynomials live in different rings: {self.ring} and {other.ring}.')

  def _coerce(self, other: 'Polynomial | Scalar') -> 'Polynomial':
    if isinstance(other, Polynomial):
      self._check_ring(other)
      return other
    return self.ring.constant(other)

  def __add__(self, other: 'Polynomial | Scalar') -> 'Polynomial':
    other = self._coerce(other)
    normalize = self.ring.coefficients.normalize
    terms = dict(self.terms)
    for monomial, coefficient in other.terms.items():
      value = normalize(terms.get(monomial, 0) + coefficient)
      if value == 0:
        terms.pop(monomial, None)
      else:
        terms[monomial] = value
    return Polynomial._trusted(self.ring, terms)

  __radd__ = __add__

  def __neg__(self) -> 'Polynomial':
    normalize = self.ring.coefficients.normalize
    return Polynomial._trusted(self.ring, {m: normalize(-c) for m, c in self.terms.items()})

  def __sub__(self, other: 'Polynomial | Scalar') -> 'Polynomial':
    return self + (-self._coerce(other))

  def __rsub__(self, other: Scalar) -> 'Polynomial':
    return self.ring.constant(other) - self

  def __mul__(self, other: 'Polynomial | Scalar') -> 'Polynomial':
    if not isinstance(other, Polynomial):
      return self.scale(other)
    self._check_ring(other)
    normalize = self.ring.coefficients.normalize
    terms: dict[Monomial, Scalar] = {}
    for m1, c1 in self.terms.items():
      for m2, c2 in other.terms.items():
        monomial = monomial_mul(m1, m2)
        terms[monomial] = terms.get(monomial, 0) + c1 * c2
    return Polynomial(self.ring, {m: normalize(c) for m, c in terms.items()})

  __rmul__ = __mul__

  def __pow__(self, exponent: int) -> 'Polynomial':
    if exponent < 0:
      raise ValueError(f'Negative exponent {exponent}.')
    result, base = self.ring.one(), self
    while exponent:
      if exponent & 1:
        result = result * base
      base = base * base
      exponent >>= 1
    return result

  def scale(self, factor: Scalar) -> 'Polynomial':
    return Polynomial(self.ring, {m: c * factor for m, c in self.terms.items()})

  def shift(self, monomial: Monomial, factor: Scalar) -> 'Polynomial':
    """factor * monomial * self."""
    return Polynomial(self.ring, {monomial_mul(m, monomial): c * factor
                                  for m, c in self.terms.items()})

  def __eq__(self, other: object) -> bool:
    if isinstance(other, Polynomial):
      return self.ring == other.ring and self.terms == other.terms
    if isinstance(other, (int, float)) or hasattr(other, 'denominator'):
      return self.terms == ({self.ring.unit: other} if other != 0 else {})
    return NotImplemented

  def __hash__(self) -> int:
    return hash((self.ring, frozenset(self.terms.items())))

  def __bool__(self) -> bool:
    return bool(self.terms)

  def __repr__(self) -> str:
    return f'Polynomial({self})'

  def __str__(self) -> str:
    from incidence_workbench.algebra.parse import format_polynomial
    return format_polynomial(self)

  def is_constant(self) -> bool:
    return all(not any(m) for m in self.terms)

  def constant_value(self) -> Scalar:
    return self.terms.get(self.ring.unit, self.ring.coefficients.zero)

  def total_degree(self) -> int:
    return max((sum(m) for m in self.terms), default=-1)

  def degree_in(self, index: int) -> int:
    return max((m[index] for m in self.terms), default=-1)

  def variables_used(self) -> set[int]:
    return {i for m in self.terms for i, e in enumerate(m) if e}

  def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
    if not self.terms:
      raise ValueError('The zero polynomial has no leading monomial.')
    return max(self.terms, key=order.key)

  def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Scalar:
    return self.terms[self.leading_monomial(order)]

  def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, Scalar]]:
    return sorted(self.terms.items(), key=lambda term: order.key(term[0]), reverse=True)

  def monic(self, order: MonomialOrder = DEGREVLEX) -> 'Polynomial':
    if not self.terms:
      return self
    return self.scale(self.ring.coefficients.inverse(self.leading_coefficient(order)))

  def evaluate(self, point: Sequence[Scalar]) -> Scalar:
    if len(point) != len(self.ring.variables):
      raise ValueError(f'Expected {len(self.ring.variables)} values. Got {len(point)} instead.')
    coefficients = self.ring.coefficients
    total: Scalar = coefficients.zero
    for monomial, coefficient in self.terms.items():
      value = coefficient
      for x, e in zip(point, monomial):
        if e:
          value = value * x**e
      total = total + value
    return coefficients.normalize(total)

  def substitute(self, name: str, replacement: 'Polynomial') -> 'Polynomial':
    """Replaces a variable by a polynomial in the same ring."""
    self._check_ring(replacement)
    index = self.ring.index(name)
    powers = [self.ring.one()]
    result = self.ring.zero()
    for monomial, coefficient in self.terms.items():
      exponent = monomial[index]
      while len(powers) <= exponent:
        powers.append(powers[-1] * replacement)
      rest = monomial[:index] + (0,) + monomial[index + 1:]
      result = result + powers[exponent].shift(rest, coefficient)
    return result

  def drop_variable(self, name: str) -> 'Polynomial':
    """Moves the polynomial into the ring without `name`; the variable must be absent."""
    index = self.ring.index(name)
    if self.degree_in(index) > 0:
      raise ValueError(f'Cannot drop {name} from {self}: it still occurs.')
    return Polynomial._trusted(self.ring.without(name),
                               {m[:index] + m[index + 1:]: c for m, c in self.terms.items()})

  def to_ring(self, ring: PolynomialRing) -> 'Polynomial':
    """Same variables, coefficients mapped into another coefficient ring."""
    if ring.variables != self.ring.variables:
      raise ValueError(f'Variables {ring.variables} differ from {self.ring.variables}.')
    return Polynomial(ring, {m: ring.coefficients.normalize(c) for m, c in self.terms.items()})


def normal_form(f: Polynomial,
                basis: Iterable[Polynomial],
                order: MonomialOrder = DEGREVLEX,
                budget: 'list[int] | None' = None) -> Polynomial:
  """Full multivariate division remainder of f by basis.

  When `budget` is given, its single element is decremented once per reduction step.
  """
  basis = [g for g in basis if g]
  for g in basis:
    f._check_ring(g)
  coefficients = f.ring.coefficients
  normalize = coefficients.normalize
  leads = [(g.leading_monomial(order), g) for g in basis]
  inverses = [coefficients.inverse(g.terms[m]) for m, g in leads]

  remaining = dict(f.terms)
  remainder: dict[Monomial, Scalar] = {}
  while remaining:
    monomial = max(remaining, key=order.key)
    coefficient = remaining[monomial]
    for (lead, g), inverse in zip(leads, inverses):
      if monomial_divides(lead, monomial):
        if budget is not None:
          budget[0] -= 1
        factor = normalize(coefficient * inverse)
        shift = monomial_quotient(monomial, lead)
        for m, c in g.terms.items():
          target = monomial_mul(m, shift)
          value = normalize(remaining.get(target, 0) - factor * c)
          if value == 0:
            remaining.pop(target, None)
          else:
            remaining[target] = value
        break
    else:
      remainder[monomial] = coefficient
      del remaining[monomial]
  return Polynomial._trusted(f.ring, remainder)


def det3(columns: Sequence[Sequence[Polynomial]]) -> Polynomial:
  """Determinant of the 3x3 matrix with the given columns."""
  if len(columns) != 3 or any(len(column) != 3 for column in columns):
    raise ValueError('det3 needs three columns of length three.')
  (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = columns
  return a0 * (b1 * c2 - b2 * c1) + a1 * (b2 * c0 - b0 * c2) + a2 * (b0 * c1 - b1 * c0)


def univariate_ring(coefficients: CoefficientRing = RATIONALS, name: str = 'x') -> PolynomialRing:
  return PolynomialRing(coefficients, (name,))


def univariate(coefficients_high_first: Sequence[Scalar],
               ring: PolynomialRing | None = None) -> Polynomial:
  ring = ring or univariate_ring()
  degree = len(coefficients_high_first) - 1
  return Polynomial(ring, {(degree - i,): c for i, c in enumerate(coefficients_high_first)})
