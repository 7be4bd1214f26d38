from dataclasses import dataclass

from incidence_workbench.algebra.order import DEGREVLEX, MonomialOrder
from incidence_workbench.algebra.polynomial import Polynomial, PolynomialRing, normal_form


@dataclass(frozen=True)
class IdealPresentation:
  ring: PolynomialRing
  generators: tuple[Polynomial, ...]

  def __post_init__(self) -> None:
    for g in self.generators:
      if g.ring != self.ring:
        raise ValueError(f'Generator {g} lives in {g.ring}, not {self.ring}.')
      if not g:
        raise ValueError('Ideal generators must be nonzero.')

  def __str__(self) -> str:
    return f'({", ".join(map(str, self.generators))}) in {self.ring.coefficients}{list(self.ring.variables)}'


@dataclass(frozen=True)
class GroebnerBasis:
  ring: PolynomialRing
  order: MonomialOrder
  elements: tuple[Polynomial, ...]

  def is_unit(self) -> bool:
    return len(self.elements) == 1 and self.elements[0].is_constant()

  def reduce(self, f: Polynomial) -> Polynomial:
    return normal_form(f, self.elements, self.order)

  def contains(self, f: Polynomial) -> bool:
    return not self.reduce(f)

  def leading_monomials(self) -> list[tuple[int, ...]]:
    return [g.leading_monomial(self.order) for g in self.elements]

  def as_ideal(self) -> IdealPresentation:
    return IdealPresentation(self.ring, self.elements)


def unit_basis(ring: PolynomialRing, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
  return GroebnerBasis(ring, order, (ring.one(),))
