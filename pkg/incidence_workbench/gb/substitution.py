import itertools
from dataclasses import dataclass

from absl import logging

from incidence_workbench.algebra.field import INTEGERS, PrimeField, Scalar
from incidence_workbench.algebra.order import MonomialOrder
from incidence_workbench.algebra.polynomial import Polynomial
from incidence_workbench.gb.buchberger import ResourceLimitExceeded, buchberger
from incidence_workbench.gb.ideal import GroebnerBasis, IdealPresentation


@dataclass(frozen=True)
class Substitution:
  variable: str
  # Polynomial in the remaining variables that replaced `variable`.
  expression: Polynomial
  # Coefficient of `variable` in the generator solved for it.
  coefficient: Scalar

  def __str__(self) -> str:
    return f'{self.variable} = {self.expression}'


def _linear_candidate(ideal: IdealPresentation) -> tuple[int, int] | None:
  """(generator index, variable index) of the linear generator with the fewest terms."""
  coefficients = ideal.ring.coefficients
  best = None
  for gi, g in enumerate(ideal.generators):
    for vi in sorted(g.variables_used()):
      if any(m[vi] and (m[vi] > 1 or sum(m) > 1) for m in g.terms):
        continue
      c = g.terms[tuple(int(i == vi) for i in range(len(ideal.ring.variables)))]
      if not coefficients.is_field and c not in (1, -1):
        continue
      key = (len(g.terms), gi, vi)
      if best is None or key < best:
        best = key
  return None if best is None else best[1:]


def eliminate_linear_variables(
    ideal: IdealPresentation) -> tuple[IdealPresentation, list[Substitution]]:
  """Substitutes away variables that occur in a generator only as c * v.

  The quotient algebra is unchanged up to isomorphism. Over Z only unit coefficients are used.
  """
  log: list[Substitution] = []
  while (candidate := _linear_candidate(ideal)) is not None:
    gi, vi = candidate
    ring = ideal.ring
    g, name = ideal.generators[gi], ring.variables[vi]
    v = ring.gen(name)
    c = g.terms[v.leading_monomial()]
    replacement = (g - v * c) * (-ring.coefficients.inverse(c))

    generators = []
    for h in ideal.generators:
      if reduced := h.substitute(name, replacement):
        generators.append(reduced.drop_variable(name))
    ideal = IdealPresentation(ring.without(name), tuple(dict.fromkeys(generators)))
    log.append(Substitution(name, replacement, c))
    logging.debug(f'Substituted {log[-1]}.')

  if log:
    logging.info(f'Eliminated {len(log)} variables, {len(ideal.ring.variables)} remain.')
  return ideal, log


def integer_relation(ideal: IdealPresentation) -> tuple[IdealPresentation, list[Substitution]]:
  """Linear elimination over Z; the Fano plane's framed ideal collapses to the constant -2."""
  if ideal.ring.coefficients != INTEGERS:
    ideal = IdealPresentation(ideal.ring.with_coefficients(INTEGERS),
                              tuple(g.to_ring(ideal.ring.with_coefficients(INTEGERS))
                                    for g in ideal.generators))
  return eliminate_linear_variables(ideal)


def apply_substitutions(f: Polynomial, log: list[Substitution]) -> Polynomial:
  """Carries f from the ring of the original ideal into the ring `simplify` ended in."""
  for substitution in log:
    f = f.substitute(substitution.variable, substitution.expression)
    f = f.drop_variable(substitution.variable)
  return f


def simplify(ideal: IdealPresentation,
             order: MonomialOrder | None = None,
             max_steps: int | None = None) -> tuple[GroebnerBasis, list[Substitution]]:
  """Alternates Groebner bases and linear elimination until no linear generator is left."""
  log: list[Substitution] = []
  while True:
    gb = buchberger(ideal, order, max_steps)
    ideal, substitutions = eliminate_linear_variables(gb.as_ideal())
    if not substitutions:
      return gb, log
    log.extend(substitutions)


def solution_count(ideal: IdealPresentation, p: int, max_points: int = 10**7) -> int:
  """Number of common zeros in F_p^k, by exhaustive search."""
  field = PrimeField(p)
  ring = ideal.ring.with_coefficients(field)
  try:
    generators = [g.to_ring(ring) for g in ideal.generators]
  except ZeroDivisionError as e:
    raise ValueError(f'A coefficient denominator of {ideal} vanishes mod {p}.') from e
  if any(g.is_constant() and g for g in generators):
    return 0
  generators = sorted((g for g in generators if g), key=lambda g: len(g.terms))

  if (size := p**len(ring.variables)) > max_points:
    raise ResourceLimitExceeded(f'Searching {size} points of F_{p}^{len(ring.variables)} exceeds '
                                f'the limit of {max_points}.')
  return sum(1 for point in itertools.product(range(p), repeat=len(ring.variables))
             if all(g.evaluate(point) == 0 for g in generators))
