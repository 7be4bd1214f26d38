"""Buchberger's algorithm with the Gebauer-Moeller pair update and normal selection."""
from absl import logging

from incidence_workbench import util
from incidence_workbench.algebra.order import (Monomial, MonomialOrder, monomial_divides,
                                               monomial_lcm, monomial_quotient, monomials_coprime)
from incidence_workbench.algebra.polynomial import Polynomial, normal_form
from incidence_workbench.gb import flag
from incidence_workbench.gb.ideal import GroebnerBasis, IdealPresentation, unit_basis

Pair = tuple[int, int]


class ResourceLimitExceeded(RuntimeError):
  """The reduction step budget ran out; retry with a larger --max_reduction_steps."""


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
  lead_f, lead_g = f.leading_monomial(order), g.leading_monomial(order)
  lcm = monomial_lcm(lead_f, lead_g)
  inverse = f.ring.coefficients.inverse
  return f.shift(monomial_quotient(lcm, lead_f), inverse(f.terms[lead_f])) - \
         g.shift(monomial_quotient(lcm, lead_g), inverse(g.terms[lead_g]))


def _sorted_monic(polynomials: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
  return tuple(sorted((f.monic(order) for f in polynomials),
                      key=lambda f: order.key(f.leading_monomial(order))))


def inter_reduce(polynomials: list[Polynomial], order: MonomialOrder,
                 budget: list[int] | None = None) -> list[Polynomial]:
  """Reduces each polynomial by the others until none changes; zeros are dropped."""
  remaining = [f.monic(order) for f in polynomials if f]
  changed = True
  while changed:
    changed = False
    for index in sorted(range(len(remaining)),
                        key=lambda i: order.key(remaining[i].leading_monomial(order))):
      f = remaining[index]
      if f is None:
        continue
      others = [g for i, g in enumerate(remaining) if i != index and g is not None]
      reduced = normal_form(f, others, order, budget)
      if reduced != f:
        changed = True
        remaining[index] = reduced.monic(order) if reduced else None
    remaining = [f for f in remaining if f is not None]
  return remaining


class _Buchberger:

  def __init__(self, order: MonomialOrder, budget: list[int]) -> None:
    self._order = order
    self._budget = budget
    self.basis: list[Polynomial] = []
    self.leads: list[Monomial] = []
    self.active: list[int] = []
    self.pairs: set[Pair] = set()

  def _lcm(self, i: int, j: int) -> Monomial:
    return monomial_lcm(self.leads[i], self.leads[j])

  def add(self, h: Polynomial) -> None:
    """Installs h, applying both Buchberger criteria to the critical pairs."""
    new = len(self.basis)
    self.basis.append(h)
    self.leads.append(h.leading_monomial(self._order))
    lead_h = self.leads[new]

    candidates = list(self.active)
    kept: list[int] = []
    while candidates:
      g = candidates.pop()
      lcm = self._lcm(new, g)
      if monomials_coprime(lead_h, self.leads[g]) or not any(
          monomial_divides(self._lcm(new, other), lcm) for other in candidates + kept):
        kept.append(g)
    fresh = {(g, new) for g in kept if not monomials_coprime(lead_h, self.leads[g])}

    survivors = set()
    for i, j in self.pairs:
      lcm = self._lcm(i, j)
      if not monomial_divides(lead_h, lcm) or self._lcm(i, new) == lcm or \
         self._lcm(new, j) == lcm:
        survivors.add((i, j))
    self.pairs = survivors | fresh

    self.active = [g for g in self.active if not monomial_divides(lead_h, self.leads[g])]
    self.active.append(new)

  def _priority(self, pair: Pair) -> tuple:
    lcm = self._lcm(*pair)
    return (sum(lcm), self._order.key(lcm), pair)

  def select(self) -> Pair:
    pair = min(self.pairs, key=self._priority)
    self.pairs.remove(pair)
    return pair

  def reduce(self, f: Polynomial) -> Polynomial:
    result = normal_form(f, [self.basis[i] for i in self.active], self._order, self._budget)
    if self._budget[0] < 0:
      raise ResourceLimitExceeded('Reduction step budget exhausted.')
    return result


def buchberger(ideal: IdealPresentation,
               order: MonomialOrder | None = None,
               max_steps: int | None = None) -> GroebnerBasis:
  """Reduced Groebner basis of a polynomial ideal over a field."""
  ring = ideal.ring
  if not ring.coefficients.is_field:
    raise ValueError(f'Groebner bases need field coefficients. Got {ring.coefficients} instead.')
  order = order or MonomialOrder.parse(util.flag_value(flag.MONOMIAL_ORDER))
  max_steps = max_steps or util.flag_value(flag.MAX_REDUCTION_STEPS)
  budget = [max_steps]

  try:
    generators = inter_reduce(list(ideal.generators), order, budget)
    if any(g.is_constant() for g in generators):
      return unit_basis(ring, order)
    if budget[0] < 0:
      raise ResourceLimitExceeded('Reduction step budget exhausted during inter-reduction.')

    state = _Buchberger(order, budget)
    for g in sorted(generators, key=lambda g: order.key(g.leading_monomial(order))):
      state.add(g)

    processed = 0
    while state.pairs:
      i, j = state.select()
      processed += 1
      h = state.reduce(s_polynomial(state.basis[i], state.basis[j], order))
      if not h:
        continue
      if h.is_constant():
        logging.info(f'Ideal in {ring.variables} is the unit ideal after {processed} pairs.')
        return unit_basis(ring, order)
      logging.debug(f'Pair ({i}, {j}) added {h.leading_monomial(order)} to the basis.')
      state.add(h.monic(order))

    minimal = [state.basis[i] for i in state.active]
    reduced = [normal_form(g, [h for h in minimal if h is not g], order, budget)
               for g in minimal]
  except ResourceLimitExceeded as e:
    e.add_note(f'Raise --max_reduction_steps above {max_steps} for the ideal in '
               f'{ring.variables}.')
    raise

  elements = _sorted_monic(reduced, order)
  logging.info(f'Groebner basis of {len(elements)} elements from {len(ideal.generators)} '
               f'generators; {processed} pairs, {max_steps - budget[0]} reduction steps.')
  return GroebnerBasis(ring, order, elements)
