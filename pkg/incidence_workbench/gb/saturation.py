"""Saturation, and the strong part of a framed scheme.

Degenerate placements, where points coincide or a triple off every full line becomes collinear,
can form whole components of the framed scheme. Saturating by the determinants of those triples
removes them and keeps the closure of the strong realizations.
"""
from absl import logging

from incidence_workbench.algebra.order import DEGREVLEX, MonomialOrder, OrderKind
from incidence_workbench.algebra.polynomial import Polynomial, PolynomialRing
from incidence_workbench.gb.buchberger import buchberger
from incidence_workbench.gb.framed import FramedSuperfiguration, strong_locus_determinants
from incidence_workbench.gb.ideal import GroebnerBasis, IdealPresentation, unit_basis
from incidence_workbench.gb.substitution import Substitution, apply_substitutions


def _fresh_variable(ring: PolynomialRing) -> str:
  name = 't'
  while name in ring.variables:
    name = f'_{name}'
  return name


def saturate(gb: GroebnerBasis, f: Polynomial, max_steps: int | None = None) -> GroebnerBasis:
  """Degrevlex basis of I : f^infinity, eliminating t from I + (1 - t f)."""
  ring = gb.ring
  if f.ring != ring:
    raise ValueError(f'{f} lives in {f.ring}, not {ring}.')
  if not f:
    return unit_basis(ring, DEGREVLEX)
  t = _fresh_variable(ring)
  lifted_ring = PolynomialRing(ring.coefficients, (t,) + ring.variables)

  def lift(g: Polynomial) -> Polynomial:
    return Polynomial(lifted_ring, {(0,) + m: c for m, c in g.terms.items()})

  generators = tuple(lift(g) for g in gb.elements) + \
               (lifted_ring.one() - lifted_ring.gen(t) * lift(f),)
  lifted = buchberger(IdealPresentation(lifted_ring, generators),
                      MonomialOrder(OrderKind.BLOCK, 1), max_steps)
  if lifted.is_unit():
    return unit_basis(ring, DEGREVLEX)
  # Under the block order the t-free elements are a reduced basis of the elimination ideal.
  return GroebnerBasis(ring, DEGREVLEX,
                       tuple(g.drop_variable(t) for g in lifted.elements if not g.degree_in(0)))


def strong_part(fs: FramedSuperfiguration,
                gb: GroebnerBasis,
                log: list[Substitution],
                max_steps: int | None = None) -> GroebnerBasis:
  """Saturates the simplified framed scheme `gb` of fs by every strong locus determinant.

  `log` is the substitution log `simplify` returned with gb.
  """
  current = gb
  seen: set[Polynomial] = set()
  for triple, d in strong_locus_determinants(fs, gb.ring.coefficients):
    if current.is_unit():
      break
    h = current.reduce(apply_substitutions(d, log))
    if not h:
      logging.debug(f'Points {triple} of {fs.space} are collinear on the whole framed scheme.')
      return unit_basis(gb.ring, DEGREVLEX)
    if h.is_constant() or (h := h.monic()) in seen:
      continue
    seen.add(h)
    current = saturate(current, h, max_steps)
  logging.info(f'Strong part of {fs.space}: {len(current.elements)} elements after saturating '
               f'by {len(seen)} determinants.')
  return current
