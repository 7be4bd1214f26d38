from typing import Any

from incidence_workbench import util
from incidence_workbench.algebra.field import coefficient_ring
from incidence_workbench.algebra.order import MonomialOrder
from incidence_workbench.algebra.parse import format_polynomial, parse_polynomial
from incidence_workbench.algebra.polynomial import PolynomialRing
from incidence_workbench.gb.ideal import GroebnerBasis, IdealPresentation


def _ring_to_json(ring: PolynomialRing) -> dict[str, Any]:
  return {'coeff': ring.coefficients.name, 'vars': list(ring.variables)}


def _ring_from_payload(payload: dict[str, Any]) -> PolynomialRing:
  ring = util.get_dict(payload, 'ring')
  return PolynomialRing(coefficient_ring(util.get_str(ring, 'coeff')),
                        tuple(util.get_str_list(ring, 'vars')))


def ideal_to_json(ideal: IdealPresentation) -> dict[str, Any]:
  return {
      'ring': _ring_to_json(ideal.ring),
      'generators': [format_polynomial(g) for g in ideal.generators],
  }


def ideal_from_payload(payload: dict[str, Any]) -> IdealPresentation:
  ring = _ring_from_payload(payload)
  generators = []
  for text in util.get_str_list(payload, 'generators'):
    if f := parse_polynomial(text, ring):
      generators.append(f)
  return IdealPresentation(ring, tuple(generators))


def gb_to_json(gb: GroebnerBasis, generators: IdealPresentation | None = None) -> dict[str, Any]:
  result = ideal_to_json(generators or gb.as_ideal())
  result['order'] = gb.order.name
  result['elements'] = [format_polynomial(g, gb.order) for g in gb.elements]
  return result


def gb_from_payload(payload: dict[str, Any]) -> GroebnerBasis:
  ring = _ring_from_payload(payload)
  order = MonomialOrder.parse(util.get_str(payload, 'order'))
  elements = tuple(parse_polynomial(text, ring) for text in util.get_str_list(payload, 'elements'))
  return GroebnerBasis(ring, order, elements)


def parse_ideal(text: str) -> IdealPresentation:
  try:
    return ideal_from_payload(util.parse_payload(text))
  except ValueError as e:
    e.add_note(f'While parsing ideal "{text}".')
    raise
