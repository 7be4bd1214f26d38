import json

from absl.testing import absltest

from incidence_workbench.algebra.field import PrimeField
from incidence_workbench.algebra.order import LEX
from incidence_workbench.core.linearspace_test import FANO
from incidence_workbench.enumeration.canonical_test import MOBIUS_KANTOR
from incidence_workbench.gb.buchberger import buchberger
from incidence_workbench.gb.framed import build_ideal
from incidence_workbench.gb.framed_test import framed
from incidence_workbench.gb.io import (gb_from_payload, gb_to_json, ideal_from_payload,
                                       ideal_to_json, parse_ideal)


class IdealJsonTest(absltest.TestCase):

  def test_fano_ideal(self):
    ideal = build_ideal(framed(FANO))
    payload = ideal_to_json(ideal)
    self.assertEqual(payload['ring'], {'coeff': 'Q', 'vars': ['y1', 'y2', 'z1', 'z2']})
    self.assertEqual(payload['generators'][1], 'y1 - 1')
    self.assertEqual(parse_ideal(json.dumps(payload)), ideal)

  def test_prime_field(self):
    ideal = build_ideal(framed(MOBIUS_KANTOR), PrimeField(7))
    payload = ideal_to_json(ideal)
    self.assertEqual(payload['ring']['coeff'], 'Fp:7')
    self.assertEqual(ideal_from_payload(payload), ideal)

  def test_zero_generators_are_dropped(self):
    ideal = ideal_from_payload({'ring': {'coeff': 'Q', 'vars': ['x', 'y']},
                                'generators': ['x - x', 'x*y']})
    self.assertLen(ideal.generators, 1)

  def test_errors_carry_the_payload(self):
    for text in ('{"ring": {"coeff": "R", "vars": ["x"]}, "generators": []}',
                 '{"ring": {"coeff": "Q", "vars": ["x"]}, "generators": ["x + t"]}',
                 '{"ring": {"coeff": "Q", "vars": ["x"]}, "generators": ["x +* 1"]}',
                 '{"ring": '):
      with self.subTest(text=text):
        with self.assertRaises(ValueError) as raised:
          parse_ideal(text)
        self.assertTrue(any(text in note for note in raised.exception.__notes__))

  def test_missing_keys(self):
    with self.assertRaises(AssertionError):
      parse_ideal('{"generators": ["x"]}')


class GroebnerBasisJsonTest(absltest.TestCase):

  def test_unit_basis(self):
    ideal = build_ideal(framed(FANO))
    payload = gb_to_json(buchberger(ideal), ideal)
    self.assertEqual(payload['order'], 'degrevlex')
    self.assertEqual(payload['elements'], ['1'])
    self.assertEqual(payload['generators'], ideal_to_json(ideal)['generators'])

  def test_basis_survives_a_round_trip(self):
    gb = buchberger(build_ideal(framed(MOBIUS_KANTOR)), LEX)
    restored = gb_from_payload(json.loads(json.dumps(gb_to_json(gb))))
    self.assertEqual(restored.order, LEX)
    self.assertEqual(restored.elements, gb.elements)


if __name__ == '__main__':
  absltest.main()
