import os
import unittest

from absl.testing import absltest, parameterized

from incidence_workbench import util
from incidence_workbench.catalog import catalog
from incidence_workbench.catalog.catalog import Source, entry_from_payload, entry_to_json
from incidence_workbench.core.linearspace import (CollinearityFamily, LinearSpace, closure,
                                                  is_superfiguration, validate_linear_space)
from incidence_workbench.core.linearspace_test import DESARGUES, FANO
from incidence_workbench.enumeration.canonical import canonical_form
from incidence_workbench.enumeration.canonical_test import MOBIUS_KANTOR
from incidence_workbench.enumeration.frame_test import STARFISH
from incidence_workbench.enumeration.generate import SpaceFilter, enumerate_linear_spaces
from incidence_workbench.enumeration.glynn_test import DESARGUES_MINUS_LINE, TWO_LINES

SLOW_TESTS = os.environ.get('INCIDENCE_WORKBENCH_SLOW_TESTS') == '1'

NAMES = ['anti-pappian', 'cubic-field', 'cyclotomic-ten', 'desargues', 'desargues-minus-line',
         'fano', 'mobius-kantor', 'modular-eleven', 'pappus', 'special-desargues',
         'spurious-plane', 'starfish', 'two-lines']


class CatalogTest(parameterized.TestCase):

  def test_list_names(self):
    self.assertEqual(catalog.list_names(), NAMES)

  def test_fano(self):
    entry = catalog.get('fano')
    self.assertEqual(entry.space.n, 7)
    self.assertLen(entry.space.lines, 7)
    self.assertEqual(entry.space, FANO)
    self.assertEqual(entry.expected['generators'].value, 5)
    self.assertEqual(entry.expected['generators'].source, Source.LITERATURE)

  def test_pipeline_values_are_tagged_computed(self):
    fact = catalog.get('pappus').expected['generators']
    self.assertEqual(fact.value, 7)
    self.assertEqual(fact.source, Source.COMPUTED)

  def test_starfish_has_one_five_point_line(self):
    space = catalog.get('starfish').space
    self.assertLen([line for line in space.lines if len(line) == 5], 1)
    self.assertEqual(space, STARFISH)

  def test_desargues(self):
    space = catalog.get('desargues').space
    self.assertLen(space.lines, 10)
    self.assertTrue(all(len(line) == 3 for line in space.lines))
    self.assertEqual(space, DESARGUES)

  @parameterized.parameters(('mobius-kantor', MOBIUS_KANTOR),
                            ('desargues-minus-line', DESARGUES_MINUS_LINE),
                            ('two-lines', TWO_LINES))
  def test_matches_fixture(self, name, expected):
    self.assertEqual(catalog.get(name).space, expected)

  def test_special_desargues_is_stored_closed(self):
    printed = list(DESARGUES.lines) + [(1, 8, 9, 10)]
    self.assertEqual(closure(CollinearityFamily.of(10, printed)),
                     catalog.get('special-desargues').space)

  def test_pappus_frame(self):
    self.assertEqual(catalog.get('pappus').v_frame.points, (1, 2, 3, 4, 5))
    self.assertIsNone(catalog.get('fano').v_frame)

  @parameterized.parameters(NAMES)
  def test_golden_line_lists(self, name):
    payload = util.parse_payload((catalog.DATA_DIR / f'{name}.json').read_text(encoding='utf-8'))
    entry = catalog.get(name)
    # Stored exactly as a linear space: no duplicates and nothing for closure to merge.
    self.assertLen(payload['lines'], len(entry.space.lines))
    self.assertEqual(sorted(tuple(sorted(line)) for line in payload['lines']),
                     list(entry.space.lines))
    self.assertTrue(validate_linear_space(entry.space.as_family()).valid)
    self.assertNotEmpty(entry.expected)
    self.assertEqual(entry_from_payload(name, entry_to_json(entry)), entry)

  def test_unknown_name(self):
    with self.assertRaises(ValueError) as raised:
      catalog.get('heptagon')
    self.assertIn('fano', str(raised.exception))

  def test_bad_source(self):
    payload = {'description': '', 'n': 3, 'lines': [[1, 2, 3]],
               'expected': {'superfiguration': {'value': False, 'source': 'rumor'}}}
    with self.assertRaises(ValueError):
      entry_from_payload('bad', payload)

  def test_bad_v_frame(self):
    payload = {'description': '', 'n': 7, 'lines': [list(line) for line in FANO.lines],
               'v_frame': [1, 2, 4, 3, 5], 'expected': {}}
    with self.assertRaises(ValueError):
      entry_from_payload('bad', payload)

  @unittest.skipUnless(SLOW_TESTS, 'Set INCIDENCE_WORKBENCH_SLOW_TESTS=1 to run.')
  def test_ten_point_superfigurations_are_enumerated(self):
    enumerated = {canonical_form(s).certificate
                  for s in enumerate_linear_spaces(10, SpaceFilter.SUPERFIGURATIONS)}
    self.assertLen(enumerated, 151)
    for name in NAMES:
      space: LinearSpace = catalog.get(name).space
      if space.n == 10 and is_superfiguration(space):
        with self.subTest(name=name):
          self.assertIn(canonical_form(space).certificate, enumerated)


if __name__ == '__main__':
  absltest.main()
