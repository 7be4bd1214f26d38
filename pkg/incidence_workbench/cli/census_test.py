import asyncio
import json
import os
import pathlib
import unittest
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor

from absl.testing import absltest

from incidence_workbench.algebra.numberfield import generates_same_field, parse_univariate
from incidence_workbench.catalog import catalog
from incidence_workbench.cli import census
from incidence_workbench.enumeration.canonical import canonical_form
from incidence_workbench.enumeration.frame import v_frames
from incidence_workbench.enumeration.generate import SpaceFilter, enumerate_linear_spaces

SLOW_TESTS = os.environ.get('INCIDENCE_WORKBENCH_SLOW_TESTS') == '1'

# Fields of definition of the finite realization spaces of 10-point superfigurations.
TEN_POINT_FIELDS = ('x^2 - 2', 'x^2 - 5', 'x^2 + 1', 'x^2 + 3', 'x^2 + 7', 'x^3 - x - 1',
                    'x^3 - x^2 + x + 1', 'x^3 - 5*x^2 + 6*x - 1', 'x^4 - x^3 + x^2 - x + 1')


class CensusJobTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    self.mk = catalog.get('mobius-kantor').space
    self.cache_dir = self.create_tempdir().full_path

  def cache_path(self) -> pathlib.Path:
    key = census.cache_key(canonical_form(self.mk).certificate)
    return pathlib.Path(self.cache_dir, f'{key}.json')

  def test_mobius_kantor(self):
    record = census.census_job(self.mk)
    self.assertEqual(record.status, 'ok')
    self.assertEqual((record._n, record.n_prime, record.n_doubleprime), (8, 3, 0))
    self.assertEqual(record.generators, 6)
    self.assertEqual((record.krull_dimension, record.quotient_dimension), (0, 2))
    self.assertTrue(any('^2' in f for f in record.factors))
    self.assertTrue(any('^2' in f for f in record.minimal_polynomials))
    self.assertEqual(json.loads(record.lines), [list(line) for line in self.mk.lines])
    self.assertEqual((record.v_frame, record.frames), ('1,2,3,4,5', 1))
    self.assertEqual((record.strong_krull_dimension, record.strong_quotient_dimension), (0, 2))

  def test_fano_has_no_minimal_polynomials(self):
    record = census.census_job(catalog.get('fano').space)
    self.assertEqual(record.krull_dimension, -1)
    self.assertEqual((record.minimal_polynomials, record.factors), ((), ()))

  def test_cyclotomic_ten_keeps_only_strong_points(self):
    record = census.census_job(catalog.get('cyclotomic-ten').space)
    self.assertEqual((record.krull_dimension, record.quotient_dimension), (0, 5))
    self.assertEqual((record.strong_krull_dimension, record.strong_quotient_dimension), (0, 4))
    target = parse_univariate('x^4 - x^3 + x^2 - x + 1')
    self.assertTrue(any(generates_same_field(parse_univariate(f), target)
                        for f in record.factors))

  def test_pappus_tries_every_frame_orbit(self):
    pappus = catalog.get('pappus').space
    record = census.census_job(pappus)
    orbits = list(v_frames(pappus, canonical_form(pappus).generators))
    self.assertEqual(record.frames, len(orbits))
    self.assertEqual(record.krull_dimension, 2)
    self.assertIsNone(record.quotient_dimension)
    self.assertEqual(record.strong_krull_dimension, 2)
    self.assertEqual((record.minimal_polynomials, record.factors), ((), ()))

    capped = census.census_job(pappus, max_frames=1)
    self.assertEqual((capped.frames, capped.v_frame), (1, '1,2,3,4,5'))

  def test_tags_and_fields(self):
    record = census.census_job(self.mk)
    self.assertEqual(record.tags(), {'n': 8, 'certificate': self.cache_path().stem})
    self.assertNotIn('n', record.fields())
    self.assertIsInstance(record.fields()['factors'], list)
    self.assertEqual(json.loads(json.dumps(record.to_json()))['tags']['n'], 8)

  def test_line_protocol(self):
    line = census.census_job(self.mk).to_line_protocol()
    self.assertStartsWith(line, f'census,certificate={self.cache_path().stem},n=8 ')
    self.assertIn('quotient_dimension=2i', line)
    self.assertIn('status="ok"', line)

  def test_cache_is_reused(self):
    first = census.census_job(self.mk, self.cache_dir)
    self.assertTrue(self.cache_path().is_file())

    payload = json.loads(self.cache_path().read_text())
    payload['substitutions'] = 99
    self.cache_path().write_text(json.dumps(payload))
    second = census.census_job(self.mk, self.cache_dir)
    self.assertEqual(second.substitutions, 99)
    self.assertEqual(second.factors, first.factors)

  def test_unreadable_cache_is_recomputed(self):
    expected = census.census_job(self.mk)
    for content in ('{"certificate": ', json.dumps({'certificate': 'ab', 'substitutions': 0,
                                                    'gb': {}})):
      with self.subTest(content=content):
        self.cache_path().write_text(content)
        self.assertEqual(census.census_job(self.mk, self.cache_dir), expected)
        self.assertEqual(json.loads(self.cache_path().read_text())['certificate'],
                         canonical_form(self.mk).certificate.hex())

  def test_cache_from_another_labeling_is_recomputed(self):
    census.census_job(self.mk, self.cache_dir)
    relabeled = self.mk.relabel((2, 3, 4, 5, 6, 7, 8, 1))
    record = census.census_job(relabeled, self.cache_dir)
    self.assertEqual(record, census.census_job(relabeled))
    payload = json.loads(self.cache_path().read_text())
    self.assertEqual(json.loads(payload['lines']), [list(line) for line in relabeled.lines])

  def test_budget_exceeded(self):
    record = census.census_job(self.mk, self.cache_dir, max_steps=1)
    self.assertEqual(record.status, 'budget-exceeded')
    self.assertIsNone(record.krull_dimension)
    self.assertFalse(self.cache_path().exists())


class RunCensusTest(absltest.TestCase):

  def test_preserves_input_order(self):
    spaces = [catalog.get(name).space for name in ('pappus', 'mobius-kantor', 'fano')]
    with ThreadPoolExecutor(max_workers=3) as executor:
      records = asyncio.run(census.run_census(spaces, executor))
    self.assertEqual([record._n for record in records], [9, 8, 7])

  def test_empty(self):
    with ThreadPoolExecutor(max_workers=1) as executor:
      self.assertEqual(asyncio.run(census.run_census([], executor)), [])

  @unittest.skipUnless(SLOW_TESTS, 'Set INCIDENCE_WORKBENCH_SLOW_TESTS=1 to run.')
  def test_ten_point_fields(self):
    with ProcessPoolExecutor() as executor:
      spaces = list(enumerate_linear_spaces(10, SpaceFilter.SUPERFIGURATIONS, executor))
      records = asyncio.run(census.run_census(spaces, executor))
    self.assertLen(records, 151)
    self.assertEqual({record.status for record in records}, {'ok'})

    listed = [parse_univariate(text) for text in TEN_POINT_FIELDS]
    found = {parse_univariate(f) for record in records for f in record.factors}
    for f in found:
      if f.degree() > 1:
        with self.subTest(factor=str(f)):
          self.assertTrue(any(generates_same_field(f, g) for g in listed))
    for g in listed:
      if g.degree() >= 3:
        with self.subTest(field=str(g)):
          self.assertTrue(any(generates_same_field(f, g) for f in found))


if __name__ == '__main__':
  absltest.main()
