import os
import unittest
from concurrent.futures import ProcessPoolExecutor

from absl.testing import absltest, parameterized

from incidence_workbench.core.linearspace import LinearSpace, is_configuration
from incidence_workbench.core.linearspace_test import FANO
from incidence_workbench.enumeration.canonical import are_isomorphic, canonical_form
from incidence_workbench.enumeration.generate import SpaceFilter, enumerate_linear_spaces

SLOW_TESTS = os.environ.get('INCIDENCE_WORKBENCH_SLOW_TESTS') == '1'


class EnumerateLinearSpacesTest(parameterized.TestCase):

  @parameterized.parameters((1, 1), (2, 1), (3, 2), (4, 3), (5, 5), (6, 10), (7, 24), (8, 69))
  def test_counts(self, n, expected):
    self.assertLen(list(enumerate_linear_spaces(n)), expected)

  def test_three_points(self):
    spaces = list(enumerate_linear_spaces(3))
    self.assertCountEqual(spaces, [LinearSpace.of(3, []), LinearSpace.of(3, [[1, 2, 3]])])

  def test_representatives_are_pairwise_non_isomorphic(self):
    spaces = list(enumerate_linear_spaces(6))
    certificates = [canonical_form(s).certificate for s in spaces]
    self.assertLen(set(certificates), len(spaces))
    self.assertEqual(certificates, sorted(certificates))
    for i, a in enumerate(spaces):
      for b in spaces[i + 1:]:
        self.assertFalse(are_isomorphic(a, b)[0])

  def test_fano_is_the_only_seven_point_superfiguration(self):
    found = list(enumerate_linear_spaces(7, SpaceFilter.SUPERFIGURATIONS))
    self.assertLen(found, 1)
    self.assertTrue(are_isomorphic(found[0], FANO)[0])

  def test_eight_point_superfiguration(self):
    self.assertLen(list(enumerate_linear_spaces(8, SpaceFilter.SUPERFIGURATIONS)), 1)

  def test_no_small_superfigurations(self):
    for n in range(1, 7):
      self.assertEmpty(list(enumerate_linear_spaces(n, SpaceFilter.SUPERFIGURATIONS)))

  def test_process_pool_gives_same_stream(self):
    with ProcessPoolExecutor(max_workers=2) as executor:
      parallel = list(enumerate_linear_spaces(7, executor=executor))
    self.assertEqual(parallel, list(enumerate_linear_spaces(7)))

  def test_rejects_zero_points(self):
    with self.assertRaises(ValueError):
      list(enumerate_linear_spaces(0))


@unittest.skipUnless(SLOW_TESTS, 'Set INCIDENCE_WORKBENCH_SLOW_TESTS=1 to run.')
class CensusCountsTest(absltest.TestCase):

  def test_nine_points(self):
    with ProcessPoolExecutor() as executor:
      self.assertLen(list(enumerate_linear_spaces(9, executor=executor)), 384)
    self.assertLen(list(enumerate_linear_spaces(9, SpaceFilter.SUPERFIGURATIONS)), 10)

  def test_ten_points(self):
    with ProcessPoolExecutor() as executor:
      spaces = list(enumerate_linear_spaces(10, executor=executor))
    self.assertLen(spaces, 5250)
    superfigurations = [s for s in spaces if all(s.degree(p) >= 3 for p in s.points())]
    self.assertLen(superfigurations, 151)
    configurations = [s for s in superfigurations if is_configuration(s)]
    self.assertLen(configurations, 10)
    self.assertLen(superfigurations, 141 + len(configurations))
    self.assertEqual(1 + 1 + 10 + len(superfigurations), 163)


if __name__ == '__main__':
  absltest.main()
