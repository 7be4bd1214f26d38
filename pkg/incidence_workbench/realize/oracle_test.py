from absl.testing import absltest, parameterized

from incidence_workbench.core.linearspace import LinearSpace
from incidence_workbench.core.linearspace_test import FANO
from incidence_workbench.enumeration.canonical_test import MOBIUS_KANTOR
from incidence_workbench.enumeration.frame import combinatorial_frames
from incidence_workbench.enumeration.generate import enumerate_linear_spaces
from incidence_workbench.realize.count import (CountMode, count_chart_points, count_framed,
                                               strong_total)
from incidence_workbench.realize.count_test import framed
from incidence_workbench.realize.oracle import OracleTooLarge, naive_count_oracle


class NaiveOracleTest(parameterized.TestCase):

  def test_unconstrained_point(self):
    result = naive_count_oracle(LinearSpace.of(5, []), 2, CountMode.FRAMED_WEAK)
    self.assertEqual(result.count, 7)
    self.assertEqual(result.mode, CountMode.FRAMED_WEAK)

  @parameterized.parameters(4, 5, 6)
  def test_agrees_with_search_on_small_spaces(self, n):
    for s in enumerate_linear_spaces(n):
      for frame in combinatorial_frames(s):
        for q in (2, 3):
          for strong in (False, True):
            mode = CountMode.FRAMED_STRONG if strong else CountMode.FRAMED_WEAK
            with self.subTest(s=str(s), frame=frame, q=q, mode=mode):
              self.assertEqual(
                  naive_count_oracle(s, q, mode, frame).count,
                  count_framed(s, frame, q, strong).count)

  @parameterized.parameters((FANO, 2), (FANO, 3), (FANO, 5), (MOBIUS_KANTOR, 2),
                            (MOBIUS_KANTOR, 3), (MOBIUS_KANTOR, 5))
  def test_agrees_with_chart_count(self, s, q):
    fs = framed(s)
    self.assertEqual(naive_count_oracle(fs, q, CountMode.CHART).count,
                     count_chart_points(fs, q).count)

  def test_strong_total(self):
    self.assertEqual(naive_count_oracle(FANO, 2, CountMode.STRONG_TOTAL).count,
                     strong_total(FANO, 2).count)

  def test_cap(self):
    with self.assertRaises(OracleTooLarge):
      naive_count_oracle(MOBIUS_KANTOR, 3, CountMode.FRAMED_WEAK, cap=1000)
    with self.assertRaises(OracleTooLarge):
      naive_count_oracle(framed(MOBIUS_KANTOR), 5, CountMode.CHART, cap=10)

  def test_errors(self):
    with self.assertRaises(ValueError):
      naive_count_oracle(FANO, 2, CountMode.CHART)
    with self.assertRaises(ValueError):
      naive_count_oracle(FANO, 2, CountMode.FRAMED_WEAK, frame=(1, 2, 3, 4))
    with self.assertRaises(ValueError):
      naive_count_oracle(FANO, 6, CountMode.FRAMED_WEAK)


if __name__ == '__main__':
  absltest.main()
