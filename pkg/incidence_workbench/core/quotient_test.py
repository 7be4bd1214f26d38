from absl.testing import absltest

from incidence_workbench.core.linearspace import CollinearityFamily, LinearSpace, leq
from incidence_workbench.core.quotient import (CoincidencePattern, QuotientMap, coincidence_quotient,
                                               diagonal_strata, quotient, quotient_family)

FANO = LinearSpace.of(7, [[1, 2, 3], [1, 4, 5], [1, 6, 7], [3, 4, 7], [3, 5, 6], [2, 5, 7],
                          [2, 4, 6]])


class QuotientTest(absltest.TestCase):

  def test_rejects_non_surjective_assignment(self):
    with self.assertRaises(ValueError):
      QuotientMap(3, 3, (1, 1, 2))
    with self.assertRaises(ValueError):
      QuotientMap(3, 2, (1, 2))

  def test_identity(self):
    self.assertEqual(quotient(FANO, QuotientMap.identity(7)), FANO)

  def test_merge_on_a_line(self):
    s = LinearSpace.of(4, [[1, 2, 3, 4]])
    merged = quotient(s, QuotientMap(4, 3, (1, 2, 2, 3)))
    self.assertEqual(merged, LinearSpace.of(3, [[1, 2, 3]]))

  def test_merge_leaves_only_pairs(self):
    family = CollinearityFamily.of(4, [[1, 2, 3], [2, 3, 4]])
    pushed = quotient_family(family, QuotientMap(4, 3, (1, 2, 2, 3)))
    self.assertEqual(pushed.members, ((1, 2), (2, 3)))

  def test_composition_without_collapsed_intersections(self):
    s = LinearSpace.of(6, [[1, 2, 3], [3, 4, 5]])
    q1 = QuotientMap(6, 5, (1, 2, 3, 4, 5, 1))
    q2 = QuotientMap(5, 4, (1, 2, 3, 4, 4))
    self.assertEqual(quotient(quotient(s, q1), q2), quotient(s, q1.then(q2)))

  def test_composition_is_bounded_below(self):
    s = LinearSpace.of(6, [[1, 2, 3], [4, 5, 6]])
    q1 = QuotientMap(6, 4, (1, 2, 3, 1, 2, 4))
    q2 = QuotientMap(4, 3, (1, 1, 2, 3))
    stepwise = quotient(quotient(s, q1), q2)
    direct = quotient(s, q1.then(q2))
    self.assertEqual(stepwise, LinearSpace.of(3, [[1, 2, 3]]))
    self.assertEqual(direct, LinearSpace.of(3, []))
    self.assertTrue(leq(direct, stepwise))

  def test_coincidence_quotient_joins_transitively(self):
    q = coincidence_quotient(CoincidencePattern.of((2, 3), (3, 5)), 5)
    self.assertEqual(q.assignment, (1, 2, 2, 3, 2))
    with self.assertRaises(ValueError):
      CoincidencePattern.of((1, 1))

  def test_diagonal_strata(self):
    family = CollinearityFamily.of(4, [[1, 2, 3], [2, 3, 4]])
    strata = {pattern: space for pattern, _, space in diagonal_strata(family)}
    self.assertLen(strata, 15)
    self.assertEqual(strata[CoincidencePattern.of()], LinearSpace.of(4, [[1, 2, 3, 4]]))
    self.assertEqual(strata[CoincidencePattern.of((2, 3))], LinearSpace.of(3, []))


if __name__ == '__main__':
  absltest.main()
