import os

import networkx as nx
import unittest
from concurrent.futures import ProcessPoolExecutor

from absl.testing import absltest, parameterized

from incidence_workbench.core.linearspace import LinearSpace
from incidence_workbench.core.linearspace_test import DESARGUES, FANO, S43
from incidence_workbench.enumeration.canonical import automorphism_generators
from incidence_workbench.enumeration.canonical_test import MOBIUS_KANTOR
from incidence_workbench.enumeration.frame import (VFrame, combinatorial_frames, find_v_frame,
                                                   frame_ordering, is_combinatorial_frame,
                                                   v_frames, validate_v_frame)
from incidence_workbench.enumeration.generate import SpaceFilter, enumerate_linear_spaces

SLOW_TESTS = os.environ.get('INCIDENCE_WORKBENCH_SLOW_TESTS') == '1'

STARFISH = LinearSpace.of(10, [[1, 2, 3], [1, 4, 5], [1, 6, 8], [1, 7, 9], [2, 4, 10], [2, 5, 9],
                               [2, 6, 7], [3, 4, 6], [4, 8, 9], [6, 9, 10], [3, 5, 7, 8, 10]])


class CombinatorialFrameTest(absltest.TestCase):

  def test_fano(self):
    self.assertTrue(is_combinatorial_frame(FANO, (2, 3, 4, 5)))
    self.assertFalse(is_combinatorial_frame(FANO, (1, 2, 3, 4)))
    self.assertFalse(is_combinatorial_frame(FANO, (1, 2, 3)))
    self.assertFalse(is_combinatorial_frame(FANO, (1, 1, 2, 3)))

  def test_enumeration_is_lexicographic(self):
    frames = list(combinatorial_frames(FANO))
    self.assertEqual(frames[0], (1, 2, 4, 7))
    self.assertEqual(frames, sorted(frames))
    # Complements of lines in the Fano plane are exactly its frames.
    self.assertLen(frames, 7)

  def test_four_point_line_has_no_frame(self):
    self.assertEmpty(list(combinatorial_frames(S43)))


class VFrameTest(parameterized.TestCase):

  @parameterized.parameters(FANO, MOBIUS_KANTOR, STARFISH)
  def test_first_v_frame(self, s):
    self.assertEqual(find_v_frame(s), VFrame((1, 2, 3, 4, 5)))

  def test_desargues(self):
    vf = find_v_frame(DESARGUES)
    self.assertEqual(vf.points, (1, 2, 3, 4, 5))
    validate_v_frame(DESARGUES, vf)

  def test_rejects_non_superfiguration(self):
    with self.assertRaises(ValueError):
      find_v_frame(LinearSpace.of(5, [[1, 2, 5], [3, 4, 5]]))

  def test_rejects_invalid_frames(self):
    with self.assertRaises(ValueError):
      VFrame((1, 2, 3, 4, 4))
    with self.assertRaises(ValueError):
      validate_v_frame(FANO, VFrame((1, 2, 3, 6, 4)))
    with self.assertRaises(ValueError):
      validate_v_frame(FANO, VFrame((1, 2, 3, 4, 8)))
    with self.assertRaises(ValueError):
      frame_ordering(FANO, VFrame((1, 2, 4, 6, 7)))


class VFrameEnumerationTest(parameterized.TestCase):

  @parameterized.parameters((FANO, 42), (MOBIUS_KANTOR, 48), (STARFISH, None))
  def test_all_frames(self, s, expected):
    frames = list(v_frames(s))
    self.assertEqual(frames[0], find_v_frame(s))
    self.assertLen(set(frames), len(frames))
    if expected is not None:
      self.assertLen(frames, expected)
    for vf in frames:
      validate_v_frame(s, vf)
      p1, p2, p3, p4, p5 = vf.points
      self.assertLess(p2, p3)
      self.assertLess(p4, p5)

  @parameterized.parameters(FANO, MOBIUS_KANTOR, STARFISH)
  def test_one_frame_per_orbit(self, s):
    generators = automorphism_generators(s)
    frames = [vf.points for vf in v_frames(s)]
    graph = nx.Graph()
    graph.add_nodes_from(frames)
    for points in frames:
      for g in generators:
        p1, p2, p3, p4, p5 = (g[p - 1] for p in points)
        graph.add_edge(points, (p1, *sorted((p2, p3)), *sorted((p4, p5))))
    representatives = [vf.points for vf in v_frames(s, generators)]
    self.assertEqual(representatives[0], find_v_frame(s).points)
    orbits = list(nx.connected_components(graph))
    self.assertLen(representatives, len(orbits))
    for orbit in orbits:
      self.assertLen(orbit.intersection(representatives), 1)

  def test_rejects_non_superfiguration(self):
    with self.assertRaises(ValueError):
      next(v_frames(S43))


class FrameOrderingTest(absltest.TestCase):

  def test_fano(self):
    fs = frame_ordering(FANO, find_v_frame(FANO))
    self.assertEqual((fs.n_prime, fs.n_doubleprime), (2, 0))
    self.assertEqual(fs.ordering, tuple(range(1, 8)))
    self.assertEqual(fs.space, FANO)

  def test_starfish_on_three_point_lines(self):
    fs = frame_ordering(STARFISH, VFrame((1, 2, 3, 4, 5)))
    self.assertEqual((fs.n_prime, fs.n_doubleprime), (5, 0))

  def test_starfish_on_its_five_point_line(self):
    fs = frame_ordering(STARFISH, VFrame((3, 5, 7, 1, 2)))
    self.assertEqual((fs.n_prime, fs.n_doubleprime), (3, 2))
    self.assertEqual(fs.ordering[:5], (3, 5, 7, 1, 2))
    self.assertCountEqual(fs.ordering[8:], (8, 10))
    self.assertIn((1, 2, 3, 9, 10), fs.space.lines)

  def test_relabeling_keeps_isomorphism_type(self):
    fs = frame_ordering(STARFISH, VFrame((3, 5, 7, 1, 2)))
    self.assertEqual(fs.space.relabel(fs.ordering), STARFISH)


@unittest.skipUnless(SLOW_TESTS, 'Set INCIDENCE_WORKBENCH_SLOW_TESTS=1 to run.')
class TenPointFramesTest(absltest.TestCase):

  def test_every_superfiguration_has_v_frames(self):
    with ProcessPoolExecutor() as executor:
      superfigurations = list(
          enumerate_linear_spaces(10, SpaceFilter.SUPERFIGURATIONS, executor=executor))
    self.assertLen(superfigurations, 151)
    for s in superfigurations:
      validate_v_frame(s, find_v_frame(s))
      self.assertTrue(any(_frame_with_three_point_line(s, p) for p in s.points()), f'{s}')


def _frame_with_three_point_line(s: LinearSpace, p1: int) -> bool:
  lines = s.lines_through(p1)
  for first in lines:
    if len(first) != 3:
      continue
    for second in lines:
      if second == first:
        continue
      p2, p3 = [p for p in first if p != p1]
      p4, p5 = [p for p in second if p != p1][:2]
      if frame_ordering(s, VFrame((p1, p2, p3, p4, p5))).n_doubleprime == 0:
        return True
  return False


if __name__ == '__main__':
  absltest.main()
