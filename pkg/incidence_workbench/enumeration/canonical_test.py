import random

import networkx as nx
from absl.testing import absltest, parameterized

from incidence_workbench.core.linearspace import LinearSpace
from incidence_workbench.core.linearspace_test import DESARGUES, FANO, all_labeled_spaces
from incidence_workbench.enumeration.canonical import (are_isomorphic, automorphism_generators,
                                                       canonical_form)
from incidence_workbench.enumeration.generate import enumerate_linear_spaces

MOBIUS_KANTOR = LinearSpace.of(8, [[1, 2, 3], [1, 4, 5], [5, 6, 7], [1, 7, 8], [3, 5, 8],
                                   [2, 6, 8], [3, 4, 6], [2, 4, 7]])


def shuffled(s: LinearSpace, rng: random.Random) -> LinearSpace:
  images = list(s.points())
  rng.shuffle(images)
  return s.relabel(tuple(images))


def incidence_graph(s: LinearSpace) -> nx.Graph:
  graph = nx.Graph()
  graph.add_nodes_from((('p', p) for p in s.points()), side='point')
  graph.add_nodes_from((('l', line) for line in s.lines), side='line')
  graph.add_edges_from((('p', p), ('l', line)) for line in s.lines for p in line)
  return graph


def nx_isomorphic(a: LinearSpace, b: LinearSpace) -> bool:
  return nx.is_isomorphic(incidence_graph(a), incidence_graph(b),
                          node_match=lambda x, y: x['side'] == y['side'])


class CanonicalFormTest(parameterized.TestCase):

  def test_fano_certificate_is_relabeling_invariant(self):
    rng = random.Random(1)
    expected = canonical_form(FANO).certificate
    for _ in range(100):
      self.assertEqual(canonical_form(shuffled(FANO, rng)).certificate, expected)

  def test_certificate_invariance_on_random_spaces(self):
    rng = random.Random(2)
    spaces = [s for n in range(1, 9) for s in enumerate_linear_spaces(n)]
    for _ in range(1000):
      s = rng.choice(spaces)
      self.assertEqual(canonical_form(shuffled(s, rng)).certificate, canonical_form(s).certificate)

  def test_relabeling_produces_canonical_space(self):
    rng = random.Random(3)
    form = canonical_form(DESARGUES)
    for _ in range(20):
      self.assertEqual(canonical_form(shuffled(DESARGUES, rng)).space, form.space)

  @parameterized.parameters(FANO, MOBIUS_KANTOR, DESARGUES)
  def test_generators_are_automorphisms(self, s):
    for g in automorphism_generators(s):
      self.assertEqual(s.relabel(g), s)

  def test_isolated_points_are_interchangeable(self):
    generators = automorphism_generators(LinearSpace.of(5, [[1, 2, 3]]))
    self.assertIn((1, 2, 3, 5, 4), generators)


class AreIsomorphicTest(absltest.TestCase):

  def test_shuffled_copy_has_verified_witness(self):
    rng = random.Random(4)
    other = shuffled(MOBIUS_KANTOR, rng)
    isomorphic, witness = are_isomorphic(MOBIUS_KANTOR, other)
    self.assertTrue(isomorphic)
    self.assertEqual(MOBIUS_KANTOR.relabel(witness), other)

  def test_different_sizes(self):
    self.assertEqual(are_isomorphic(FANO, MOBIUS_KANTOR), (False, None))

  def test_same_size_different_structure(self):
    a = LinearSpace.of(6, [[1, 2, 3], [4, 5, 6]])
    b = LinearSpace.of(6, [[1, 2, 3], [3, 4, 5]])
    self.assertFalse(are_isomorphic(a, b)[0])

  def test_agrees_with_networkx(self):
    spaces = [s for n in range(1, 6) for s in all_labeled_spaces(n)]
    rng = random.Random(5)
    for _ in range(400):
      a, b = rng.choice(spaces), rng.choice(spaces)
      if a.n != b.n:
        continue
      self.assertEqual(are_isomorphic(a, b)[0], nx_isomorphic(a, b), f'{a} vs {b}')

  def test_shuffled_classes_match_networkx(self):
    rng = random.Random(6)
    classes = list(enumerate_linear_spaces(6))
    for _ in range(200):
      a = rng.choice(classes)
      b = shuffled(rng.choice(classes), rng)
      self.assertEqual(are_isomorphic(a, b)[0], nx_isomorphic(a, b))


if __name__ == '__main__':
  absltest.main()
