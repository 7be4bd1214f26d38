"""Canonical labeling of linear spaces by partition refinement and backtracking.

Points and full lines form a bipartite incidence graph. An ordered partition of its vertices is
refined until every cell splits no further, then a point is individualized and the process
repeats until the points are discrete. Each leaf gives a labeling; the certificate is the least
encoding of the relabeled line set over all leaves. Automorphisms found along the way (two leaves
with equal encodings, or interchangeable points on no line or on a single common line) prune
equivalent branches.
"""
import json
from dataclasses import dataclass
from functools import cached_property

from incidence_workbench.core.linearspace import LinearSpace

Encoding = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalCertificate:
  value: bytes

  @staticmethod
  def of(n: int, encoding: Encoding) -> 'CanonicalCertificate':
    return CanonicalCertificate(json.dumps([n, encoding], separators=(',', ':')).encode())

  def hex(self) -> str:
    return self.value.hex()


@dataclass(frozen=True)
class CanonicalForm:
  certificate: CanonicalCertificate
  # relabeling[p - 1] is the canonical label of point p.
  relabeling: Permutation
  # Automorphisms of the input, each as image[p - 1] of point p.
  generators: tuple[Permutation, ...]
  source: LinearSpace

  @cached_property
  def space(self) -> LinearSpace:
    return self.source.relabel(self.relabeling)


class _Search:

  def __init__(self, s: LinearSpace) -> None:
    self._n = s.n
    self._lines = [tuple(p - 1 for p in line) for line in s.lines]
    self._size = self._n + len(self._lines)
    self._adjacency: list[list[int]] = [[] for _ in range(self._size)]
    for index, line in enumerate(self._lines):
      for point in line:
        self._adjacency[point].append(self._n + index)
        self._adjacency[self._n + index].append(point)

    # Points on no line, or only on one common line, can be swapped freely.
    self._twin_key: list[tuple[int, ...] | None] = [
        tuple(self._adjacency[p]) if len(self._adjacency[p]) <= 1 else None
        for p in range(self._n)
    ]

    self._first: tuple[Encoding, list[int], list[int]] | None = None
    self._best: tuple[Encoding, list[int], list[int]] | None = None
    self.automorphisms: list[Permutation] = []

  def run(self) -> tuple[Encoding, list[int]]:
    cells = [cell for cell in (list(range(self._n)), list(range(self._n, self._size))) if cell]
    self._search(self._refine(cells), [])
    assert self._best is not None
    return self._best[0], self._best[1]

  def twin_transpositions(self) -> list[Permutation]:
    transpositions = []
    last_by_key: dict[tuple[int, ...], int] = {}
    for point, key in enumerate(self._twin_key):
      if key is None:
        continue
      if key in last_by_key:
        image = list(range(self._n))
        image[point], image[last_by_key[key]] = last_by_key[key], point
        transpositions.append(tuple(image))
      last_by_key[key] = point
    return transpositions

  def _refine(self, cells: list[list[int]]) -> list[list[int]]:
    while True:
      cell_of = [0] * self._size
      for index, cell in enumerate(cells):
        for vertex in cell:
          cell_of[vertex] = index

      refined: list[list[int]] = []
      for cell in cells:
        if len(cell) == 1:
          refined.append(cell)
          continue
        groups: dict[tuple[int, ...], list[int]] = {}
        for vertex in cell:
          signature = tuple(sorted(cell_of[w] for w in self._adjacency[vertex]))
          groups.setdefault(signature, []).append(vertex)
        refined.extend(groups[signature] for signature in sorted(groups))

      if len(refined) == len(cells):
        return refined
      cells = refined

  @staticmethod
  def _individualize(cells: list[list[int]], vertex: int) -> list[list[int]]:
    result = []
    for cell in cells:
      if vertex in cell and len(cell) > 1:
        result.append([vertex])
        result.append([v for v in cell if v != vertex])
      else:
        result.append(cell)
    return result

  def _search(self, cells: list[list[int]], path: list[int]) -> int | None:
    """Returns the depth to backtrack to when an automorphism makes the current branch redundant."""
    target = next((cell for cell in cells if len(cell) > 1 and cell[0] < self._n), None)
    if target is None:
      return self._leaf(cells, path)

    depth = len(path)
    explored: list[int] = []
    for vertex in target:
      if explored and self._is_redundant(vertex, explored, path):
        continue
      explored.append(vertex)
      abort = self._search(self._refine(self._individualize(cells, vertex)), path + [vertex])
      if abort is not None and abort < depth:
        return abort
    return None

  def _is_redundant(self, vertex: int, explored: list[int], path: list[int]) -> bool:
    key = self._twin_key[vertex]
    if key is not None and any(self._twin_key[u] == key for u in explored):
      return True

    parent = list(range(self._n))

    def find(point: int) -> int:
      while parent[point] != point:
        parent[point] = parent[parent[point]]
        point = parent[point]
      return point

    for g in self.automorphisms:
      if all(g[p] == p for p in path):
        for point in range(self._n):
          a, b = find(point), find(g[point])
          if a != b:
            parent[max(a, b)] = min(a, b)
    root = find(vertex)
    return any(find(u) == root for u in explored)

  def _leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
    labeling = [0] * self._n
    position = 0
    for cell in cells:
      if cell[0] < self._n:
        labeling[cell[0]] = position
        position += 1
    encoding = tuple(sorted(tuple(sorted(labeling[p] for p in line)) for line in self._lines))

    if self._first is None:
      self._first = self._best = (encoding, labeling, path)
      return None

    assert self._best is not None
    for reference in (self._first, self._best):
      reference_encoding, reference_labeling, reference_path = reference
      if encoding != reference_encoding:
        continue
      inverse = [0] * self._n
      for point, label in enumerate(labeling):
        inverse[label] = point
      self.automorphisms.append(tuple(inverse[reference_labeling[p]] for p in range(self._n)))
      for depth, (a, b) in enumerate(zip(reference_path, path)):
        if a != b:
          return depth
      return None

    if encoding < self._best[0]:
      self._best = (encoding, labeling, path)
    return None


def canonical_form(s: LinearSpace) -> CanonicalForm:
  search = _Search(s)
  encoding, labeling = search.run()
  generators = [g for g in search.automorphisms + search.twin_transpositions()
                if any(image != point for point, image in enumerate(g))]
  return CanonicalForm(
      certificate=CanonicalCertificate.of(s.n, encoding),
      relabeling=tuple(label + 1 for label in labeling),
      generators=tuple(tuple(image + 1 for image in g) for g in generators),
      source=s,
  )


def are_isomorphic(a: LinearSpace, b: LinearSpace) -> tuple[bool, Permutation | None]:
  """Returns whether a and b are isomorphic, and a point map a -> b when they are."""
  if a.n != b.n or len(a.lines) != len(b.lines):
    return False, None
  form_a, form_b = canonical_form(a), canonical_form(b)
  if form_a.certificate != form_b.certificate:
    return False, None

  inverse_b = {label: point for point, label in enumerate(form_b.relabeling, start=1)}
  witness = tuple(inverse_b[label] for label in form_a.relabeling)
  if a.relabel(witness) != b:
    raise AssertionError(f'Witness {witness} does not map {a} onto {b}.')
  return True, witness


def automorphism_generators(s: LinearSpace) -> tuple[Permutation, ...]:
  """Automorphisms found while labeling s; they generate the group used to prune the search."""
  return canonical_form(s).generators
