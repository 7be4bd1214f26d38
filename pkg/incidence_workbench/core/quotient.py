from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from sympy.utilities.iterables import multiset_partitions

from incidence_workbench.core.linearspace import CollinearityFamily, LinearSpace, closure


@dataclass(frozen=True)
class QuotientMap:
  source_n: int
  target_n: int
  # assignment[i - 1] is the image of point i.
  assignment: tuple[int, ...]

  def __post_init__(self) -> None:
    if len(self.assignment) != self.source_n:
      raise ValueError(f'Assignment {self.assignment} does not cover {self.source_n} points.')
    if set(self.assignment) != set(range(1, self.target_n + 1)):
      raise ValueError(f'Assignment {self.assignment} is not onto 1..{self.target_n}.')

  @staticmethod
  def identity(n: int) -> 'QuotientMap':
    return QuotientMap(n, n, tuple(range(1, n + 1)))

  def __call__(self, point: int) -> int:
    return self.assignment[point - 1]

  def then(self, other: 'QuotientMap') -> 'QuotientMap':
    """The composite other∘self."""
    if other.source_n != self.target_n:
      raise ValueError(f'Cannot compose a map onto {self.target_n} points '
                       f'with a map from {other.source_n} points.')
    return QuotientMap(self.source_n, other.target_n,
                       tuple(other(image) for image in self.assignment))


@dataclass(frozen=True)
class CoincidencePattern:
  pairs: frozenset[tuple[int, int]]

  def __post_init__(self) -> None:
    normalized = set()
    for i, j in self.pairs:
      if i == j:
        raise ValueError(f'Coincidence pair ({i}, {j}) repeats a point.')
      normalized.add((min(i, j), max(i, j)))
    object.__setattr__(self, 'pairs', frozenset(normalized))

  @staticmethod
  def of(*pairs: tuple[int, int]) -> 'CoincidencePattern':
    return CoincidencePattern(frozenset(pairs))


def quotient_family(family: CollinearityFamily, q: QuotientMap) -> CollinearityFamily:
  if q.source_n != family.n:
    raise ValueError(f'Quotient map from {q.source_n} points applied to {family.n} points.')
  return CollinearityFamily(q.target_n, tuple(tuple(q(p) for p in m) for m in family.members))


def quotient(s: LinearSpace, q: QuotientMap) -> LinearSpace:
  return closure(quotient_family(s.as_family(), q))


def coincidence_quotient(pattern: CoincidencePattern, n: int) -> QuotientMap:
  parent = list(range(n + 1))

  def find(point: int) -> int:
    while parent[point] != point:
      parent[point] = parent[parent[point]]
      point = parent[point]
    return point

  for i, j in pattern.pairs:
    if not (1 <= i <= n and 1 <= j <= n):
      raise ValueError(f'Coincidence pair ({i}, {j}) is out of range [1, {n}].')
    a, b = find(i), find(j)
    parent[max(a, b)] = min(a, b)

  labels: dict[int, int] = {}
  assignment = []
  for point in range(1, n + 1):
    root = find(point)
    if root not in labels:
      labels[root] = len(labels) + 1
    assignment.append(labels[root])
  return QuotientMap(n, len(labels), tuple(assignment))


def diagonal_strata(
    family: CollinearityFamily) -> Iterator[tuple[CoincidencePattern, QuotientMap, LinearSpace]]:
  """One stratum per set partition of the points: which points coincide, and the forced space."""
  # Distinct points, so every multiset partition is a set partition.
  for partition in multiset_partitions(list(range(1, family.n + 1))):
    pattern = CoincidencePattern(
        frozenset(pair for block in partition for pair in combinations(sorted(block), 2)))
    q = coincidence_quotient(pattern, family.n)
    yield pattern, q, closure(quotient_family(family, q))
