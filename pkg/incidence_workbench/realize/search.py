"""Backtracking over point placements in P^2(F_q) with line propagation.

Points are placed in a fixed greedy order: at each step the unplaced point lying on the most full
lines that already hold two placed points goes next. A full line holding two distinct placed
images determines a line of the plane, and the next point must lie on every such line, so most
points have at most one candidate.
"""
from concurrent.futures import Executor
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from incidence_workbench.core.linearspace import Line, LinearSpace
from incidence_workbench.realize.projective import (ProjLine, ProjPoint, affine_chart,
                                                    incident, infinity_chart, join, plane,
                                                    points_on_line)


class Domain(Enum):
  PLANE = 'plane'
  # Points (1, y, z).
  AFFINE = 'affine'
  # Points (0, 1, w).
  INFINITY = 'infinity'


@dataclass(frozen=True)
class SearchProblem:
  space: LinearSpace
  q: int
  # (point, image) pairs placed before the search starts, in order.
  fixed: tuple[tuple[int, ProjPoint], ...]
  # domains[p - 1] is where point p may go; ignored for fixed points.
  domains: tuple[Domain, ...]
  strong: bool
  # Pairwise distinct images; implied by strong.
  distinct: bool = False

  def with_fixed(self, point: int, image: ProjPoint) -> 'SearchProblem':
    return SearchProblem(self.space, self.q, self.fixed + ((point, image),), self.domains,
                         self.strong, self.distinct)


class _RealizationSearch:

  def __init__(self, problem: SearchProblem) -> None:
    self._problem = problem
    self._q = problem.q
    s = problem.space
    self._space = s
    self._lines_of: list[list[Line]] = [[]] + [s.lines_through(p) for p in s.points()]
    self._images: dict[int, ProjPoint] = {}
    self._owners: dict[ProjPoint, int] = {}
    self._placed: list[int] = []

    self.feasible = True
    for point, image in problem.fixed:
      if point in self._images or not self._consistent(point, image) or \
         not self._admits(point, image):
        self.feasible = False
        break
      self._place(point, image)
    self._order = self._greedy_order()

  def _greedy_order(self) -> list[int]:
    ordered = set(self._images)
    remaining = [p for p in self._space.points() if p not in ordered]
    order: list[int] = []
    while remaining:

      def known_lines(p: int) -> int:
        return sum(1 for line in self._lines_of[p] if sum(1 for b in line if b in ordered) >= 2)

      best = max(remaining, key=lambda p: (known_lines(p), -p))
      order.append(best)
      ordered.add(best)
      remaining.remove(best)
    return order

  def _place(self, point: int, image: ProjPoint) -> None:
    self._images[point] = image
    self._owners.setdefault(image, point)
    self._placed.append(point)

  def _unplace(self, point: int) -> None:
    image = self._images.pop(point)
    if self._owners.get(image) == point:
      del self._owners[image]
    self._placed.pop()

  def _determined_lines(self, point: int) -> set[ProjLine]:
    lines = set()
    for line in self._lines_of[point]:
      images = sorted({self._images[b] for b in line if b in self._images})
      if len(images) >= 2:
        lines.add(join(images[0], images[1], self._q))
    return lines

  def _consistent(self, point: int, image: ProjPoint) -> bool:
    return all(incident(image, line, self._q) for line in self._determined_lines(point))

  def _strong_ok(self, point: int, image: ProjPoint) -> bool:
    """Image is new, and lies on a line with two placed images only if the space says so."""
    if image in self._owners:
      return False
    groups: dict[ProjLine, list[int]] = {}
    for other in self._placed:
      groups.setdefault(join(image, self._images[other], self._q), []).append(other)
    for group in groups.values():
      if len(group) >= 2:
        line = self._space.line_containing(point, group[0])
        if line is None or any(b not in line for b in group[1:]):
          return False
    return True

  def _in_domain(self, point: int, image: ProjPoint) -> bool:
    match self._problem.domains[point - 1]:
      case Domain.AFFINE:
        return image in affine_chart(self._q)
      case Domain.INFINITY:
        return image in infinity_chart(self._q)
    return True

  def candidates(self, point: int) -> Sequence[ProjPoint]:
    q = self._q
    lines = sorted(self._determined_lines(point))
    if not lines:
      match self._problem.domains[point - 1]:
        case Domain.AFFINE:
          return sorted(affine_chart(q))
        case Domain.INFINITY:
          return sorted(infinity_chart(q))
      return plane(q)
    if len(lines) == 1:
      return [p for p in points_on_line(lines[0], q) if self._in_domain(point, p)]

    meet = join(lines[0], lines[1], q)
    if all(incident(meet, line, q) for line in lines[2:]) and \
       self._in_domain(point, meet):
      return [meet]
    return []

  def _admits(self, point: int, image: ProjPoint) -> bool:
    if self._problem.strong:
      return self._strong_ok(point, image)
    return not self._problem.distinct or image not in self._owners

  def _admissible(self, point: int) -> Iterator[ProjPoint]:
    for image in self.candidates(point):
      if self._admits(point, image):
        yield image

  def first_free_point(self) -> int | None:
    return self._order[0] if self._order else None

  def count(self) -> int:
    if not self.feasible:
      return 0
    return self._count(0)

  def _count(self, depth: int) -> int:
    if depth == len(self._order):
      return 1
    point = self._order[depth]
    total = 0
    for image in self._admissible(point):
      self._place(point, image)
      total += self._count(depth + 1)
      self._unplace(point)
    return total

  def solutions(self) -> Iterator[tuple[ProjPoint, ...]]:
    if self.feasible:
      yield from self._solutions(0)

  def _solutions(self, depth: int) -> Iterator[tuple[ProjPoint, ...]]:
    if depth == len(self._order):
      yield tuple(self._images[p] for p in self._space.points())
      return
    point = self._order[depth]
    for image in list(self._admissible(point)):
      self._place(point, image)
      yield from self._solutions(depth + 1)
      self._unplace(point)


def _count_problem(problem: SearchProblem) -> int:
  return _RealizationSearch(problem).count()


def count_solutions(problem: SearchProblem, executor: Executor | None = None) -> int:
  """Number of placements; with an executor the first free point's branches run in parallel."""
  search = _RealizationSearch(problem)
  if executor is None or not search.feasible or (point := search.first_free_point()) is None:
    return search.count()
  branches = [problem.with_fixed(point, image) for image in search._admissible(point)]
  return sum(executor.map(_count_problem, branches))


def iterate_solutions(problem: SearchProblem) -> Iterator[tuple[ProjPoint, ...]]:
  """Placements as images of points 1..n."""
  return _RealizationSearch(problem).solutions()
