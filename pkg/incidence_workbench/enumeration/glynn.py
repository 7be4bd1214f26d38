from dataclasses import dataclass

from absl import logging

from incidence_workbench.core.linearspace import LinearSpace, induced_subspace


@dataclass(frozen=True)
class GlynnReductionStep:
  removed_point: int
  reduced: LinearSpace
  # Number of lines of `reduced` that the removed point extends; its position is confined to a
  # linear subspace of dimension 2 - fiber_codim_n.
  fiber_codim_n: int

  def __post_init__(self) -> None:
    assert 0 <= self.fiber_codim_n <= 2, \
           f'Point {self.removed_point} lies on {self.fiber_codim_n} full lines, expected at most 2.'

  def kept_points(self) -> list[int]:
    """Original labels of the reduced space's points, in order."""
    return [p for p in range(1, self.reduced.n + 2) if p != self.removed_point]

  def lift(self) -> LinearSpace:
    """The reduced space with the removed point put back on no full line."""
    kept = self.kept_points()
    return LinearSpace(self.reduced.n + 1,
                       tuple(tuple(kept[p - 1] for p in line) for line in self.reduced.lines))


def _count_extended_lines(s: LinearSpace, point: int, reduced: LinearSpace,
                          kept: list[int]) -> int:
  position = {p: index for index, p in enumerate(kept, start=1)}
  count = 0
  for line in s.lines_through(point):
    rest = sorted(position[p] for p in line if p != point)
    # Two leftover points span an implicit line of the reduced space.
    if len(rest) == 2 or tuple(rest) in reduced.lines:
      count += 1
  return count


def glynn_reduce(s: LinearSpace, point: int | None = None) -> GlynnReductionStep | None:
  """Removes a point on at most two full lines, or returns None when s is a superfiguration.

  Without an explicit point, the one on the fewest full lines is removed (smallest index first).
  """
  if s.n == 1:
    raise ValueError('A one-point linear space cannot be reduced.')

  if point is None:
    candidates = [p for p in s.points() if s.degree(p) <= 2]
    if not candidates:
      return None
    point = min(candidates, key=lambda p: (s.degree(p), p))
  elif not 1 <= point <= s.n:
    raise ValueError(f'Point {point} is out of range [1, {s.n}].')
  elif s.degree(point) > 2:
    raise ValueError(f'Point {point} lies on {s.degree(point)} full lines of {s}, '
                     'so it cannot be removed.')

  kept = [p for p in s.points() if p != point]
  reduced = induced_subspace(s, kept)
  return GlynnReductionStep(removed_point=point,
                            reduced=reduced,
                            fiber_codim_n=_count_extended_lines(s, point, reduced, kept))


def glynn_reduction_chain(s: LinearSpace) -> list[GlynnReductionStep]:
  """Reduces repeatedly until a superfiguration or a single point remains."""
  steps: list[GlynnReductionStep] = []
  while s.n > 1 and (step := glynn_reduce(s)) is not None:
    logging.info(f'Removed point {step.removed_point} of {s} (N={step.fiber_codim_n}), '
                 f'leaving {step.reduced}.')
    steps.append(step)
    s = step.reduced
  return steps
