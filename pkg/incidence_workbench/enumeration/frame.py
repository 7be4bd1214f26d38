from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from incidence_workbench.core.linearspace import LinearSpace, is_collinear, is_superfiguration
from incidence_workbench.gb.framed import FramedSuperfiguration


@dataclass(frozen=True)
class VFrame:
  """Five points: p1 p2 p3 and p1 p4 p5 collinear, and p2..p5 a frame."""
  points: tuple[int, int, int, int, int]

  def __post_init__(self) -> None:
    if len(self.points) != 5 or len(set(self.points)) != 5:
      raise ValueError(f'A V-frame needs 5 distinct points. Got {self.points} instead.')


def is_combinatorial_frame(s: LinearSpace, points: Sequence[int]) -> bool:
  """Four distinct points, no three of them on a full line."""
  if len(points) != 4 or len(set(points)) != 4:
    return False
  return not any(is_collinear(s, triple) for triple in combinations(points, 3))


def combinatorial_frames(s: LinearSpace) -> Iterator[tuple[int, ...]]:
  for points in combinations(s.points(), 4):
    if is_combinatorial_frame(s, points):
      yield points


def validate_v_frame(s: LinearSpace, vf: VFrame) -> None:
  p1, p2, p3, p4, p5 = vf.points
  if not all(1 <= p <= s.n for p in vf.points):
    raise ValueError(f'V-frame {vf.points} has points outside [1, {s.n}].')
  if not is_collinear(s, (p1, p2, p3)):
    raise ValueError(f'Points {p1}, {p2}, {p3} of V-frame {vf.points} are not collinear in {s}.')
  if not is_collinear(s, (p1, p4, p5)):
    raise ValueError(f'Points {p1}, {p4}, {p5} of V-frame {vf.points} are not collinear in {s}.')
  if not is_combinatorial_frame(s, (p2, p3, p4, p5)):
    raise ValueError(f'Points {p2}, {p3}, {p4}, {p5} of V-frame {vf.points} are not a frame '
                     f'in {s}.')


def find_v_frame(s: LinearSpace) -> VFrame:
  """The first V-frame: the two first full lines through point 1, two smallest points of each."""
  if not is_superfiguration(s):
    raise ValueError(f'{s} is not a superfiguration.')

  first, second = s.lines_through(1)[:2]
  p2, p3 = [p for p in first if p != 1][:2]
  p4, p5 = [p for p in second if p != 1][:2]
  vf = VFrame((1, p2, p3, p4, p5))
  try:
    validate_v_frame(s, vf)
  except ValueError as e:
    raise AssertionError(f'Constructed V-frame {vf.points} is invalid.') from e
  return vf


def _orbit_key(points: tuple[int, ...]) -> tuple[int, ...]:
  p1, p2, p3, p4, p5 = points
  return (p1, *sorted((p2, p3)), *sorted((p4, p5)))


def _orbit(points: tuple[int, ...],
           automorphisms: Sequence[tuple[int, ...]]) -> set[tuple[int, ...]]:
  orbit, frontier = {_orbit_key(points)}, [points]
  while frontier:
    current = frontier.pop()
    for g in automorphisms:
      image = tuple(g[p - 1] for p in current)
      if (key := _orbit_key(image)) not in orbit:
        orbit.add(key)
        frontier.append(image)
  return orbit


def v_frames(s: LinearSpace, automorphisms: Sequence[tuple[int, ...]] = ()) -> Iterator[VFrame]:
  """Every V-frame of a superfiguration, one per orbit of the group `automorphisms` generate.

  Frames come by p1, then by the ordered pair of full lines through it, then by points, so the
  first one is find_v_frame's. Swapping p2 with p3, or p4 with p5, gives an isomorphic framed
  scheme, so only p2 < p3 and p4 < p5 are listed.
  """
  if not is_superfiguration(s):
    raise ValueError(f'{s} is not a superfiguration.')
  seen: set[tuple[int, ...]] = set()
  for p1 in s.points():
    for first, second in permutations(s.lines_through(p1), 2):
      for p2, p3 in combinations([p for p in first if p != p1], 2):
        for p4, p5 in combinations([p for p in second if p != p1], 2):
          points = (p1, p2, p3, p4, p5)
          if points in seen:
            continue
          seen |= _orbit(points, automorphisms)
          yield VFrame(points)


def frame_ordering(s: LinearSpace, vf: VFrame) -> FramedSuperfiguration:
  """Relabels s so that vf becomes 1..5 and the extra points of line p1 p2 p3 come last."""
  validate_v_frame(s, vf)
  p1, p2, _, _, _ = vf.points
  line = s.line_containing(p1, p2)
  extras = [p for p in line if p not in vf.points]
  middle = [p for p in s.points() if p not in vf.points and p not in extras]
  return FramedSuperfiguration(base=s,
                               ordering=vf.points + tuple(middle) + tuple(extras),
                               n_prime=len(middle),
                               n_doubleprime=len(extras))
