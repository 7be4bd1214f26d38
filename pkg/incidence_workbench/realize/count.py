from concurrent.futures import Executor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Sequence

from absl import logging

from incidence_workbench.core.linearspace import LinearSpace, is_collinear
from incidence_workbench.enumeration.frame import combinatorial_frames, is_combinatorial_frame
from incidence_workbench.gb.framed import FRAME_COLUMNS, FramedSuperfiguration
from incidence_workbench.realize.projective import (STANDARD_FRAME, ProjPoint, check_prime,
                                                    collinear, incident, join, normalize,
                                                    pgl3_order)
from incidence_workbench.realize.search import (Domain, SearchProblem, count_solutions,
                                                iterate_solutions)


class CountMode(Enum):
  # Points of the framed scheme: weak realizations with points 1..5 at the matrix columns.
  CHART = 'chart'
  FRAMED_WEAK = 'framed-weak'
  FRAMED_STRONG = 'framed-strong'
  STRONG_TOTAL = 'strong-total'


@dataclass(frozen=True)
class RealizationCount:
  q: int
  mode: CountMode
  count: int


def first_frame(s: LinearSpace) -> tuple[int, ...]:
  if (frame := next(combinatorial_frames(s), None)) is None:
    raise ValueError(f'{s} has no combinatorial frame.')
  return frame


def chart_problem(fs: FramedSuperfiguration, q: int, distinct: bool = False) -> SearchProblem:
  check_prime(q)
  fixed = tuple((p, normalize(column, q)) for p, column in enumerate(FRAME_COLUMNS, start=1))
  domains = (Domain.PLANE,) * 5 + (Domain.AFFINE,) * fs.n_prime + \
            (Domain.INFINITY,) * fs.n_doubleprime
  return SearchProblem(fs.space, q, fixed, domains, strong=False, distinct=distinct)


def framed_problem(s: LinearSpace, frame: Sequence[int], q: int, strong: bool) -> SearchProblem:
  check_prime(q)
  if not all(1 <= p <= s.n for p in frame) or not is_combinatorial_frame(s, frame):
    raise ValueError(f'Points {tuple(frame)} are not a combinatorial frame of {s}.')
  return SearchProblem(s, q, tuple(zip(frame, STANDARD_FRAME)), (Domain.PLANE,) * s.n, strong)


def count_chart_points(fs: FramedSuperfiguration,
                       q: int,
                       executor: Executor | None = None,
                       distinct: bool = False) -> RealizationCount:
  """Points of the framed scheme over F_q, i.e. its solutions (y, z, w).

  With `distinct`, only points whose n columns are pairwise distinct projective points count.
  """
  count = count_solutions(chart_problem(fs, q, distinct), executor)
  logging.debug(f'{count} chart points of {fs.space} over F_{q}.')
  return RealizationCount(q, CountMode.CHART, count)


def count_framed(s: LinearSpace,
                 frame: Sequence[int],
                 q: int,
                 strong: bool,
                 executor: Executor | None = None) -> RealizationCount:
  """Weak or strong realizations over F_q with the frame pinned to the standard frame."""
  count = count_solutions(framed_problem(s, frame, q, strong), executor)
  mode = CountMode.FRAMED_STRONG if strong else CountMode.FRAMED_WEAK
  logging.debug(f'{count} {mode.value} realizations of {s} over F_{q}.')
  return RealizationCount(q, mode, count)


def strong_total(s: LinearSpace,
                 q: int,
                 frame: Sequence[int] | None = None,
                 executor: Executor | None = None) -> RealizationCount:
  """All strong realizations over F_q; PGL_3 acts simply transitively on framed ones."""
  framed = count_framed(s, frame or first_frame(s), q, True, executor)
  return RealizationCount(q, CountMode.STRONG_TOTAL, framed.count * pgl3_order(q))


def count_realizations(s: LinearSpace | FramedSuperfiguration,
                       q: int,
                       mode: CountMode,
                       frame: Sequence[int] | None = None,
                       executor: Executor | None = None) -> RealizationCount:
  match mode:
    case CountMode.CHART:
      if not isinstance(s, FramedSuperfiguration):
        raise ValueError('Chart counts need a framed superfiguration.')
      return count_chart_points(s, q, executor)
    case CountMode.STRONG_TOTAL:
      return strong_total(_space(s), q, frame, executor)
  space = _space(s)
  return count_framed(space, frame or first_frame(space), q, mode == CountMode.FRAMED_STRONG,
                      executor)


def _space(s: LinearSpace | FramedSuperfiguration) -> LinearSpace:
  return s.space if isinstance(s, FramedSuperfiguration) else s


def characteristic_scan(s: LinearSpace,
                        primes: Sequence[int],
                        frame: Sequence[int] | None = None) -> dict[int, bool]:
  """Whether s has a strong realization over F_p, for each p."""
  frame = frame or first_frame(s)
  result = {}
  for p in primes:
    result[p] = count_framed(s, frame, p, strong=True).count > 0
    logging.info(f'{s} is {"" if result[p] else "not "}realizable over F_{p}.')
  return result


def iterate_realizations(s: LinearSpace,
                         q: int,
                         frame: Sequence[int] | None = None,
                         strong: bool = True) -> Iterator[tuple[ProjPoint, ...]]:
  """Framed realizations as tuples of images of points 1..n."""
  return iterate_solutions(framed_problem(s, frame or first_frame(s), q, strong))


def is_weak_realization(s: LinearSpace, images: Sequence[ProjPoint], q: int) -> bool:
  """Every full line of s maps into a line of the plane."""
  if len(images) != s.n:
    raise ValueError(f'Expected {s.n} images. Got {len(images)} instead.')
  for line in s.lines:
    distinct = sorted({images[p - 1] for p in line})
    if len(distinct) > 2:
      through = join(distinct[0], distinct[1], q)
      if not all(incident(image, through, q) for image in distinct[2:]):
        return False
  return True


def is_strong_realization(s: LinearSpace, images: Sequence[ProjPoint], q: int) -> bool:
  """Injective, and three images are collinear exactly when the points are collinear in s."""
  if len(images) != s.n:
    raise ValueError(f'Expected {s.n} images. Got {len(images)} instead.')
  if len(set(images)) != s.n:
    return False
  return all(collinear(*(images[p - 1] for p in triple), q) == is_collinear(s, triple)
             for triple in combinations(s.points(), 3))
