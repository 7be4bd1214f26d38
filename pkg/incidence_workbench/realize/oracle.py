"""Realization counts by plain enumeration of all placements, for checking the search."""
import itertools
import math
from typing import Sequence

from absl import logging

from incidence_workbench import util
from incidence_workbench.core.linearspace import LinearSpace
from incidence_workbench.enumeration.frame import is_combinatorial_frame
from incidence_workbench.gb.framed import FRAME_COLUMNS, FramedSuperfiguration
from incidence_workbench.realize import flag
from incidence_workbench.realize.count import (CountMode, RealizationCount, first_frame,
                                               is_strong_realization, is_weak_realization)
from incidence_workbench.realize.projective import (STANDARD_FRAME, ProjPoint, affine_chart,
                                                    check_prime, infinity_chart, normalize,
                                                    pgl3_order, plane)


class OracleTooLarge(RuntimeError):
  pass


def _enumerate(s: LinearSpace, q: int, fixed: dict[int, ProjPoint],
               domains: dict[int, Sequence[ProjPoint]], strong: bool, cap: int) -> int:
  free = sorted(domains)
  if (size := math.prod(len(domains[p]) for p in free)) > cap:
    raise OracleTooLarge(f'Enumerating {size} placements of {s} over F_{q} exceeds the cap '
                         f'of {cap}.')
  logging.debug(f'Enumerating {size} placements of {s} over F_{q}.')

  check = is_strong_realization if strong else is_weak_realization
  images: list[ProjPoint] = [fixed.get(p, (0, 0, 0)) for p in s.points()]
  total = 0
  for choice in itertools.product(*(domains[p] for p in free)):
    for p, image in zip(free, choice):
      images[p - 1] = image
    if check(s, images, q):
      total += 1
  return total


def naive_count_oracle(s: LinearSpace | FramedSuperfiguration,
                       q: int,
                       mode: CountMode,
                       frame: Sequence[int] | None = None,
                       cap: int | None = None) -> RealizationCount:
  check_prime(q)
  cap = cap or util.flag_value(flag.ORACLE_CAP)

  if mode == CountMode.CHART:
    if not isinstance(s, FramedSuperfiguration):
      raise ValueError('Chart counts need a framed superfiguration.')
    fixed = {p: normalize(column, q) for p, column in enumerate(FRAME_COLUMNS, start=1)}
    domains: dict[int, Sequence[ProjPoint]] = {}
    for p in range(6, s.space.n + 1):
      chart = affine_chart(q) if p <= s.n_prime + 5 else infinity_chart(q)
      domains[p] = sorted(chart)
    return RealizationCount(q, mode, _enumerate(s.space, q, fixed, domains, False, cap))

  space = s.space if isinstance(s, FramedSuperfiguration) else s
  frame = frame or first_frame(space)
  if not all(1 <= p <= space.n for p in frame) or not is_combinatorial_frame(space, frame):
    raise ValueError(f'Points {tuple(frame)} are not a combinatorial frame of {space}.')
  fixed = dict(zip(frame, STANDARD_FRAME))
  domains = {p: plane(q) for p in space.points() if p not in fixed}
  strong = mode != CountMode.FRAMED_WEAK
  count = _enumerate(space, q, fixed, domains, strong, cap)
  if mode == CountMode.STRONG_TOTAL:
    count *= pgl3_order(q)
  return RealizationCount(q, mode, count)
