from concurrent.futures import Executor
from enum import Enum
from itertools import combinations
from typing import Iterator

from absl import logging

from incidence_workbench.core.linearspace import LinearSpace, is_superfiguration
from incidence_workbench.enumeration.canonical import (CanonicalCertificate, Permutation,
                                                       canonical_form)


class SpaceFilter(Enum):
  ALL = 'all'
  SUPERFIGURATIONS = 'superfigurations'


def _blocks(parent: LinearSpace) -> list[tuple[int, ...]]:
  """Full lines the new point may extend, then pairs the new point may complete to a line."""
  covered = {pair for line in parent.lines for pair in combinations(line, 2)}
  pairs = [pair for pair in combinations(parent.points(), 2) if pair not in covered]
  return list(parent.lines) + pairs


def _selections(masks: list[int]) -> list[tuple[int, ...]]:
  """All sets of pairwise disjoint blocks, as sorted index tuples."""
  found: list[tuple[int, ...]] = []

  def extend(start: int, used: int, chosen: tuple[int, ...]) -> None:
    found.append(chosen)
    for index in range(start, len(masks)):
      if masks[index] & used == 0:
        extend(index + 1, used | masks[index], chosen + (index,))

  extend(0, 0, ())
  return found


def _orbit_representatives(blocks: list[tuple[int, ...]], selections: list[tuple[int, ...]],
                           generators: tuple[Permutation, ...]) -> list[tuple[int, ...]]:
  block_index = {frozenset(block): index for index, block in enumerate(blocks)}
  images = [[block_index[frozenset(g[p - 1] for p in block)] for block in blocks]
            for g in generators]

  seen: set[tuple[int, ...]] = set()
  representatives = []
  for selection in selections:
    if selection in seen:
      continue
    representatives.append(selection)
    seen.add(selection)
    frontier = [selection]
    while frontier:
      current = frontier.pop()
      for image in images:
        moved = tuple(sorted(image[index] for index in current))
        if moved not in seen:
          seen.add(moved)
          frontier.append(moved)
  return representatives


def extensions(parent: LinearSpace) -> list[tuple[CanonicalCertificate, LinearSpace]]:
  """Canonical forms of every one-point extension of parent, one per orbit of added blocks."""
  generators = canonical_form(parent).generators
  blocks = _blocks(parent)
  masks = [sum(1 << p for p in block) for block in blocks]
  representatives = _orbit_representatives(blocks, _selections(masks), generators)

  new_point = parent.n + 1
  children: dict[CanonicalCertificate, LinearSpace] = {}
  for selection in representatives:
    chosen = set(selection)
    lines = [blocks[index] + (new_point,) for index in selection]
    lines += [line for index, line in enumerate(parent.lines) if index not in chosen]
    form = canonical_form(LinearSpace(new_point, tuple(lines)))
    if form.certificate not in children:
      children[form.certificate] = form.space
  return list(children.items())


def enumerate_linear_spaces(n: int,
                            space_filter: SpaceFilter = SpaceFilter.ALL,
                            executor: Executor | None = None) -> Iterator[LinearSpace]:
  """Yields one linear space per isomorphism class on n points, sorted by certificate."""
  if n < 1:
    raise ValueError(f'Expected at least one point. Got n={n} instead.')

  single = LinearSpace(1, ())
  level = {canonical_form(single).certificate: single}
  for size in range(2, n + 1):
    parents = [level[certificate] for certificate in sorted(level)]
    if executor is None:
      batches = map(extensions, parents)
    else:
      batches = executor.map(extensions, parents, chunksize=max(1, len(parents) // 64))

    level = {}
    for batch in batches:
      for certificate, child in batch:
        level.setdefault(certificate, child)
    logging.info(f'Found {len(level)} linear spaces on {size} points.')

  for certificate in sorted(level):
    s = level[certificate]
    if space_filter == SpaceFilter.SUPERFIGURATIONS and not is_superfiguration(s):
      continue
    yield s
