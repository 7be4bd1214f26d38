from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

Line = tuple[int, ...]


def _normalize_subsets(subsets: Iterable[Iterable[int]]) -> tuple[Line, ...]:
  return tuple(sorted({tuple(sorted(set(subset))) for subset in subsets}))


def _check_range(n: int, points: Iterable[int]) -> None:
  for point in points:
    if not 1 <= point <= n:
      raise ValueError(f'Point {point} is out of range [1, {n}].')


@dataclass(frozen=True)
class CollinearityFamily:
  """A set of subsets of {1..n} declared collinear; the input to closure."""
  n: int
  members: tuple[Line, ...]

  def __post_init__(self) -> None:
    if self.n < 1:
      raise ValueError(f'A family needs at least one point, got n={self.n}.')
    members = _normalize_subsets(self.members)
    for member in members:
      _check_range(self.n, member)
    object.__setattr__(self, 'members', members)

  @staticmethod
  def of(n: int, members: Iterable[Iterable[int]]) -> 'CollinearityFamily':
    return CollinearityFamily(n, tuple(tuple(member) for member in members))

  def __contains__(self, subset: Iterable[int]) -> bool:
    return tuple(sorted(set(subset))) in self.members


@dataclass(frozen=True)
class LinearSpace:
  """n points plus the full lines (3 or more points); 2-point lines are implicit."""
  n: int
  lines: tuple[Line, ...]

  def __post_init__(self) -> None:
    if self.n < 1:
      raise ValueError(f'A linear space needs at least one point, got n={self.n}.')
    lines = _normalize_subsets(self.lines)
    for line in lines:
      _check_range(self.n, line)
      if len(line) < 3:
        raise ValueError(f'Full line {line} has fewer than 3 points.')
    for a, b in combinations(lines, 2):
      if len(set(a) & set(b)) > 1:
        raise ValueError(f'Lines {a} and {b} share more than one point.')
    object.__setattr__(self, 'lines', lines)

  @staticmethod
  def of(n: int, lines: Iterable[Iterable[int]]) -> 'LinearSpace':
    return LinearSpace(n, tuple(tuple(line) for line in lines))

  def as_family(self) -> CollinearityFamily:
    return CollinearityFamily(self.n, self.lines)

  def points(self) -> range:
    return range(1, self.n + 1)

  def lines_through(self, point: int) -> list[Line]:
    return [line for line in self.lines if point in line]

  def degree(self, point: int) -> int:
    return sum(1 for line in self.lines if point in line)

  def line_containing(self, a: int, b: int) -> Line | None:
    """The full line through two distinct points, or None when they span a 2-point line."""
    for line in self.lines:
      if a in line and b in line:
        return line
    return None

  def relabel(self, mapping: dict[int, int] | tuple[int, ...]) -> 'LinearSpace':
    """Applies old label -> new label; a tuple is indexed by old label - 1."""
    if isinstance(mapping, tuple):
      mapping = {old: new for old, new in enumerate(mapping, start=1)}
    if sorted(mapping.values()) != list(self.points()) or sorted(mapping) != list(self.points()):
      raise ValueError(f'Relabeling {mapping} is not a permutation of 1..{self.n}.')
    return LinearSpace(self.n, tuple(tuple(mapping[p] for p in line) for line in self.lines))

  def __str__(self) -> str:
    return f'({self.n}, {[list(line) for line in self.lines]})'


class Axiom(Enum):
  # Every line is a subset of the point set {1..n}.
  LINES_IN_POINT_SET = 1
  # Any two distinct points lie on exactly one line.
  UNIQUE_LINE = 2
  # Every line has at least two points.
  LINE_SIZE = 3


@dataclass(frozen=True)
class ValidationResult:
  valid: bool
  violated_axiom: Axiom | None = None
  witness: Line = ()


def _maximal(members: Iterable[frozenset[int]]) -> list[frozenset[int]]:
  members = sorted(set(members), key=lambda m: (-len(m), sorted(m)))
  kept: list[frozenset[int]] = []
  for member in members:
    if not any(member <= other for other in kept):
      kept.append(member)
  return kept


def validate_line_set(n: int, lines: Iterable[Iterable[int]]) -> ValidationResult:
  """Checks a raw line set on {1..n}, reporting the lowest-numbered failing axiom.

  2-point lines may be omitted, so a pair of points lying on no given line is fine.
  """
  lines = [tuple(line) for line in lines]
  for line in lines:
    if any(not 1 <= point <= n for point in line):
      return ValidationResult(False, Axiom.LINES_IN_POINT_SET, line)
  owners: dict[tuple[int, int], Line] = {}
  for line in _normalize_subsets(lines):
    for pair in combinations(line, 2):
      if pair in owners:
        return ValidationResult(False, Axiom.UNIQUE_LINE, pair)
      owners[pair] = line
  for line in lines:
    if len(set(line)) < 2:
      return ValidationResult(False, Axiom.LINE_SIZE, tuple(sorted(set(line))))
  return ValidationResult(True)


def validate_linear_space(family: CollinearityFamily) -> ValidationResult:
  """Validates the family closed downward together with all pairs.

  Its lines are the maximal members with 3 or more points, so only UNIQUE_LINE can fail.
  """
  maximal = _maximal(frozenset(member) for member in family.members if len(member) >= 3)
  return validate_line_set(family.n, (sorted(member) for member in maximal))


def closure(family: CollinearityFamily) -> LinearSpace:
  lines = _maximal(frozenset(member) for member in family.members if len(member) >= 3)
  merged = True
  while merged:
    merged = False
    for a, b in combinations(lines, 2):
      if len(a & b) >= 2:
        lines = _maximal([line for line in lines if line not in (a, b)] + [a | b])
        merged = True
        break
  return LinearSpace(family.n, tuple(tuple(line) for line in lines))


def is_collinear(s: LinearSpace, subset: Iterable[int]) -> bool:
  subset = set(subset)
  _check_range(s.n, subset)
  if len(subset) <= 2:
    return True
  return any(subset <= set(line) for line in s.lines)


def leq(a: LinearSpace, b: LinearSpace) -> bool:
  """True iff every collinear subset of a is collinear in b."""
  if a.n != b.n:
    raise ValueError(f'Cannot compare linear spaces on {a.n} and {b.n} points.')
  return all(is_collinear(b, line) for line in a.lines)


def induced_subspace(s: LinearSpace, keep: Iterable[int]) -> LinearSpace:
  keep = sorted(set(keep))
  if not keep:
    raise ValueError('Cannot induce a subspace on an empty point set.')
  _check_range(s.n, keep)
  position = {point: index for index, point in enumerate(keep, start=1)}
  lines = []
  for line in s.lines:
    if len(restricted := [position[p] for p in line if p in position]) >= 3:
      lines.append(tuple(restricted))
  return LinearSpace(len(keep), tuple(lines))


def is_superfiguration(s: LinearSpace) -> bool:
  return all(s.degree(point) >= 3 for point in s.points())


def is_configuration(s: LinearSpace) -> bool:
  return all(len(line) == 3 for line in s.lines) and \
         all(s.degree(point) == 3 for point in s.points())
