from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from absl import logging

from incidence_workbench.algebra.field import RATIONALS, CoefficientRing
from incidence_workbench.algebra.polynomial import Polynomial, PolynomialRing, det3
from incidence_workbench.core.linearspace import LinearSpace, is_collinear
from incidence_workbench.gb.ideal import IdealPresentation

Column = tuple[Polynomial, Polynomial, Polynomial]

# Images of the framed points 1..5 in the plane.
FRAME_COLUMNS = ((0, 1, 1), (0, 0, 1), (0, 1, 0), (1, 1, 1), (1, 0, 0))


@dataclass(frozen=True)
class FramedSuperfiguration:
  """A linear space relabeled so that its frame sits at points 1..5.

  Points 6..n'+5 are placed in the affine chart (1, y, z); the remaining n'' points are the extra
  points of the full line through 1, 2, 3 and are placed at (0, 1, w).
  """
  base: LinearSpace
  # ordering[i - 1] is the point of `base` that receives label i.
  ordering: tuple[int, ...]
  n_prime: int
  n_doubleprime: int

  def __post_init__(self) -> None:
    if sorted(self.ordering) != list(self.base.points()):
      raise ValueError(f'Ordering {self.ordering} is not a permutation of 1..{self.base.n}.')
    if self.n_prime + self.n_doubleprime + 5 != self.base.n:
      raise ValueError(f'n\'={self.n_prime} and n\'\'={self.n_doubleprime} do not add up to '
                       f'{self.base.n} - 5.')

    s = self.space
    line = s.line_containing(1, 2)
    if line is None or 3 not in line:
      raise ValueError(f'Points 1, 2, 3 of {s} are not on a full line.')
    if not is_collinear(s, (1, 4, 5)):
      raise ValueError(f'Points 1, 4, 5 of {s} are not collinear.')
    for triple in combinations((2, 3, 4, 5), 3):
      if is_collinear(s, triple):
        raise ValueError(f'Points {triple} of {s} are collinear, so 2, 3, 4, 5 is not a frame.')
    if sorted(line) != [1, 2, 3] + list(range(self.n_prime + 6, s.n + 1)):
      raise ValueError(f'The extra points of line {line} are not labeled last in {s}.')

  @cached_property
  def space(self) -> LinearSpace:
    return self.base.relabel({point: label for label, point in enumerate(self.ordering, start=1)})

  def variables(self) -> tuple[str, ...]:
    return tuple([f'y{j}' for j in range(1, self.n_prime + 1)] +
                 [f'z{j}' for j in range(1, self.n_prime + 1)] +
                 [f'w{j}' for j in range(1, self.n_doubleprime + 1)])

  def ring(self, coefficients: CoefficientRing = RATIONALS) -> PolynomialRing:
    return PolynomialRing(coefficients, self.variables())


def build_matrix(fs: FramedSuperfiguration,
                 coefficients: CoefficientRing = RATIONALS) -> list[Column]:
  """The 3 x n matrix of the framed scheme, as its n columns."""
  ring = fs.ring(coefficients)
  columns: list[Column] = [tuple(ring.constant(c) for c in column) for column in FRAME_COLUMNS]
  for j in range(1, fs.n_prime + 1):
    columns.append((ring.one(), ring.gen(f'y{j}'), ring.gen(f'z{j}')))
  for j in range(1, fs.n_doubleprime + 1):
    columns.append((ring.zero(), ring.one(), ring.gen(f'w{j}')))
  return columns


def collinear_triples(fs: FramedSuperfiguration) -> list[tuple[int, int, int]]:
  return sorted({triple for line in fs.space.lines for triple in combinations(line, 3)})


def build_ideal(fs: FramedSuperfiguration,
                coefficients: CoefficientRing = RATIONALS) -> IdealPresentation:
  """One determinant per collinear triple; identically zero ones are dropped."""
  columns = build_matrix(fs, coefficients)
  triples = collinear_triples(fs)
  generators = []
  for triple in triples:
    if d := det3([columns[p - 1] for p in triple]):
      generators.append(d)
    else:
      logging.debug(f'Determinant of columns {triple} vanishes identically.')
  logging.info(f'Built {len(triples)} determinants for {fs.space}, '
               f'dropped {len(triples) - len(generators)} trivial ones.')
  return IdealPresentation(fs.ring(coefficients), tuple(generators))


def strong_locus_determinants(
    fs: FramedSuperfiguration,
    coefficients: CoefficientRing = RATIONALS) -> list[tuple[tuple[int, int, int], Polynomial]]:
  """Determinants of the triples on no full line; a strong realization keeps all of them nonzero.

  Two coincident points make every triple through both vanish, so these also force distinctness.
  Identically zero determinants are kept: they leave no strong realization in the chart.
  """
  columns = build_matrix(fs, coefficients)
  s = fs.space
  return [(triple, det3([columns[p - 1] for p in triple]))
          for triple in combinations(s.points(), 3) if not is_collinear(s, triple)]
