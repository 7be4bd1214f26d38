"""Points and lines of the projective plane over a prime field F_q."""
import functools
import itertools

import sympy

ProjPoint = tuple[int, int, int]
ProjLine = tuple[int, int, int]

# Images of the four frame points in a framed realization.
STANDARD_FRAME: tuple[ProjPoint, ...] = ((0, 0, 1), (0, 1, 0), (1, 1, 1), (1, 0, 0))


def check_prime(q: int) -> None:
  if not sympy.isprime(q):
    raise ValueError(f'Realizations are counted over prime fields only. Got q={q} instead.')


def normalize(v: tuple[int, int, int], q: int) -> ProjPoint:
  """Scales so that the first nonzero coordinate is 1."""
  for c in v:
    if c % q:
      inverse = pow(c, -1, q)
      return (v[0] * inverse % q, v[1] * inverse % q, v[2] * inverse % q)
  raise ValueError(f'{v} is the zero vector over F_{q}.')


def cross(a: tuple[int, int, int], b: tuple[int, int, int], q: int) -> tuple[int, int, int]:
  return ((a[1] * b[2] - a[2] * b[1]) % q,
          (a[2] * b[0] - a[0] * b[2]) % q,
          (a[0] * b[1] - a[1] * b[0]) % q)


def join(a: ProjPoint, b: ProjPoint, q: int) -> ProjLine:
  """The line through two distinct points; by duality also the meet of two distinct lines."""
  return normalize(cross(a, b, q), q)


def incident(point: ProjPoint, line: ProjLine, q: int) -> bool:
  return (point[0] * line[0] + point[1] * line[1] + point[2] * line[2]) % q == 0


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint, q: int) -> bool:
  return incident(c, cross(a, b, q), q)


@functools.cache
def plane(q: int) -> tuple[ProjPoint, ...]:
  points = [(1, y, z) for y in range(q) for z in range(q)]
  points += [(0, 1, w) for w in range(q)]
  points.append((0, 0, 1))
  return tuple(sorted(points))


@functools.cache
def affine_chart(q: int) -> frozenset[ProjPoint]:
  return frozenset((1, y, z) for y, z in itertools.product(range(q), repeat=2))


@functools.cache
def infinity_chart(q: int) -> frozenset[ProjPoint]:
  return frozenset((0, 1, w) for w in range(q))


@functools.cache
def points_on_line(line: ProjLine, q: int) -> tuple[ProjPoint, ...]:
  return tuple(p for p in plane(q) if incident(p, line, q))


def pgl3_order(q: int) -> int:
  return q**3 * (q**3 - 1) * (q**2 - 1)
