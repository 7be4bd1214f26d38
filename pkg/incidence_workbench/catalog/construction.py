from itertools import combinations

from incidence_workbench.core.linearspace import LinearSpace, induced_subspace

# Smallest linear spaces on 3 and 4 points, up to isomorphism, in increasing order.
_SMALL_SPACES = {
    (3, 1): (),
    (3, 2): ((1, 2, 3),),
    (4, 1): (),
    (4, 2): ((1, 2, 3),),
    (4, 3): ((1, 2, 3, 4),),
}


def small_space(n: int, index: int) -> LinearSpace:
  """S_{n,index}: the index-th linear space on n = 3 or 4 points."""
  if (lines := _SMALL_SPACES.get((n, index))) is None:
    raise ValueError(f'No small space S_{{{n},{index}}}; expected n in (3, 4) and '
                     f'index in 1..{n - 1}.')
  return LinearSpace(n, lines)


def modular_superfiguration(m: int = 11) -> LinearSpace:
  """Residues 0..m-1, labeled 1..m, with a line {i, j, k} whenever i + j + k = 0 mod m.

  Two residues i, j determine the third k = -i - j, so any two lines share at most one point.
  Pairs with k equal to i or j stay on 2-point lines.
  """
  if m < 3:
    raise ValueError(f'Expected a modulus of at least 3. Got {m} instead.')
  lines = [(i + 1, j + 1, k + 1) for i, j, k in combinations(range(m), 3) if (i + j + k) % m == 0]
  return LinearSpace(m, tuple(lines))


def modular_deletion(m: int, residue: int) -> LinearSpace:
  """modular_superfiguration(m) without the point of `residue`, relabeled 1..m-1 in order."""
  if not 0 <= residue < m:
    raise ValueError(f'Residue {residue} is out of range [0, {m - 1}].')
  return induced_subspace(modular_superfiguration(m), [p for p in range(1, m + 1)
                                                       if p != residue + 1])
