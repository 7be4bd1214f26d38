import sympy

from incidence_workbench.algebra.field import RATIONALS
from incidence_workbench.algebra.parse import to_sympy
from incidence_workbench.algebra.polynomial import Polynomial

_X = sympy.Symbol('x')


def as_univariate(f: Polynomial) -> sympy.Poly:
  """A univariate rational polynomial as a sympy Poly in x."""
  if len(f.ring.variables) != 1:
    raise ValueError(f'{f} is not univariate.')
  if f.ring.coefficients != RATIONALS:
    raise ValueError(f'{f} does not have rational coefficients.')
  expression = to_sympy(f).subs(sympy.Symbol(f.ring.variables[0]), _X)
  return sympy.Poly(expression, _X, domain='QQ')


def squarefree_part(f: sympy.Poly) -> sympy.Poly:
  return f.sqf_part().monic()


def rational_factors(f: sympy.Poly) -> list[sympy.Poly]:
  """Distinct monic irreducible factors over Q, by degree then coefficients."""
  _, factors = f.factor_list()
  monic = [factor.monic() for factor, _ in factors]
  return sorted(monic, key=lambda g: (g.degree(), [str(c) for c in g.all_coeffs()]))


def count_roots_mod(f: sympy.Poly, p: int) -> int:
  """Distinct roots in F_p, by direct search; the leading coefficient must be a unit mod p."""
  coefficients = [sympy.Rational(c) for c in f.all_coeffs()]
  residues = []
  for c in coefficients:
    if c.q % p == 0:
      raise ValueError(f'Coefficient {c} of {f.as_expr()} is not defined mod {p}.')
    residues.append(int(c.p) * pow(int(c.q), -1, p) % p)
  if residues[0] == 0:
    raise ValueError(f'Leading coefficient of {f.as_expr()} vanishes mod {p}.')

  count = 0
  for x in range(p):
    value = 0
    for c in residues:
      value = (value * x + c) % p
    count += value == 0
  return count


def generates_same_field(f: sympy.Poly, g: sympy.Poly) -> bool:
  """Whether two irreducible rational polynomials define isomorphic number fields.

  f has a root in K = Q[t]/(g) iff the norm Res_t(g(t), f(x - s*t)) has an irreducible factor of
  degree deg g, for any shift s making that norm squarefree.
  """
  if f.degree() != g.degree():
    return False
  if f.degree() == 1:
    return True

  t = sympy.Dummy('t')
  g_t = g.as_expr().subs(_X, t)
  for s in range(0, 32):
    shifted = f.as_expr().subs(_X, _X - s * t)
    norm = sympy.Poly(sympy.resultant(g_t, shifted, t), _X, domain='QQ')
    if sympy.gcd(norm, norm.diff(_X)).degree() > 0:
      continue
    return any(factor.degree() == g.degree() for factor, _ in norm.factor_list()[1])
  raise ArithmeticError(f'No squarefree norm found for {f.as_expr()} over {g.as_expr()}.')


def parse_univariate(text: str) -> sympy.Poly:
  """Parses a polynomial in one variable of any name, renaming it to x."""
  expression = sympy.sympify(text.replace('^', '**'))
  if len(symbols := expression.free_symbols) > 1:
    raise ValueError(f'"{text}" has more than one variable.')
  for symbol in symbols:
    expression = expression.subs(symbol, _X)
  return sympy.Poly(expression, _X, domain='QQ')
