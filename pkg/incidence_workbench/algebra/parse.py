from fractions import Fraction
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from incidence_workbench.algebra.order import DEGREVLEX, Monomial, MonomialOrder
from incidence_workbench.algebra.polynomial import Polynomial, PolynomialRing

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _format_monomial(ring: PolynomialRing, monomial: Monomial) -> str:
  factors = []
  for name, exponent in zip(ring.variables, monomial):
    if exponent == 1:
      factors.append(name)
    elif exponent > 1:
      factors.append(f'{name}^{exponent}')
  return '*'.join(factors)


def format_polynomial(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
  """Renders "c*y1^2*z3 + ..." with terms in decreasing order."""
  coefficients = f.ring.coefficients
  pieces: list[str] = []
  for index, (monomial, coefficient) in enumerate(f.sorted_terms(order)):
    negative = coefficients.is_negative(coefficient)
    magnitude = -coefficient if negative else coefficient
    body = _format_monomial(f.ring, monomial)
    if not body:
      text = coefficients.format(magnitude)
    elif magnitude == 1:
      text = body
    else:
      text = f'{coefficients.format(magnitude)}*{body}'

    if index == 0:
      pieces.append(f'-{text}' if negative else text)
    else:
      pieces.append(f' - {text}' if negative else f' + {text}')
  return ''.join(pieces) or '0'


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
  symbols = {name: sympy.Symbol(name) for name in ring.variables}
  try:
    expression = parse_expr(text, local_dict=symbols, transformations=_TRANSFORMATIONS)
  except (SyntaxError, TokenError, TypeError) as e:
    raise ValueError(f'Unable to parse polynomial "{text}".') from e

  if not isinstance(expression, sympy.Expr):
    raise ValueError(f'"{text}" is not a polynomial expression.')
  if unknown := expression.free_symbols - set(symbols.values()):
    raise ValueError(f'Polynomial "{text}" uses unknown variables {sorted(map(str, unknown))}.')

  if not ring.variables:
    terms = [((), expression)]
  else:
    try:
      terms = sympy.Poly(expression, *symbols.values()).terms()
    except sympy.PolynomialError as e:
      raise ValueError(f'"{text}" is not a polynomial in {ring.variables}.') from e

  result: dict[Monomial, Fraction | int] = {}
  for monomial, coefficient in terms:
    if not coefficient.is_Rational:
      raise ValueError(f'Coefficient {coefficient} of "{text}" is not rational.')
    value = Fraction(int(coefficient.p), int(coefficient.q))
    result[tuple(monomial)] = ring.coefficients.from_fraction(value)
  return Polynomial(ring, result)


def to_sympy(f: Polynomial) -> sympy.Expr:
  symbols = [sympy.Symbol(name) for name in f.ring.variables]
  expression = sympy.Integer(0)
  for monomial, coefficient in f.terms.items():
    term = sympy.Rational(coefficient.numerator, coefficient.denominator) \
           if isinstance(coefficient, Fraction) else sympy.Integer(coefficient)
    for symbol, exponent in zip(symbols, monomial):
      term *= symbol**exponent
    expression += term
  return expression
