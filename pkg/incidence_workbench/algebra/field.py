from dataclasses import dataclass
from fractions import Fraction

import sympy

Scalar = Fraction | int


@dataclass(frozen=True)
class CoefficientRing:
  """Exact coefficients: Q, F_p, or Z (the last only for content extraction)."""

  @property
  def name(self) -> str:
    raise NotImplementedError

  @property
  def is_field(self) -> bool:
    return True

  @property
  def zero(self) -> Scalar:
    return self.normalize(0)

  @property
  def one(self) -> Scalar:
    return self.normalize(1)

  def normalize(self, value: Scalar) -> Scalar:
    raise NotImplementedError

  def inverse(self, value: Scalar) -> Scalar:
    raise NotImplementedError

  def from_fraction(self, value: Fraction) -> Scalar:
    raise NotImplementedError

  def parse(self, text: str) -> Scalar:
    return self.from_fraction(Fraction(text))

  def format(self, value: Scalar) -> str:
    return str(value)

  def is_negative(self, value: Scalar) -> bool:
    return value < 0

  def __str__(self) -> str:
    return self.name


@dataclass(frozen=True)
class RationalField(CoefficientRing):

  @property
  def name(self) -> str:
    return 'Q'

  def normalize(self, value: Scalar) -> Scalar:
    return Fraction(value)

  def inverse(self, value: Scalar) -> Scalar:
    if value == 0:
      raise ZeroDivisionError('Division by the zero rational.')
    return 1 / Fraction(value)

  def from_fraction(self, value: Fraction) -> Scalar:
    return value


@dataclass(frozen=True)
class IntegerRing(CoefficientRing):

  @property
  def name(self) -> str:
    return 'Z'

  @property
  def is_field(self) -> bool:
    return False

  def normalize(self, value: Scalar) -> Scalar:
    if isinstance(value, Fraction):
      if value.denominator != 1:
        raise ValueError(f'{value} is not an integer.')
      return value.numerator
    return int(value)

  def inverse(self, value: Scalar) -> Scalar:
    if value not in (1, -1):
      raise ValueError(f'{value} is not a unit in Z.')
    return value

  def from_fraction(self, value: Fraction) -> Scalar:
    return self.normalize(value)


@dataclass(frozen=True)
class PrimeField(CoefficientRing):
  p: int

  def __post_init__(self) -> None:
    if not sympy.isprime(self.p):
      raise ValueError(f'{self.p} is not prime.')

  @property
  def name(self) -> str:
    return f'Fp:{self.p}'

  def normalize(self, value: Scalar) -> Scalar:
    if isinstance(value, Fraction):
      return self.from_fraction(value)
    return value % self.p

  def inverse(self, value: Scalar) -> Scalar:
    if value % self.p == 0:
      raise ZeroDivisionError(f'Division by zero in F_{self.p}.')
    return pow(value, -1, self.p)

  def from_fraction(self, value: Fraction) -> Scalar:
    return value.numerator * self.inverse(value.denominator) % self.p

  def is_negative(self, value: Scalar) -> bool:
    return False


RATIONALS = RationalField()
INTEGERS = IntegerRing()


def coefficient_ring(name: str) -> CoefficientRing:
  if name == 'Q':
    return RATIONALS
  if name == 'Z':
    return INTEGERS
  if name.startswith('Fp:') and name[3:].isdigit():
    return PrimeField(int(name[3:]))
  raise ValueError(f'Unknown coefficient ring "{name}"; expected Q, Z, or Fp:<p>.')
