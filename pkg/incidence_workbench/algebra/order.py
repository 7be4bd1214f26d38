from dataclasses import dataclass
from enum import Enum

Monomial = tuple[int, ...]


class OrderKind(Enum):
  DEGREVLEX = 'degrevlex'
  LEX = 'lex'
  BLOCK = 'block'


def _degrevlex_key(exponents: Monomial) -> tuple:
  return (sum(exponents), tuple(-e for e in reversed(exponents)))


@dataclass(frozen=True)
class MonomialOrder:
  """Larger key means larger monomial; the first variable is the largest."""
  kind: OrderKind = OrderKind.DEGREVLEX
  # Number of leading variables eliminated by a block order.
  block_size: int = 0

  def __post_init__(self) -> None:
    if self.kind == OrderKind.BLOCK and self.block_size < 1:
      raise ValueError(f'A block order needs a positive block size. Got {self.block_size}.')

  def key(self, exponents: Monomial) -> tuple:
    match self.kind:
      case OrderKind.DEGREVLEX:
        return _degrevlex_key(exponents)
      case OrderKind.LEX:
        return exponents
      case OrderKind.BLOCK:
        head, tail = exponents[:self.block_size], exponents[self.block_size:]
        return (_degrevlex_key(head), _degrevlex_key(tail))
    raise ValueError(f'Unknown order {self.kind}.')

  @property
  def name(self) -> str:
    if self.kind == OrderKind.BLOCK:
      return f'block:{self.block_size}'
    return self.kind.value

  @staticmethod
  def parse(name: str) -> 'MonomialOrder':
    if name.startswith('block:') and name[6:].isdigit():
      return MonomialOrder(OrderKind.BLOCK, int(name[6:]))
    try:
      return MonomialOrder(OrderKind(name))
    except ValueError as e:
      e.add_note(f'Expected degrevlex, lex, or block:<k>. Got "{name}".')
      raise


DEGREVLEX = MonomialOrder(OrderKind.DEGREVLEX)
LEX = MonomialOrder(OrderKind.LEX)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
  return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
  return all(x <= y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
  return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
  return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
  return all(x == 0 or y == 0 for x, y in zip(a, b))
