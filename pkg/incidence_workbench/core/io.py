from typing import Any

from incidence_workbench.core.linearspace import CollinearityFamily, LinearSpace
from incidence_workbench.util import get_int, get_int_lists, parse_payload


def line_set_from_payload(payload: dict[str, Any]) -> tuple[int, list[list[int]]]:
  """n and the lines as given, before any axiom is checked."""
  n = get_int(payload, 'n')
  assert n >= 1, f'Expected at least one point. Got n={n} instead.'
  return n, get_int_lists(payload, 'lines')


def family_from_payload(payload: dict[str, Any]) -> CollinearityFamily:
  n, lines = line_set_from_payload(payload)
  for line in lines:
    for point in line:
      assert 1 <= point <= n, f'Point {point} of line {line} is out of range [1, {n}].'
  return CollinearityFamily.of(n, lines)


def space_from_payload(payload: dict[str, Any]) -> LinearSpace:
  family = family_from_payload(payload)
  try:
    return LinearSpace(family.n, family.members)
  except ValueError as e:
    e.add_note(f'Payload {payload} is not a linear space; use closure to repair it.')
    raise


def parse_family(text: str) -> CollinearityFamily:
  return family_from_payload(parse_payload(text))


def parse_linear_space(text: str) -> LinearSpace:
  return space_from_payload(parse_payload(text))


def to_json(s: LinearSpace | CollinearityFamily) -> dict[str, Any]:
  lines = s.lines if isinstance(s, LinearSpace) else s.members
  return {'n': s.n, 'lines': [list(line) for line in lines]}
