import functools
import json
import pathlib
from dataclasses import dataclass
from enum import Enum
from typing import Any

from absl import logging

from incidence_workbench import util
from incidence_workbench.core.io import space_from_payload
from incidence_workbench.core.linearspace import LinearSpace
from incidence_workbench.enumeration.frame import VFrame, validate_v_frame

DATA_DIR = pathlib.Path(__file__).parent / 'data'


class Source(Enum):
  # Stated for this configuration in the literature.
  LITERATURE = 'literature'
  # Worked out independently, e.g. root counts by direct modular search.
  DERIVED = 'derived'
  # Recorded from a run of the pipeline itself; a regression value only.
  COMPUTED = 'computed'


@dataclass(frozen=True)
class Fact:
  value: Any
  source: Source


@dataclass(frozen=True)
class CatalogEntry:
  name: str
  description: str
  space: LinearSpace
  expected: dict[str, Fact]
  v_frame: VFrame | None = None

  def __post_init__(self) -> None:
    if self.v_frame is not None:
      validate_v_frame(self.space, self.v_frame)


def _fact_from_payload(payload: dict[str, Any]) -> Fact:
  assert 'value' in payload, f'Fact "{payload}" has no value.'
  source = util.get_str(payload, 'source')
  try:
    return Fact(payload['value'], Source(source))
  except ValueError as e:
    e.add_note(f'Expected one of {[s.value for s in Source]}.')
    raise


def entry_from_payload(name: str, payload: dict[str, Any]) -> CatalogEntry:
  expected = {fact: _fact_from_payload(util.get_dict(util.get_dict(payload, 'expected'), fact))
              for fact in util.get_dict(payload, 'expected')}
  points = util.get_int_list_or_none(payload, 'v_frame')
  return CatalogEntry(name=name,
                      description=util.get_str(payload, 'description'),
                      space=space_from_payload(payload),
                      expected=expected,
                      v_frame=None if points is None else VFrame(tuple(points)))


def entry_to_json(entry: CatalogEntry) -> dict[str, Any]:
  result = {
      'name': entry.name,
      'description': entry.description,
      'n': entry.space.n,
      'lines': [list(line) for line in entry.space.lines],
  }
  if entry.v_frame is not None:
    result['v_frame'] = list(entry.v_frame.points)
  result['expected'] = {fact: {'value': f.value, 'source': f.source.value}
                        for fact, f in entry.expected.items()}
  return result


def list_names() -> list[str]:
  return sorted(path.stem for path in DATA_DIR.glob('*.json'))


@functools.cache
def get(name: str) -> CatalogEntry:
  path = DATA_DIR / f'{name}.json'
  if not path.is_file():
    raise ValueError(f'Unknown catalog entry "{name}". Known entries: {", ".join(list_names())}.')
  logging.debug(f'Loading catalog entry {name} from {path}.')
  try:
    return entry_from_payload(name, util.parse_payload(path.read_text(encoding='utf-8')))
  except (json.decoder.JSONDecodeError, AssertionError, ValueError) as e:
    e.add_note(f'While loading catalog entry "{name}".')
    raise
