import json
import os
from typing import Any, TypeVar

from absl import flags

_T = TypeVar('_T')


def parse_payload(text: str | bytes | bytearray) -> dict[str, Any]:
  assert isinstance(text, (str, bytes, bytearray)), \
         f'Payload "{text!r}" is not of type str, bytes, or bytearray. Got {type(text)} instead.'

  try:
    payload = json.loads(text)
  except json.decoder.JSONDecodeError as e:
    e.add_note(f'Unable to decode JSON payload "{text!r}".')
    raise

  assert isinstance(payload, dict), \
         f'Payload "{payload}" is not a dictionary. Got {type(payload)} instead.'

  for key in payload.keys():
    assert isinstance(key, str), f'Key "{key}" is not a string. Got {type(key)} instead.'

  return payload


def read_payload(source: str) -> dict[str, Any]:
  """Parses inline JSON, or the contents of the file at `source`."""
  if source.lstrip().startswith('{'):
    return parse_payload(source)
  with open(source, encoding='utf-8') as f:
    try:
      return parse_payload(f.read())
    except (json.decoder.JSONDecodeError, AssertionError) as e:
      e.add_note(f'While reading "{source}".')
      raise


def _get_value(payload: dict[str, Any], key: str, expected_type: Any):
  value = payload.get(key)
  assert value is not None, f'Value for key "{key}" is None.'
  assert isinstance(value, expected_type), \
         f'Value "{value}" of key "{key}" is not of type {expected_type}. ' \
         f'Got {type(value)} instead.'
  return value


def get_int(payload: dict[str, Any], key: str) -> int:
  value = _get_value(payload, key, int)
  assert not isinstance(value, bool), f'Value "{value}" of key "{key}" is a bool, not an int.'
  return int(value)


def get_str(payload: dict[str, Any], key: str) -> str:
  return str(_get_value(payload, key, str))


def get_dict(payload: dict[str, Any], key: str) -> dict[str, Any]:
  return dict(_get_value(payload, key, dict))


def get_str_list(payload: dict[str, Any], key: str) -> list[str]:
  values = _get_value(payload, key, list)
  for value in values:
    assert isinstance(value, str), \
           f'Element "{value}" of key "{key}" is not a string. Got {type(value)} instead.'
  return [str(value) for value in values]


def get_int_list(payload: dict[str, Any], key: str) -> list[int]:
  values = _get_value(payload, key, list)
  for value in values:
    assert isinstance(value, int) and not isinstance(value, bool), \
           f'Element "{value}" of key "{key}" is not an int.'
  return [int(value) for value in values]


def get_int_list_or_none(payload: dict[str, Any], key: str) -> list[int] | None:
  if _get_value_or_none(payload, key, list) is None:
    return None
  return get_int_list(payload, key)


def get_int_lists(payload: dict[str, Any], key: str) -> list[list[int]]:
  values = _get_value(payload, key, list)
  result: list[list[int]] = []
  for value in values:
    assert isinstance(value, list), \
           f'Element "{value}" of key "{key}" is not a list. Got {type(value)} instead.'
    for element in value:
      assert isinstance(element, int) and not isinstance(element, bool), \
             f'Element "{element}" of "{value}" in key "{key}" is not an int.'
    result.append([int(element) for element in value])
  return result


def _get_value_or_none(payload: dict[str, Any], key: str, expected_type: Any):
  value = payload.get(key)
  if value is None:
    return None

  assert isinstance(value, expected_type), \
         f'Value "{value}" of key "{key}" is not of type {expected_type}. ' \
         f'Got {type(value)} instead.'
  return value


def flag_value(holder: flags.FlagHolder[_T]) -> _T:
  """Value of a flag, or its default when flags have not been parsed (library and test use)."""
  if flags.FLAGS.is_parsed():
    return holder.value
  return holder.default


def cpu_count() -> int:
  return os.cpu_count() or 1
