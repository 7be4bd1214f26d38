"""Subcommands of the incidence-workbench binary.

Every subcommand reads its inputs from flags and positional arguments and returns a
CommandResult. Streams (enumerate, census) are written as one JSON document per line, everything
else as a single JSON object. Exit codes: 1 for a failed check, 2 for malformed input, 3 when a
computation exceeds its budget.
"""
import asyncio
import json
import sys
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Awaitable, Callable

from absl import app, logging

from incidence_workbench import util
from incidence_workbench.algebra.field import RATIONALS, coefficient_ring
from incidence_workbench.algebra.parse import format_polynomial
from incidence_workbench.catalog import catalog
from incidence_workbench.catalog.catalog import CatalogEntry, entry_to_json
from incidence_workbench.catalog.verify import verify
from incidence_workbench.cli import census, flag
from incidence_workbench.core.io import (family_from_payload, line_set_from_payload,
                                         space_from_payload, to_json)
from incidence_workbench.core.linearspace import (CollinearityFamily, LinearSpace, closure,
                                                  is_superfiguration, validate_line_set,
                                                  validate_linear_space)
from incidence_workbench.enumeration import flag as enumeration_flag
from incidence_workbench.enumeration.frame import VFrame, find_v_frame, frame_ordering
from incidence_workbench.enumeration.generate import SpaceFilter, enumerate_linear_spaces
from incidence_workbench.enumeration.glynn import glynn_reduce, glynn_reduction_chain
from incidence_workbench.gb import flag as gb_flag
from incidence_workbench.gb.buchberger import ResourceLimitExceeded, buchberger
from incidence_workbench.gb.dimension import krull_dimension, minimal_polynomial_factors, summarize
from incidence_workbench.gb.framed import FramedSuperfiguration, build_ideal
from incidence_workbench.gb.ideal import IdealPresentation
from incidence_workbench.gb.io import gb_to_json, ideal_from_payload, ideal_to_json
from incidence_workbench.realize import flag as realize_flag
from incidence_workbench.realize.count import CountMode, characteristic_scan, count_realizations
from incidence_workbench.realize.oracle import OracleTooLarge

EXIT_MISMATCH = 1
EXIT_MALFORMED = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class CommandResult:
  # JSON objects, or preformatted lines when streaming line protocol.
  payloads: list[dict[str, Any] | str]
  stream: bool = False
  exit_code: int = 0


def _executor() -> ProcessPoolExecutor:
  return ProcessPoolExecutor(max_workers=flag.WORKERS.value or util.cpu_count())


async def _in_executor(executor: Executor, fn: Callable[..., Any], *args: Any) -> Any:
  return await asyncio.get_running_loop().run_in_executor(executor, fn, *args)


def _entry() -> CatalogEntry | None:
  return catalog.get(flag.CATALOG.value) if flag.CATALOG.value else None


def _family() -> CollinearityFamily:
  if entry := _entry():
    return entry.space.as_family()
  if flag.SPACE.value is None:
    raise ValueError('Specify the input with --space or --catalog.')
  return family_from_payload(util.read_payload(flag.SPACE.value))


def _space() -> LinearSpace:
  if entry := _entry():
    return entry.space
  if flag.SPACE.value is None:
    raise ValueError('Specify the input with --space or --catalog.')
  return space_from_payload(util.read_payload(flag.SPACE.value))


def _framed() -> FramedSuperfiguration:
  s = _space()
  if (points := enumeration_flag.V_FRAME.value) is not None:
    vf = VFrame(tuple(int(p) for p in points))
  elif (entry := _entry()) is not None and entry.v_frame is not None:
    vf = entry.v_frame
  else:
    vf = find_v_frame(s)
  return frame_ordering(s, vf)


def _ideal() -> IdealPresentation:
  if flag.IDEAL.value is not None:
    return ideal_from_payload(util.read_payload(flag.IDEAL.value))
  return build_ideal(_framed(), coefficient_ring(gb_flag.COEFFICIENTS.value))


def _frame_points() -> list[int] | None:
  if (points := realize_flag.FRAME.value) is None:
    return None
  return [int(p) for p in points]


def _required(holder: Any, name: str) -> Any:
  if holder.value is None:
    raise ValueError(f'The subcommand needs --{name}.')
  return holder.value


async def _validate(args: list[str]) -> CommandResult:
  if entry := _entry():
    result = validate_linear_space(entry.space.as_family())
  elif flag.SPACE.value is None:
    raise ValueError('Specify the input with --space or --catalog.')
  else:
    result = validate_line_set(*line_set_from_payload(util.read_payload(flag.SPACE.value)))
  payload = {
      'valid': result.valid,
      'violated_axiom': result.violated_axiom.name if result.violated_axiom else None,
      'witness': list(result.witness),
  }
  return CommandResult([payload], exit_code=0 if result.valid else EXIT_MISMATCH)


async def _closure(args: list[str]) -> CommandResult:
  return CommandResult([to_json(closure(_family()))])


async def _enumerate(args: list[str]) -> CommandResult:
  n = _required(enumeration_flag.N, 'n')
  space_filter = SpaceFilter.SUPERFIGURATIONS if enumeration_flag.SUPERFIGURATIONS.value \
                 else enumeration_flag.SPACE_FILTER.value
  with _executor() as executor:
    spaces = list(enumerate_linear_spaces(n, space_filter, executor))
  logging.info(f'Enumerated {len(spaces)} {space_filter.value} on {n} points.')
  return CommandResult([to_json(s) for s in spaces], stream=True)


async def _reduce(args: list[str]) -> CommandResult:
  s = _space()
  if (point := enumeration_flag.POINT.value) is not None:
    if (step := glynn_reduce(s, point)) is None:
      raise ValueError(f'{s} cannot be reduced at point {point}.')
    steps = [step]
  else:
    steps = glynn_reduction_chain(s)
  result = steps[-1].reduced if steps else s
  return CommandResult([{
      'steps': [{'removed_point': step.removed_point,
                 'fiber_codim_n': step.fiber_codim_n,
                 'reduced': to_json(step.reduced)} for step in steps],
      'result': to_json(result),
      'superfiguration': is_superfiguration(result),
  }])


async def _frame(args: list[str]) -> CommandResult:
  fs = _framed()
  return CommandResult([{
      'v_frame': list(fs.ordering[:5]),
      'ordering': list(fs.ordering),
      'n_prime': fs.n_prime,
      'n_doubleprime': fs.n_doubleprime,
      'variables': list(fs.variables()),
      'space': to_json(fs.space),
  }])


async def _ideal_command(args: list[str]) -> CommandResult:
  return CommandResult([ideal_to_json(_ideal())])


async def _gb(args: list[str]) -> CommandResult:
  ideal = _ideal()
  return CommandResult([gb_to_json(buchberger(ideal), ideal)])


async def _dim(args: list[str]) -> CommandResult:
  return CommandResult([{'krull_dimension': krull_dimension(buchberger(_ideal()))}])


async def _summary(args: list[str]) -> CommandResult:
  summary = summarize(buchberger(_ideal()))
  payload: dict[str, Any] = {
      'krull_dimension': summary.krull_dimension,
      'vector_space_dimension': summary.vector_space_dimension,
      'minimal_polynomials': {name: format_polynomial(f)
                              for name, f in sorted(summary.minimal_polynomials.items())},
  }
  if summary.minimal_polynomials and all(f.ring.coefficients == RATIONALS
                                         for f in summary.minimal_polynomials.values()):
    payload['factors'] = {f.variable: [str(g.as_expr()).replace('**', '^') for g in f.factors]
                          for f in minimal_polynomial_factors(summary)}
  return CommandResult([payload])


async def _count(args: list[str]) -> CommandResult:
  q = _required(realize_flag.Q, 'q')
  mode = CountMode(realize_flag.MODE.value)
  target = _framed() if mode == CountMode.CHART else _space()
  with _executor() as executor:
    result = count_realizations(target, q, mode, _frame_points(), executor)
  return CommandResult([{'q': result.q, 'mode': result.mode.value, 'count': result.count}])


async def _scan(args: list[str]) -> CommandResult:
  primes = [int(p) for p in realize_flag.PRIMES.value]
  scan = characteristic_scan(_space(), primes, _frame_points())
  return CommandResult([{'realizable': {str(p): realizable for p, realizable in scan.items()}}])


async def _census(args: list[str]) -> CommandResult:
  n = enumeration_flag.N.value or 10
  with _executor() as executor:
    spaces = list(enumerate_linear_spaces(n, SpaceFilter.SUPERFIGURATIONS, executor))
    logging.info(f'Running the census over {len(spaces)} superfigurations on {n} points.')
    records = await census.run_census(spaces, executor, flag.CACHE_DIR.value or None,
                                      gb_flag.MAX_REDUCTION_STEPS.value,
                                      flag.CENSUS_FRAMES.value)

  if flag.CENSUS_FORMAT.value == 'line-protocol':
    payloads: list[dict[str, Any] | str] = [record.to_line_protocol() for record in records]
  else:
    payloads = [record.to_json() for record in records]
  complete = all(record.status == 'ok' for record in records)
  return CommandResult(payloads, stream=True, exit_code=0 if complete else EXIT_BUDGET)


async def _catalog(args: list[str]) -> CommandResult:
  if not args:
    raise app.UsageError('Expected "catalog list", "catalog show <name>" or '
                         '"catalog verify [<name> ...]".', EXIT_MALFORMED)
  action, names = args[0], args[1:]
  match action:
    case 'list':
      return CommandResult([{'names': catalog.list_names()}])
    case 'show':
      if len(names) != 1:
        raise app.UsageError('Expected exactly one name after "catalog show".', EXIT_MALFORMED)
      return CommandResult([entry_to_json(catalog.get(names[0]))])
    case 'verify':
      return await _catalog_verify(names or catalog.list_names())
  raise app.UsageError(f'Unknown catalog action "{action}".', EXIT_MALFORMED)


async def _catalog_verify(names: list[str]) -> CommandResult:
  for name in names:
    catalog.get(name)

  max_steps = gb_flag.MAX_REDUCTION_STEPS.value
  with _executor() as executor:
    tasks = [
        asyncio.create_task(_in_executor(executor, verify, name, max_steps),
                            name=f'verify({name})') for name in sorted(set(names))
    ]
    await asyncio.wait(tasks)
  reports = [task.result() for task in tasks]
  for report in reports:
    for check in report.mismatches():
      logging.error(f'{report.name}: {check.fact} expected {check.expected}, '
                    f'computed {check.computed}.')
  passed = all(report.passed for report in reports)
  return CommandResult([{'passed': passed, 'reports': [report.to_json() for report in reports]}],
                       exit_code=0 if passed else EXIT_MISMATCH)


COMMANDS: dict[str, Callable[[list[str]], Awaitable[CommandResult]]] = {
    'validate': _validate,
    'closure': _closure,
    'enumerate': _enumerate,
    'reduce': _reduce,
    'frame': _frame,
    'ideal': _ideal_command,
    'gb': _gb,
    'dim': _dim,
    'summary': _summary,
    'count': _count,
    'scan': _scan,
    'census': _census,
    'catalog': _catalog,
}


def _write(result: CommandResult) -> None:
  if result.stream:
    text = ''.join(f'{p if isinstance(p, str) else json.dumps(p)}\n' for p in result.payloads)
  else:
    text = json.dumps(result.payloads[0], indent=2) + '\n'

  if flag.OUTPUT.value is None:
    sys.stdout.write(text)
    return
  with open(flag.OUTPUT.value, 'w', encoding='utf-8') as f:
    f.write(text)


async def run(args: list[str]) -> int:
  """Runs the subcommand args[0] and returns the process exit code."""
  if not args or (command := COMMANDS.get(args[0])) is None:
    raise app.UsageError(f'Expected one of {", ".join(COMMANDS)} as the subcommand. '
                         f'Got {args[:1]} instead.', EXIT_MALFORMED)

  try:
    result = await command(args[1:])
  except (ResourceLimitExceeded, OracleTooLarge) as e:
    logging.exception(e)
    return EXIT_BUDGET
  except (ValueError, AssertionError, OSError) as e:
    e.add_note(f'While running subcommand {args}.')
    logging.exception(e)
    return EXIT_MALFORMED

  _write(result)
  return result.exit_code
