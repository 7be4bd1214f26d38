"""Full pipeline over enumerated superfigurations, one record per isomorphism class."""
import asyncio
import collections
import hashlib
import itertools
import json
import os
import pathlib
from concurrent.futures import Executor
from dataclasses import asdict, dataclass
from typing import Any, Iterable, Sequence

import sympy
from absl import logging
from influxdb_client import Point

from incidence_workbench import util
from incidence_workbench.core.linearspace import LinearSpace
from incidence_workbench.enumeration.canonical import CanonicalCertificate, canonical_form
from incidence_workbench.enumeration.frame import VFrame, frame_ordering, v_frames
from incidence_workbench.gb.buchberger import ResourceLimitExceeded
from incidence_workbench.gb.dimension import (krull_dimension, minimal_polynomial_factors,
                                              staircase, summarize)
from incidence_workbench.gb.framed import build_ideal
from incidence_workbench.gb.ideal import GroebnerBasis
from incidence_workbench.gb.io import gb_from_payload, gb_to_json
from incidence_workbench.gb.saturation import strong_part
from incidence_workbench.gb.substitution import simplify


@dataclass(frozen=True)
class CensusRecord:
  # Tags identify the class; everything else is a measured field.
  _n: int
  _certificate: str

  lines: str
  status: str
  # Chosen V-frame, and how many frames were tried to find it.
  v_frame: str | None = None
  frames: int | None = None
  n_prime: int | None = None
  n_doubleprime: int | None = None
  generators: int | None = None
  variables: int | None = None
  substitutions: int | None = None
  krull_dimension: int | None = None
  quotient_dimension: int | None = None
  # The framed scheme saturated against degenerate placements.
  strong_krull_dimension: int | None = None
  strong_quotient_dimension: int | None = None
  # Squarefree parts of the per-variable minimal polynomials of a finite strong part.
  minimal_polynomials: tuple[str, ...] = ()
  # Their irreducible rational factors, deduplicated.
  factors: tuple[str, ...] = ()

  def tags(self) -> dict[str, Any]:
    return {key[1:]: value for key, value in asdict(self).items() if key.startswith('_')}

  def fields(self) -> dict[str, Any]:
    return {key: list(value) if isinstance(value, tuple) else value
            for key, value in asdict(self).items() if not key.startswith('_')}

  def to_json(self) -> dict[str, Any]:
    return {'tags': self.tags(), 'fields': self.fields()}

  def to_line_protocol(self) -> str:
    point = Point('census')
    for key, value in self.tags().items():
      point.tag(key, value)
    for key, value in self.fields().items():
      if value is not None:
        point.field(key, ','.join(value) if isinstance(value, list) else value)
    return point.to_line_protocol()


@dataclass(frozen=True)
class FramedResult:
  """What the census computes for one class; also the content of a cache entry."""
  v_frame: VFrame
  frames: int
  generators: int
  substitutions: int
  gb: GroebnerBasis
  strong: GroebnerBasis


def _text(f: sympy.Poly) -> str:
  return str(f.as_expr()).replace('**', '^')


def _lines_text(s: LinearSpace) -> str:
  return json.dumps([list(line) for line in s.lines], separators=(',', ':'))


def cache_key(certificate: CanonicalCertificate) -> str:
  return hashlib.sha256(certificate.value).hexdigest()


def _load_cached(path: pathlib.Path, certificate: CanonicalCertificate,
                 s: LinearSpace) -> FramedResult | None:
  if not path.is_file():
    return None
  try:
    payload = util.parse_payload(path.read_text(encoding='utf-8'))
    if util.get_str(payload, 'certificate') != certificate.hex():
      logging.warning(f'Cache entry {path} belongs to another certificate; recomputing.')
      return None
    # Frames are stored in the labels of the space that produced them.
    if util.get_str(payload, 'lines') != _lines_text(s):
      logging.warning(f'Cache entry {path} was computed for another labeling; recomputing.')
      return None
    v_frame = VFrame(tuple(util.get_int_list(payload, 'v_frame')))
    frame_ordering(s, v_frame)
    return FramedResult(v_frame=v_frame,
                        frames=util.get_int(payload, 'frames'),
                        generators=util.get_int(payload, 'generators'),
                        substitutions=util.get_int(payload, 'substitutions'),
                        gb=gb_from_payload(util.get_dict(payload, 'gb')),
                        strong=gb_from_payload(util.get_dict(payload, 'strong')))
  except (json.decoder.JSONDecodeError, AssertionError, ValueError) as e:
    logging.warning(f'Ignoring unreadable cache entry {path}: {e}')
    return None


def _store(path: pathlib.Path, certificate: CanonicalCertificate, s: LinearSpace,
           result: FramedResult) -> None:
  path.parent.mkdir(parents=True, exist_ok=True)
  partial = path.with_suffix('.tmp')
  partial.write_text(json.dumps({'certificate': certificate.hex(),
                                 'lines': _lines_text(s),
                                 'v_frame': list(result.v_frame.points),
                                 'frames': result.frames,
                                 'generators': result.generators,
                                 'substitutions': result.substitutions,
                                 'gb': gb_to_json(result.gb),
                                 'strong': gb_to_json(result.strong)}), encoding='utf-8')
  os.replace(partial, path)


def _scheme_key(gb: GroebnerBasis) -> tuple[int, int]:
  dimension = krull_dimension(gb)
  return dimension, len(staircase(gb)) if dimension == 0 else 0


def compute_framed_result(s: LinearSpace,
                          automorphisms: Sequence[tuple[int, ...]] = (),
                          max_steps: int | None = None,
                          max_frames: int | None = None) -> FramedResult:
  """Tries V-frames in order and keeps the smallest simplified framed scheme.

  Schemes compare by dimension, then by degree when finite. The search stops at the first frame
  whose scheme is finite or empty. Frames that exceed the budget are skipped.
  """
  best = None
  tried = 0
  for vf in itertools.islice(v_frames(s, automorphisms), max_frames):
    tried += 1
    fs = frame_ordering(s, vf)
    ideal = build_ideal(fs)
    try:
      gb, log = simplify(ideal, max_steps=max_steps)
    except ResourceLimitExceeded as e:
      logging.info(f'V-frame {vf.points} of {s} exceeded the reduction budget: {e}')
      continue
    key = _scheme_key(gb)
    logging.debug(f'V-frame {vf.points} of {s}: dimension {key[0]}.')
    if best is None or key < best[0]:
      best = (key, fs, vf, len(ideal.generators), gb, log)
    if key[0] <= 0:
      break
  if best is None:
    raise ResourceLimitExceeded(f'All {tried} V-frames of {s} exceeded the reduction budget.')

  _, fs, vf, generators, gb, log = best
  strong = strong_part(fs, gb, log, max_steps)
  return FramedResult(vf, tried, generators, len(log), gb, strong)


def census_job(s: LinearSpace,
               cache_dir: str | None = None,
               max_steps: int | None = None,
               max_frames: int | None = None) -> CensusRecord:
  form = canonical_form(s)
  key = cache_key(form.certificate)
  lines = _lines_text(s)

  path = pathlib.Path(cache_dir, f'{key}.json') if cache_dir else None
  if path is not None and (cached := _load_cached(path, form.certificate, s)) is not None:
    result = cached
    logging.debug(f'Cache hit for {s}.')
  else:
    try:
      result = compute_framed_result(s, form.generators, max_steps, max_frames)
    except ResourceLimitExceeded as e:
      logging.warning(f'Skipping {s}: {e}')
      return CensusRecord(_n=s.n, _certificate=key, lines=lines, status='budget-exceeded')
    if path is not None:
      _store(path, form.certificate, s, result)

  fs = frame_ordering(s, result.v_frame)
  dimension, degree = _scheme_key(result.gb)
  strong = summarize(result.strong)
  squarefree, factors = set(), set()
  if strong.krull_dimension == 0:
    for f in minimal_polynomial_factors(strong):
      squarefree.add(_text(f.squarefree))
      factors.update(map(_text, f.factors))
  return CensusRecord(_n=s.n,
                      _certificate=key,
                      lines=lines,
                      status='ok',
                      v_frame=','.join(map(str, result.v_frame.points)),
                      frames=result.frames,
                      n_prime=fs.n_prime,
                      n_doubleprime=fs.n_doubleprime,
                      generators=result.generators,
                      variables=len(result.gb.ring.variables),
                      substitutions=result.substitutions,
                      krull_dimension=dimension,
                      quotient_dimension=degree if dimension == 0 else None,
                      strong_krull_dimension=strong.krull_dimension,
                      strong_quotient_dimension=strong.vector_space_dimension,
                      minimal_polynomials=tuple(sorted(squarefree)),
                      factors=tuple(sorted(factors)))


async def _run_job(executor: Executor, s: LinearSpace, cache_dir: str | None,
                   max_steps: int | None, max_frames: int | None) -> CensusRecord:
  return await asyncio.get_running_loop().run_in_executor(executor, census_job, s, cache_dir,
                                                          max_steps, max_frames)


async def run_census(spaces: Iterable[LinearSpace],
                     executor: Executor,
                     cache_dir: str | None = None,
                     max_steps: int | None = None,
                     max_frames: int | None = None) -> list[CensusRecord]:
  """Records in the order of `spaces`, independent of completion order."""
  tasks = [
      asyncio.create_task(_run_job(executor, s, cache_dir, max_steps, max_frames),
                          name=f'census_job({s})')
      for s in spaces
  ]
  if not tasks:
    return []
  await asyncio.wait(tasks)
  records = [task.result() for task in tasks]
  log_summary(records)
  return records


def log_summary(records: list[CensusRecord]) -> None:
  ok = [r for r in records if r.status == 'ok']
  by_dimension = collections.Counter(r.krull_dimension for r in ok)
  for dimension, count in sorted(by_dimension.items()):
    logging.info(f'Framed scheme of dimension {dimension}: {count} classes.')
  by_strong = collections.Counter(r.strong_krull_dimension for r in ok)
  for dimension, count in sorted(by_strong.items()):
    logging.info(f'Strong part of dimension {dimension}: {count} classes.')
  if skipped := len(records) - len(ok):
    logging.warning(f'{skipped} classes exceeded the reduction budget.')

  # Linear factors are rational points and not listed.
  minimal = collections.Counter(f for r in records for f in r.factors if '^' in f)
  for f, count in sorted(minimal.items()):
    logging.info(f'Minimal polynomial factor {f}: {count} classes.')
