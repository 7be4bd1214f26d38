from concurrent.futures import Executor
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable

from absl import logging

from incidence_workbench.algebra.numberfield import (count_roots_mod, generates_same_field,
                                                     parse_univariate)
from incidence_workbench.catalog import catalog
from incidence_workbench.catalog.catalog import CatalogEntry, Fact
from incidence_workbench.core.linearspace import is_configuration, is_superfiguration
from incidence_workbench.enumeration.frame import find_v_frame, frame_ordering
from incidence_workbench.enumeration.glynn import glynn_reduction_chain
from incidence_workbench.gb.dimension import (SchemeSummary, krull_dimension,
                                              minimal_polynomial_factors, summarize)
from incidence_workbench.gb.framed import FramedSuperfiguration, build_ideal
from incidence_workbench.gb.ideal import GroebnerBasis, IdealPresentation
from incidence_workbench.gb.substitution import simplify
from incidence_workbench.realize.count import (characteristic_scan, count_chart_points,
                                               count_framed, first_frame, strong_total)


@dataclass(frozen=True)
class FactCheck:
  fact: str
  expected: Any
  computed: Any
  source: str
  passed: bool

  def to_json(self) -> dict[str, Any]:
    return {'fact': self.fact, 'expected': self.expected, 'computed': self.computed,
            'source': self.source, 'passed': self.passed}


@dataclass(frozen=True)
class VerificationReport:
  name: str
  checks: tuple[FactCheck, ...]

  @property
  def passed(self) -> bool:
    return all(check.passed for check in self.checks)

  def mismatches(self) -> list[FactCheck]:
    return [check for check in self.checks if not check.passed]

  def to_json(self) -> dict[str, Any]:
    return {'name': self.name, 'passed': self.passed,
            'checks': [check.to_json() for check in self.checks]}


def _by_prime(value: dict[str, Any]) -> dict[int, Any]:
  return {int(p): v for p, v in value.items()}


class _Pipeline:
  """Lazily computes frame, ideal, basis and summary of one entry, each at most once."""

  def __init__(self, entry: CatalogEntry, max_steps: int | None) -> None:
    self.entry = entry
    self.space = entry.space
    self.max_steps = max_steps

  @cached_property
  def framed(self) -> FramedSuperfiguration:
    return frame_ordering(self.space, self.entry.v_frame or find_v_frame(self.space))

  @cached_property
  def ideal(self) -> IdealPresentation:
    return build_ideal(self.framed)

  @cached_property
  def gb(self) -> GroebnerBasis:
    gb, log = simplify(self.ideal, max_steps=self.max_steps)
    logging.info(f'{self.entry.name}: basis of {len(gb.elements)} elements in '
                 f'{len(gb.ring.variables)} variables after {len(log)} substitutions.')
    return gb

  @cached_property
  def summary(self) -> SchemeSummary:
    return summarize(self.gb)

  def chart_count(self, p: int, distinct: bool = False) -> int:
    return count_chart_points(self.framed, p, distinct=distinct).count

  def eliminant(self, text: str) -> str | None:
    """A rational factor of some minimal polynomial generating the same field as `text`."""
    target = parse_univariate(text)
    for factors in minimal_polynomial_factors(self.summary):
      for f in factors.factors:
        if generates_same_field(f, target):
          return str(f.as_expr())
    return None

  def root_counts(self, text: str, primes: list[int]) -> dict[str, list[int]]:
    """[chart points with distinct columns, roots of `text`] per prime."""
    target = parse_univariate(text)
    return {
        str(p): [self.chart_count(p, distinct=True), count_roots_mod(target, p)] for p in primes
    }


def _equal(compute: Callable[[_Pipeline], Any]) -> Callable[[_Pipeline, Any], tuple[Any, bool]]:
  def check(pipeline: _Pipeline, expected: Any) -> tuple[Any, bool]:
    computed = compute(pipeline)
    return computed, computed == expected
  return check


def _per_prime(compute: Callable[[_Pipeline, int], Any]) -> Callable[[_Pipeline, Any],
                                                                     tuple[Any, bool]]:
  def check(pipeline: _Pipeline, expected: dict[str, Any]) -> tuple[Any, bool]:
    computed = {str(p): compute(pipeline, p) for p in _by_prime(expected)}
    return computed, computed == expected
  return check


def _krull_at_least(pipeline: _Pipeline, expected: int) -> tuple[Any, bool]:
  computed = krull_dimension(pipeline.gb)
  return computed, computed >= expected


def _eliminant(pipeline: _Pipeline, expected: str) -> tuple[Any, bool]:
  computed = pipeline.eliminant(expected)
  return computed, computed is not None


def _eliminant_root_counts(pipeline: _Pipeline, expected: list[int]) -> tuple[Any, bool]:
  computed = pipeline.root_counts(pipeline.entry.expected['eliminant'].value, expected)
  return computed, all(chart == roots for chart, roots in computed.values())


def _realizable(pipeline: _Pipeline, expected: dict[str, bool]) -> tuple[Any, bool]:
  scan = characteristic_scan(pipeline.space, sorted(_by_prime(expected)))
  computed = {str(p): realizable for p, realizable in scan.items()}
  return computed, computed == expected


def _glynn_core_points(pipeline: _Pipeline) -> int:
  chain = glynn_reduction_chain(pipeline.space)
  return chain[-1].reduced.n if chain else pipeline.space.n


_CHECKS: dict[str, Callable[[_Pipeline, Any], tuple[Any, bool]]] = {
    'superfiguration': _equal(lambda p: is_superfiguration(p.space)),
    'configuration': _equal(lambda p: is_configuration(p.space)),
    'glynn_core_points': _equal(_glynn_core_points),
    'n_prime': _equal(lambda p: p.framed.n_prime),
    'n_doubleprime': _equal(lambda p: p.framed.n_doubleprime),
    'generators': _equal(lambda p: len(p.ideal.generators)),
    'unit_ideal': _equal(lambda p: p.gb.is_unit()),
    'krull_dimension': _equal(lambda p: krull_dimension(p.gb)),
    'krull_dimension_at_least': _krull_at_least,
    'quotient_dimension': _equal(lambda p: p.summary.vector_space_dimension),
    'eliminant': _eliminant,
    'eliminant_root_counts': _eliminant_root_counts,
    'chart_counts': _per_prime(lambda pipeline, p: pipeline.chart_count(p)),
    'strong_counts': _per_prime(lambda pipeline, p: count_framed(
        pipeline.space, first_frame(pipeline.space), p, strong=True).count),
    'strong_totals': _per_prime(lambda pipeline, p: strong_total(pipeline.space, p).count),
    'realizable': _realizable,
}

FACTS = tuple(_CHECKS)


def _check(pipeline: _Pipeline, name: str, fact: Fact) -> FactCheck:
  if (check := _CHECKS.get(name)) is None:
    raise ValueError(f'Unknown fact "{name}" in catalog entry {pipeline.entry.name}; '
                     f'expected one of {FACTS}.')
  computed, passed = check(pipeline, fact.value)
  log = logging.info if passed else logging.warning
  log(f'{pipeline.entry.name}: {name} expected {fact.value} ({fact.source.value}), '
      f'computed {computed}.')
  return FactCheck(name, fact.value, computed, fact.source.value, passed)


def verify_entry(entry: CatalogEntry, max_steps: int | None = None) -> VerificationReport:
  """Recomputes every expected fact of `entry`, in the order the entry lists them."""
  pipeline = _Pipeline(entry, max_steps)
  checks = tuple(_check(pipeline, name, fact) for name, fact in entry.expected.items())
  report = VerificationReport(entry.name, checks)
  logging.info(f'{entry.name}: {len(checks) - len(report.mismatches())}/{len(checks)} facts '
               f'match.')
  return report


def verify(name: str, max_steps: int | None = None) -> VerificationReport:
  return verify_entry(catalog.get(name), max_steps)


def verify_all(names: list[str] | None = None,
               executor: Executor | None = None) -> list[VerificationReport]:
  """Reports sorted by entry name; entries run in parallel when an executor is given."""
  names = sorted(names if names is not None else catalog.list_names())
  for name in names:
    catalog.get(name)
  reports = executor.map(verify, names) if executor else map(verify, names)
  return sorted(reports, key=lambda report: report.name)
