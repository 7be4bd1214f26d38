from absl import flags

from incidence_workbench.realize.count import CountMode

ORACLE_CAP = flags.DEFINE_integer(
    name='oracle_cap',
    default=10**8,
    lower_bound=1,
    help='Largest number of candidate placements the naive realization oracle may enumerate.',
)

Q = flags.DEFINE_integer(
    name='q',
    default=None,
    lower_bound=2,
    help='Prime field size for the count subcommand.',
)

MODE = flags.DEFINE_enum(
    name='mode',
    default=CountMode.FRAMED_STRONG.value,
    enum_values=[mode.value for mode in CountMode],
    help='What the count subcommand counts: chart, framed-weak, framed-strong, or strong-total.',
)

FRAME = flags.DEFINE_list(
    name='frame',
    default=None,
    help='Four comma-separated points pinned to the standard frame. Defaults to the first '
    'combinatorial frame.',
)

PRIMES = flags.DEFINE_list(
    name='primes',
    default=['2', '3', '5', '7', '11', '13'],
    help='Primes checked by the scan subcommand.',
)


def _validate_points(name: str, expected_length: int):

  def validator(value: list[str] | None) -> bool:
    if value is None:
      return True
    if len(value) != expected_length or not all(v.isdigit() for v in value):
      raise flags.ValidationError(f'Expected {expected_length} positive integers for --{name}. '
                                  f'Got {value}.')
    return True

  return validator


def _validate_primes(value: list[str]) -> bool:
  if not value or not all(v.isdigit() for v in value):
    raise flags.ValidationError(f'Expected a non-empty list of primes for --primes. Got {value}.')
  return True


flags.register_validator('frame', _validate_points('frame', 4))
flags.register_validator('primes', _validate_primes)
