from absl import flags

from incidence_workbench.algebra.field import coefficient_ring

MAX_REDUCTION_STEPS = flags.DEFINE_integer(
    name='max_reduction_steps',
    default=10**6,
    lower_bound=1,
    help='Maximum number of polynomial reduction steps in one Groebner basis computation before '
    'giving up.',
)

MONOMIAL_ORDER = flags.DEFINE_enum(
    name='monomial_order',
    default='degrevlex',
    enum_values=['degrevlex', 'lex'],
    help='Monomial order of computed Groebner bases.',
)

COEFFICIENTS = flags.DEFINE_string(
    name='coefficients',
    default='Q',
    help='Coefficient field of framed ideals: Q, or Fp:<p> for a prime p.',
)


def _validate_coefficients(value: str) -> bool:
  try:
    ring = coefficient_ring(value)
  except ValueError as e:
    raise flags.ValidationError(str(e)) from e
  if not ring.is_field:
    raise flags.ValidationError(f'--coefficients must name a field. Got "{value}" instead.')
  return True


flags.register_validator('coefficients', _validate_coefficients)
