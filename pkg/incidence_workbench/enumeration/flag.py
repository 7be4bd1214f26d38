from absl import flags

from incidence_workbench.enumeration.generate import SpaceFilter

N = flags.DEFINE_integer(
    name='n',
    default=None,
    lower_bound=1,
    help='Number of points for the enumerate subcommand. Counts are checked up to 10.',
)

SPACE_FILTER = flags.DEFINE_enum_class(
    name='space_filter',
    default=SpaceFilter.ALL,
    enum_class=SpaceFilter,
    case_sensitive=False,
    help='Which enumerated linear spaces to emit.',
)

SUPERFIGURATIONS = flags.DEFINE_bool(
    name='superfigurations',
    default=False,
    help='Shorthand for --space_filter=superfigurations.',
)

POINT = flags.DEFINE_integer(
    name='point',
    default=None,
    lower_bound=1,
    help='Point removed by a single reduction step. Defaults to the point on the fewest full '
    'lines.',
)

V_FRAME = flags.DEFINE_list(
    name='v_frame',
    default=None,
    help='Five comma-separated points p1..p5 used by the frame subcommand instead of the first '
    'V-frame.',
)


def _validate_v_frame(value: list[str] | None) -> bool:
  if value is None:
    return True
  if len(value) != 5 or not all(v.isdigit() for v in value):
    raise flags.ValidationError(f'Expected five positive integers for --v_frame. Got {value}.')
  return True


flags.register_validator('v_frame', _validate_v_frame)
