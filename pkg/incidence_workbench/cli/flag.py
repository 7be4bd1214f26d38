import os

from absl import flags

WORKERS = flags.DEFINE_integer(
    name='workers',
    default=None,
    lower_bound=1,
    help='Worker processes for enumeration, counts, census and catalog verification. Defaults to '
    'the number of CPUs.',
)

SPACE = flags.DEFINE_string(
    name='space',
    default=None,
    help='Linear space, or collinearity family for validate and closure, as inline JSON '
    '{"n": ..., "lines": [...]} or a path to such a file.',
)

CATALOG = flags.DEFINE_string(
    name='catalog',
    default=None,
    help='Name of a catalog entry to use instead of --space.',
)

IDEAL = flags.DEFINE_string(
    name='ideal',
    default=None,
    help='Ideal as inline JSON {"ring": ..., "generators": [...]} or a path, for gb, dim and '
    'summary. Defaults to the framed ideal of --space or --catalog.',
)

OUTPUT = flags.DEFINE_string(
    name='output',
    default=None,
    help='Write results to this file instead of standard output.',
)

CACHE_DIR = flags.DEFINE_string(
    name='cache_dir',
    default=os.environ.get('INCIDENCE_WORKBENCH_CACHE',
                           os.path.expanduser('~/.cache/incidence_workbench')),
    help='Directory of cached Groebner bases for the census subcommand. Defaults to '
    '$INCIDENCE_WORKBENCH_CACHE.',
)

CENSUS_FORMAT = flags.DEFINE_enum(
    name='census_format',
    default='json',
    enum_values=['json', 'line-protocol'],
    help='Census records as JSON lines {"tags": ..., "fields": ...} or as line protocol.',
)


CENSUS_FRAMES = flags.DEFINE_integer(
    name='census_frames',
    default=None,
    lower_bound=1,
    help='Most V-frames the census tries per class, one per automorphism orbit, before keeping '
    'the smallest framed scheme. Defaults to all of them.',
)


def _validate_input(flags_dict: dict[str, str | None]) -> bool:
  if flags_dict['space'] is not None and flags_dict['catalog'] is not None:
    raise flags.ValidationError('Specify at most one of --space and --catalog.')
  return True


flags.register_multi_flags_validator(['space', 'catalog'], _validate_input)
