from decouple import config

LOG_LEVEL = config('KANNAN_LOG_LEVEL', default='INFO')

DEFAULT_HORIZON = config('KANNAN_HORIZON', default=64, cast=int)
MAX_PAIRWISE_HORIZON = config('KANNAN_MAX_PAIRWISE_HORIZON', default=512, cast=int)

GORNICKI_N = config('KANNAN_GORNICKI_N', default=1000, cast=int)
COUNTEREXAMPLE_PREFIX = config('KANNAN_COUNTEREXAMPLE_PREFIX', default=200, cast=int)
SAMPLE_SIZE = config('KANNAN_SAMPLE_SIZE', default=200, cast=int)

CENSUS_MAX_MAPS = config('KANNAN_CENSUS_MAX_MAPS', default=10_000_000, cast=int)
WORKERS = config('KANNAN_WORKERS', default=1, cast=int)
SEED = config('KANNAN_SEED', default=0, cast=int)
