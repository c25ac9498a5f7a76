"""Size limits.  GCDMAT_N_CAP in the environment overrides the determinant limit."""

import os

DEFAULT_TABLE_CAP = 10_000
DEFAULT_MATRIX_CAP = 500
DEFAULT_DET_CAP = 200

ENV_DET_CAP = "GCDMAT_N_CAP"


def det_cap(environ=None) -> int:
    environ = os.environ if environ is None else environ
    raw = environ.get(ENV_DET_CAP)
    if raw is None or raw.strip() == "":
        return DEFAULT_DET_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_DET_CAP} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_DET_CAP} must be a positive integer, got {raw!r}")
    return value
