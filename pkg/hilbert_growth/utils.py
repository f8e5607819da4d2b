import logging
import os
import sys
from fractions import Fraction
from typing import Optional, Union

import pydantic

PYDANTIC_V2 = pydantic.VERSION.startswith("2.")

if PYDANTIC_V2:

    def pydantic_json(m: pydantic.BaseModel) -> str:
        return m.model_dump_json()

    def pydantic_dict(m: pydantic.BaseModel) -> dict:
        return m.model_dump(mode="json")

    def pydantic_validator(field: str):
        return pydantic.field_validator(field)

else:

    def pydantic_json(m: pydantic.BaseModel) -> str:
        return m.json()

    def pydantic_dict(m: pydantic.BaseModel) -> dict:
        import json

        return json.loads(m.json())

    def pydantic_validator(field: str):
        return pydantic.validator(field)


logger = logging.getLogger("Hilbert-Growth")

DEFAULT_SEED = 0
DEFAULT_REDRAW_BUDGET = 8
DEFAULT_COEFFICIENT_BOUND = 10**4
DEFAULT_DENOMINATOR_BOUND = 10**2
DEFAULT_POINT_HEIGHT = 50
DEFAULT_FIT_CONFIRMATIONS = 3

ENV_SEED = "HILBERT_GROWTH_SEED"
ENV_JOBS = "HILBERT_GROWTH_JOBS"

try:
    from tqdm.auto import tqdm  # noqa: F401

    DEFAULT_WITH_PROGRESS = hasattr(sys, "ps1")
except ImportError:
    DEFAULT_WITH_PROGRESS = False


def _int_from_env(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"Environment variable {name} must be an integer, got {raw!r}"
        )


def resolve_seed(seed: Optional[int] = None) -> int:
    """Explicit seed, else $HILBERT_GROWTH_SEED, else DEFAULT_SEED"""

    if seed is not None:
        return seed
    env_seed = _int_from_env(ENV_SEED)
    return DEFAULT_SEED if env_seed is None else env_seed


def resolve_jobs(jobs: Optional[int] = None) -> int:
    if jobs is None:
        jobs = _int_from_env(ENV_JOBS) or 1
    if jobs < 1:
        raise ValueError(f"Number of jobs must be positive, got {jobs}")
    return jobs


def derive_seed(seed: int, index: int) -> int:
    # independent streams for the i-th draw of a seeded computation
    return seed * 1000003 + 7919 * index


def rational_str(value: Union[int, Fraction]) -> Union[int, str]:
    """Render an exact number: integers stay integers, rationals become "p/q"."""

    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def parse_rational(token: str) -> Fraction:
    if token.count("/") > 1:
        raise ValueError(f"Invalid rational {token!r}")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Invalid rational {token!r}")

