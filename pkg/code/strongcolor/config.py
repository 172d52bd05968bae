"""Runtime settings, read from the environment.

    STRONGCOLOR_PALETTE            palette of the constructive colorer (9)
    STRONGCOLOR_BASE_CASE          |V| solved exactly instead of reduced (12)
    STRONGCOLOR_MAX_FRONTIER       largest frontier extend_by_search accepts (20)
    STRONGCOLOR_FIRST_PASS_NODES   node budget of the seeded extension pass (200000)
    STRONGCOLOR_EXACT_MAX_EDGES    soft guard of the exact solver (60)
    STRONGCOLOR_VERBOSE            1 to report progress on stderr (0)
"""
import os
from dataclasses import dataclass, replace

from .errors import ConfigError


@dataclass(frozen=True)
class Settings:
    palette: int = 9
    base_case: int = 12
    max_frontier: int = 20
    first_pass_nodes: int = 200_000
    exact_max_edges: int = 60
    verbose: bool = False

    def with_overrides(self, **overrides):
        """Return a copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _read_int(name, default, minimum):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name}={raw!r} is not an integer") from None
    if value < minimum:
        raise ConfigError(f"{name}={value} must be at least {minimum}")
    return value


def load_settings():
    return Settings(
        palette=_read_int("STRONGCOLOR_PALETTE", 9, 1),
        base_case=_read_int("STRONGCOLOR_BASE_CASE", 12, 0),
        max_frontier=_read_int("STRONGCOLOR_MAX_FRONTIER", 20, 1),
        first_pass_nodes=_read_int("STRONGCOLOR_FIRST_PASS_NODES", 200_000, 1),
        exact_max_edges=_read_int("STRONGCOLOR_EXACT_MAX_EDGES", 60, 1),
        verbose=_read_int("STRONGCOLOR_VERBOSE", 0, 0) > 0,
    )
