"""Size caps for the enumerations, overridable through the environment."""
import os


class ResourceCapError(RuntimeError):
    """A requested computation exceeds a configured size cap."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_syt_size() -> int:
    """Largest diagram size for which full SYT lists are produced."""
    return _env_int("INFHECKE_MAX_SYT_SIZE", 12)


def max_idempotent_n() -> int:
    """Largest ``n`` for which the finite idempotent ``epsilon_k^(n)`` is expanded."""
    return _env_int("INFHECKE_MAX_IDEMPOTENT_N", 8)


def max_module_dim() -> int:
    """Largest Specht module dimension the relation checker will sweep."""
    return _env_int("INFHECKE_MAX_MODULE_DIM", 500)
