"""Search bounds and backend selection, overridable through the environment.

``INVSEMI_BACKEND``            ``numba`` (default when importable) or ``numpy``
``INVSEMI_MAX_ASSOC_ORDER``    largest table scanned for associativity (256)
``INVSEMI_MAX_ISO_ORDER``      largest order for isomorphism search (64)
``INVSEMI_MAX_LATTICE_ORDER``  largest order for congruence-lattice enumeration (48)
``INVSEMI_MAX_SCAN_ORDER``     largest order for the all-pairs congruence-free scan in reports (192)
``INVSEMI_MAX_ANALYZE_ORDER``  largest order accepted by ``invsemi analyze`` (512)
"""

import os


def _int_env(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_assoc_order():
    return _int_env("INVSEMI_MAX_ASSOC_ORDER", 256)


def max_iso_order():
    return _int_env("INVSEMI_MAX_ISO_ORDER", 64)


def max_lattice_order():
    return _int_env("INVSEMI_MAX_LATTICE_ORDER", 48)


def max_scan_order():
    return _int_env("INVSEMI_MAX_SCAN_ORDER", 192)


def max_analyze_order():
    return _int_env("INVSEMI_MAX_ANALYZE_ORDER", 512)


def requested_backend():
    return os.environ.get("INVSEMI_BACKEND", "numba").strip().lower() or "numba"
