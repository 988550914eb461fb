"""Unit conversion at the toolkit boundary, plus stable number formatting.

All internal computation is SI (m, rad, N, Pa, N.m).  Files, the CLI and
the HTTP service speak mm, degrees, MPa and N.m; conversion happens
exactly once, here.
"""
import math

MM = 1e-3      # m per mm
MPA = 1e6      # Pa per MPa


def mm_to_m(x: float) -> float:
    return x * MM


def m_to_mm(x: float) -> float:
    return x / MM


def mpa_to_pa(x: float) -> float:
    return x * MPA


def pa_to_mpa(x: float) -> float:
    return x / MPA


def fmt9(x: float) -> str:
    """Format a number with 9 significant digits in fixed decimal notation.

    No exponent is ever emitted, so repeated runs produce byte-identical
    files.  Examples: 3.14159265, 790.781600, 0.00124404000.
    """
    if not math.isfinite(x):
        raise ValueError(f"cannot format non-finite value {x!r}")
    if x == 0:
        return "0.00000000"
    decimals = 8 - math.floor(math.log10(abs(x)))
    if decimals < 0:
        decimals = 0
    return f"{x:.{decimals}f}"


def round9(x):
    """Round floats (recursively through lists/dicts/tuples) to 9 significant
    digits.  Used for JSON payloads so responses are byte-stable."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            return None
        return float(f"{x:.9g}")
    if isinstance(x, dict):
        return {k: round9(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [round9(v) for v in x]
    return x
