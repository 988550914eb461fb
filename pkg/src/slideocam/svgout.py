"""SVG rendering of cam profiles.  One user unit equals one millimetre.

The mechanism frame has v pointing up; SVG y grows downward, so every v
is negated on the way out rather than hiding a transform attribute in
the markup.
"""

from __future__ import annotations

from math import pi

from .geometry import DesignParameters, generate_pitch_curve, generate_profile, pitch_point
from .units import MM, fmt9

STROKE = 0.25          # mm
PAD = 2.0              # mm of margin around the drawing
ROLLER_PSIS = (0.0, pi / 2.0, pi)


def _path(points_mm: list[tuple[float, float]], close: bool) -> str:
    parts = [f"M {fmt9(points_mm[0][0])} {fmt9(-points_mm[0][1])}"]
    for u, v in points_mm[1:]:
        parts.append(f"L {fmt9(u)} {fmt9(-v)}")
    if close:
        parts.append("Z")
    return " ".join(parts)


def render_svg(params: DesignParameters, n_samples: int = 721) -> str:
    """Draw the contact profile, the pitch curve (dashed) and the roller
    at three camshaft orientations."""
    profile = generate_profile(params, n_samples=n_samples)
    pitch = generate_pitch_curve(params, n_samples=n_samples)
    prof_mm = [(pt.u / MM, pt.v / MM) for pt in profile.samples]
    pitch_mm = [(pt.u / MM, pt.v / MM) for pt in pitch]
    a4_mm = params.a4 / MM
    circles = []
    for psi in ROLLER_PSIS:
        pp = pitch_point(params, psi)
        circles.append((pp.u / MM, pp.v / MM))

    xs = [u for u, _ in prof_mm + pitch_mm] + [cu + s * a4_mm for cu, _ in circles for s in (-1, 1)]
    ys = [v for _, v in prof_mm + pitch_mm] + [cv + s * a4_mm for _, cv in circles for s in (-1, 1)]
    x0, x1 = min(xs) - PAD, max(xs) + PAD
    # flipped axis: top of the viewport is the largest v
    y0, y1 = -max(ys) - PAD, -min(ys) + PAD
    w, h = x1 - x0, y1 - y0

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt9(w)}mm" height="{fmt9(h)}mm" '
        f'viewBox="{fmt9(x0)} {fmt9(y0)} {fmt9(w)} {fmt9(h)}">',
        f"  <title>cam profile p={fmt9(params.p / MM)}mm eta={fmt9(params.eta)} "
        f"a4={fmt9(a4_mm)}mm</title>",
        f'  <path class="profile" fill="none" stroke="#000" stroke-width="{STROKE}" '
        f'd="{_path(prof_mm, close=True)}"/>',
        f'  <path class="pitch" fill="none" stroke="#777" stroke-width="{STROKE}" '
        f'stroke-dasharray="1.5 1.5" d="{_path(pitch_mm, close=False)}"/>',
    ]
    for cu, cv in circles:
        lines.append(
            f'  <circle class="roller" fill="none" stroke="#b33" '
            f'stroke-width="{STROKE}" cx="{fmt9(cu)}" cy="{fmt9(-cv)}" r="{fmt9(a4_mm)}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
