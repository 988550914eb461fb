"""Render every bundled design preset as an SVG and tabulate its geometry.

Walks demos/configs/, evaluates each design config, prints one summary row
per design (extended angle, pressure-angle extremes, constraint verdicts)
and writes the cam profile drawings to demos/output/.
"""

import os
from glob import glob
from math import degrees

from slideocam.config import design_from_config, load_json_file
from slideocam.geometry import extended_angle
from slideocam.kinetostatics import active_interval, pressure_angle_extremes
from slideocam.svgout import render_svg
from slideocam.synthesis import check_constraints

HERE = os.path.dirname(os.path.abspath(__file__))
CONFIG_DIR = os.path.join(HERE, "configs")
OUTPUT_DIR = os.path.join(HERE, "output")


def summarize(name, params):
    delta = extended_angle(params)
    interval = active_interval(params, delta)
    mu_max, mu_min = pressure_angle_extremes(params, interval)
    report = check_constraints(params)
    failed = [c.id for c in report.entries if not c.satisfied]
    verdict = "all ok" if not failed else "flagged: " + ", ".join(failed)
    print(f"{name:<16} p={params.p * 1e3:5.1f}mm  eta={params.eta:.4f}  "
          f"a4={params.a4 * 1e3:4.2f}mm  delta_ext={degrees(delta):8.3f}deg  "
          f"mu=[{degrees(mu_min):6.3f}, {degrees(mu_max):6.3f}]deg  {verdict}")


def main():
    os.makedirs(OUTPUT_DIR, exist_ok=True)
    configs = sorted(glob(os.path.join(CONFIG_DIR, "*.json")))
    print("design summaries")
    print("-" * 100)
    written = []
    for path in configs:
        name = os.path.splitext(os.path.basename(path))[0]
        doc = load_json_file(path)
        if "design" not in doc:
            continue  # synthesis requests have no profile to draw
        params, _ = design_from_config(doc)
        summarize(name, params)
        svg_path = os.path.join(OUTPUT_DIR, name + ".svg")
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(render_svg(params))
        written.append(svg_path)
    print()
    print(f"wrote {len(written)} drawings:")
    for path in written:
        print("  " + os.path.relpath(path, HERE))


if __name__ == "__main__":
    main()
