"""The sizing loop end to end, on the bundled linear-actuator load case.

Feeds the request in configs/orthoglide_request.json to synthesize(),
prints every trace entry the search produced, then the accepted design
with its margins.  A second run with an absurdly tight pressure-angle
limit shows the infeasible path and its trace.
"""

import os
from math import degrees

from slideocam.config import load_json_file, request_from_config
from slideocam.errors import Infeasible
from slideocam.synthesis import synthesize

HERE = os.path.dirname(os.path.abspath(__file__))
MM = 1e-3


def show_trace(trace):
    print("  pitch    n   mu_max        verdict              phi_bear_min  phi_cam_min")
    for t in trace:
        mu = "-" if t.mu_max is None else f"{degrees(t.mu_max):7.3f} deg"
        print(f"  {t.pitch / MM:5.1f}mm  {t.n_cams}  {mu:>11}   "
              f"{t.verdict:<20} {t.phi_bear_min / MM:7.4f}mm   {t.phi_cam_min / MM:7.4f}mm")


def main():
    request = request_from_config(
        load_json_file(os.path.join(HERE, "configs", "orthoglide_request.json")))

    print(f"request: Mt = {request.Mt} N.m, base pitch = {request.p0 / MM:.0f} mm, "
          f"mu limit = {degrees(request.mu_limit):.0f} deg")
    outcome = synthesize(request)
    print()
    print("search trace")
    show_trace(outcome.trace)

    d = outcome.design
    print()
    print("accepted design")
    print(f"  pitch {d.p / MM:.1f} mm, {d.n} cam(s), eta = {d.eta}, "
          f"roller radius {d.a4 / MM:.2f} mm, camshaft radius {d.b / MM:.4f} mm, "
          f"width {d.width_a / MM:.1f} mm")
    print(f"  shaft diameters: cam {outcome.diameters.phi_cam / MM:.4f} mm, "
          f"bearing {outcome.diameters.phi_bear / MM:.4f} mm")
    print(f"  mu_max = {degrees(outcome.kinetostatics.mu_max):.4f} deg, "
          f"P_peak = {outcome.hertz.P_peak / 1e6:.1f} MPa")
    print("  margins:")
    for check in outcome.constraints.entries:
        print(f"    {check.id:<20} {check.margin:+.5f}")

    print()
    print("same request, mu limit forced down to 0.1 deg:")
    tight = request_from_config(
        dict(load_json_file(os.path.join(HERE, "configs", "orthoglide_request.json")),
             mu_limit_deg=0.1, max_cams=2, max_pitch_steps=2))
    try:
        synthesize(tight)
        print("  unexpectedly feasible")
    except Infeasible as exc:
        print("  infeasible, as it should be; the search tried:")
        show_trace(exc.trace)


if __name__ == "__main__":
    main()
