"""Shape of the safeguarded step rule as the gradient norm sweeps upward.

The update takes one of three forms depending on where ||g|| falls
relative to 1/gamma1 and 1/gamma2: amplified (gamma1*alpha*g), normalized
(alpha*g/||g||), or damped (gamma2*alpha*g).  Plotted as step length
against gradient norm this is a ramp, a plateau, then a steeper ramp,
and the pieces meet continuously at both knots.  This script prints the
curve for two parameter pairs and checks the knots numerically.
"""

import numpy as np

from trish.core import TrishParams, classify_case, step_norm


def print_curve(params: TrishParams, alpha: float) -> None:
    lo, hi = params.lower_threshold, params.upper_threshold
    print(f"\ngamma1={params.gamma1}, gamma2={params.gamma2}, alpha={alpha}")
    print(f"normalized band: ||g|| in [{lo:.4f}, {hi:.4f}], step length {alpha} there")
    print(f"{'||g||':>8} {'step':>8} {'case':>5}  profile")
    scale = 40.0 / step_norm(hi * 2.0, alpha, params)
    for g_norm in np.linspace(0.0, hi * 2.0, 21):
        length = step_norm(float(g_norm), alpha, params)
        case = classify_case(float(g_norm), params)
        bar = "#" * int(round(length * scale))
        print(f"{g_norm:8.3f} {length:8.4f} {int(case):>5}  {bar}")


def check_knots(params: TrishParams, alpha: float) -> None:
    for name, knot in (("1/gamma1", params.lower_threshold),
                       ("1/gamma2", params.upper_threshold)):
        below = step_norm(knot - 1e-9, alpha, params)
        above = step_norm(knot + 1e-9, alpha, params)
        print(f"  at {name} = {knot:.4f}: jump = {abs(above - below):.2e}")


def main() -> None:
    for gamma1, gamma2, alpha in ((2.0, 0.5, 0.3), (8.0, 3.2, 0.1)):
        params = TrishParams(gamma1, gamma2)
        print_curve(params, alpha)
        print("continuity at the knots:")
        check_knots(params, alpha)
    print("\nThe plateau is the trust-region flavor: once the gradient is")
    print("large enough to be distrusted, the step length stops growing,")
    print("and beyond the band it shrinks relative to a plain SG step.")


if __name__ == "__main__":
    main()
