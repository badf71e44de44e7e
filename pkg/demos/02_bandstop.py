"""
Fractional band-stop filters
============================

The band-stop form is the reciprocal (s^alpha + a) / (b s^beta). Its Q is
1 / |T(j omega0)|, i.e. the same number as the band-pass gain.
"""

import math
from pathlib import Path

from foqfilter import (
    Family,
    FoFilterParams,
    FrequencyGrid,
    find_peak,
    magnitude_bp,
    q_factor_bs,
    render_svg,
    sweep,
    write_csv,
)

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

f = FoFilterParams.symmetric(0.99767, 17.11228, 0.92593, Family.BANDSTOP)
print(f"Q(1.5) = {q_factor_bs(f, 1.5):.4f}")
print(f"same params as band-pass, gain at 1.5: {magnitude_bp(f.with_family(Family.BANDPASS), 1.5):.4f}")

grid = FrequencyGrid(1e-2, 1e2, 1000)
samples = sweep(f, grid)
notch = find_peak(samples, notch=True)
print(f"notch at {notch.omega_m:.4f} rad/s, depth {20 * math.log10(notch.peak_magnitude):.1f} dB")

write_csv(samples, out / "bs_reported_design.csv")
render_svg(
    [("band-stop", samples), ("band-pass", sweep(f.with_family(Family.BANDPASS), grid))],
    out / "bs_vs_bp.svg",
    title="Band-stop is the mirror image of band-pass",
)
