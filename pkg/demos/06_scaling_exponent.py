# How the MFPT scales with network size
# =====================================
#
# <T> ~ N**eta with eta = 1 + log4(theta + 1).  Larger theta (less reciprocal
# weights, walkers drift outward) makes trapping slower.
from recipwalk import run_scaling_fit
from recipwalk.export import scaling_csv

for theta in (0.5, 1.0, 3.0):
    fit = run_scaling_fit(theta, 8, 12)
    print(
        f"theta={theta}: successive slope {fit.successive_slope:.6f}, "
        f"least squares {fit.fitted_exponent:.6f}, predicted {fit.predicted_exponent:.6f}"
    )

print(scaling_csv(run_scaling_fit(1.0, 1, 12)))
