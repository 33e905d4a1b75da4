# Closed-form MFPT against direct numerics
# ========================================
#
# The table below is the data behind an "MFPT vs generation" plot for several
# theta values: exact formula next to the dense linear solve.
from recipwalk import NetworkConfig, assemble, breakdown, build_weighted, mfpt_closed, solve_trapping_times

print(f"{'theta':>6} {'g':>2} {'closed':>18} {'solve':>18} {'rel diff':>10}")
for theta in (0.25, 0.5, 1.0, 2.0, 5.0):
    for g in range(1, 6):
        exact = mfpt_closed(g, theta)
        numeric = solve_trapping_times(assemble(build_weighted(NetworkConfig(g, theta)))).average
        print(f"{theta:>6g} {g:>2} {exact:>18.6f} {numeric:>18.6f} {abs(exact - numeric) / exact:>10.1e}")

# Intermediate sums are available too.
print(breakdown(4, 1.0))
