# Exact trapping times from the fundamental matrix
# ================================================
#
# With the trap at the hub (node 1), T solves (I - R̄) T = 1.  The explicit
# inverse K = (I - R̄)^-1 gives the same numbers as row sums.
import numpy as np

from recipwalk import NetworkConfig, assemble, build_weighted, fundamental_entry_sum, solve_trapping_times

system = assemble(build_weighted(NetworkConfig(g=1, theta=1.0)))
print("transition matrix, g=1, theta=1")
print(system.transition)

solved = solve_trapping_times(system)
summed = fundamental_entry_sum(system)
print("T_i by LU solve :", solved.per_node)
print("T_i by K row sum:", summed.per_node)
print("<T> =", solved.average)

# Every trapping time is multiplied by 4(theta+1) when the network grows.
theta = 0.5
t3 = solve_trapping_times(assemble(build_weighted(NetworkConfig(3, theta)))).per_node
t4 = solve_trapping_times(assemble(build_weighted(NetworkConfig(4, theta)))).per_node
ratios = np.array([t4[i] / t3[i] for i in t3])
print(f"T(4)/T(3): min {ratios.min():.12f}, max {ratios.max():.12f}, 4(θ+1) = {4 * (theta + 1)}")
