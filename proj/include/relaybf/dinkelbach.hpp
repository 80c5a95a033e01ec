#pragma once

#include <utility>
#include <vector>

#include "relaybf/convex.hpp"
#include "relaybf/snr.hpp"

namespace relaybf {

/// Outcome of a power-allocation solve. `history` holds one
/// (gamma, tau) pair per subproblem solve; for the ratio iteration the
/// gamma column is nondecreasing.
struct PowerAllocResult {
    RVector c;
    double gamma = 0.0;
    int iterations = 0;
    std::vector<std::pair<double, double>> history;
    bool converged = true;
};

/// Max-min power allocation by ratio (Dinkelbach-type) iteration: start at
/// full power, alternate the parametric subproblem with the exact
/// worst-case SNR update, stop once the parametric value drops to delta1.
/// An all-zero gain vector returns c = caps with gamma 0.
PowerAllocResult dinkelbach_solve(const RVector& u_norms, const VertexSet& vertices,
                                  const SnrContext& ctx, double delta1,
                                  int max_iters = 50);

/// Bisection comparator on the achievable worst-case SNR: a trial gamma is
/// feasible iff the parametric subproblem value is nonnegative. Requires
/// gamma_hi to be a strict upper bound (diagnosed by one probe solve).
PowerAllocResult bisection_solve(const RVector& u_norms, const VertexSet& vertices,
                                 const SnrContext& ctx, double delta1, double gamma_lo,
                                 double gamma_hi);

}  // namespace relaybf
