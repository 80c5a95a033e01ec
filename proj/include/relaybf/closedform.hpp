#pragma once

#include "relaybf/hermitian_eig.hpp"
#include "relaybf/types.hpp"

namespace relaybf {

/// Result of the perfect-CSI analytical power allocation: the allocation
/// itself plus the sort-and-threshold bookkeeping (permutation by
/// descending phi, the saturation index j0 and its multiplier).
struct JingSolution {
    RVector c;
    std::vector<int> permutation;
    int j0 = 0;
    double lambda_j0 = 0.0;
};

/// Analytical max-SNR power allocation under perfect CSI. General noise
/// variances are handled by rescaling to the unit-noise form the recipe is
/// stated in (u' = u/sigma_R, f' = f sigma_R/sigma_D, P' = P/sigma_R^2);
/// the caps and the optimal c are invariant under that substitution.
JingSolution jing_power_allocation(const RVector& u_norms, const RVector& f_norms,
                                   const RVector& p_relay, double sigma2_r, double sigma2_d);

/// Perfect-CSI SNR: (sum c_i ||f_i|| ||u_i||)^2
///                  / (sigma_R^2 sum c_i^2 ||f_i||^2 + sigma_D^2).
double perfect_snr(const RVector& c, const RVector& u_norms, const RVector& f_norms,
                   double sigma2_r, double sigma2_d);

enum class SpecialCase { NT1, R1, SCALAR_RELAYS };

/// Optimal source vector for the three special configurations:
///   NT1          g = sqrt(P_s) (scalar source),
///   R1           g = sqrt(P_s) * principal eigenvector of H_1^H H_1,
///   SCALAR_RELAYS  R = 2, M_1 = M_2 = 1: one-dimensional search over the
///                  two-term projection parameterization g(theta).
/// Throws std::invalid_argument if the realization does not match the case.
CVector special_case_g(const ChannelRealization& ch, const NetworkConfig& config,
                       SpecialCase which);

}  // namespace relaybf
