#pragma once

#include <cstdint>
#include <utility>

#include "relaybf/types.hpp"

namespace relaybf {

/// Everything needed to evaluate the scalar SNR expression for a fixed
/// power allocation: effective gains, noise variances and relay budgets.
struct SnrContext {
    RVector u_norms;
    double sigma2_r = 1.0;
    double sigma2_d = 1.0;
    RVector p_relay;

    int num_relays() const { return static_cast<int>(u_norms.size()); }

    /// Per-relay cap sqrt(P_i / (sigma_R^2 + ||u_i||^2)).
    RVector caps() const;

    static SnrContext from(const NetworkConfig& config, const EffectiveGains& gains);
};

/// SNR at one magnitude vertex:
///   (sum_i f_i c_i ||u_i||)^2 / (sigma_R^2 sum_i f_i^2 c_i^2 + sigma_D^2).
double snr_at_vertex(const RVector& c, const RVector& f_eta, const SnrContext& ctx);

/// Minimum of snr_at_vertex over the whole vertex set; ties resolve to the
/// first vertex in canonical order.
std::pair<double, int> worst_case_snr(const RVector& c, const VertexSet& vertices,
                                      const SnrContext& ctx);

/// Full vector-channel SNR of the aligned rank-one design at an explicit
/// second-hop channel f (one vector per relay).
double vector_channel_snr(const RVector& c, const ChannelRealization& ch, const CVector& g,
                          const std::vector<CVector>& f, double sigma2_r, double sigma2_d);

/// Monte Carlo probe of the worst case: minimizes the vector-channel SNR
/// over random error draws uniform in the per-relay balls. The 2^R aligned
/// boundary points are appended when `aligned_points` is true, making the
/// probe attain the exact vertex minimum.
double sampled_worst_snr(const RVector& c, const ChannelRealization& ch, const CVector& g,
                         int n_samples, std::uint64_t seed, double sigma2_r, double sigma2_d,
                         bool aligned_points = true);

/// Rank-one relay matrices B_i = c_i * conj(f_tilde_i)/||f_tilde_i|| *
/// (u_i/||u_i||)^H. A relay with u_i = 0 gets B_i = 0 (inactive).
struct RelayMatrices {
    std::vector<CMatrix> b;
    std::vector<bool> active;
};
RelayMatrices assemble_relay_matrices(const RVector& c, const ChannelRealization& ch,
                                      const CVector& g);

/// Transmit power of one relay: ||B_i u_i||^2 + sigma_R^2 tr(B_i^H B_i).
double relay_power(const CMatrix& b_i, const CVector& u_i, double sigma2_r);

}  // namespace relaybf
