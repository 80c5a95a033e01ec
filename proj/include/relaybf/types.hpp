#pragma once

#include <cstdint>
#include <vector>

#include "relaybf/hermitian_eig.hpp"

namespace relaybf {

/// Static parameters of one two-hop relay network: antenna counts, power
/// budgets (linear units), noise variances and the channel-uncertainty
/// ratio rho in [0, 1).
struct NetworkConfig {
    int n_t = 1;                        // source antennas
    std::vector<int> relay_antennas;    // M_1..M_R
    double p_s = 1.0;                   // source power budget
    std::vector<double> p_relay;        // per-relay power budgets
    double sigma2_r = 1.0;              // relay noise variance
    double sigma2_d = 1.0;              // destination noise variance
    double rho = 0.0;                   // uncertainty ratio

    int num_relays() const { return static_cast<int>(relay_antennas.size()); }
    void validate() const;              // throws std::invalid_argument
};

/// One Monte Carlo channel draw: first-hop matrices, second-hop estimates
/// and the per-relay error radii. Immutable after construction.
struct ChannelRealization {
    std::vector<CMatrix> h;        // h[i]: M_i x N_T
    std::vector<CVector> f_tilde;  // f_tilde[i]: M_i
    std::vector<double> eps;       // error radii, eps[i] <= ||f_tilde[i]||
    std::uint64_t seed = 0;

    int num_relays() const { return static_cast<int>(h.size()); }
    std::vector<double> f_norms() const;

    /// Copy with all error radii forced to zero (perfect-CSI view).
    ChannelRealization perfect() const;
};

/// The 2^R worst-case second-hop magnitude vectors, one per sign pattern,
/// in binary counting order (bit i = sign for relay i, 0 -> minus).
struct VertexSet {
    std::vector<RVector> vertices;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
};

/// Per-relay effective gains of a fixed source vector: u_i = H_i g.
struct EffectiveGains {
    RVector u_norms;  // ||H_i g||
    RVector w;        // ||H_i g||^2
};

/// A complete design: source vector, power allocation, assembled relay
/// matrices and its achieved worst-case SNR.
struct BeamformingSolution {
    CVector g;
    RVector c;
    std::vector<CMatrix> relay_matrices;
    double worst_snr = 0.0;
    int worst_vertex = 0;
};

}  // namespace relaybf
