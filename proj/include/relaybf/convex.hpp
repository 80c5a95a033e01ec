#pragma once

#include <atomic>

#include "relaybf/conic.hpp"
#include "relaybf/types.hpp"

namespace relaybf {

/// Global tally of conic solves, used to certify that every solve on the
/// experiment paths closed its duality gap and that degenerate-rank
/// fallbacks stay rare. Thread-safe.
struct SolverStats {
    std::atomic<long> socp_solves{0};
    std::atomic<long> sdp_solves{0};
    std::atomic<long> uncertified{0};      // solves that missed the tolerances
    std::atomic<long> rank_warnings{0};    // rank-one extraction ratio > 1e-4
    std::atomic<long> hull_fallbacks{0};   // intersection fallback activations

    void reset() {
        socp_solves = 0;
        sdp_solves = 0;
        uncertified = 0;
        rank_warnings = 0;
        hull_fallbacks = 0;
    }
    static SolverStats& instance();
};

/// Data of one max-min power-allocation subproblem at a fixed ratio
/// parameter gamma:
///   max_{c,t} t
///   s.t. sum_i f_i c_i ||u_i|| - sqrt(gamma) ||(sigma_R f .* c, sigma_D)|| >= t
///        for every magnitude vertex f, 0 <= c <= caps.
struct SocpSubproblem {
    RVector u_norms;
    VertexSet vertices;
    RVector caps;
    double gamma = 0.0;
    double sigma2_r = 1.0;
    double sigma2_d = 1.0;
};

struct SocpResult {
    RVector c;
    double tau = 0.0;
    double gap = 0.0;
    double rel_gap = 0.0;
    int iterations = 0;
};

/// Solves the subproblem with the embedded interior-point kernel. Throws
/// std::runtime_error with the final gap if the solver does not certify
/// optimality within its iteration budget.
SocpResult solve_socp(const SocpSubproblem& sub, const conic::SolverOptions& opts = {});

/// Pareto intersection program on the normalized-gain profile omega:
///   max Q  s.t.  tr(H_i^H H_i G) = omega_i Q,  tr(G) = P_s,  G >= 0.
struct RateProfileSdp {
    std::vector<CMatrix> gram_list;  // H_i^H H_i, Hermitian PSD
    RVector omega;                   // nonnegative, sums to one
    double p_s = 1.0;

    void validate() const;
};

enum class SdpStatus { Optimal, Infeasible };

struct SdpResult {
    SdpStatus status = SdpStatus::Infeasible;
    CMatrix g_matrix;
    double q = 0.0;
    double gap = 0.0;
    double infeas_certificate = 0.0;  // improving-ray margin when infeasible
    int iterations = 0;
};

SdpResult solve_rate_profile_sdp(const RateProfileSdp& sdp,
                                 const conic::SolverOptions& opts = {});

/// Relaxed variant used as a fallback for degenerate channel geometry:
/// profile constraints as inequalities tr(A_i G) >= omega_i Q. Always
/// feasible for a normalized profile; its optimum is the exit of the ray
/// from the downward closure of the gain region.
SdpResult solve_rate_profile_sdp_hull(const RateProfileSdp& sdp,
                                      const conic::SolverOptions& opts = {});

struct RankOneExtract {
    CVector g;
    double eig_ratio = 0.0;  // lambda_2 / lambda_1
    bool degenerate = false;
};

/// Principal rank-one factor of a PSD matrix, rescaled to ||g||^2 = p_s.
/// Flags (and tallies) eigenvalue ratios above 1e-4.
RankOneExtract rank_one_extract(const CMatrix& g_matrix, double p_s);

}  // namespace relaybf
