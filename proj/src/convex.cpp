#include "relaybf/convex.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relaybf {

SolverStats& SolverStats::instance() {
    static SolverStats stats;
    return stats;
}

namespace {

// Honors RELAYBF_DUMP_CONIC=<dir>: writes each solved problem as a
// plain-text coefficient file for cross-checking against other solvers.
void maybe_dump(const conic::Problem& prob, const char* kind) {
    static const char* dir = std::getenv("RELAYBF_DUMP_CONIC");
    if (!dir) return;
    static std::atomic<long> counter{0};
    std::ostringstream name;
    name << dir << "/" << kind << "_" << counter.fetch_add(1) << ".txt";
    std::ofstream os(name.str());
    if (os) prob.dump(os);
}

std::vector<RVector> dedupe_vertices(const VertexSet& vs) {
    std::vector<RVector> out;
    for (const auto& v : vs.vertices) {
        bool seen = false;
        for (const auto& u : out)
            if (u.size() == v.size() && (u - v).cwiseAbs().maxCoeff() == 0.0) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(v);
    }
    return out;
}

}  // namespace

SocpResult solve_socp(const SocpSubproblem& sub, const conic::SolverOptions& opts) {
    const int r = static_cast<int>(sub.u_norms.size());
    if (sub.caps.size() != r) throw std::invalid_argument("solve_socp: caps length");
    if (sub.gamma < 0.0) throw std::invalid_argument("solve_socp: negative gamma");
    const std::vector<RVector> verts = dedupe_vertices(sub.vertices);

    const int n = r + 1;  // variables (c, t)
    const double sq_gamma = std::sqrt(sub.gamma);
    const double sig_r = std::sqrt(sub.sigma2_r);
    const double sig_d = std::sqrt(sub.sigma2_d);
    const bool linear_only = sq_gamma == 0.0;

    const int soc_dim = r + 2;
    const int m = 2 * r + (linear_only ? static_cast<int>(verts.size())
                                       : static_cast<int>(verts.size()) * soc_dim);

    conic::Problem prob;
    prob.c = RVector::Zero(n);
    prob.c(r) = -1.0;  // maximize t
    prob.a.resize(0, n);
    prob.b.resize(0);
    prob.g = RMatrix::Zero(m, n);
    prob.h = RVector::Zero(m);

    int row = 0;
    prob.cones.push_back({conic::ConeType::NonNegative, 2 * r});
    for (int i = 0; i < r; ++i) {  // c_i >= 0
        prob.g(row, i) = -1.0;
        prob.h(row) = 0.0;
        ++row;
    }
    for (int i = 0; i < r; ++i) {  // c_i <= cap_i
        prob.g(row, i) = 1.0;
        prob.h(row) = sub.caps(i);
        ++row;
    }
    for (const auto& f : verts) {
        // s0 = sum_i f_i ||u_i|| c_i - t
        prob.g.row(row).head(r) = -(f.array() * sub.u_norms.array()).matrix().transpose();
        prob.g(row, r) = 1.0;
        prob.h(row) = 0.0;
        ++row;
        if (!linear_only) {
            for (int i = 0; i < r; ++i) {  // s_{1+i} = sqrt(g) sig_r f_i c_i
                prob.g(row, i) = -sq_gamma * sig_r * f(i);
                ++row;
            }
            prob.h(row) = sq_gamma * sig_d;  // s_last = sqrt(g) sig_d
            ++row;
        }
    }
    if (linear_only) {
        prob.cones[0].dim = m;  // all rows are one orthant block
    } else {
        for (std::size_t k = 0; k < verts.size(); ++k)
            prob.cones.push_back({conic::ConeType::SecondOrder, soc_dim});
    }

    maybe_dump(prob, "socp");
    SolverStats::instance().socp_solves.fetch_add(1);
    const conic::Solution sol = conic::solve(prob, opts);
    if (sol.status != conic::SolveStatus::Optimal) {
        SolverStats::instance().uncertified.fetch_add(1);
        std::ostringstream msg;
        msg << "solve_socp: not certified (status " << static_cast<int>(sol.status)
            << ", gap " << sol.gap << ", pres " << sol.pres << ", dres " << sol.dres
            << ", iters " << sol.iterations << ")";
        throw std::runtime_error(msg.str());
    }

    SocpResult out;
    out.c = sol.x.head(r).cwiseMax(RVector::Zero(r)).cwiseMin(sub.caps);
    out.tau = sol.x(r);
    out.gap = sol.gap;
    out.rel_gap = sol.rel_gap;
    out.iterations = sol.iterations;
    return out;
}

void RateProfileSdp::validate() const {
    const int r = static_cast<int>(gram_list.size());
    if (r == 0) throw std::invalid_argument("RateProfileSdp: empty gram list");
    if (omega.size() != r) throw std::invalid_argument("RateProfileSdp: omega length");
    if (std::abs(omega.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("RateProfileSdp: omega must sum to 1");
    if ((omega.array() < -1e-12).any())
        throw std::invalid_argument("RateProfileSdp: omega must be nonnegative");
    const long n = gram_list[0].rows();
    for (const auto& a : gram_list) {
        if (a.rows() != n || a.cols() != n)
            throw std::invalid_argument("RateProfileSdp: gram size mismatch");
        const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
        if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
            throw std::invalid_argument("RateProfileSdp: gram not Hermitian");
    }
    if (p_s <= 0.0) throw std::invalid_argument("RateProfileSdp: p_s must be positive");
}

namespace {

SdpResult solve_rate_profile_impl(const RateProfileSdp& sdp, bool inequality_profile,
                                  const conic::SolverOptions& opts) {
    sdp.validate();
    const int r = static_cast<int>(sdp.gram_list.size());
    const int nt = static_cast<int>(sdp.gram_list[0].rows());
    const int nv = nt * nt;     // svec(G)
    const int n = nv + 1;       // plus Q

    // Profile rows: tr(A_i G) - omega_i Q = 0 (or >= 0); trace row fixes P_s.
    RMatrix rows(r + 1, n);
    RVector rhs(r + 1);
    for (int i = 0; i < r; ++i) {
        rows.row(i).head(nv) = conic::svec(sdp.gram_list[i]).transpose();
        rows(i, nv) = -sdp.omega(i);
        rhs(i) = 0.0;
    }
    rows.row(r).head(nv) = conic::svec(CMatrix::Identity(nt, nt)).transpose();
    rows(r, nv) = 0.0;
    rhs(r) = sdp.p_s;

    conic::Problem prob;
    prob.c = RVector::Zero(n);
    prob.c(nv) = -1.0;  // maximize Q

    if (inequality_profile) {
        // tr(A_i G) - omega_i Q >= 0 goes to the orthant; trace stays an
        // equality. The PSD block and the profile rows share G x + s = h.
        prob.a = rows.row(r);
        prob.b = rhs.tail(1);
        prob.g = RMatrix::Zero(nv + r, n);
        prob.h = RVector::Zero(nv + r);
        prob.g.topLeftCorner(nv, nv) = -RMatrix::Identity(nv, nv);
        prob.g.bottomRows(r) = -rows.topRows(r);
        prob.cones.push_back({conic::ConeType::HermitianPsd, nt});
        prob.cones.push_back({conic::ConeType::NonNegative, r});
    } else {
        // Drop linearly dependent equality rows first; an inconsistent
        // dependent row is an immediate infeasibility certificate.
        Eigen::ColPivHouseholderQR<RMatrix> qr(rows.transpose());
        qr.setThreshold(1e-10);
        const int rank = static_cast<int>(qr.rank());
        std::vector<int> keep;
        for (int k = 0; k < rank; ++k)
            keep.push_back(static_cast<int>(qr.colsPermutation().indices()(k)));
        std::sort(keep.begin(), keep.end());
        RMatrix a_red(rank, n);
        RVector b_red(rank);
        for (int k = 0; k < rank; ++k) {
            a_red.row(k) = rows.row(keep[k]);
            b_red(k) = rhs(keep[k]);
        }
        if (rank < r + 1) {
            // Check dropped rows for consistency against the kept span.
            Eigen::ColPivHouseholderQR<RMatrix> qr_red(a_red.transpose());
            for (int i = 0; i < r + 1; ++i) {
                if (std::find(keep.begin(), keep.end(), i) != keep.end()) continue;
                const RVector coeff = qr_red.solve(rows.row(i).transpose());
                const double pred = coeff.dot(b_red);
                const double res =
                    (a_red.transpose() * coeff - rows.row(i).transpose()).norm();
                if (res > 1e-8 || std::abs(pred - rhs(i)) > 1e-8 * std::max(1.0, sdp.p_s)) {
                    SdpResult out;
                    out.status = SdpStatus::Infeasible;
                    out.infeas_certificate = std::abs(pred - rhs(i));
                    return out;
                }
            }
        }
        prob.a = a_red;
        prob.b = b_red;
        prob.g = RMatrix::Zero(nv, n);
        prob.g.topLeftCorner(nv, nv) = -RMatrix::Identity(nv, nv);
        prob.h = RVector::Zero(nv);
        prob.cones.push_back({conic::ConeType::HermitianPsd, nt});
    }

    maybe_dump(prob, "sdp");
    SolverStats::instance().sdp_solves.fetch_add(1);
    const conic::Solution sol = conic::solve(prob, opts);

    SdpResult out;
    if (sol.status == conic::SolveStatus::PrimalInfeasible) {
        out.status = SdpStatus::Infeasible;
        out.infeas_certificate = -(sdp.p_s * sol.y(sol.y.size() - 1));
        return out;
    }
    if (sol.status != conic::SolveStatus::Optimal) {
        SolverStats::instance().uncertified.fetch_add(1);
        std::ostringstream msg;
        msg << "solve_rate_profile_sdp: not certified (status "
            << static_cast<int>(sol.status) << ", gap " << sol.gap << ", pres " << sol.pres
            << ", dres " << sol.dres << ")";
        throw std::runtime_error(msg.str());
    }
    out.status = SdpStatus::Optimal;
    CMatrix g = conic::smat(sol.x.head(nv), nt);
    out.g_matrix = 0.5 * (g + g.adjoint());
    out.q = sol.x(nv);
    out.gap = sol.gap;
    out.iterations = sol.iterations;
    return out;
}

}  // namespace

SdpResult solve_rate_profile_sdp(const RateProfileSdp& sdp, const conic::SolverOptions& opts) {
    return solve_rate_profile_impl(sdp, false, opts);
}

SdpResult solve_rate_profile_sdp_hull(const RateProfileSdp& sdp,
                                      const conic::SolverOptions& opts) {
    return solve_rate_profile_impl(sdp, true, opts);
}

RankOneExtract rank_one_extract(const CMatrix& g_matrix, double p_s) {
    const HermitianEig eig = jacobi_eig(g_matrix, 1e-6);
    if (eig.values(0) <= 0.0)
        throw std::invalid_argument("rank_one_extract: matrix has no positive eigenvalue");
    RankOneExtract out;
    out.eig_ratio =
        eig.values.size() > 1 ? std::max(0.0, eig.values(1)) / eig.values(0) : 0.0;
    out.degenerate = out.eig_ratio > 1e-4;
    if (out.degenerate) SolverStats::instance().rank_warnings.fetch_add(1);
    CVector v = canonical_phase(eig.vectors.col(0));
    out.g = std::sqrt(p_s) * v;  // exact power normalization
    return out;
}

}  // namespace relaybf
