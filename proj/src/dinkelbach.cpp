#include "relaybf/dinkelbach.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relaybf {

namespace {

SocpSubproblem make_subproblem(const RVector& u_norms, const VertexSet& vertices,
                               const SnrContext& ctx, double gamma) {
    SocpSubproblem sub;
    sub.u_norms = u_norms;
    sub.vertices = vertices;
    sub.caps = ctx.caps();
    sub.gamma = gamma;
    sub.sigma2_r = ctx.sigma2_r;
    sub.sigma2_d = ctx.sigma2_d;
    return sub;
}

}  // namespace

PowerAllocResult dinkelbach_solve(const RVector& u_norms, const VertexSet& vertices,
                                  const SnrContext& ctx, double delta1, int max_iters) {
    if (delta1 <= 0.0) throw std::invalid_argument("dinkelbach_solve: delta1 must be > 0");
    SnrContext local = ctx;
    local.u_norms = u_norms;
    const RVector caps = local.caps();

    PowerAllocResult out;
    if (u_norms.maxCoeff() <= 0.0) {  // nulled source beam: no signal path
        out.c = caps;
        out.gamma = 0.0;
        return out;
    }

    RVector c = caps;  // full-power start
    double gamma = worst_case_snr(c, vertices, local).first;

    for (int k = 1; k <= max_iters; ++k) {
        const SocpResult sub = solve_socp(make_subproblem(u_norms, vertices, local, gamma));
        out.history.emplace_back(gamma, sub.tau);
        out.iterations = k;

        const double gamma_new = worst_case_snr(sub.c, vertices, local).first;
        if (gamma_new >= gamma) {
            c = sub.c;
            gamma = gamma_new;
        }
        if (sub.tau <= delta1) {
            out.c = c;
            out.gamma = gamma;
            return out;
        }
    }

    out.c = c;
    out.gamma = gamma;
    out.converged = false;
    std::ostringstream msg;
    msg << "dinkelbach_solve: iteration cap " << max_iters << " reached; history:";
    for (const auto& [g, t] : out.history) msg << " (" << g << ", " << t << ")";
    throw std::runtime_error(msg.str());
}

PowerAllocResult bisection_solve(const RVector& u_norms, const VertexSet& vertices,
                                 const SnrContext& ctx, double delta1, double gamma_lo,
                                 double gamma_hi) {
    if (delta1 <= 0.0) throw std::invalid_argument("bisection_solve: delta1 must be > 0");
    if (gamma_hi < gamma_lo) throw std::invalid_argument("bisection_solve: empty bracket");
    SnrContext local = ctx;
    local.u_norms = u_norms;
    const RVector caps = local.caps();

    PowerAllocResult out;
    out.c = caps;
    if (u_norms.maxCoeff() <= 0.0) {
        out.gamma = 0.0;
        return out;
    }
    if (gamma_hi == gamma_lo) {
        out.gamma = worst_case_snr(caps, vertices, local).first;
        return out;
    }

    // The upper end must be unachievable, otherwise the bracket is invalid.
    {
        const SocpResult probe =
            solve_socp(make_subproblem(u_norms, vertices, local, gamma_hi));
        if (probe.tau > 1e-6 * (1.0 + gamma_hi)) {
            std::ostringstream msg;
            msg << "bisection_solve: gamma_hi " << gamma_hi
                << " is feasible (tau = " << probe.tau << "); bracket invalid";
            throw std::invalid_argument(msg.str());
        }
    }

    double lo = gamma_lo, hi = gamma_hi;
    bool have_feasible = false;
    RVector best_c = caps;
    while (hi - lo > delta1) {
        const double mid = 0.5 * (lo + hi);
        const SocpResult sub = solve_socp(make_subproblem(u_norms, vertices, local, mid));
        out.iterations += 1;
        if (sub.tau >= 0.0) {
            lo = mid;
            best_c = sub.c;
            have_feasible = true;
        } else {
            hi = mid;
        }
        out.history.emplace_back(lo, sub.tau);
    }

    out.c = have_feasible ? best_c : caps;
    out.gamma = worst_case_snr(out.c, vertices, local).first;
    return out;
}

}  // namespace relaybf
