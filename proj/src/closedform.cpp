#include "relaybf/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "relaybf/channel.hpp"
#include "relaybf/dinkelbach.hpp"
#include "relaybf/snr.hpp"

namespace relaybf {

namespace {

// Unit-noise recipe: sort phi_i = ||u_i|| / (||f_i|| cap_i) descending,
// saturate the leading relays, set the rest proportional to ||u_i||.
JingSolution jing_unit(const RVector& u, const RVector& f, const RVector& p) {
    const int r = static_cast<int>(u.size());
    RVector cap(r), phi(r), a(r), b(r);
    for (int i = 0; i < r; ++i) {
        cap(i) = std::sqrt(p(i) / (1.0 + u(i) * u(i)));
        a(i) = f(i) * cap(i);
        b(i) = f(i) * u(i) * cap(i);
        phi(i) = u(i) * std::sqrt(1.0 + u(i) * u(i)) / (f(i) * std::sqrt(p(i)));
    }

    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int i, int j) { return phi(i) > phi(j); });

    double sum_a2 = 0.0, sum_b = 0.0;
    int j0 = r;
    double lambda_j0 = 0.0;
    for (int j = 1; j <= r; ++j) {
        sum_a2 += a(perm[j - 1]) * a(perm[j - 1]);
        sum_b += b(perm[j - 1]);
        const double lambda_j = (1.0 + sum_a2) / sum_b;
        if (j == r || lambda_j < 1.0 / phi(perm[j])) {
            j0 = j;
            lambda_j0 = lambda_j;
            break;
        }
    }

    JingSolution out;
    out.permutation = perm;
    out.j0 = j0;
    out.lambda_j0 = lambda_j0;
    out.c.resize(r);
    for (int k = 0; k < r; ++k) {
        const int i = perm[k];
        const double upsilon = (k < j0) ? 1.0 : std::min(1.0, lambda_j0 * phi(i));
        out.c(i) = upsilon * cap(i);
    }
    return out;
}

}  // namespace

JingSolution jing_power_allocation(const RVector& u_norms, const RVector& f_norms,
                                   const RVector& p_relay, double sigma2_r,
                                   double sigma2_d) {
    const int r = static_cast<int>(u_norms.size());
    if (f_norms.size() != r || p_relay.size() != r)
        throw std::invalid_argument("jing_power_allocation: length mismatch");
    for (int i = 0; i < r; ++i)
        if (u_norms(i) <= 0.0 || f_norms(i) <= 0.0)
            throw std::invalid_argument("jing_power_allocation: norms must be positive");

    const double sr = std::sqrt(sigma2_r);
    const double sd = std::sqrt(sigma2_d);
    return jing_unit(u_norms / sr, f_norms * (sr / sd), p_relay / sigma2_r);
}

double perfect_snr(const RVector& c, const RVector& u_norms, const RVector& f_norms,
                   double sigma2_r, double sigma2_d) {
    SnrContext ctx;
    ctx.u_norms = u_norms;
    ctx.sigma2_r = sigma2_r;
    ctx.sigma2_d = sigma2_d;
    ctx.p_relay = RVector::Zero(u_norms.size());
    return snr_at_vertex(c, f_norms, ctx);
}

namespace {

// Unit direction of the projection of h1 onto span(h2); falls back to
// h2/||h2|| when the projection vanishes (orthogonal channels).
CVector parallel_direction(const CVector& h1, const CVector& h2) {
    const double h2n2 = h2.squaredNorm();
    CVector proj = h2 * ((h2.adjoint() * h1)(0) / h2n2);
    const double pn = proj.norm();
    if (pn > 1e-12 * h1.norm()) return proj / pn;
    return h2 / std::sqrt(h2n2);
}

CVector perp_direction(const CVector& h1, const CVector& h2) {
    const double h2n2 = h2.squaredNorm();
    CVector perp = h1 - h2 * ((h2.adjoint() * h1)(0) / h2n2);
    const double pn = perp.norm();
    if (pn > 1e-12 * h1.norm()) return perp / pn;
    // h1 parallel to h2: any unit vector orthogonal to h2 works (no relay
    // sees it); Gram-Schmidt a basis vector.
    const int n = static_cast<int>(h1.size());
    for (int k = 0; k < n; ++k) {
        CVector e = CVector::Zero(n);
        e(k) = 1.0;
        CVector cand = e - h2 * ((h2.adjoint() * e)(0) / h2n2);
        if (cand.norm() > 1e-6) return cand / cand.norm();
    }
    throw std::logic_error("perp_direction: no orthogonal direction found");
}

}  // namespace

CVector special_case_g(const ChannelRealization& ch, const NetworkConfig& config,
                       SpecialCase which) {
    const double sqrt_ps = std::sqrt(config.p_s);
    switch (which) {
        case SpecialCase::NT1: {
            if (config.n_t != 1) throw std::invalid_argument("special_case_g: N_T != 1");
            CVector g(1);
            g(0) = sqrt_ps;
            return g;
        }
        case SpecialCase::R1: {
            if (ch.num_relays() != 1) throw std::invalid_argument("special_case_g: R != 1");
            const CMatrix gram = ch.h[0].adjoint() * ch.h[0];
            auto [v, lam] = principal_eigvec(gram);
            (void)lam;
            return sqrt_ps * v;
        }
        case SpecialCase::SCALAR_RELAYS: {
            if (ch.num_relays() != 2 || ch.h[0].rows() != 1 || ch.h[1].rows() != 1)
                throw std::invalid_argument("special_case_g: need R = 2 scalar relays");
            const CVector h1 = ch.h[0].row(0).adjoint();  // column vector
            const CVector h2 = ch.h[1].row(0).adjoint();
            const CVector dpar = parallel_direction(h1, h2);
            const CVector dperp = perp_direction(h1, h2);

            const auto g_of = [&](double theta) -> CVector {
                return sqrt_ps * (std::sin(theta) * dpar + std::cos(theta) * dperp);
            };
            const VertexSet vs = vertex_set(ch);
            const auto score = [&](double theta) {
                const CVector g = g_of(theta);
                const EffectiveGains gains = effective_gains(ch, g);
                const SnrContext ctx = SnrContext::from(config, gains);
                return dinkelbach_solve(gains.u_norms, vs, ctx, 1e-5).gamma;
            };

            // Coarse scan then golden-section refinement on the best bracket.
            const double pi_half = 1.5707963267948966;
            const int coarse = 32;
            int best_k = 0;
            double best_val = -1.0;
            for (int k = 0; k <= coarse; ++k) {
                const double v = score(pi_half * k / coarse);
                if (v > best_val) {
                    best_val = v;
                    best_k = k;
                }
            }
            double lo = pi_half * std::max(0, best_k - 1) / coarse;
            double hi = pi_half * std::min(coarse, best_k + 1) / coarse;
            const double gr = 0.6180339887498949;
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = score(x1), f2 = score(x2);
            while (hi - lo > 1e-4) {
                if (f1 < f2) {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + gr * (hi - lo);
                    f2 = score(x2);
                } else {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - gr * (hi - lo);
                    f1 = score(x1);
                }
            }
            const double theta = 0.5 * (lo + hi);
            return score(theta) >= best_val ? g_of(theta) : g_of(pi_half * best_k / coarse);
        }
    }
    throw std::invalid_argument("special_case_g: unknown case");
}

}  // namespace relaybf
