#include "relaybf/snr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relaybf/channel.hpp"

namespace relaybf {

RVector SnrContext::caps() const {
    RVector out(u_norms.size());
    for (int i = 0; i < u_norms.size(); ++i)
        out(i) = std::sqrt(p_relay(i) / (sigma2_r + u_norms(i) * u_norms(i)));
    return out;
}

SnrContext SnrContext::from(const NetworkConfig& config, const EffectiveGains& gains) {
    SnrContext ctx;
    ctx.u_norms = gains.u_norms;
    ctx.sigma2_r = config.sigma2_r;
    ctx.sigma2_d = config.sigma2_d;
    ctx.p_relay = Eigen::Map<const RVector>(config.p_relay.data(),
                                            static_cast<long>(config.p_relay.size()));
    return ctx;
}

double snr_at_vertex(const RVector& c, const RVector& f_eta, const SnrContext& ctx) {
    const int r = ctx.num_relays();
    if (c.size() != r || f_eta.size() != r)
        throw std::invalid_argument("snr_at_vertex: length mismatch");
    double num = 0.0, den = ctx.sigma2_d;
    for (int i = 0; i < r; ++i) {
        num += f_eta(i) * c(i) * ctx.u_norms(i);
        den += ctx.sigma2_r * f_eta(i) * f_eta(i) * c(i) * c(i);
    }
    return num * num / den;
}

std::pair<double, int> worst_case_snr(const RVector& c, const VertexSet& vertices,
                                      const SnrContext& ctx) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int k = 0; k < vertices.num_vertices(); ++k) {
        const double v = snr_at_vertex(c, vertices.vertices[k], ctx);
        if (v < best) {
            best = v;
            arg = k;
        }
    }
    return {best, arg};
}

double vector_channel_snr(const RVector& c, const ChannelRealization& ch, const CVector& g,
                          const std::vector<CVector>& f, double sigma2_r, double sigma2_d) {
    const int r = ch.num_relays();
    if (static_cast<int>(f.size()) != r)
        throw std::invalid_argument("vector_channel_snr: f length mismatch");
    // With B_i = c_i conj(fhat_i) uhat_i^H the second hop enters only
    // through the scalar s_i = f_i^T conj(fhat_i).
    Complex num = 0.0;
    double den = sigma2_d;
    for (int i = 0; i < r; ++i) {
        const double fn = ch.f_tilde[i].norm();
        if (fn == 0.0) continue;
        const CVector fhat = ch.f_tilde[i] / fn;
        const double un = (ch.h[i] * g).norm();
        const Complex s = f[i].transpose() * fhat.conjugate();
        num += c(i) * un * s;
        den += sigma2_r * c(i) * c(i) * std::norm(s);
    }
    return std::norm(num) / den;
}

double sampled_worst_snr(const RVector& c, const ChannelRealization& ch, const CVector& g,
                         int n_samples, std::uint64_t seed, double sigma2_r, double sigma2_d,
                         bool aligned_points) {
    if (n_samples < 1) throw std::invalid_argument("sampled_worst_snr: n_samples < 1");
    const int r = ch.num_relays();
    GaussianSource gen(seed);

    double best = std::numeric_limits<double>::infinity();
    std::vector<CVector> f(r);

    // Random draws uniform in each ball: Gaussian direction and radius
    // scaled by U^(1/(2 M_i)) for a complex M_i-dimensional ball.
    for (int s = 0; s < n_samples; ++s) {
        for (int i = 0; i < r; ++i) {
            const int m = static_cast<int>(ch.f_tilde[i].size());
            CVector d(m);
            for (int k = 0; k < m; ++k) d(k) = gen.cnormal();
            const double dn = d.norm();
            if (dn > 0.0) {
                const double radius =
                    ch.eps[i] * std::pow(gen.uniform01(), 1.0 / (2.0 * m));
                d *= radius / dn;
            }
            f[i] = ch.f_tilde[i] + d;
        }
        best = std::min(best, vector_channel_snr(c, ch, g, f, sigma2_r, sigma2_d));
    }

    if (aligned_points) {
        if (r > 16) throw std::invalid_argument("sampled_worst_snr: R > 16");
        for (int mask = 0; mask < (1 << r); ++mask) {
            for (int i = 0; i < r; ++i) {
                const double fn = ch.f_tilde[i].norm();
                const double sign = (mask >> i) & 1 ? 1.0 : -1.0;
                f[i] = ch.f_tilde[i] * ((fn + sign * ch.eps[i]) / fn);
            }
            best = std::min(best, vector_channel_snr(c, ch, g, f, sigma2_r, sigma2_d));
        }
    }
    return best;
}

RelayMatrices assemble_relay_matrices(const RVector& c, const ChannelRealization& ch,
                                      const CVector& g) {
    const int r = ch.num_relays();
    if (c.size() != r) throw std::invalid_argument("assemble_relay_matrices: bad c length");
    RelayMatrices out;
    out.b.reserve(r);
    out.active.assign(r, true);
    for (int i = 0; i < r; ++i) {
        const CVector u = ch.h[i] * g;
        const double un = u.norm();
        const double fn = ch.f_tilde[i].norm();
        if (fn == 0.0) throw std::invalid_argument("assemble_relay_matrices: zero f_tilde");
        const int m = static_cast<int>(ch.f_tilde[i].size());
        if (un == 0.0) {  // source beam nulls this relay
            out.b.push_back(CMatrix::Zero(m, m));
            out.active[i] = false;
            continue;
        }
        const CVector fhat = ch.f_tilde[i] / fn;
        const CVector uhat = u / un;
        out.b.push_back(c(i) * fhat.conjugate() * uhat.adjoint());
    }
    return out;
}

double relay_power(const CMatrix& b_i, const CVector& u_i, double sigma2_r) {
    if (b_i.cols() != u_i.size()) throw std::invalid_argument("relay_power: shape mismatch");
    return (b_i * u_i).squaredNorm() + sigma2_r * b_i.squaredNorm();
}

}  // namespace relaybf
