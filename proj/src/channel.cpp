#include "relaybf/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace relaybf {

void NetworkConfig::validate() const {
    if (n_t < 1) throw std::invalid_argument("NetworkConfig: n_t must be >= 1");
    if (relay_antennas.empty())
        throw std::invalid_argument("NetworkConfig: need at least one relay");
    if (relay_antennas.size() != p_relay.size())
        throw std::invalid_argument("NetworkConfig: relay_antennas / p_relay length mismatch");
    for (int m : relay_antennas)
        if (m < 1) throw std::invalid_argument("NetworkConfig: relay antenna count must be >= 1");
    if (p_s < 0.0) throw std::invalid_argument("NetworkConfig: p_s < 0");
    for (double p : p_relay)
        if (p < 0.0) throw std::invalid_argument("NetworkConfig: relay power < 0");
    if (sigma2_r <= 0.0 || sigma2_d <= 0.0)
        throw std::invalid_argument("NetworkConfig: noise variances must be positive");
    if (rho < 0.0 || rho >= 1.0)
        throw std::invalid_argument("NetworkConfig: rho must lie in [0, 1)");
}

std::vector<double> ChannelRealization::f_norms() const {
    std::vector<double> out(f_tilde.size());
    for (std::size_t i = 0; i < f_tilde.size(); ++i) out[i] = f_tilde[i].norm();
    return out;
}

ChannelRealization ChannelRealization::perfect() const {
    ChannelRealization out = *this;
    for (double& e : out.eps) e = 0.0;
    return out;
}

ChannelRealization generate_channels(const NetworkConfig& config, std::uint64_t seed) {
    config.validate();
    const int r = config.num_relays();

    for (std::uint64_t attempt = 0;; ++attempt) {
        GaussianSource gen(seed + 0x9e3779b97f4a7c15ULL * attempt);
        ChannelRealization ch;
        ch.seed = seed;
        ch.h.reserve(r);
        ch.f_tilde.reserve(r);
        ch.eps.resize(r);

        bool degenerate = false;
        for (int i = 0; i < r; ++i) {
            const int m = config.relay_antennas[i];
            CMatrix hi(m, config.n_t);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < config.n_t; ++b) hi(a, b) = gen.cnormal();
            CVector fi(m);
            for (int a = 0; a < m; ++a) fi(a) = gen.cnormal();
            if (fi.norm() == 0.0) {  // astronomically unlikely; redraw all
                degenerate = true;
                break;
            }
            ch.eps[i] = std::sqrt(config.rho) * fi.norm();
            ch.h.push_back(std::move(hi));
            ch.f_tilde.push_back(std::move(fi));
        }
        if (!degenerate) return ch;
    }
}

VertexSet vertex_set(const ChannelRealization& ch) {
    const int r = ch.num_relays();
    if (r > 16) throw std::invalid_argument("vertex_set: R > 16 would enumerate 2^R vertices");
    for (int i = 0; i < r; ++i)
        if (ch.eps[i] > ch.f_tilde[i].norm())
            throw std::invalid_argument("vertex_set: eps exceeds ||f_tilde||");

    VertexSet vs;
    const int count = 1 << r;
    vs.vertices.reserve(count);
    for (int mask = 0; mask < count; ++mask) {
        RVector v(r);
        for (int i = 0; i < r; ++i) {
            const double base = ch.f_tilde[i].norm();
            v(i) = (mask >> i) & 1 ? base + ch.eps[i] : base - ch.eps[i];
        }
        vs.vertices.push_back(std::move(v));
    }
    return vs;
}

EffectiveGains effective_gains(const ChannelRealization& ch, const CVector& g) {
    const int r = ch.num_relays();
    EffectiveGains eg;
    eg.u_norms.resize(r);
    eg.w.resize(r);
    for (int i = 0; i < r; ++i) {
        if (ch.h[i].cols() != g.size())
            throw std::invalid_argument("effective_gains: g length does not match H_i columns");
        const double n = (ch.h[i] * g).norm();
        eg.u_norms(i) = n;
        eg.w(i) = n * n;
    }
    return eg;
}

}  // namespace relaybf
