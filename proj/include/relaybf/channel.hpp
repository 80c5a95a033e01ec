#pragma once

#include <cstdint>
#include <random>

#include "relaybf/types.hpp"

namespace relaybf {

/// Deterministic standard-normal sampler. mt19937_64 supplies the raw bits
/// and the Box-Muller transform is spelled out here so that streams are
/// bit-identical across platforms (std::normal_distribution is
/// implementation-defined).
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double uniform01() {  // in (0, 1]
        return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// CN(0,1): real and imaginary parts each N(0, 1/2).
    Complex cnormal() {
        const double s = std::sqrt(0.5);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    std::mt19937_64& raw() { return rng_; }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Draws one channel realization: i.i.d. CN(0,1) entries for every H_i and
/// f_tilde_i, and eps_i = sqrt(rho) * ||f_tilde_i||. A zero-norm f_tilde_i
/// draw (probability zero) is rejected and redrawn on a derived stream.
ChannelRealization generate_channels(const NetworkConfig& config, std::uint64_t seed);

/// All 2^R worst-case magnitude vertices ||f_tilde_i|| +- eps_i in binary
/// counting order. Rejects R > 16.
VertexSet vertex_set(const ChannelRealization& ch);

/// u_i = H_i g per relay; throws on dimension mismatch.
EffectiveGains effective_gains(const ChannelRealization& ch, const CVector& g);

}  // namespace relaybf
