#include "qmac/channel.hpp"

#include <cmath>

#include "qmac/error.hpp"
#include "qmac/rng.hpp"

namespace qmac {

namespace {

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// (a+b) * h_b(b/(a+b)), with the zero-mass branch contributing nothing.
double branch_entropy(double a, double b) {
    const double s = a + b;
    if (s <= 0.0) return 0.0;
    return s * binary_entropy(b / s);
}

} // namespace

PauliChannel make_channel(double p_x, double p_y, double p_z,
                          std::optional<double> p_i) {
    constexpr double tol = 1e-12;
    double pi = p_i ? *p_i : 1.0 - p_x - p_y - p_z;
    // The derived complement can land a hair below zero in floating point;
    // snap it rather than bounce a channel that is valid in exact arithmetic.
    if (!p_i && pi < 0.0 && pi >= -tol) pi = 0.0;
    for (double c : {pi, p_x, p_y, p_z})
        if (!(c >= 0.0 && c <= 1.0))
            raise(ErrorKind::InvalidDistribution,
                  "channel probabilities must lie in [0,1]");
    if (std::abs(pi + p_x + p_y + p_z - 1.0) > tol)
        raise(ErrorKind::InvalidDistribution,
              "channel probabilities must sum to 1");
    return {pi, p_x, p_y, p_z};
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        raise(ErrorKind::DomainError,
              "binary_entropy argument must lie in [0,1]");
    // + 0.0 turns the -0.0 produced at the endpoints into plain zero
    return -plog2p(p) - plog2p(1.0 - p) + 0.0;
}

double entropy4(const PauliChannel& ch) {
    return -plog2p(ch.p_i) - plog2p(ch.p_x) - plog2p(ch.p_y) - plog2p(ch.p_z) +
           0.0;
}

double hashing_bound(const PauliChannel& ch) { return 1.0 - entropy4(ch); }

double mi_sum(const PauliChannel& ch) { return 2.0 - entropy4(ch); }

double mi_single(const PauliChannel& ch, MiTarget target) {
    switch (target) {
    case MiTarget::User1:
        return 1.0 - branch_entropy(ch.p_i, ch.p_x) - branch_entropy(ch.p_z, ch.p_y);
    case MiTarget::User2:
        return 1.0 - branch_entropy(ch.p_i, ch.p_z) - branch_entropy(ch.p_y, ch.p_x);
    case MiTarget::Xor:
        return 1.0 - branch_entropy(ch.p_i, ch.p_y) - branch_entropy(ch.p_z, ch.p_x);
    case MiTarget::Sum:
        break;
    }
    raise(ErrorKind::DomainError,
          "mi_single expects a single-user target; use mi_sum for the sum rate");
}

double brute_force_mi(const PauliChannel& ch, MiTarget target) {
    // Tabulate the full 16-atom joint distribution of (x1, x2, y1, y2) under
    // uniform inputs, bucket each atom into the (left; right) grouping the
    // target asks for, and sum p log p/(q r) directly. Deliberately avoids
    // the closed forms above.
    double pa[4] = {};
    double pb[8] = {};
    double pab[4][8] = {};
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int y1 = 0; y1 < 2; ++y1)
                for (int y2 = 0; y2 < 2; ++y2) {
                    const double p = 0.25 * ch.noise_probability(y1 ^ x1, y2 ^ x2);
                    int a = 0, b = 0;
                    switch (target) {
                    case MiTarget::Sum:
                        a = (x1 << 1) | x2;
                        b = (y1 << 1) | y2;
                        break;
                    case MiTarget::User1:
                        a = x1;
                        b = (x2 << 2) | (y1 << 1) | y2;
                        break;
                    case MiTarget::User2:
                        a = x2;
                        b = (x1 << 2) | (y1 << 1) | y2;
                        break;
                    case MiTarget::Xor:
                        a = x1;
                        b = ((x1 ^ x2) << 2) | (y1 << 1) | y2;
                        break;
                    }
                    pa[a] += p;
                    pb[b] += p;
                    pab[a][b] += p;
                }
    double mi = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 8; ++b)
            if (pab[a][b] > 0.0)
                mi += pab[a][b] * std::log2(pab[a][b] / (pa[a] * pb[b]));
    return mi;
}

InducedChannels induced_channels(const PauliChannel& ch) {
    InducedChannels ind;
    ind.wx_crossover = ch.p_x + ch.p_y;
    ind.wz_flag_probability = ch.p_x + ch.p_y;
    if (ch.p_x + ch.p_y > 0.0)
        ind.wz_flagged_crossover = ch.p_x / (ch.p_x + ch.p_y);
    if (ch.p_i + ch.p_z > 0.0)
        ind.wz_unflagged_crossover = ch.p_z / (ch.p_i + ch.p_z);
    return ind;
}

NoisePair draw_noise(const PauliChannel& ch, std::uint64_t seed,
                     std::uint64_t stream, std::uint64_t index) {
    const double u = unit_draw(seed, stream, index);
    if (u < ch.p_i) return {0, 0};
    if (u < ch.p_i + ch.p_x) return {1, 0};
    if (u < ch.p_i + ch.p_x + ch.p_y) return {1, 1};
    return {0, 1};
}

std::vector<NoisePair> sample_noise(const PauliChannel& ch, std::size_t n,
                                    std::uint64_t seed) {
    std::vector<NoisePair> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = draw_noise(ch, seed, 0, i);
    return out;
}

ChannelOutput transmit(const BitVector& x1, const BitVector& x2,
                       const PauliChannel& ch, std::uint64_t seed) {
    if (x1.size() != x2.size())
        raise(ErrorKind::DimensionMismatch,
              "transmit requires input words of equal length");
    ChannelOutput out{x1, x2};
    const auto noise = sample_noise(ch, x1.size(), seed);
    for (std::size_t i = 0; i < noise.size(); ++i) {
        if (noise[i].d1) out.y1.flip(i);
        if (noise[i].d2) out.y2.flip(i);
    }
    return out;
}

} // namespace qmac
