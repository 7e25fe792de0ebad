#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmac/gf2.hpp"

namespace qmac {

/// Memoryless Pauli channel: identity with probability p_i, bit-flip (X)
/// with p_x, combined flip (Y) with p_y, phase-flip (Z) with p_z. Viewed as
/// a two-user channel with additive correlated binary noise, the error is
/// the pair (d1,d2) with I->(0,0), X->(1,0), Y->(1,1), Z->(0,1): d1 is the
/// X component and d2 the Z component.
struct PauliChannel {
    double p_i = 1.0;
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;

    /// Probability of the noise pair (d1,d2).
    double noise_probability(int d1, int d2) const {
        return d1 ? (d2 ? p_y : p_x) : (d2 ? p_z : p_i);
    }
};

struct NoisePair {
    std::uint8_t d1 = 0;
    std::uint8_t d2 = 0;
    bool operator==(const NoisePair&) const = default;
};

/// Pair of binary output words Y = (X1 + D1, X2 + D2).
struct ChannelOutput {
    BitVector y1;
    BitVector y2;
};

/// The two binary channels a Pauli channel induces: the X-error component
/// is a BSC(p_x+p_y); the Z-error component is a mixture of two BSCs
/// selected by whether an X error occurred (the "flag"). Degenerate
/// branches with zero selection probability carry crossover 0.
struct InducedChannels {
    double wx_crossover = 0.0;
    double wz_flag_probability = 0.0;
    double wz_flagged_crossover = 0.0;   // p_x / (p_x + p_y)
    double wz_unflagged_crossover = 0.0; // p_z / (p_i + p_z)
};

enum class MiTarget { Sum, User1, User2, Xor };

/// Validates and assembles a channel; p_i defaults to 1 - p_x - p_y - p_z.
/// Rejects (rather than renormalizes) distributions off by more than 1e-12.
PauliChannel make_channel(double p_x, double p_y, double p_z,
                          std::optional<double> p_i = std::nullopt);

/// h_b(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Shannon entropy H[p_i,p_x,p_y,p_z] in bits.
double entropy4(const PauliChannel& ch);

/// 1 - H[p_i,p_x,p_y,p_z]; the achievable quantum rate, possibly negative.
double hashing_bound(const PauliChannel& ch);

/// I[(X1,X2);Y] under uniform inputs = 2 - H[p_i,p_x,p_y,p_z].
double mi_sum(const PauliChannel& ch);

/// Single-user quantities under uniform inputs, in closed form:
///   User1: I[X1; X2,Y]      = 1 - (p_i+p_x) h_b(p_x/(p_i+p_x)) - (p_y+p_z) h_b(p_y/(p_y+p_z))
///   User2: I[X2; X1,Y]      = 1 - (p_i+p_z) h_b(p_z/(p_i+p_z)) - (p_x+p_y) h_b(p_x/(p_x+p_y))
///   Xor:   I[X1; X1+X2,Y]   = 1 - (p_i+p_y) h_b(p_y/(p_i+p_y)) - (p_x+p_z) h_b(p_x/(p_x+p_z))
/// Branches whose conditioning probability is zero contribute nothing.
/// MiTarget::Sum is rejected; use mi_sum.
double mi_single(const PauliChannel& ch, MiTarget target);

/// Reference computation of the same quantities from the explicit 16-point
/// joint distribution of (X1, X2, Y1, Y2) by direct summation. Shares no
/// code with the closed forms; intended as the oracle in tests.
double brute_force_mi(const PauliChannel& ch, MiTarget target);

InducedChannels induced_channels(const PauliChannel& ch);

/// One noise draw addressed by (seed, stream, index); pure function.
NoisePair draw_noise(const PauliChannel& ch, std::uint64_t seed,
                     std::uint64_t stream, std::uint64_t index);

/// n i.i.d. noise pairs; deterministic in seed and independent of
/// evaluation order (draw i only depends on (seed, i)).
std::vector<NoisePair> sample_noise(const PauliChannel& ch, std::size_t n,
                                    std::uint64_t seed);

/// Y_i = (x1_i + d1_i, x2_i + d2_i) with the noise of sample_noise(ch,n,seed).
ChannelOutput transmit(const BitVector& x1, const BitVector& x2,
                       const PauliChannel& ch, std::uint64_t seed);

} // namespace qmac
