#pragma once

#include <array>
#include <vector>

#include "qmac/channel.hpp"
#include "qmac/rm.hpp"

namespace qmac {

/// Per-user code rates in bits per channel use.
struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
};

/// Outcome of evaluating the four-condition achievability test. Each margin
/// is right-hand side minus left-hand side in bits, so positive means the
/// condition holds with room to spare.
struct RegionVerdict {
    std::array<double, 4> margins{};
    bool achievable = false;
    double delta = 0.0;
};

/// Which of the three successive-decoding settings admit the rate pair.
struct SuccessiveVerdict {
    bool setting_i = false;
    bool setting_ii = false;
    bool setting_iii = false;
    bool decodable = false;
};

/// One grid point of a channel sweep at a fixed rate pair.
struct SweepRow {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;
    bool joint = false;
    bool successive = false;
    double hashing_margin = 0.0; // mi_sum - (r1 + r2)
};

/// Validates rates into [0,1].
RatePair make_rate_pair(double r1, double r2);

/// Sufficient conditions for joint decoding with nested same-length codes;
/// all four margins must exceed delta (strict). Margins, in order:
///   [ mi_sum - (r1+r2),
///     mi_single(User1) - r1,
///     mi_single(User2) - r2,
///     mi_single(Xor) - min(r1, r2) ]
RegionVerdict joint_achievable(const RatePair& rp, const PauliChannel& ch,
                               double delta = 0.0);

/// Necessary conditions for any code pair: same margins as joint_achievable
/// except the fourth left-hand side is the actual intersection rate
/// log2|C1 ∩ C2| / n, and comparisons are non-strict (margins >= 0).
RegionVerdict necessary_conditions(const RatePair& rp, const PauliChannel& ch,
                                   const Rational& intersection_rate);

/// Whether the pair supports a CSS construction: r1 + r2 >= 1.
bool css_valid(const RatePair& rp);

/// The three successive-decoding settings (non-strict comparisons):
///   I:   r1 <= 1 - h_b(p_x+p_y)  and  r2 <= mi_single(User2)
///   II:  r2 <= 1 - h_b(p_z+p_y)  and  r1 <= mi_single(User1)
///   III: max(r1,r2) <= 1 - h_b(p_x+p_z)  and  min(r1,r2) <= mi_single(Xor)
SuccessiveVerdict successive_decodable(const RatePair& rp,
                                       const PauliChannel& ch);

/// css_valid(rp) AND joint_achievable(rp, ch, delta).achievable.
bool quantum_joint_decodable(const RatePair& rp, const PauliChannel& ch,
                             double delta = 0.0);

/// Variant for tensor-product code pairs: condition 4 compares r1*r2
/// (instead of min(r1,r2)) against mi_single(Xor); strict like
/// joint_achievable.
RegionVerdict tensor_variant_achievable(const RatePair& rp,
                                        const PauliChannel& ch,
                                        double delta = 0.0);

/// Rows for every (p_x, p_y, p_z) on the inclusive grid {0, step, ..., p_max}^3
/// with p_x + p_y + p_z <= 1, in lexicographic order. p_max = 0 yields the
/// single noiseless row. Requires 0 <= p_max <= 0.25 and, when p_max > 0,
/// 0 < step <= p_max.
std::vector<SweepRow> sweep_grid(const RatePair& rp, double p_max, double step,
                                 double delta = 0.0);

/// Cross-section rows over (p_x = p_y = t, p_z = s) for t, s on the same
/// inclusive grid, in lexicographic (t, s) order. Same parameter domain as
/// sweep_grid. The hashing_margin column locates the hashing contour
/// (margin = 0).
std::vector<SweepRow> cross_section(const RatePair& rp, double p_max,
                                    double step, double delta = 0.0);

} // namespace qmac
