#include "qmac/region.hpp"

#include <algorithm>
#include <cmath>

#include "qmac/error.hpp"

namespace qmac {

namespace {

// Inclusive grid {0, step, ..., p_max}; a p_max that is not a whole number
// of steps away from 0 is appended so both endpoints are always present.
std::vector<double> grid_values(double p_max, double step) {
    if (!(p_max >= 0.0 && p_max <= 0.25))
        raise(ErrorKind::ParameterOutOfRange,
              "sweep p_max must lie in [0, 0.25]");
    if (p_max == 0.0) return {0.0};
    if (!(step > 0.0 && step <= p_max))
        raise(ErrorKind::ParameterOutOfRange,
              "sweep step must lie in (0, p_max]");
    const auto n = static_cast<std::size_t>(p_max / step + 1e-9);
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        values[i] = static_cast<double>(i) * step;
    if (p_max - values.back() > step * 1e-6) values.push_back(p_max);
    return values;
}

bool all_margins_exceed(const std::array<double, 4>& margins, double delta,
                        bool strict) {
    for (double margin : margins)
        if (strict ? !(margin > delta) : !(margin >= delta)) return false;
    return true;
}

SweepRow evaluate_row(const RatePair& rp, double p_x, double p_y, double p_z,
                      double delta) {
    const PauliChannel ch = make_channel(p_x, p_y, p_z);
    SweepRow row;
    row.p_x = p_x;
    row.p_y = p_y;
    row.p_z = p_z;
    row.joint = joint_achievable(rp, ch, delta).achievable;
    row.successive = successive_decodable(rp, ch).decodable;
    row.hashing_margin = mi_sum(ch) - (rp.r1 + rp.r2);
    return row;
}

} // namespace

RatePair make_rate_pair(double r1, double r2) {
    for (double r : {r1, r2})
        if (!(r >= 0.0 && r <= 1.0))
            raise(ErrorKind::ParameterOutOfRange, "rates must lie in [0,1]");
    return {r1, r2};
}

RegionVerdict joint_achievable(const RatePair& rp, const PauliChannel& ch,
                               double delta) {
    RegionVerdict v;
    v.delta = delta;
    v.margins = {mi_sum(ch) - (rp.r1 + rp.r2),
                 mi_single(ch, MiTarget::User1) - rp.r1,
                 mi_single(ch, MiTarget::User2) - rp.r2,
                 mi_single(ch, MiTarget::Xor) - std::min(rp.r1, rp.r2)};
    v.achievable = all_margins_exceed(v.margins, delta, /*strict=*/true);
    return v;
}

RegionVerdict necessary_conditions(const RatePair& rp, const PauliChannel& ch,
                                   const Rational& intersection_rate) {
    RegionVerdict v;
    v.delta = 0.0;
    v.margins = {mi_sum(ch) - (rp.r1 + rp.r2),
                 mi_single(ch, MiTarget::User1) - rp.r1,
                 mi_single(ch, MiTarget::User2) - rp.r2,
                 mi_single(ch, MiTarget::Xor) - intersection_rate.value()};
    v.achievable = all_margins_exceed(v.margins, 0.0, /*strict=*/false);
    return v;
}

bool css_valid(const RatePair& rp) { return rp.r1 + rp.r2 >= 1.0; }

SuccessiveVerdict successive_decodable(const RatePair& rp,
                                       const PauliChannel& ch) {
    const double lo = std::min(rp.r1, rp.r2);
    const double hi = std::max(rp.r1, rp.r2);
    SuccessiveVerdict v;
    v.setting_i = rp.r1 <= 1.0 - binary_entropy(ch.p_x + ch.p_y) &&
                  rp.r2 <= mi_single(ch, MiTarget::User2);
    v.setting_ii = rp.r2 <= 1.0 - binary_entropy(ch.p_z + ch.p_y) &&
                   rp.r1 <= mi_single(ch, MiTarget::User1);
    v.setting_iii = hi <= 1.0 - binary_entropy(ch.p_x + ch.p_z) &&
                    lo <= mi_single(ch, MiTarget::Xor);
    v.decodable = v.setting_i || v.setting_ii || v.setting_iii;
    return v;
}

bool quantum_joint_decodable(const RatePair& rp, const PauliChannel& ch,
                             double delta) {
    return css_valid(rp) && joint_achievable(rp, ch, delta).achievable;
}

RegionVerdict tensor_variant_achievable(const RatePair& rp,
                                        const PauliChannel& ch, double delta) {
    RegionVerdict v = joint_achievable(rp, ch, delta);
    v.margins[3] = mi_single(ch, MiTarget::Xor) - rp.r1 * rp.r2;
    v.achievable = all_margins_exceed(v.margins, delta, /*strict=*/true);
    return v;
}

std::vector<SweepRow> sweep_grid(const RatePair& rp, double p_max, double step,
                                 double delta) {
    const auto values = grid_values(p_max, step);
    std::vector<SweepRow> rows;
    rows.reserve(values.size() * values.size() * values.size());
    for (double p_x : values)
        for (double p_y : values)
            for (double p_z : values) {
                if (p_x + p_y + p_z > 1.0) continue;
                rows.push_back(evaluate_row(rp, p_x, p_y, p_z, delta));
            }
    return rows;
}

std::vector<SweepRow> cross_section(const RatePair& rp, double p_max,
                                    double step, double delta) {
    const auto values = grid_values(p_max, step);
    std::vector<SweepRow> rows;
    rows.reserve(values.size() * values.size());
    for (double t : values)
        for (double s : values) rows.push_back(evaluate_row(rp, t, t, s, delta));
    return rows;
}

} // namespace qmac
