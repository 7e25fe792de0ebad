#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "qmac/channel.hpp"
#include "qmac/rng.hpp"

namespace qmac::testing {

// Uniformly random point of the probability simplex over {I,X,Y,Z} via
// stick-breaking: three sorted uniforms cut [0,1] into four lengths.
inline PauliChannel random_channel(std::uint64_t seed) {
    std::array<double, 3> cuts = {unit_draw(seed, 7, 0), unit_draw(seed, 7, 1),
                                  unit_draw(seed, 7, 2)};
    std::sort(cuts.begin(), cuts.end());
    const double p_i = cuts[0];
    const double p_x = cuts[1] - cuts[0];
    const double p_y = cuts[2] - cuts[1];
    const double p_z = 1.0 - cuts[2];
    return make_channel(p_x, p_y, p_z, p_i);
}

} // namespace qmac::testing
