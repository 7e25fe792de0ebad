#include "qmac/rm.hpp"

#include <string>

#include "qmac/error.hpp"

namespace qmac {

namespace {

void require_rm_params(int r, int m, int m_max, const char* what) {
    if (m < 0 || m > m_max || r < 0 || r > m)
        raise(ErrorKind::ParameterOutOfRange,
              std::string(what) + ": need 0 <= r <= m <= " + std::to_string(m_max) +
                  ", got r=" + std::to_string(r) + " m=" + std::to_string(m));
}

// Appends all |S|=degree subsets of {0..m-1} in lexicographic order of the
// sorted subset, encoded as bit masks.
void append_degree_masks(int degree, int m, std::vector<std::uint32_t>& out) {
    if (degree == 0) {
        out.push_back(0);
        return;
    }
    std::vector<int> idx(degree);
    for (int i = 0; i < degree; ++i)
        idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx)
            mask |= std::uint32_t(1) << i;
        out.push_back(mask);
        int pos = degree - 1;
        while (pos >= 0 && idx[pos] == m - degree + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int i = pos + 1; i < degree; ++i)
            idx[i] = idx[i - 1] + 1;
    }
}

} // namespace

std::int64_t rm_dimension(int r, int m) {
    require_rm_params(r, m, 30, "rm_dimension");
    std::int64_t sum = 0, binom = 1;
    for (int l = 0; l <= r; ++l) {
        if (l > 0)
            binom = binom * (m - l + 1) / l;
        sum += binom;
    }
    return sum;
}

RmCode build_rm(int r, int m) {
    require_rm_params(r, m, 20, "build_rm");
    RmCode code;
    code.r = r;
    code.m = m;
    code.n = std::size_t(1) << m;
    code.k = static_cast<std::size_t>(rm_dimension(r, m));

    code.monomials.reserve(code.k);
    for (int d = 0; d <= r; ++d)
        append_degree_masks(d, m, code.monomials);

    // Row for variable mask M is 1 exactly on the points containing M:
    // the monomial evaluates to 1 at point j iff (j & M) == M.
    code.generator = BitMatrix(code.k, code.n);
    for (std::size_t row = 0; row < code.k; ++row) {
        const std::uint32_t mask = code.monomials[row];
        for (std::size_t j = 0; j < code.n; ++j)
            if ((j & mask) == mask)
                code.generator.set(row, j, true);
    }
    return code;
}

RmCode dual(const RmCode& c) {
    if (c.r >= c.m)
        raise(ErrorKind::DegenerateDual,
              "dual of RM(" + std::to_string(c.r) + "," + std::to_string(c.m) +
                  ") is the zero code");
    return build_rm(c.m - c.r - 1, c.m);
}

bool is_nested(const RmCode& inner, const RmCode& outer) {
    if (inner.m != outer.m)
        raise(ErrorKind::DimensionMismatch,
              "is_nested: codes have different m (" + std::to_string(inner.m) +
                  " vs " + std::to_string(outer.m) + ")");
    return inner.r <= outer.r;
}

CssPair make_css_pair(int r_x, int r_z, int m) {
    CssPair pair;
    pair.code_x = build_rm(r_x, m);
    pair.code_z = build_rm(r_z, m);
    pair.logical_qubits = static_cast<std::int64_t>(pair.code_x.k) +
                          static_cast<std::int64_t>(pair.code_z.k) -
                          (std::int64_t(1) << m);
    pair.valid = m <= r_x + r_z + 1;
    return pair;
}

Rational intersection_rate(const RmCode& c1, const RmCode& c2) {
    if (c1.m != c2.m)
        raise(ErrorKind::DimensionMismatch,
              "intersection_rate: codes have different m");
    const int r_min = c1.r < c2.r ? c1.r : c2.r;
    return Rational{rm_dimension(r_min, c1.m), std::int64_t(1) << c1.m};
}

std::pair<BitMatrix, BitMatrix> build_tensor_pair(int r1, int r2, int m) {
    if (m > 5)
        raise(ErrorKind::ParameterOutOfRange,
              "build_tensor_pair: m > 5 would give length 2^" + std::to_string(2 * m));
    const RmCode low1 = build_rm(r1, m);
    const RmCode low2 = build_rm(r2, m);
    const RmCode full = build_rm(m, m);
    return {kronecker(low1.generator, full.generator),
            kronecker(full.generator, low2.generator)};
}

} // namespace qmac
