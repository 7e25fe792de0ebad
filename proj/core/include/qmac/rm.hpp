#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qmac/gf2.hpp"

namespace qmac {

/// Exact ratio; kept unreduced since callers only need the value.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Reed-Muller code RM(r,m): length n = 2^m, codewords are the evaluation
/// tables of m-variate polynomials over GF(2) of total degree at most r.
///
/// Conventions fixed here (both are needed to make generators bit-exact):
///  - column j is the evaluation at the point whose coordinate x_t is bit t
///    of j (little-endian point indexing);
///  - generator row i is the monomial with variable set monomials[i], and
///    monomials are ordered by degree, then lexicographically by the sorted
///    variable subset.
struct RmCode {
    int r = 0;
    int m = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    /// Variable set of each generator row, as a bit mask over {0..m-1}.
    std::vector<std::uint32_t> monomials;
    BitMatrix generator;

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
};

/// CSS pair built from RM(r_x,m) and RM(r_z,m). `valid` records whether the
/// dual of the X code nests inside the Z code, which for same-m RM codes is
/// exactly m <= r_x + r_z + 1. logical_qubits = k_x + k_z - n may be <= 0
/// for valid but useless pairs and is reported as-is.
struct CssPair {
    RmCode code_x;
    RmCode code_z;
    std::int64_t logical_qubits = 0;
    bool valid = false;
};

/// Sum of binomials C(m,0) + ... + C(m,r); the dimension of RM(r,m).
std::int64_t rm_dimension(int r, int m);

RmCode build_rm(int r, int m);

/// Dual code RM(m-r-1, m); rejects r = m, whose dual is the zero code.
RmCode dual(const RmCode& c);

/// RM nesting: inner ⊆ outer iff inner.r <= outer.r (same m required).
bool is_nested(const RmCode& inner, const RmCode& outer);

CssPair make_css_pair(int r_x, int r_z, int m);

/// log2|C1 ∩ C2| / n for same-m RM codes; equals the rate of the smaller
/// code because same-m RM codes are nested.
Rational intersection_rate(const RmCode& c1, const RmCode& c2);

/// Generators of the product-code pair on 2m variables: the first code
/// constrains the degree in the first m variables to r1, the second the
/// degree in the last m variables to r2. Their intersection has dimension
/// k1·k2 (rate R1·R2), strictly smaller than min(R1,R2) for partial rates.
std::pair<BitMatrix, BitMatrix> build_tensor_pair(int r1, int r2, int m);

} // namespace qmac
