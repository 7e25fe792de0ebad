#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>
#include <vector>

#include "qmac/gf2.hpp"
#include "qmac/rng.hpp"

using qmac::BitMatrix;
using qmac::BitVector;

namespace {

// Brute-force row-space oracle: enumerate all 2^rows combinations and collect
// the distinct vectors. Only usable for small matrices, which is the point --
// it shares nothing with the elimination code it checks.
std::set<std::vector<bool>> span_set(const BitMatrix& a) {
    std::set<std::vector<bool>> out;
    const std::size_t combos = std::size_t(1) << a.rows();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        BitVector acc(a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            if ((mask >> r) & 1)
                acc ^= a.row(r);
        std::vector<bool> key(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c)
            key[c] = acc.get(c);
        out.insert(key);
    }
    return out;
}

std::size_t oracle_rank(const BitMatrix& a) {
    std::size_t sz = span_set(a).size();
    std::size_t dim = 0;
    while ((std::size_t(1) << dim) < sz)
        ++dim;
    return dim;
}

// Deterministic pseudo-random matrix for property tests.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    BitMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a.set(r, c, qmac::unit_draw(seed, r, c) < 0.5);
    return a;
}

} // namespace

TEST_CASE("bit vector basics") {
    BitVector v(70); // straddles a word boundary
    CHECK(v.size() == 70);
    CHECK(v.is_zero());
    CHECK(v.popcount() == 0);

    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(69, true);
    CHECK(v.popcount() == 4);
    CHECK(v.get(63));
    CHECK(v.get(64));
    CHECK_FALSE(v.get(1));

    v.flip(63);
    CHECK_FALSE(v.get(63));
    CHECK(v.popcount() == 3);

    BitVector w(70);
    w.set(0, true);
    BitVector x = v ^ w;
    CHECK_FALSE(x.get(0));
    CHECK(x.get(64));
    CHECK(x.popcount() == 2);

    CHECK(BitVector::from_bits({1, 0, 1}).popcount() == 2);
    CHECK(BitVector::from_bits({1, 0, 1}) == BitVector::from_bits({1, 0, 1}));
    CHECK(BitVector::from_bits({1, 0, 1}) != BitVector::from_bits({1, 0, 0}));
}

TEST_CASE("padding bits of the last word stay zero") {
    // from_words must mask stray high bits, otherwise ==, popcount and
    // is_zero would all be wrong on the padded tail.
    const std::uint64_t words[1] = {~std::uint64_t(0)};
    BitVector v = BitVector::from_words(5, words);
    CHECK(v.popcount() == 5);
    CHECK(v.words()[0] == 0x1f);

    BitVector w(5);
    for (std::size_t i = 0; i < 5; ++i)
        w.set(i, true);
    CHECK(v == w);
}

TEST_CASE("rank on fixed matrices") {
    CHECK(qmac::rank(BitMatrix::identity(3)) == 3);
    CHECK(qmac::rank(BitMatrix(4, 7)) == 0);
    CHECK(qmac::rank(BitMatrix()) == 0);
    CHECK(qmac::rank(BitMatrix::from_rows({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("rank matches the span-set oracle on random matrices") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t rows = 1 + seed % 6;
        const std::size_t cols = 1 + (seed * 7) % 9;
        BitMatrix a = random_matrix(rows, cols, seed);
        CAPTURE(seed);
        CHECK(qmac::rank(a) == oracle_rank(a));
    }
}

TEST_CASE("row_reduce produces a canonical RREF with the same span") {
    CHECK(qmac::row_reduce(BitMatrix::identity(4)) == BitMatrix::identity(4));
    CHECK(qmac::row_reduce(BitMatrix::from_rows({{1, 1}, {1, 1}})) ==
          BitMatrix::from_rows({{1, 1}, {0, 0}}));

    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        BitMatrix a = random_matrix(5, 8, seed);
        BitMatrix r = qmac::row_reduce(a);
        CAPTURE(seed);
        REQUIRE(r.rows() == a.rows());
        REQUIRE(r.cols() == a.cols());
        CHECK(qmac::rank(r) == qmac::rank(a));
        CHECK(span_set(r) == span_set(a));

        // RREF shape: nonzero rows first, pivot columns strictly increasing,
        // each pivot the only 1 in its column.
        std::size_t prev_pivot = 0;
        bool seen_zero_row = false;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (r.row_is_zero(i)) {
                seen_zero_row = true;
                continue;
            }
            CHECK_FALSE(seen_zero_row);
            std::size_t pivot = 0;
            while (!r.get(i, pivot))
                ++pivot;
            if (i > 0)
                CHECK(pivot > prev_pivot);
            prev_pivot = pivot;
            for (std::size_t j = 0; j < r.rows(); ++j)
                if (j != i)
                    CHECK_FALSE(r.get(j, pivot));
        }

        // Canonical means idempotent.
        CHECK(qmac::row_reduce(r) == r);
    }
}

TEST_CASE("row_space_contains") {
    BitMatrix a = BitMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    CHECK(qmac::row_space_contains(a, BitMatrix::from_rows({{1, 1, 0}})));
    CHECK_FALSE(qmac::row_space_contains(a, BitMatrix::from_rows({{0, 0, 1}})));
    // The zero-row matrix is contained in anything with matching width.
    CHECK(qmac::row_space_contains(a, BitMatrix(0, 3)));
    CHECK(qmac::row_space_contains(BitMatrix(0, 3), BitMatrix(0, 3)));
    CHECK_FALSE(qmac::row_space_contains(BitMatrix(0, 3),
                                         BitMatrix::from_rows({{1, 0, 0}})));

    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        BitMatrix x = random_matrix(4, 6, seed);
        BitMatrix y = random_matrix(3, 6, seed + 1000);
        auto sx = span_set(x);
        auto sy = span_set(y);
        bool expected = true;
        for (const auto& v : sy)
            if (!sx.count(v))
                expected = false;
        CAPTURE(seed);
        CHECK(qmac::row_space_contains(x, y) == expected);
    }
}

TEST_CASE("intersection_dimension matches set intersection of spans") {
    BitMatrix a = BitMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    BitMatrix b = BitMatrix::from_rows({{0, 1, 0}, {0, 0, 1}});
    CHECK(qmac::intersection_dimension(a, b) == 1);
    CHECK(qmac::intersection_dimension(a, a) == 2);
    CHECK(qmac::intersection_dimension(a, BitMatrix(0, 3)) == 0);

    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        BitMatrix x = random_matrix(4, 6, seed);
        BitMatrix y = random_matrix(4, 6, seed + 2000);
        auto sx = span_set(x);
        std::size_t common = 0;
        for (const auto& v : span_set(y))
            if (sx.count(v))
                ++common;
        std::size_t dim = 0;
        while ((std::size_t(1) << dim) < common)
            ++dim;
        CAPTURE(seed);
        CHECK(qmac::intersection_dimension(x, y) == dim);
    }
}

TEST_CASE("encode is u.G and linear") {
    BitMatrix g = BitMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(qmac::encode(g, BitVector::from_bits({1, 0})) ==
          BitVector::from_bits({1, 1, 0, 0}));
    CHECK(qmac::encode(g, BitVector::from_bits({1, 1})) ==
          BitVector::from_bits({1, 1, 1, 1}));
    CHECK(qmac::encode(g, BitVector::from_bits({0, 0})).is_zero());

    for (std::uint64_t seed = 400; seed < 410; ++seed) {
        BitMatrix m = random_matrix(5, 9, seed);
        BitVector u = random_matrix(1, 5, seed + 1).row(0);
        BitVector v = random_matrix(1, 5, seed + 2).row(0);
        CAPTURE(seed);
        CHECK(qmac::encode(m, u ^ v) == (qmac::encode(m, u) ^ qmac::encode(m, v)));
    }
}

TEST_CASE("dot is the parity of the AND") {
    CHECK(qmac::dot(BitVector::from_bits({1, 1, 0}), BitVector::from_bits({1, 0, 1})) == 1);
    CHECK(qmac::dot(BitVector::from_bits({1, 1, 0}), BitVector::from_bits({1, 1, 0})) == 0);
    CHECK(qmac::dot(BitVector(5), BitVector(5)) == 0);
}

TEST_CASE("kronecker product") {
    BitMatrix a = BitMatrix::from_rows({{1, 0}, {1, 1}});
    BitMatrix i2 = BitMatrix::identity(2);
    BitMatrix k = qmac::kronecker(a, i2);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    // Entry law: k[(i1,i2),(j1,j2)] = a[i1,j1] * b[i2,j2].
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t i2r = 0; i2r < 2; ++i2r)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t j2 = 0; j2 < 2; ++j2)
                    CHECK(k.get(i1 * 2 + i2r, j1 * 2 + j2) ==
                          (a.get(i1, j1) && i2.get(i2r, j2)));

    // rank(A (x) B) = rank(A) * rank(B).
    for (std::uint64_t seed = 500; seed < 508; ++seed) {
        BitMatrix x = random_matrix(3, 4, seed);
        BitMatrix y = random_matrix(2, 3, seed + 3000);
        CAPTURE(seed);
        CHECK(qmac::rank(qmac::kronecker(x, y)) == qmac::rank(x) * qmac::rank(y));
    }
}

TEST_CASE("preimage inverts encode and rejects outside vectors") {
    BitMatrix g = BitMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});
    // Third row is dependent, so preimages exist but are not unique; the
    // contract is that the returned one re-encodes to the input.
    for (std::uint64_t seed = 600; seed < 610; ++seed) {
        BitVector u = random_matrix(1, 3, seed).row(0);
        BitVector x = qmac::encode(g, u);
        auto back = qmac::preimage(g, x);
        CAPTURE(seed);
        REQUIRE(back.has_value());
        CHECK(qmac::encode(g, *back) == x);
    }
    CHECK_FALSE(qmac::preimage(g, BitVector::from_bits({1, 0, 0, 0})).has_value());

    // Full-rank case: the preimage is the unique one.
    BitMatrix id = BitMatrix::identity(4);
    BitVector t = BitVector::from_bits({0, 1, 1, 0});
    CHECK(*qmac::preimage(id, t) == t);
}

TEST_CASE("counter rng reproduces the published seed-0 stream") {
    // First two outputs of the reference splitmix64 sequence seeded with 0;
    // independent check that the finalizer constants are transcribed right.
    CHECK(qmac::mix64(0) == 0xE220A8397B1DCDAFull);
    CHECK(qmac::mix64(qmac::mix64(0)) == 0xA706DD2F4D197E6Full);

    // unit_double maps the top 53 bits into [0,1).
    CHECK(qmac::unit_double(0) == 0.0);
    CHECK(qmac::unit_double(~std::uint64_t(0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(qmac::unit_double(~std::uint64_t(0)) < 1.0);

    // Distinct key parts decorrelate: changing any of seed/stream/index
    // changes the draw.
    const double base = qmac::unit_draw(1, 2, 3);
    CHECK(qmac::unit_draw(2, 2, 3) != base);
    CHECK(qmac::unit_draw(1, 3, 3) != base);
    CHECK(qmac::unit_draw(1, 2, 4) != base);
}
