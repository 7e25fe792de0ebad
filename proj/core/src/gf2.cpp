#include "qmac/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "qmac/error.hpp"

namespace qmac {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        v.set(i++, b != 0);
    return v;
}

BitVector BitVector::from_words(std::size_t length, std::span<const std::uint64_t> words) {
    BitVector v(length);
    const std::size_t n = std::min(words.size(), v.words_.size());
    std::copy_n(words.begin(), n, v.words_.begin());
    if (length & 63)
        v.words_.back() &= (std::uint64_t(1) << (length & 63)) - 1;
    return v;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (length_ != other.length_)
        raise(ErrorKind::DimensionMismatch,
              "xor of bit vectors with lengths " + std::to_string(length_) +
                  " and " + std::to_string(other.length_));
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            raise(ErrorKind::DimensionMismatch, "ragged row list");
        std::size_t j = 0;
        for (int b : row)
            m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    return BitVector::from_words(cols_, row_words(r));
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_)
        raise(ErrorKind::DimensionMismatch, "row length does not match column count");
    std::copy_n(v.words().begin(), wpr_, data_.begin() + r * wpr_);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * wpr_;
    const std::uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i)
        d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    std::swap_ranges(data_.begin() + a * wpr_, data_.begin() + (a + 1) * wpr_,
                     data_.begin() + b * wpr_);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const auto w = row_words(r);
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

namespace {

// In-place Gauss-Jordan elimination. Pivot choice is leftmost column,
// topmost unprocessed row; the pivot column is cleared in every other row,
// so the result is the reduced echelon form with zero rows at the bottom.
// Returns the pivot columns in order.
std::vector<std::size_t> eliminate(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < rows; ++col) {
        std::size_t pivot = next;
        while (pivot < rows && !m.get(pivot, col))
            ++pivot;
        if (pivot == rows)
            continue;
        m.swap_rows(next, pivot);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != next && m.get(r, col))
                m.xor_row(r, next);
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

void require_same_cols(const BitMatrix& a, const BitMatrix& b, const char* what) {
    if (a.cols() != b.cols())
        raise(ErrorKind::DimensionMismatch,
              std::string(what) + ": column counts " + std::to_string(a.cols()) +
                  " and " + std::to_string(b.cols()) + " differ");
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix s(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        s.set_row(r, a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r)
        s.set_row(a.rows() + r, b.row(r));
    return s;
}

} // namespace

std::size_t rank(const BitMatrix& a) {
    BitMatrix work = a;
    return eliminate(work).size();
}

BitMatrix row_reduce(const BitMatrix& a) {
    BitMatrix work = a;
    eliminate(work);
    return work;
}

bool row_space_contains(const BitMatrix& a, const BitMatrix& b) {
    require_same_cols(a, b, "row_space_contains");
    BitMatrix basis = a;
    const std::vector<std::size_t> pivots = eliminate(basis);
    for (std::size_t r = 0; r < b.rows(); ++r) {
        BitVector v = b.row(r);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (v.get(pivots[p]))
                v ^= basis.row(p);
        if (!v.is_zero())
            return false;
    }
    return true;
}

std::size_t intersection_dimension(const BitMatrix& a, const BitMatrix& b) {
    require_same_cols(a, b, "intersection_dimension");
    return rank(a) + rank(b) - rank(vstack(a, b));
}

BitVector encode(const BitMatrix& g, const BitVector& u) {
    if (u.size() != g.rows())
        raise(ErrorKind::DimensionMismatch,
              "encode: message length " + std::to_string(u.size()) +
                  " does not match generator rows " + std::to_string(g.rows()));
    BitVector out(g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (u.get(r))
            out ^= g.row(r);
    return out;
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (!a.get(i1, j1))
                continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    if (b.get(i2, j2))
                        out.set(i1 * b.rows() + i2, j1 * b.cols() + j2, true);
        }
    return out;
}

int dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size())
        raise(ErrorKind::DimensionMismatch, "dot: lengths differ");
    std::uint64_t acc = 0;
    const auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i)
        acc ^= wa[i] & wb[i];
    return std::popcount(acc) & 1;
}

std::optional<BitVector> preimage(const BitMatrix& g, const BitVector& x) {
    if (x.size() != g.cols())
        raise(ErrorKind::DimensionMismatch,
              "preimage: word length does not match generator columns");
    const std::size_t k = g.rows(), n = g.cols();

    // Augment with the identity to track row operations: [G | I] -> [R | T]
    // with R = T·G in reduced form.
    BitMatrix work(k, n + k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            if (g.get(r, c))
                work.set(r, c, true);
        work.set(r, n + r, true);
    }
    std::vector<std::size_t> pivots;
    {
        std::size_t next = 0;
        for (std::size_t col = 0; col < n && next < k; ++col) {
            std::size_t pivot = next;
            while (pivot < k && !work.get(pivot, col))
                ++pivot;
            if (pivot == k)
                continue;
            work.swap_rows(next, pivot);
            for (std::size_t r = 0; r < k; ++r)
                if (r != next && work.get(r, col))
                    work.xor_row(r, next);
            pivots.push_back(col);
            ++next;
        }
    }

    BitVector residual = x;
    BitVector u(k);
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        if (!residual.get(pivots[p]))
            continue;
        for (std::size_t c = 0; c < n; ++c)
            if (work.get(p, c))
                residual.flip(c);
        for (std::size_t c = 0; c < k; ++c)
            if (work.get(p, n + c))
                u.flip(c);
    }
    if (!residual.is_zero())
        return std::nullopt;
    return u;
}

} // namespace qmac
