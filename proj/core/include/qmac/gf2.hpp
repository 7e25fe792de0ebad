#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qmac {

/// Dense bit vector over GF(2), packed 64 bits per word, little-endian
/// within a word (bit i of the vector is bit i%64 of word i/64). Unused
/// high bits of the last word are kept zero, so whole-word equality and
/// popcounts are valid without masking.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    /// Builds a vector from pre-packed words; masks padding bits.
    static BitVector from_words(std::size_t length, std::span<const std::uint64_t> words);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t popcount() const;
    bool is_zero() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

  private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix, row-major, each row packed like a BitVector.
/// Zero-row and zero-column matrices are legal values.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t bit = std::uint64_t(1) << (c & 63);
        if (v)
            data_[r * wpr_ + (c >> 6)] |= bit;
        else
            data_[r * wpr_ + (c >> 6)] &= ~bit;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    /// row[dst] ^= row[src]
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    bool row_is_zero(std::size_t r) const;

    bool operator==(const BitMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Dimension of the row space.
std::size_t rank(const BitMatrix& a);

/// Reduced row-echelon form: leftmost pivots, topmost rows, zero rows at
/// the bottom. Deterministic, so RREFs can be compared bit for bit.
BitMatrix row_reduce(const BitMatrix& a);

/// True iff every row of b lies in the row space of a.
bool row_space_contains(const BitMatrix& a, const BitMatrix& b);

/// dim(rowspace(a) ∩ rowspace(b)) = rank(a) + rank(b) - rank(a over b).
std::size_t intersection_dimension(const BitMatrix& a, const BitMatrix& b);

/// u·G over GF(2); u.size() must equal g.rows().
BitVector encode(const BitMatrix& g, const BitVector& u);

/// Kronecker product: entry[(i1,i2),(j1,j2)] = a[i1,j1]·b[i2,j2] with
/// row index i1*b.rows()+i2 and column index j1*b.cols()+j2.
BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);

/// GF(2) inner product (parity of the AND).
int dot(const BitVector& a, const BitVector& b);

/// Solves u·G = x for u; empty when x is outside the row space. When the
/// generator rows are dependent the returned preimage is the one whose
/// support uses the pivot rows of the RREF.
std::optional<BitVector> preimage(const BitMatrix& g, const BitVector& x);

} // namespace qmac
