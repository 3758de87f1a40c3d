#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcd {

/// Dense matrix over GF(2) with bit-packed rows (64 columns per word).
/// Matrices with zero rows or zero columns are legal values; an empty
/// matrix stands for an empty basis.  All mutating members are used only
/// during construction; every algorithm below takes copies, so shared
/// instances are safe to read concurrently.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(cols == 0 ? 0 : (cols + 63) / 64),
          data_(rows * words_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * words_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (v) w |= bit; else w &= ~bit;
    }

    const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * words_; }
    std::uint64_t* row_words(std::size_t r) { return data_.data() + r * words_; }

    /// row[dst] ^= row[src]
    void xor_row_into(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row_words(dst);
        const std::uint64_t* s = row_words(src);
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t i, std::size_t j);

    int row_weight(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;
    bool column_is_zero(std::size_t c) const;

    BitMatrix transposed() const;
    /// Rows [begin, end) as a new matrix.
    BitMatrix row_slice(std::size_t begin, std::size_t end) const;
    /// Columns selected by `keep` (ascending), as a new matrix.
    BitMatrix select_columns(const std::vector<std::size_t>& keep) const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Dimension of the row space.
std::size_t rank(BitMatrix m);

struct Rref {
    BitMatrix matrix;                  // zero rows removed
    std::vector<std::size_t> pivots;   // increasing
};

/// Reduced row echelon form; preserves the row space.
Rref rref(const BitMatrix& m);

/// A * B over GF(2); throws std::invalid_argument on dimension mismatch.
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);

/// G * G^T, the (symmetric) Gram matrix of the rows.
BitMatrix gram(const BitMatrix& g);

/// Rows form a basis of {x : M x^T = 0}; rank + nullity = cols.
BitMatrix nullspace(const BitMatrix& m);

/// Basis of rowspace(A) ∩ rowspace(B) (Zassenhaus).
BitMatrix intersect_rowspaces(const BitMatrix& a, const BitMatrix& b);

/// True iff M is square with full rank; throws on non-square input.
bool is_invertible(const BitMatrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<BitMatrix> inverse(const BitMatrix& m);

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);

/// ".g2m" text format: first line "k n", then k lines of n characters 0/1.
void write_g2m(std::ostream& os, const BitMatrix& m);
BitMatrix read_g2m(std::istream& is);
void save_g2m(const std::string& path, const BitMatrix& m);
BitMatrix load_g2m(const std::string& path);

}  // namespace lcd
