#include "lcd/bitmatrix.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lcd {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::uint64_t* a = row_words(i);
    std::uint64_t* b = row_words(j);
    for (std::size_t w = 0; w < words_; ++w) std::swap(a[w], b[w]);
}

int BitMatrix::row_weight(std::size_t r) const {
    int w = 0;
    const std::uint64_t* p = row_words(r);
    for (std::size_t i = 0; i < words_; ++i) w += std::popcount(p[i]);
    return w;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* p = row_words(r);
    for (std::size_t i = 0; i < words_; ++i)
        if (p[i]) return false;
    return true;
}

bool BitMatrix::column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) return false;
    return true;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t x = row_words(r)[w];
            while (x) {
                const int b = std::countr_zero(x);
                x &= x - 1;
                t.set(64 * w + b, r, true);
            }
        }
    return t;
}

BitMatrix BitMatrix::row_slice(std::size_t begin, std::size_t end) const {
    BitMatrix out(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t w = 0; w < words_; ++w)
            out.row_words(r - begin)[w] = row_words(r)[w];
    return out;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& keep) const {
    BitMatrix out(rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (get(r, keep[j])) out.set(r, j, true);
    return out;
}

std::size_t rank(BitMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.get(i, c)) { piv = i; break; }
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_row_into(i, r);
        ++r;
    }
    return r;
}

Rref rref(const BitMatrix& in) {
    BitMatrix m = in;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.get(i, c)) { piv = i; break; }
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(i, r);
        pivots.push_back(c);
        ++r;
    }
    return Rref{m.row_slice(0, r), std::move(pivots)};
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t x = a.row_words(r)[w];
            while (x) {
                const int bit = std::countr_zero(x);
                x &= x - 1;
                const std::size_t kk = 64 * w + bit;
                std::uint64_t* dst = out.row_words(r);
                const std::uint64_t* src = b.row_words(kk);
                for (std::size_t v = 0; v < out.words_per_row(); ++v) dst[v] ^= src[v];
            }
        }
    return out;
}

BitMatrix gram(const BitMatrix& g) {
    const std::size_t k = g.rows(), words = g.words_per_row();
    BitMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            int acc = 0;
            const std::uint64_t* a = g.row_words(i);
            const std::uint64_t* b = g.row_words(j);
            for (std::size_t w = 0; w < words; ++w) acc += std::popcount(a[w] & b[w]);
            if (acc & 1) {
                out.set(i, j, true);
                out.set(j, i, true);
            }
        }
    return out;
}

BitMatrix nullspace(const BitMatrix& m) {
    const std::size_t n = m.cols();
    const Rref rr = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BitMatrix basis(free_cols.size(), n);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t f = free_cols[i];
        basis.set(i, f, true);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            if (rr.matrix.get(r, f)) basis.set(i, rr.pivots[r], true);
    }
    return basis;
}

BitMatrix intersect_rowspaces(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("intersect_rowspaces: column counts differ");
    const std::size_t n = a.cols();
    if (a.rows() == 0 || b.rows() == 0) return BitMatrix(0, n);

    // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    BitMatrix big(a.rows() + b.rows(), 2 * n);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c)) { big.set(r, c, true); big.set(r, n + c, true); }
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (b.get(r, c)) big.set(a.rows() + r, c, true);

    const Rref rr = rref(big);
    std::vector<std::size_t> take;
    for (std::size_t r = 0; r < rr.matrix.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (rr.matrix.get(r, c)) left_zero = false;
        if (left_zero) take.push_back(r);
    }
    BitMatrix out(take.size(), n);
    for (std::size_t i = 0; i < take.size(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (rr.matrix.get(take[i], n + c)) out.set(i, c, true);
    return out;
}

bool is_invertible(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_invertible: matrix not square");
    return rank(m) == m.rows();
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    BitMatrix work = hstack(m, BitMatrix::identity(n));
    const Rref rr = rref(work);
    if (rr.pivots.size() != n || rr.pivots.back() != n - 1) return std::nullopt;
    std::vector<std::size_t> right(n);
    for (std::size_t c = 0; c < n; ++c) right[c] = n + c;
    return rr.matrix.select_columns(right);
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
        throw std::invalid_argument("vstack: column counts differ");
    const std::size_t cols = top.rows() == 0 ? bottom.cols() : top.cols();
    BitMatrix out(top.rows() + bottom.rows(), cols);
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t w = 0; w < top.words_per_row(); ++w)
            out.row_words(r)[w] = top.row_words(r)[w];
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t w = 0; w < bottom.words_per_row(); ++w)
            out.row_words(top.rows() + r)[w] = bottom.row_words(r)[w];
    return out;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
    if (left.rows() != right.rows())
        throw std::invalid_argument("hstack: row counts differ");
    BitMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left.get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols(); ++c)
            if (right.get(r, c)) out.set(r, left.cols() + c, true);
    }
    return out;
}

void write_g2m(std::ostream& os, const BitMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (m.get(r, c) ? '1' : '0');
        os << '\n';
    }
}

BitMatrix read_g2m(std::istream& is) {
    std::size_t k = 0, n = 0;
    if (!(is >> k >> n)) throw std::runtime_error("g2m: missing header");
    std::string line;
    std::getline(is, line);  // rest of header line
    BitMatrix m(k, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("g2m: truncated matrix body");
        if (line.size() < n) throw std::runtime_error("g2m: short row");
        for (std::size_t c = 0; c < n; ++c) {
            if (line[c] == '1') m.set(r, c, true);
            else if (line[c] != '0') throw std::runtime_error("g2m: invalid character");
        }
    }
    return m;
}

void save_g2m(const std::string& path, const BitMatrix& m) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_g2m(os, m);
}

BitMatrix load_g2m(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_g2m(is);
}

}  // namespace lcd
