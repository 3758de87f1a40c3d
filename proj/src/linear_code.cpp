#include "lcd/linear_code.hpp"

#include <bit>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcd {

LinearCode::LinearCode(BitMatrix generator) : gen_(std::move(generator)) {
    const std::size_t k = gen_.rows(), n = gen_.cols();
    if (k < 1 || n < 1 || k > n)
        throw std::invalid_argument("LinearCode: need 1 <= k <= n");
    if (rank(gen_) != k)
        throw std::invalid_argument("LinearCode: generator is rank deficient");
    for (std::size_t c = 0; c < n; ++c)
        if (gen_.column_is_zero(c))
            throw std::invalid_argument("LinearCode: zero column at index " + std::to_string(c));
}

namespace {

// Visits every nonzero codeword once; presents its weight.
template <typename F>
void for_each_codeword_weight(const BitMatrix& g, F&& f) {
    const int k = static_cast<int>(g.rows());
    if (k > 28) throw std::invalid_argument("codeword enumeration guard: k > 28");
    const std::size_t words = g.words_per_row();
    std::vector<std::uint64_t> acc(words, 0);
    const std::uint32_t total = (std::uint32_t{1} << k) - 1;
    // Gray order: word m ^ (m >> 1); one row XOR per step.
    std::uint32_t prev_gray = 0;
    for (std::uint32_t m = 1; m <= total; ++m) {
        const std::uint32_t gray = m ^ (m >> 1);
        const int bit = std::countr_zero(prev_gray ^ gray);
        prev_gray = gray;
        const std::uint64_t* row = g.row_words(static_cast<std::size_t>(bit));
        int w = 0;
        for (std::size_t i = 0; i < words; ++i) {
            acc[i] ^= row[i];
            w += std::popcount(acc[i]);
        }
        f(w);
    }
}

}  // namespace

int min_distance(const BitMatrix& generator) {
    int best = static_cast<int>(generator.cols()) + 1;
    for_each_codeword_weight(generator, [&](int w) { best = std::min(best, w); });
    return best;
}

CodeParams params(const LinearCode& c) {
    CodeParams p;
    p.n = c.n();
    p.k = c.k();
    p.weight_distribution.assign(static_cast<std::size_t>(p.n) + 1, 0);
    p.weight_distribution[0] = 1;
    int best = p.n + 1;
    for_each_codeword_weight(c.generator(), [&](int w) {
        best = std::min(best, w);
        ++p.weight_distribution[static_cast<std::size_t>(w)];
    });
    p.d = best;
    p.hull_dim = hull_dim(c);
    return p;
}

int hull_dim(const BitMatrix& generator) {
    return static_cast<int>(generator.rows() - rank(gram(generator)));
}

int hull_dim(const LinearCode& c) { return hull_dim(c.generator()); }

bool is_lcd(const LinearCode& c) { return hull_dim(c) == 0; }
bool is_so(const LinearCode& c) { return hull_dim(c) == c.k(); }

LinearCode dual(const LinearCode& c) {
    if (c.k() >= c.n())
        throw std::invalid_argument("dual: k = n leaves the zero code");
    return LinearCode(nullspace(c.generator()));
}

LinearCode juxtapose(const LinearCode& c1, const LinearCode& c2) {
    if (c1.k() != c2.k())
        throw std::invalid_argument("juxtapose: dimensions differ");
    return LinearCode(hstack(c1.generator(), c2.generator()));
}

LinearCode extend_parity(const LinearCode& c) {
    const BitMatrix& g = c.generator();
    BitMatrix col(g.rows(), 1);
    bool any = false;
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (g.row_weight(r) & 1) { col.set(r, 0, true); any = true; }
    if (!any)
        throw std::invalid_argument("extend_parity: all rows even, column would be zero");
    return LinearCode(hstack(g, col));
}

LinearCode extend_best_column(const LinearCode& c, bool require_lcd) {
    if (c.k() > 20)
        throw std::invalid_argument("extend_best_column: k > 20");
    const BitMatrix& g = c.generator();
    const std::uint32_t types = (std::uint32_t{1} << c.k()) - 1;
    int best_d = -1;
    bool best_lcd = false;
    std::uint32_t best_t = 0;
    for (std::uint32_t t = 1; t <= types; ++t) {
        BitMatrix col(g.rows(), 1);
        for (int b = 0; b < c.k(); ++b)
            if ((t >> b) & 1) col.set(static_cast<std::size_t>(b), 0, true);
        const BitMatrix ext = hstack(g, col);
        const int d = min_distance(ext);
        const bool lcd = hull_dim(ext) == 0;
        bool better;
        if (d != best_d) better = d > best_d;
        else if (require_lcd && lcd != best_lcd) better = lcd;
        else better = false;  // earlier (smaller) index wins ties
        if (better) { best_d = d; best_lcd = lcd; best_t = t; }
    }
    if (require_lcd && !best_lcd) {
        // the d-maximal pick is not LCD; look for the best LCD one
        best_d = -1; best_t = 0;
        for (std::uint32_t t = 1; t <= types; ++t) {
            BitMatrix col(g.rows(), 1);
            for (int b = 0; b < c.k(); ++b)
                if ((t >> b) & 1) col.set(static_cast<std::size_t>(b), 0, true);
            const BitMatrix ext = hstack(g, col);
            if (hull_dim(ext) != 0) continue;
            const int d = min_distance(ext);
            if (d > best_d) { best_d = d; best_t = t; }
        }
        if (best_t == 0)
            throw std::invalid_argument("extend_best_column: no LCD extension exists");
        best_lcd = true;
    }
    BitMatrix col(g.rows(), 1);
    for (int b = 0; b < c.k(); ++b)
        if ((best_t >> b) & 1) col.set(static_cast<std::size_t>(b), 0, true);
    return LinearCode(hstack(g, col));
}

long long griesmer_min_length(int k, long long d) {
    if (k < 1 || d < 1)
        throw std::invalid_argument("griesmer_min_length: need k >= 1 and d >= 1");
    long long sum = 0;
    for (int i = 0; i < k; ++i) {
        const long long q = 1LL << i;
        sum += (d + q - 1) / q;
    }
    return sum;
}

int griesmer_max_d(int n, int k) {
    if (n < k)
        throw std::invalid_argument("griesmer_max_d: need n >= k");
    int d = 1;
    while (griesmer_min_length(k, d + 1) <= n) ++d;
    return d;
}

NestedWitness nested_witness(const LinearCode& c) {
    const int k = c.k();
    const int h = hull_dim(c);
    if (h == 0) throw std::invalid_argument("nested_witness: code is LCD, no hull");
    if (h == k) throw std::invalid_argument("nested_witness: code is SO, no LCD complement");

    const BitMatrix& g = c.generator();
    const BitMatrix hull = intersect_rowspaces(g, nullspace(g));
    if (static_cast<int>(hull.rows()) != h)
        throw std::runtime_error("nested_witness: hull dimension mismatch");

    // Extend the hull basis to a basis of the row space.
    const Rref code_basis = rref(g);
    BitMatrix completion(0, g.cols());
    {
        BitMatrix acc = hull;
        for (std::size_t r = 0; r < code_basis.matrix.rows(); ++r) {
            const BitMatrix cand = code_basis.matrix.row_slice(r, r + 1);
            const BitMatrix trial = vstack(acc, cand);
            if (rank(trial) > rank(acc)) {
                acc = trial;
                completion = vstack(completion, cand);
            }
        }
    }
    const int k1 = k - h;
    if (static_cast<int>(completion.rows()) != k1)
        throw std::runtime_error("nested_witness: completion size mismatch");

    // Every complement of the hull is completion + T * hull for some
    // k1 x h bit matrix T; all of them are LCD, so pick the one with the
    // largest subcode distance (ties: lexicographically smallest rows).
    if (static_cast<unsigned>(k1) * h > 24)
        throw std::invalid_argument("nested_witness: complement enumeration too large");
    const auto lex_less = [&g](const BitMatrix& a, const BitMatrix& b) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t cc = 0; cc < g.cols(); ++cc) {
                const bool x = a.get(i, cc), y = b.get(i, cc);
                if (x != y) return y;  // 0 before 1
            }
        return false;
    };
    const std::uint64_t combos = std::uint64_t{1} << (static_cast<unsigned>(k1) * h);
    int best_d = -1;
    BitMatrix best_rows;
    for (std::uint64_t t = 0; t < combos; ++t) {
        BitMatrix rows = completion;
        for (int i = 0; i < k1; ++i)
            for (int j = 0; j < h; ++j)
                if ((t >> (i * h + j)) & 1)
                    for (std::size_t cc = 0; cc < g.cols(); ++cc)
                        if (hull.get(static_cast<std::size_t>(j), cc))
                            rows.set(static_cast<std::size_t>(i), cc,
                                     !rows.get(static_cast<std::size_t>(i), cc));
        const int d = min_distance(rows);
        if (d > best_d || (d == best_d && lex_less(rows, best_rows))) {
            best_d = d;
            best_rows = rows;
        }
    }

    NestedWitness w{c, best_rows, hull, best_d, min_distance(g)};
    if (!is_invertible(gram(w.lcd_rows)))
        throw std::runtime_error("nested_witness: complement gram not invertible");
    if (rank(gram(w.hull_rows)) != 0)
        throw std::runtime_error("nested_witness: hull rows not self-orthogonal");
    if (rank(matmul(w.hull_rows, w.code.generator().transposed())) != 0)
        throw std::runtime_error("nested_witness: hull rows not orthogonal to the code");
    if (rank(vstack(w.lcd_rows, w.hull_rows)) != static_cast<std::size_t>(k))
        throw std::runtime_error("nested_witness: split does not span the code");
    return w;
}

}  // namespace lcd
