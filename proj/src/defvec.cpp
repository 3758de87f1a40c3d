#include "lcd/defvec.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lcd {

BitMatrix simplex_matrix(int k) {
    if (k < 2 || k > 16)
        throw std::invalid_argument("simplex_matrix: need 2 <= k <= 16");
    // S_2 base, then S_{j+1} = (S_j 0 S_j ; 0 1 1).
    BitMatrix s(2, 3);
    s.set(0, 0, true); s.set(0, 2, true);
    s.set(1, 1, true); s.set(1, 2, true);
    for (int j = 2; j < k; ++j) {
        const std::size_t n = s.cols();
        BitMatrix next(static_cast<std::size_t>(j) + 1, 2 * n + 1);
        for (std::size_t r = 0; r < s.rows(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (s.get(r, c)) {
                    next.set(r, c, true);
                    next.set(r, n + 1 + c, true);
                }
        for (std::size_t c = n; c < 2 * n + 1; ++c)
            next.set(static_cast<std::size_t>(j), c, true);
        s = next;
    }
    return s;
}

namespace {

BitMatrix build_pk(int k) {
    // P_2 base; P_{j+1} = (P_j 0 P_j ; 0 1 1 ; P_j 1 J-P_j).
    BitMatrix p(3, 3);
    p.set(0, 0, true); p.set(0, 2, true);
    p.set(1, 1, true); p.set(1, 2, true);
    p.set(2, 0, true); p.set(2, 1, true);
    for (int j = 2; j < k; ++j) {
        const std::size_t n = p.rows();
        BitMatrix next(2 * n + 1, 2 * n + 1);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const bool v = p.get(r, c);
                if (v) {
                    next.set(r, c, true);
                    next.set(r, n + 1 + c, true);
                    next.set(n + 1 + r, c, true);
                } else {
                    next.set(n + 1 + r, n + 1 + c, true);
                }
            }
        for (std::size_t c = n; c < 2 * n + 1; ++c) next.set(n, c, true);
        for (std::size_t r = n + 1; r < 2 * n + 1; ++r) next.set(r, n, true);
        p = next;
    }
    return p;
}

std::array<BitMatrix, 13> g_pk_cache;
std::array<BitMatrix, 13> g_qk_cache;
std::once_flag g_pk_once[13];
std::once_flag g_qk_once[13];

}  // namespace

const BitMatrix& pk_matrix(int k) {
    if (k < 2 || k > 12)
        throw std::invalid_argument("pk_matrix: need 2 <= k <= 12");
    std::call_once(g_pk_once[k], [k] { g_pk_cache[k] = build_pk(k); });
    return g_pk_cache[k];
}

const BitMatrix& qk_matrix(int k) {
    if (k < 2 || k > 12)
        throw std::invalid_argument("qk_matrix: need 2 <= k <= 12");
    std::call_once(g_qk_once[k], [k] {
        const BitMatrix& p = pk_matrix(k);
        BitMatrix q(p.rows(), p.cols());
        for (std::size_t r = 0; r < p.rows(); ++r)
            for (std::size_t c = 0; c < p.cols(); ++c)
                q.set(r, c, !p.get(r, c));
        g_qk_cache[k] = q;
    });
    return g_qk_cache[k];
}

DefiningVector defining_vector(const BitMatrix& g) {
    const int k = static_cast<int>(g.rows());
    if (k < 2 || k > 16)
        throw std::invalid_argument("defining_vector: need 2 <= rows <= 16");
    DefiningVector l;
    l.k = k;
    l.mult.assign((std::size_t{1} << k) - 1, 0);
    for (std::size_t c = 0; c < g.cols(); ++c) {
        std::uint32_t t = 0;
        for (int r = 0; r < k; ++r)
            if (g.get(static_cast<std::size_t>(r), c)) t |= std::uint32_t{1} << r;
        if (t == 0)
            throw std::invalid_argument("defining_vector: zero column present");
        ++l.mult[t - 1];
    }
    return l;
}

BitMatrix matrix_from_defvec(const DefiningVector& l) {
    const long long n = l.length();
    if (n < 1) throw std::invalid_argument("matrix_from_defvec: all-zero defining vector");
    BitMatrix g(static_cast<std::size_t>(l.k), static_cast<std::size_t>(n));
    std::size_t c = 0;
    for (int i = 0; i < l.num_types(); ++i) {
        const std::uint32_t type = static_cast<std::uint32_t>(i) + 1;
        for (int rep = 0; rep < l.mult[static_cast<std::size_t>(i)]; ++rep, ++c)
            for (int r = 0; r < l.k; ++r)
                if ((type >> r) & 1) g.set(static_cast<std::size_t>(r), c, true);
    }
    return g;
}

WeightProfile weight_profile(const DefiningVector& l) {
    const BitMatrix& p = pk_matrix(l.k);
    const int nt = l.num_types();
    WeightProfile wp;
    wp.w.assign(static_cast<std::size_t>(nt), 0);
    for (int i = 0; i < nt; ++i) {
        long long acc = 0;
        for (int j = 0; j < nt; ++j)
            if (p.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                acc += l.mult[static_cast<std::size_t>(j)];
        wp.w[static_cast<std::size_t>(i)] = acc;
    }
    wp.d = *std::min_element(wp.w.begin(), wp.w.end());
    wp.lambda.resize(wp.w.size());
    wp.sigma = 0;
    for (std::size_t i = 0; i < wp.w.size(); ++i) {
        wp.lambda[i] = wp.w[i] - wp.d;
        wp.sigma += wp.lambda[i];
    }
    return wp;
}

std::pair<long long, long long> li_bounds(long long d, long long sigma, int k) {
    if (sigma < 0 || d < 1)
        throw std::invalid_argument("li_bounds: need sigma >= 0 and d >= 1");
    const long long half = 1LL << (k - 1);
    const auto floor_div = [](long long a, long long b) {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    const long long lo = -floor_div(-(d - sigma), half);  // ceil
    const long long hi = floor_div(d + sigma, half);
    return {std::max(lo, 0LL), hi};
}

TypeSignature type_signature(const DefiningVector& l) {
    std::map<int, int> counts;
    for (int m : l.mult) ++counts[m];
    return TypeSignature(counts.begin(), counts.end());
}

namespace {

// Gram matrix of the code described by a multiplicity vector, reduced mod 2:
// only odd multiplicities contribute.
BitMatrix gram_of_multvec(int k, const std::vector<int>& mult) {
    BitMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < mult.size(); ++j) {
        if (!(mult[j] & 1)) continue;
        const std::uint32_t t = static_cast<std::uint32_t>(j) + 1;
        for (int a = 0; a < k; ++a)
            if ((t >> a) & 1)
                for (int b = 0; b < k; ++b)
                    if ((t >> b) & 1)
                        m.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                              !m.get(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    }
    return m;
}

}  // namespace

AntiCode anti(const DefiningVector& l) {
    AntiCode ac;
    ac.a = *std::max_element(l.mult.begin(), l.mult.end());
    ac.anti.resize(l.mult.size());
    for (std::size_t i = 0; i < l.mult.size(); ++i) {
        ac.anti[i] = ac.a - l.mult[i];
        ac.m += ac.anti[i];
    }
    ac.delta = 0;
    if (ac.m > 0) {
        const BitMatrix& p = pk_matrix(l.k);
        for (int i = 0; i < l.num_types(); ++i) {
            long long acc = 0;
            for (int j = 0; j < l.num_types(); ++j)
                if (p.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                    acc += ac.anti[static_cast<std::size_t>(j)];
            ac.delta = std::max(ac.delta, acc);
        }
    }
    const WeightProfile wp = weight_profile(l);
    if (wp.d != static_cast<long long>(ac.a) * (1LL << (l.k - 1)) - ac.delta)
        throw std::logic_error("anti: weight identity d = a 2^{k-1} - delta failed");
    if (l.k >= 3 && gram_of_multvec(l.k, l.mult) != gram_of_multvec(l.k, ac.anti))
        throw std::logic_error("anti: Gram matrices of L and its anti-vector differ");
    return ac;
}

LinearCode reduce(const LinearCode& c, std::uint32_t column_type) {
    const int k = c.k();
    if (k < 2) throw std::invalid_argument("reduce: need k >= 2");
    if (column_type == 0 || column_type >= (std::uint32_t{1} << k))
        throw std::invalid_argument("reduce: column type out of range");

    // B = [v | completion]; A = B^{-1} sends v to e_1.
    BitMatrix b(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
        if ((column_type >> r) & 1) b.set(static_cast<std::size_t>(r), 0, true);
    {
        std::size_t next_col = 1;
        for (int e = 0; e < k && next_col < static_cast<std::size_t>(k); ++e) {
            BitMatrix trial = b;
            trial.set(static_cast<std::size_t>(e), next_col, true);
            if (rank(trial.transposed().row_slice(0, next_col + 1)) == next_col + 1) {
                b = trial;
                ++next_col;
            }
        }
    }
    const auto a = inverse(b);
    if (!a) throw std::logic_error("reduce: completion failed");

    const BitMatrix transformed = matmul(*a, c.generator());
    std::vector<std::size_t> keep;
    std::size_t deleted = 0;
    for (std::size_t cc = 0; cc < transformed.cols(); ++cc) {
        bool is_e1 = transformed.get(0, cc);
        for (int r = 1; r < k && is_e1; ++r)
            if (transformed.get(static_cast<std::size_t>(r), cc)) is_e1 = false;
        if (is_e1) ++deleted; else keep.push_back(cc);
    }
    if (deleted == 0)
        throw std::invalid_argument("reduce: column type not present in the generator");
    return LinearCode(transformed.select_columns(keep).row_slice(1, static_cast<std::size_t>(k)));
}

namespace {

// Lexicographically minimal orbit member under GL(k,2), computed by
// backtracking over the images of the k basis vectors.  Choosing image
// b_j fixes the permuted values at positions 2^{j-1}..2^j-1, which are
// compared against the incumbent block by block.
struct CanonSearch {
    int k;
    int nt;
    const std::vector<int>* input;
    std::vector<int> best;
    std::vector<std::uint32_t> image;  // image[i] = A * alpha_{i+1}, index form
    std::vector<int> cand;
    long long budget;
    bool exhausted = false;

    void run(long long node_budget) {
        budget = node_budget;
        best = *input;
        image.assign(static_cast<std::size_t>(nt) + 1, 0);
        cand.assign(static_cast<std::size_t>(nt), 0);
        std::vector<char> in_span(static_cast<std::size_t>(nt) + 1, 0);
        in_span[0] = 1;
        descend(0, /*strictly_less=*/false, in_span);
    }

    void descend(int level, bool strictly_less, std::vector<char>& in_span) {
        if (level == k) {
            if (strictly_less) best.assign(cand.begin(), cand.end());
            return;
        }
        const int lo_pos = 1 << level;        // first new position, 1-based
        const int hi_pos = (2 << level) - 1;  // last new position, 1-based
        for (int b = 1; b <= nt; ++b) {
            if (in_span[static_cast<std::size_t>(b)]) continue;
            if (--budget < 0) { exhausted = true; return; }
            // fill the new block
            bool less = strictly_less, greater = false;
            image[static_cast<std::size_t>(lo_pos)] = static_cast<std::uint32_t>(b);
            for (int i = lo_pos; i <= hi_pos && !greater; ++i) {
                if (i != lo_pos)
                    image[static_cast<std::size_t>(i)] =
                        image[static_cast<std::size_t>(i - lo_pos)] ^ static_cast<std::uint32_t>(b);
                const int v = (*input)[image[static_cast<std::size_t>(i)] - 1];
                cand[static_cast<std::size_t>(i - 1)] = v;
                if (!less) {
                    const int cur = best[static_cast<std::size_t>(i - 1)];
                    if (v < cur) less = true;
                    else if (v > cur) greater = true;
                }
            }
            if (greater) continue;
            // extend span by b
            std::vector<int> added;
            for (int x = 0; x <= nt; ++x)
                if (in_span[static_cast<std::size_t>(x)] && !in_span[static_cast<std::size_t>(x ^ b)])
                    added.push_back(x ^ b);
            for (int x : added) in_span[static_cast<std::size_t>(x)] = 1;
            descend(level + 1, less, in_span);
            for (int x : added) in_span[static_cast<std::size_t>(x)] = 0;
            if (exhausted) return;
        }
    }
};

}  // namespace

DefiningVector canonicalize(const DefiningVector& l, CanonMode mode) {
    if (l.k > 6 || (l.k == 6 && mode != CanonMode::best_effort))
        throw std::invalid_argument("canonicalize: exact mode supports k <= 5");
    CanonSearch s;
    s.k = l.k;
    s.nt = l.num_types();
    s.input = &l.mult;
    s.run(mode == CanonMode::best_effort ? 4'000'000 : -1);
    DefiningVector out;
    out.k = l.k;
    out.mult = std::move(s.best);
    return out;
}

std::string defvec_to_line(const DefiningVector& l) {
    std::ostringstream os;
    os << l.k << ':';
    for (int m : l.mult) os << ' ' << m;
    return os.str();
}

DefiningVector defvec_from_line(const std::string& line) {
    std::istringstream is(line);
    DefiningVector l;
    char colon = 0;
    if (!(is >> l.k >> colon) || colon != ':')
        throw std::runtime_error("defvec: malformed header");
    if (l.k < 2 || l.k > 16)
        throw std::runtime_error("defvec: k out of range");
    l.mult.resize((std::size_t{1} << l.k) - 1);
    for (auto& m : l.mult)
        if (!(is >> m)) throw std::runtime_error("defvec: too few entries");
    int extra;
    if (is >> extra) throw std::runtime_error("defvec: too many entries");
    return l;
}

}  // namespace lcd
