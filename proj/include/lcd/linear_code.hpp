#pragma once

#include <cstdint>
#include <vector>

#include "lcd/bitmatrix.hpp"

namespace lcd {

struct CodeParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int hull_dim = 0;
    std::vector<std::uint64_t> weight_distribution;  // index = weight, 0..n

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// A binary [n, k] linear code held by a validated generator matrix:
/// full rank, no zero column, 1 <= k <= n.
class LinearCode {
public:
    explicit LinearCode(BitMatrix generator);

    int n() const { return static_cast<int>(gen_.cols()); }
    int k() const { return static_cast<int>(gen_.rows()); }
    const BitMatrix& generator() const { return gen_; }

private:
    BitMatrix gen_;
};

/// Code together with a hull basis and a complementary LCD subcode,
/// the input shape for gluing.
struct NestedWitness {
    LinearCode code;      // [n, k, d2]
    BitMatrix lcd_rows;   // k1 rows; generate D = [n, k1, d1], gram invertible
    BitMatrix hull_rows;  // k - k1 rows; span Hu(code)
    int d1 = 0;
    int d2 = 0;
};

/// Minimum weight over all nonzero codewords (Gray-code sweep, k <= 28).
int min_distance(const BitMatrix& generator);

/// Full parameter set: d, weight distribution, hull dimension.
CodeParams params(const LinearCode& c);

/// k - rank(G G^T); equals dim(rowspace ∩ nullspace) of the generator.
int hull_dim(const LinearCode& c);
int hull_dim(const BitMatrix& generator);

bool is_lcd(const LinearCode& c);
bool is_so(const LinearCode& c);

/// Dual code, generated by a nullspace basis; requires k < n.
LinearCode dual(const LinearCode& c);

/// Horizontal concatenation over a common message space.
LinearCode juxtapose(const LinearCode& c1, const LinearCode& c2);

/// Appends the row-parity column; every weight of the result is even.
/// Throws if every row already has even weight (the new column would be zero).
LinearCode extend_parity(const LinearCode& c);

/// Appends the best of all 2^k - 1 column types: maximal d, ties broken by
/// LCD-ness (when require_lcd) then smallest column index.  With require_lcd
/// set, throws if no extension is LCD.
LinearCode extend_best_column(const LinearCode& c, bool require_lcd);

/// Griesmer bound: sum of ceil(d / 2^i) for i = 0..k-1.
long long griesmer_min_length(int k, long long d);
/// Largest d with griesmer_min_length(k, d) <= n.
int griesmer_max_d(int n, int k);

/// Hull basis plus the maximum-distance LCD complement inside the row space.
/// Requires 0 < hull_dim(c) < k.
NestedWitness nested_witness(const LinearCode& c);

}  // namespace lcd
