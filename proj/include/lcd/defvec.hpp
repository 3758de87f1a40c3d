#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcd/bitmatrix.hpp"
#include "lcd/linear_code.hpp"

namespace lcd {

/// Column-multiplicity vector of a generator matrix: entry i (0-based)
/// counts columns equal to the binary representation of i+1, least
/// significant bit in row 0.
struct DefiningVector {
    int k = 0;
    std::vector<int> mult;  // size 2^k - 1

    long long length() const {
        long long s = 0;
        for (int m : mult) s += m;
        return s;
    }
    int num_types() const { return (1 << k) - 1; }

    friend bool operator==(const DefiningVector&, const DefiningVector&) = default;
};

/// Generator of the simplex code: column j is the binary representation
/// of j+1.  Matches the block recursion S_{k+1} = (S_k 0 S_k ; 0 1 1).
BitMatrix simplex_matrix(int k);  // 2 <= k <= 16

/// The (2^k-1) x (2^k-1) matrix whose rows are the nonzero simplex
/// codewords, in message-index order; cached after first construction.
const BitMatrix& pk_matrix(int k);  // 2 <= k <= 12
/// J_k - P_k; every row has 2^{k-1} - 1 ones.
const BitMatrix& qk_matrix(int k);

/// Counts column types; requires no zero column and 2 <= rows <= 16.
DefiningVector defining_vector(const BitMatrix& g);

/// Columns in increasing type order with the stated multiplicities.
BitMatrix matrix_from_defvec(const DefiningVector& l);

struct WeightProfile {
    std::vector<long long> w;       // codeword weights, P_k row order
    long long d = 0;                // min of w
    std::vector<long long> lambda;  // w - d
    long long sigma = 0;            // sum of lambda = 2^{k-1} n - d (2^k - 1)
};

/// Integer identity W^T = P_k L^T plus the sigma bookkeeping.
WeightProfile weight_profile(const DefiningVector& l);

/// Range every multiplicity of an [n, k, d] code with this sigma lies in:
/// lo = max(0, ceil((d - sigma)/2^{k-1})), hi = floor((d + sigma)/2^{k-1}).
std::pair<long long, long long> li_bounds(long long d, long long sigma, int k);

/// Sorted (value, count) pairs.
using TypeSignature = std::vector<std::pair<int, int>>;
TypeSignature type_signature(const DefiningVector& l);

/// Anti-vector data of L relative to a = l_max.
struct AntiCode {
    int a = 0;                 // base multiplicity
    std::vector<int> anti;     // a - l_i per position
    long long m = 0;           // a(2^k - 1) - n
    long long delta = 0;       // max anti-code weight (0 when empty)
};

/// Computes the anti-code and checks d = a 2^{k-1} - delta; for k >= 3 it
/// also checks the Gram matrices of L and its anti-matrix agree.
AntiCode anti(const DefiningVector& l);

/// Reduced code: maps column type v to e_1, deletes its columns and row 1.
/// Result is an [n - mult(v), k-1, >= d] code without zero columns.
LinearCode reduce(const LinearCode& c, std::uint32_t column_type);

enum class CanonMode { exact, best_effort };

/// Lexicographically smallest vector in the GL(k,2) orbit of L.  Exact for
/// k <= 5; k = 6 requires CanonMode::best_effort and may return a
/// non-minimal orbit member when the node budget runs out.
DefiningVector canonicalize(const DefiningVector& l, CanonMode mode = CanonMode::exact);

/// Serialized form "k: l_1 l_2 ... l_N".
std::string defvec_to_line(const DefiningVector& l);
DefiningVector defvec_from_line(const std::string& line);

}  // namespace lcd
