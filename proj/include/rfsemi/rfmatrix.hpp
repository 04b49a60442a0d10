#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rfsemi/configenum.hpp"
#include "rfsemi/semigroup.hpp"

namespace rfsemi {

/// Row-factorization matrix of a pseudo-Frobenius number: diagonal -1,
/// non-negative elsewhere, every row sums (against the generators) to the
/// target.
struct RFMatrix {
    Int target = 0;
    int order = 0;
    std::vector<Int> entries; // row-major, order*order

    Int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
    Int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
};

/// Checks the RFMatrix invariants against a semigroup: a_ii = -1,
/// a_ij >= 0 off the diagonal, and row i sums to target for every i.
bool rf_matrix_valid(const NumericalSemigroup& s, const RFMatrix& m);

/// lambda_ij = max{ k in N : k*g_j - g_i not in S } and the multiset
/// Lambda = { lambda_ij*g_j - g_i : i != j } of size e(e-1).
struct LambdaTable {
    int order = 0;
    std::vector<Int> lambda;     // row-major, diagonal entries 0 (unused)
    std::vector<Int> big_lambda; // sorted multiset, size e(e-1)

    Int at(int i, int j) const { return lambda[static_cast<std::size_t>(i) * order + j]; }
};

/// Witness that f (or F - f) equals k*g_j - g_i.
struct GoodWitness {
    Int value = 0; // the pseudo-Frobenius number classified
    int i = 0;     // generator indices, 0-based
    int j = 0;
    Int k = 0;
    bool via_complement = false; // the witness matches F - value rather than value
};

/// PF(S) \ {F} split into good and bad numbers, with {f, F-f} couples.
struct PFClassification {
    Int frobenius = 0;
    std::vector<GoodWitness> good;        // sorted by value
    std::vector<Int> bad;                 // sorted
    std::vector<std::pair<Int, Int>> couples; // f <= F-f; F/2 paired with itself

    std::vector<Int> good_values() const;
};

/// Zero-structure report for a couple of RF-matrices (A for f, B for F-f).
struct PairPropertyReport {
    int zeros_total = 0;    // zero off-diagonal entries across A and B
    bool prop1_ok = false;      // a_ij * b_ji = 0 for all i != j
    bool property_a_ok = false; // exactly one of {a_ij, b_ji} zero per pair
    bool property_b_ok = false; // two positives and two zeros per row/column of each
};

struct SharedPositiveRows {
    int row1 = 0;
    int row2 = 0;
    int column = 0; // the unique column where both rows are positive
};

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// All non-negative coefficient vectors c (aligned with the generators) with
/// sum c_j * g_j = v; c[excluded] forced to zero when excluded >= 0.
/// Lexicographically sorted. Throws CapExceeded past `cap` vectors.
std::vector<std::vector<Int>> factorizations(const NumericalSemigroup& s, Int v,
                                             int excluded = -1,
                                             std::size_t cap = kDefaultCap);

/// All RF-matrices of a pseudo-Frobenius number f: the row-wise Cartesian
/// product of the factorizations of f + g_i. Throws NotPseudoFrobenius,
/// CapExceeded.
std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& s, Int f,
                                  std::size_t cap = kDefaultCap);

/// As rf_matrices but truncates at `limit` matrices instead of throwing.
/// Intended for sampled property checks; never use where completeness matters.
std::vector<RFMatrix> rf_matrices_sample(const NumericalSemigroup& s, Int f,
                                         std::size_t limit);

LambdaTable lambda_table(const NumericalSemigroup& s);

/// Good/bad classification of PF(S) \ {F}. Throws NotAlmostSymmetric.
PFClassification classify_pf(const NumericalSemigroup& s);

/// Zero-structure report for two matrices of equal order. Throws OrderMismatch.
PairPropertyReport pair_report(const RFMatrix& a, const RFMatrix& b);

ZeroConfig zero_configuration(const RFMatrix& a);

/// For an order-5 matrix satisfying property (b): the two rows sharing
/// exactly one positive column, and that column. Absent when the matrix
/// does not have the (b) structure.
std::optional<SharedPositiveRows> shared_positive_rows(const RFMatrix& a);

} // namespace rfsemi
