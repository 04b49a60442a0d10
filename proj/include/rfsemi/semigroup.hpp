#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rfsemi/errors.hpp"

namespace rfsemi {

using Int = std::int64_t;

/// Gaps and small elements of a semigroup, together with their counts.
struct GapProfile {
    std::vector<Int> gaps;           // G(S), sorted
    std::vector<Int> small_elements; // N(S), sorted
    Int genus() const { return static_cast<Int>(gaps.size()); }
    Int n_small() const { return static_cast<Int>(small_elements.size()); }
};

/// A numerical semigroup given by its minimal generators, with the Apery
/// table (w.r.t. the multiplicity) precomputed. Immutable after construction;
/// all queries are pure and safe to call concurrently.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `raw`, reducing to the unique
    /// minimal generating set. Throws EmptyInput, NotCofinite, Overflow.
    static NumericalSemigroup from_generators(std::span<const Int> raw);
    static NumericalSemigroup from_generators(std::initializer_list<Int> raw);

    /// Fast path for tuples already known to be a minimal generating set
    /// with gcd 1 (skips the reduction step).
    static NumericalSemigroup from_minimal_generators(std::span<const Int> gens);

    const std::vector<Int>& generators() const { return gens_; }
    Int multiplicity() const { return gens_.front(); }
    int embedding_dimension() const { return static_cast<int>(gens_.size()); }
    const std::vector<Int>& apery() const { return apery_; }

    /// F(S); -1 when S = N.
    Int frobenius() const { return frobenius_; }

    bool contains(Int x) const {
        if (x < 0) return false;
        return x >= apery_[x % multiplicity()];
    }

    /// x <=_S y, i.e. y - x in S.
    bool leq(Int x, Int y) const { return contains(y - x); }

    GapProfile gap_profile() const;

    /// All f with f not in S and f + g_i in S for every generator, sorted.
    std::vector<Int> pseudo_frobenius() const;
    int type() const { return static_cast<int>(pseudo_frobenius().size()); }

    bool is_symmetric() const;
    bool is_almost_symmetric() const;

private:
    NumericalSemigroup() = default;
    void compute_apery();

    std::vector<Int> gens_;
    std::vector<Int> apery_;
    Int frobenius_ = -1;
};

/// Parses a comma-separated generator list such as "5,12,13" (spaces tolerated).
std::vector<Int> parse_generators(const std::string& text);

} // namespace rfsemi
