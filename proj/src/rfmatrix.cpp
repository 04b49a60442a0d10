#include "rfsemi/rfmatrix.hpp"

#include <algorithm>

namespace rfsemi {

bool rf_matrix_valid(const NumericalSemigroup& s, const RFMatrix& m) {
    const auto& gens = s.generators();
    if (m.order != s.embedding_dimension()) return false;
    for (int i = 0; i < m.order; ++i) {
        Int sum = 0;
        for (int j = 0; j < m.order; ++j) {
            Int a = m.at(i, j);
            if (i == j && a != -1) return false;
            if (i != j && a < 0) return false;
            sum += a * gens[static_cast<std::size_t>(j)];
        }
        if (sum != m.target) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<Int>> factorizations_impl(const NumericalSemigroup& s, Int v,
                                                  int excluded, std::size_t cap,
                                                  bool truncate) {
    if (v < 0) throw Error("factorization target must be non-negative");
    const auto& gens = s.generators();
    const int e = s.embedding_dimension();
    std::vector<std::vector<Int>> out;
    std::vector<Int> coeff(static_cast<std::size_t>(e), 0);

    // Coefficients chosen for the largest generators first; tight remainders
    // prune early.
    auto dfs = [&](auto&& self, int idx, Int rem) -> void {
        if (idx < 0) {
            if (rem == 0) {
                if (out.size() >= cap) {
                    if (truncate) return;
                    throw CapExceeded("factorization count exceeds cap");
                }
                out.push_back(coeff);
            }
            return;
        }
        if (idx == excluded) {
            self(self, idx - 1, rem);
            return;
        }
        Int g = gens[static_cast<std::size_t>(idx)];
        if (idx == 0 && excluded != 0) {
            if (rem % g == 0) {
                coeff[0] = rem / g;
                self(self, -1, 0);
                coeff[0] = 0;
            }
            return;
        }
        for (Int c = 0; c * g <= rem; ++c) {
            coeff[static_cast<std::size_t>(idx)] = c;
            self(self, idx - 1, rem - c * g);
        }
        coeff[static_cast<std::size_t>(idx)] = 0;
    };
    dfs(dfs, e - 1, v);

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::vector<Int>> factorizations(const NumericalSemigroup& s, Int v,
                                             int excluded, std::size_t cap) {
    return factorizations_impl(s, v, excluded, cap, false);
}

namespace {

std::vector<RFMatrix> rf_matrices_impl(const NumericalSemigroup& s, Int f,
                                       std::size_t cap, bool truncate) {
    const auto& gens = s.generators();
    const int e = s.embedding_dimension();
    auto pf = s.pseudo_frobenius();
    if (!std::binary_search(pf.begin(), pf.end(), f)) throw NotPseudoFrobenius();

    // Since f is not in S, no factorization of f + g_i can use g_i; the
    // exclusion only prunes the search.
    std::vector<std::vector<std::vector<Int>>> rows;
    rows.reserve(static_cast<std::size_t>(e));
    std::size_t product = 1;
    for (int i = 0; i < e; ++i) {
        rows.push_back(factorizations_impl(s, f + gens[static_cast<std::size_t>(i)], i,
                                           cap, truncate));
        std::size_t count = rows.back().size();
        if (count == 0) throw Error("no row factorization; semigroup state corrupt");
        if (!truncate && product > cap / count)
            throw CapExceeded("RF-matrix count exceeds cap");
        product = std::min(product * count, cap + 1);
    }
    if (!truncate && product > cap) throw CapExceeded("RF-matrix count exceeds cap");

    std::vector<RFMatrix> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
    while (true) {
        RFMatrix m;
        m.target = f;
        m.order = e;
        m.entries.assign(static_cast<std::size_t>(e) * e, 0);
        for (int i = 0; i < e; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
            for (int j = 0; j < e; ++j) m.at(i, j) = row[static_cast<std::size_t>(j)];
            m.at(i, i) = -1;
        }
        out.push_back(std::move(m));
        if (truncate && out.size() >= cap) break;
        // Mixed-radix increment, last row fastest.
        int i = e - 1;
        while (i >= 0) {
            if (++pick[static_cast<std::size_t>(i)] < rows[static_cast<std::size_t>(i)].size()) break;
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace

std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& s, Int f, std::size_t cap) {
    return rf_matrices_impl(s, f, cap, false);
}

std::vector<RFMatrix> rf_matrices_sample(const NumericalSemigroup& s, Int f,
                                         std::size_t limit) {
    return rf_matrices_impl(s, f, limit, true);
}

LambdaTable lambda_table(const NumericalSemigroup& s) {
    const auto& gens = s.generators();
    const int e = s.embedding_dimension();
    if (e < 2) throw Error("lambda table needs embedding dimension >= 2");
    LambdaTable t;
    t.order = e;
    t.lambda.assign(static_cast<std::size_t>(e) * e, 0);
    const Int f = s.frobenius();
    for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) {
            if (i == j) continue;
            Int gi = gens[static_cast<std::size_t>(i)];
            Int gj = gens[static_cast<std::size_t>(j)];
            Int k = (f + gi) / gj; // k*gj - gi not in S forces k*gj - gi <= F
            while (k >= 1 && s.contains(k * gj - gi)) --k;
            t.lambda[static_cast<std::size_t>(i) * e + j] = k;
            t.big_lambda.push_back(k * gj - gi);
        }
    }
    std::sort(t.big_lambda.begin(), t.big_lambda.end());
    return t;
}

std::vector<Int> PFClassification::good_values() const {
    std::vector<Int> v;
    v.reserve(good.size());
    for (const auto& w : good) v.push_back(w.value);
    return v;
}

PFClassification classify_pf(const NumericalSemigroup& s) {
    if (!s.is_almost_symmetric()) throw NotAlmostSymmetric();
    const auto& gens = s.generators();
    const int e = s.embedding_dimension();
    PFClassification c;
    c.frobenius = s.frobenius();

    // f is good when f or F-f has the form k*g_j - g_i with k >= 1,
    // i.e. g_j divides f + g_i (resp. F-f + g_i) with positive quotient.
    auto find_witness = [&](Int value) -> std::optional<GoodWitness> {
        for (int pass = 0; pass < 2; ++pass) {
            Int target = pass == 0 ? value : c.frobenius - value;
            for (int i = 0; i < e; ++i) {
                for (int j = 0; j < e; ++j) {
                    if (i == j) continue;
                    Int gi = gens[static_cast<std::size_t>(i)];
                    Int gj = gens[static_cast<std::size_t>(j)];
                    if ((target + gi) % gj == 0 && (target + gi) / gj >= 1)
                        return GoodWitness{value, i, j, (target + gi) / gj, pass == 1};
                }
            }
        }
        return std::nullopt;
    };

    for (Int f : s.pseudo_frobenius()) {
        if (f == c.frobenius) continue;
        if (auto w = find_witness(f))
            c.good.push_back(*w);
        else
            c.bad.push_back(f);
        Int partner = c.frobenius - f;
        if (f <= partner) c.couples.emplace_back(f, partner);
    }
    return c;
}

PairPropertyReport pair_report(const RFMatrix& a, const RFMatrix& b) {
    if (a.order != b.order) throw OrderMismatch();
    const int e = a.order;
    PairPropertyReport r;
    r.prop1_ok = true;
    r.property_a_ok = true;
    for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) {
            if (i == j) continue;
            if (a.at(i, j) == 0) ++r.zeros_total;
            if (b.at(i, j) == 0) ++r.zeros_total;
            if (a.at(i, j) * b.at(j, i) != 0) r.prop1_ok = false;
            if ((a.at(i, j) == 0) == (b.at(j, i) == 0)) r.property_a_ok = false;
        }
    }
    auto two_by_two = [e](const RFMatrix& m) {
        for (int i = 0; i < e; ++i) {
            int rp = 0, rz = 0, cp = 0, cz = 0;
            for (int j = 0; j < e; ++j) {
                if (j == i) continue;
                (m.at(i, j) > 0 ? rp : rz)++;
                (m.at(j, i) > 0 ? cp : cz)++;
            }
            if (rp != 2 || rz != 2 || cp != 2 || cz != 2) return false;
        }
        return true;
    };
    r.property_b_ok = e == 5 && two_by_two(a) && two_by_two(b);
    return r;
}

ZeroConfig zero_configuration(const RFMatrix& a) {
    ZeroConfig cfg{a.order, 0};
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < a.order; ++j)
            if (i != j && a.at(i, j) == 0)
                cfg.mask |= std::uint64_t{1} << config_bit_index(a.order, i, j);
    return cfg;
}

std::optional<SharedPositiveRows> shared_positive_rows(const RFMatrix& a) {
    if (a.order != 5) return std::nullopt;
    if (!config_admissible(zero_configuration(a))) return std::nullopt;
    const int e = a.order;
    for (int col = 0; col < e; ++col) {
        int r1 = -1, r2 = -1;
        for (int i = 0; i < e; ++i) {
            if (i == col || a.at(i, col) <= 0) continue;
            (r1 < 0 ? r1 : r2) = i;
        }
        if (r1 < 0 || r2 < 0) continue;
        int shared = 0;
        for (int j = 0; j < e; ++j)
            if (j != r1 && j != r2 && a.at(r1, j) > 0 && a.at(r2, j) > 0) ++shared;
        if (shared == 1) return SharedPositiveRows{r1, r2, col};
    }
    return std::nullopt;
}

} // namespace rfsemi
