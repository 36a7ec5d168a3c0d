#pragma once

#include <map>
#include <mutex>
#include <numeric>

#include "tutteframe/matroid.hpp"

namespace tutteframe {

// Formal integer combination of symbols [b], all sharing (n, r).
struct SymbolCombination {
    int n = 0;
    int r = 0;
    std::map<BitSequence, BigInt> coefficients;

    void add(const BitSequence& b, const BigInt& c) {
        if (c.is_zero()) return;
        auto it = coefficients.find(b);
        if (it == coefficients.end()) {
            coefficients.emplace(b, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coefficients.erase(it);
        }
    }
    void add_scaled(const SymbolCombination& other, const BigInt& scale) {
        for (const auto& [b, c] : other.coefficients) add(b, c * scale);
    }

    friend bool operator==(const SymbolCombination& a, const SymbolCombination& b) {
        return a.n == b.n && a.r == b.r && a.coefficients == b.coefficients;
    }
};

// Sp[b] = (1/n!) sum_m binom(n,m) (x-1)^{r - wt_m} (y-1)^{m - wt_m}.
// Cached: the same symbols recur across every filter of a given (n, r).
inline Bivariate specialize_symbol(const BitSequence& b) {
    static std::mutex cache_mutex;
    static std::map<std::pair<int, uint64_t>, Bivariate> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({b.n, b.bits});
        if (it != cache.end()) return it->second;
    }
    int n = b.n, r = b.weight();
    Rational inv_nfact(BigInt(1), factorial(n));
    Bivariate p;
    int wt = 0;
    for (int m = 0; m <= n; ++m) {
        if (m > 0) wt += b.bit(m);
        p += xm1_ym1_expansion(r - wt, m - wt, inv_nfact * Rational(binomial(n, m)));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(b.n, b.bits), p);
    return p;
}

inline Bivariate specialize_combination(const SymbolCombination& s) {
    Bivariate p;
    for (const auto& [b, c] : s.coefficients) p += specialize_symbol(b).scaled(Rational(c));
    return p;
}

// gamma(a) = a! * sum_{b in [a)} c(shift(b, a)) [b].
inline SymbolCombination gamma_symbols(const Composition& a, int cap = default_filter_cap()) {
    SymbolCombination out;
    out.n = a.n();
    out.r = a.r();
    BigInt afact = composition_factorial(a);
    for_each_filter_element(a, [&](const BitSequence& b, const ShiftVector& s) {
        out.add(b, afact * coefficient_c(a, s));
    }, cap);
    return out;
}

// Catenary data: flag counts nu(M; a) indexed by size-increment composition.
struct CatenaryData {
    int n = 0;
    int r = 0;
    std::map<Composition, BigInt> nu;
};

// Counts maximal flag chains grouped by composition, by memoized descent over
// the lattice of flats (suffix-composition counts per flat).
inline CatenaryData catenary_data(const Matroid& m, int flat_cap = default_flat_cap()) {
    CatenaryData data;
    data.n = m.n();
    data.r = m.r();
    auto levels = flats_by_rank(m, flat_cap);
    // suffix[k][flat] = map from remaining size-increment lists to counts
    using SuffixCounts = std::map<std::vector<int>, BigInt>;
    std::map<uint64_t, SuffixCounts> current;
    for (const Flat& top : levels[m.r()]) current[top.elements] = {{{}, BigInt(1)}};
    for (int k = m.r(); k-- > 0;) {
        // covers of each rank-k flat live at rank k+1
        std::map<uint64_t, SuffixCounts> next;
        for (const Flat& f : levels[k]) {
            SuffixCounts mine;
            for (const Flat& g : levels[k + 1]) {
                if ((f.elements & g.elements) != f.elements) continue;
                auto it = current.find(g.elements);
                if (it == current.end()) continue;
                int increment = g.size - f.size;
                for (const auto& [suffix, count] : it->second) {
                    std::vector<int> ext;
                    ext.reserve(suffix.size() + 1);
                    ext.push_back(increment);
                    ext.insert(ext.end(), suffix.begin(), suffix.end());
                    auto [pos, inserted] = mine.try_emplace(std::move(ext), count);
                    if (!inserted) pos->second += count;
                }
            }
            next[f.elements] = std::move(mine);
        }
        current = std::move(next);
    }
    const Flat& bottom = levels[0][0];
    for (const auto& [suffix, count] : current[bottom.elements]) {
        std::vector<int> parts;
        parts.push_back(bottom.size);
        parts.insert(parts.end(), suffix.begin(), suffix.end());
        data.nu.emplace(Composition(parts), count);
    }
    return data;
}

// Rank-sequence sum over all n! permutations; the factorial oracle.
inline SymbolCombination g_invariant_perm(const Matroid& m) {
    if (m.n() > 8) throw infeasible_error("g_invariant_perm: n > 8");
    SymbolCombination out;
    out.n = m.n();
    out.r = m.r();
    std::vector<int> perm(m.n());
    std::iota(perm.begin(), perm.end(), 1);
    do {
        BitSequence b;
        b.n = m.n();
        uint64_t mask = 0;
        int prev = 0;
        for (int i = 0; i < m.n(); ++i) {
            mask |= 1ull << (perm[i] - 1);
            int rk = m.rank(mask);
            if (rk > prev) b.bits |= 1ull << i;
            prev = rk;
        }
        out.add(b, BigInt(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// G(M) = sum_a nu(M; a) gamma(a), the catenary route.
inline SymbolCombination g_invariant_catenary(const Matroid& m, int cap = default_filter_cap(),
                                              int flat_cap = default_flat_cap()) {
    CatenaryData data = catenary_data(m, flat_cap);
    SymbolCombination out;
    out.n = m.n();
    out.r = m.r();
    for (const auto& [a, count] : data.nu) out.add_scaled(gamma_symbols(a, cap), count);
    return out;
}

// Tutte polynomial as Sp applied to the catenary G-invariant.
inline Bivariate tutte_via_sp(const Matroid& m, int cap = default_filter_cap(),
                              int flat_cap = default_flat_cap()) {
    return specialize_combination(g_invariant_catenary(m, cap, flat_cap));
}

}  // namespace tutteframe
