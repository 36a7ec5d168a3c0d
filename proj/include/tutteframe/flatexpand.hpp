#pragma once

#include "tutteframe/frame.hpp"

namespace tutteframe {

// Signed flat numbers f^t_{k,m}: key (k, m, t), entries with m == k are
// auxiliary (independent flats) and never contribute to reconstruction.
struct FlatTensor {
    int n = 0;
    int r = 0;
    std::map<std::tuple<int, int, int>, BigInt> entries;  // (k, m, t) -> f^t_{k,m}

    BigInt get(int k, int m, int t) const {
        auto it = entries.find({k, m, t});
        return it == entries.end() ? BigInt(0) : it->second;
    }
    void set(int k, int m, int t, const BigInt& v) {
        if (!v.is_zero()) entries[{k, m, t}] = v;
    }
};

// Total flat numbers F_{ij}, i = k + t, j = m - k - t.
struct FTableau {
    int n = 0;
    int r = 0;
    std::map<std::pair<int, int>, BigInt> entries;

    BigInt get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? BigInt(0) : it->second;
    }
    void add(int i, int j, const BigInt& v) {
        if (v.is_zero()) return;
        auto it = entries.find({i, j});
        if (it == entries.end()) {
            entries.emplace(std::make_pair(i, j), v);
        } else {
            it->second += v;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    friend bool operator==(const FTableau& a, const FTableau& b) {
        return a.n == b.n && a.r == b.r && a.entries == b.entries;
    }
};

// Normative catenary route:
//   f^t_{k,m} = (-1)^t sum_{a : a_0 = 0, xi_k = m} nu(M; a) m_{k+t,k}(a) f_k(a),
// every aggregate an integer before the sign is applied.
inline FlatTensor flat_tensor(const Matroid& m, int flat_cap = default_flat_cap()) {
    if (m.has_loops())
        throw invalid_error("flat_tensor: matroid has loops; strip them and apply the y^{a_0} factor");
    CatenaryData data = catenary_data(m, flat_cap);
    int r = m.r();
    FlatTensor tensor;
    tensor.n = m.n();
    tensor.r = r;
    std::map<std::tuple<int, int, int>, Rational> agg;
    for (const auto& [a, count] : data.nu) {
        FrameCoefficients fc = frame_coefficients(a);
        std::vector<int> xi = partial_sums(a);
        Rational nu_count{count};
        for (int k = 1; k <= r - 1; ++k) {
            int size = xi[k];
            for (int t = 0; t <= r - k - 1; ++t) {
                // m_{k+t,k} f_k = f_{k+t,k}: interior coefficient at (k+t, h=t)
                Rational term = nu_count * fc.interior(k + t, t);
                auto key = std::make_tuple(k, size, t);
                auto it = agg.find(key);
                if (it == agg.end()) agg.emplace(key, term);
                else it->second += term;
            }
        }
    }
    for (const auto& [key, value] : agg) {
        if (!value.is_integer())
            throw Error(Error::Kind::internal,
                        "flat_tensor: non-integer aggregate at (k=" + std::to_string(std::get<0>(key)) +
                            ", m=" + std::to_string(std::get<1>(key)) +
                            ", t=" + std::to_string(std::get<2>(key)) + "): " + value.to_string());
        BigInt v = value.num();
        if (std::get<2>(key) % 2) v = -v;
        tensor.set(std::get<0>(key), std::get<1>(key), std::get<2>(key), v);
    }
    return tensor;
}

// Cross-check route via Mobius invariants of truncated contractions:
//   f^t_{k,m} = (-1)^t sum_{X : rk X = k, |X| = m} mu(Trun^{r-k-t-1}(M/X)).
// Truncation depth and sign are the calibrated ones (the t = 0 case then
// counts flats, since a loopless rank-1 matroid has mu = 1).
inline FlatTensor flat_tensor_mobius(const Matroid& m, int flat_cap = default_flat_cap(),
                                     int direct_cap = default_direct_cap()) {
    if (m.has_loops()) throw invalid_error("flat_tensor_mobius: matroid has loops");
    auto levels = flats_by_rank(m, flat_cap);
    int r = m.r();
    FlatTensor tensor;
    tensor.n = m.n();
    tensor.r = r;
    for (int k = 1; k <= r - 1; ++k) {
        for (const Flat& f : levels[k]) {
            for (int t = 0; t <= r - k - 1; ++t) {
                BigInt mu;
                if (t == 0) {
                    mu = BigInt(1);  // rank-1 truncation of a loopless matroid
                } else {
                    Matroid quotient = truncate(contract_by(m, f.elements), r - k - t - 1);
                    mu = mobius_invariant(quotient, direct_cap);
                }
                if (t % 2) mu = -mu;
                auto key = std::make_tuple(k, f.size, t);
                auto it = tensor.entries.find(key);
                if (it == tensor.entries.end()) tensor.entries.emplace(key, mu);
                else it->second += mu;
            }
        }
    }
    for (auto it = tensor.entries.begin(); it != tensor.entries.end();)
        it = it->second.is_zero() ? tensor.entries.erase(it) : std::next(it);
    return tensor;
}

inline FTableau total_flat_numbers(const FlatTensor& tensor) {
    FTableau f;
    f.n = tensor.n;
    f.r = tensor.r;
    for (const auto& [key, value] : tensor.entries) {
        auto [k, m, t] = key;
        // auxiliary entries and tau-invisible ones (m - k - t < 1) carry no
        // information about the polynomial
        if (m == k || m - k - t < 1) continue;
        f.add(k + t, m - k - t, value);
    }
    return f;
}

// T = T(U_{r,n}) + (xy-x-y) sum f^t_{k,m} (x-1)^{r-k-t-1} tau(k+t+1, m-k-t-1).
inline Bivariate tutte_from_tensor(const FlatTensor& tensor) {
    Bivariate correction;
    for (const auto& [key, value] : tensor.entries) {
        auto [k, m, t] = key;
        Bivariate tp = tau(k + t + 1, m - k - t - 1);
        if (tp.is_zero()) continue;  // auxiliary entries and sub-diagonal terms
        correction += xm1_ym1_expansion(tensor.r - k - t - 1, 0, Rational(value)) * tp;
    }
    return tutte_uniform(tensor.r, tensor.n) + Bivariate::syzygy_kernel() * correction;
}

inline Bivariate tutte_from_f_tableau(const FTableau& f) {
    Bivariate correction;
    for (const auto& [key, value] : f.entries) {
        auto [i, j] = key;
        Bivariate tp = tau(i + 1, j - 1);
        if (tp.is_zero()) continue;
        correction += xm1_ym1_expansion(f.r - i - 1, 0, Rational(value)) * tp;
    }
    return tutte_uniform(f.r, f.n) + Bivariate::syzygy_kernel() * correction;
}

// Recovers the F-tableau of a loopless (n, r) Tutte polynomial: subtract
// T(U_{r,n}), divide by the syzygy kernel, then peel the triangular family
// (x-1)^{r-i-1} tau(i+1, j-1) in decreasing i, then decreasing j.
inline FTableau recover_f_tableau(const Bivariate& tutte, int n, int r) {
    FTableau f;
    f.n = n;
    f.r = r;
    Bivariate residual = divide_by_syzygy(tutte - tutte_uniform(r, n));
    // Stratify by (x-1)-degree: substitute x -> u + 1 once.
    std::map<int, Bivariate> strata;  // e -> polynomial in y
    for (const auto& [key, c] : residual.terms()) {
        auto [i, j] = key;
        for (int e = 0; e <= i; ++e)
            strata[e].add_term(0, j, c * Rational(binomial(i, e)));
    }
    for (int e = r - 2; e >= 0; --e) {  // i = r - 1 - e from high i to low
        int i = r - 1 - e;
        auto it = strata.find(e);
        if (it == strata.end()) continue;
        Bivariate level = it->second;
        while (!level.is_zero()) {
            int deg = level.y_degree();
            Rational lead = level.coeff(0, deg);
            int j = deg + 1;
            if (!lead.is_integer())
                throw invalid_error("recover_f_tableau: non-integer coefficient while peeling");
            f.add(i, j, lead.num());
            level -= tau(i + 1, j - 1).scaled(lead);
            // the peeled term is supported on strata[e] only
        }
        strata.erase(it);
    }
    for (const auto& [e, leftover] : strata)
        if (!leftover.is_zero())
            throw invalid_error("recover_f_tableau: residual after peeling; not a valid flat expansion");
    return f;
}

// Derived x = 1 specializations of the flat expansion; returns both sides of
// the mu recursion and of the basis-count identity.
struct MobiusRecursionCheck {
    BigInt mu_direct, mu_from_tensor;
    BigInt bases_direct, bases_from_tensor;
};

inline MobiusRecursionCheck mobius_recursions(const Matroid& m, const FlatTensor& tensor,
                                              const Bivariate& tutte) {
    MobiusRecursionCheck out;
    Rational mu = tutte.eval(Rational(1), Rational(0));
    Rational bases = tutte.eval(Rational(1), Rational(1));
    out.mu_direct = mu.num();
    out.bases_direct = bases.num();
    BigInt mu_sum(0), bases_sum(0);
    for (const auto& [key, value] : tensor.entries) {
        auto [k, mm, t] = key;
        if (k + t != m.r() - 1) continue;
        mu_sum += value * binomial(mm - 1, m.r() - 1);
        bases_sum += value * binomial(mm, m.r());
    }
    out.mu_from_tensor = binomial(m.n() - 1, m.r() - 1) - mu_sum;
    out.bases_from_tensor = binomial(m.n(), m.r()) - bases_sum;
    return out;
}

}  // namespace tutteframe
