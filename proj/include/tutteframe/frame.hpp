#pragma once

#include "tutteframe/ginvariant.hpp"

namespace tutteframe {

// nu of a composition, a_0 ignored: prod (c_i + ... + c_r) / prod c_i over i < r.
inline Rational nu_value(const std::vector<int>& mid) {
    BigInt num(1), den(1);
    int s = static_cast<int>(mid.size());
    int tail = 0;
    for (int i = 0; i < s; ++i) tail += mid[i];
    for (int i = 0; i + 1 < s; ++i) {
        num *= BigInt(tail);
        den *= BigInt(mid[i]);
        tail -= mid[i];
    }
    return Rational(num, den);
}

inline Rational nu_value(const Composition& a) {
    return nu_value(std::vector<int>(a.parts.begin() + 1, a.parts.end()));
}

// nu, the f_k, the Mobius multipliers m_{k,k-h}, and the interior
// coefficients f_{k,k-h} of a composition (a_0 ignored throughout).
struct FrameCoefficients {
    Rational nu;
    std::vector<Rational> f;                 // f[k], 1 <= k <= r; f[0] unused
    std::map<std::pair<int, int>, Rational> m;           // (k, h) -> m_{k,k-h}, h >= 1
    std::map<std::pair<int, int>, Rational> f_interior;  // (k, h) -> f_{k,k-h}, h >= 0

    const Rational& interior(int k, int h) const {
        auto it = f_interior.find({k, h});
        if (it == f_interior.end()) throw invalid_error("FrameCoefficients: (k, h) out of range");
        return it->second;
    }
};

inline FrameCoefficients frame_coefficients(const Composition& a) {
    std::vector<int> mid(a.parts.begin() + 1, a.parts.end());
    int r = static_cast<int>(mid.size());
    FrameCoefficients fc;
    fc.nu = nu_value(mid);
    fc.f.assign(r + 1, Rational(0));
    for (int k = 1; k <= r; ++k) {
        std::vector<int> head(mid.begin(), mid.begin() + k);
        std::vector<int> tail(mid.begin() + k, mid.end());
        fc.f[k] = Rational(1) / (nu_value(head) * nu_value(tail));
        fc.f_interior[{k, 0}] = fc.f[k];
    }
    auto range = [&](int i, int j) {  // a_{i:j} over middle parts, 1-based, symmetric
        if (i > j) std::swap(i, j);
        int s = 0;
        for (int t = i; t <= j; ++t) s += mid[t - 1];
        return s;
    };
    // Multipliers exist for k <= r-1; the expansion never uses k = r ones and
    // their defining index ranges would be empty there.
    for (int k = 2; k <= r - 1; ++k) {
        for (int h = 1; h <= k - 1; ++h) {
            BigInt num(1), den(1);
            for (int i = 0; i < h; ++i) {
                num *= BigInt(range(k + 1 - i, r));
                den *= BigInt(range(k - h + 1, k - i));
            }
            Rational mult(num, den);
            fc.m[{k, h}] = mult;
            fc.f_interior[{k, h}] = mult * fc.f[k - h];
        }
    }
    return fc;
}

// Formula route for the interior coefficients, phrased in slice norms; an
// independent check against frame_coefficients.
inline Rational interior_coefficient_normform(const Composition& a, int k, int h) {
    std::vector<int> mid(a.parts.begin() + 1, a.parts.end());
    int r = static_cast<int>(mid.size());
    if (!(1 <= h && h <= k - 1 && k <= r - 1))
        throw invalid_error("interior_coefficient_normform: need 1 <= h <= k-1 <= r-2");
    auto range = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        int s = 0;
        for (int t = i; t <= j; ++t) s += mid[t - 1];
        return s;
    };
    int n = range(1, r);
    int xi_kh = range(1, k - h);
    BigInt binoms = binomial(range(k - h + 1, r) - 1, range(k - h + 1, k));
    for (int i = 0; i <= h - 2; ++i)
        binoms *= binomial(range(k - h + 1, k - i) - 1, range(k - h + 1, k - i - 1));
    BigInt midfact(1);
    for (int p : mid) midfact *= factorial(p);
    std::vector<int> head(mid.begin(), mid.begin() + (k - h));
    std::vector<int> tail(mid.begin() + k, mid.end());
    head.insert(head.begin(), 0);
    tail.insert(tail.begin(), 0);
    BigInt norms = norm_closed(Composition(head)) * norm_closed(Composition(tail));
    return Rational(binoms * midfact * norms, factorial(xi_kh) * factorial(n - xi_kh));
}

// --- the three gamma-bar routes --------------------------------------------

// Oracle route: Sp applied to the gamma expansion, symbol by symbol.
inline Bivariate gammabar_oracle(const Composition& a, int cap = default_filter_cap()) {
    return specialize_combination(gamma_symbols(a, cap));
}

namespace detail {

inline Bivariate y_power(int e) { return Bivariate::monomial(0, e); }

inline void split_loops(const Composition& a, int& loops, Composition& loopless) {
    loops = a.a(0);
    std::vector<int> parts = a.parts;
    parts[0] = 0;
    loopless = Composition(parts);
}

}  // namespace detail

// Norm route: the syzygy-regrouped expansion with brute-force slice norms.
inline Bivariate gammabar_norms(const Composition& a, int cap = default_filter_cap()) {
    int loops;
    Composition az;
    detail::split_loops(a, loops, az);
    int n = az.n(), r = az.r();
    if (r == 0) return detail::y_power(loops);
    std::vector<int> xi = partial_sums(az);

    // One filter pass accumulates every cumulative slice norm the formula needs.
    // cum[k][j] = || [a; s_{k+1} <= j) ||, 1 <= k <= r-1.
    std::vector<std::vector<BigInt>> cum(r);
    for (int k = 1; k <= r - 1; ++k) cum[k].assign(std::max(0, xi[k] - k), BigInt(0));
    BigInt total(0);
    for_each_filter_element(az, [&](const BitSequence&, const ShiftVector& s) {
        BigInt c = coefficient_c(az, s);
        total += c;
        for (int k = 1; k <= r - 1; ++k) {
            int j = s[k];  // coordinate s_{k+1}
            if (j < static_cast<int>(cum[k].size())) cum[k][j] += c;
        }
    }, cap);
    for (int k = 1; k <= r - 1; ++k)
        for (std::size_t j = 1; j < cum[k].size(); ++j) cum[k][j] += cum[k][j - 1];

    BigInt afact = composition_factorial(az);
    Bivariate result = tutte_uniform(r, n).scaled(Rational(afact * total, factorial(n)));
    Bivariate correction;
    for (int k = 1; k <= r - 1; ++k) {
        Bivariate inner;
        for (int j = 0; j <= xi[k] - k - 1; ++j) {
            Rational coeff(afact * cum[k][j], factorial(xi[k] - j) * factorial(n - xi[k] + j));
            inner += xm1_ym1_expansion(0, xi[k] - k - j - 1, coeff);
        }
        correction += xm1_ym1_expansion(r - k - 1, 0, Rational(1)) * inner;
    }
    result += Bivariate::syzygy_kernel() * correction;
    return result * detail::y_power(loops);
}

// Closed route: tau-polynomial form with the frame coefficients; the
// production route (no enumeration).
inline Bivariate gammabar_closed(const Composition& a) {
    int loops;
    Composition az;
    detail::split_loops(a, loops, az);
    int n = az.n(), r = az.r();
    if (r == 0) return detail::y_power(loops);
    std::vector<int> xi = partial_sums(az);
    FrameCoefficients fc = frame_coefficients(az);

    Bivariate result = tutte_uniform(r, n).scaled(fc.f[r]);
    Bivariate correction;
    for (int k = 1; k <= r - 1; ++k) {
        Bivariate inner;
        for (int h = 0; h <= k - 1; ++h) {
            Bivariate t = tau(k + 1, xi[k - h] - k - 1);
            if (t.is_zero()) continue;
            Rational c = fc.interior(k, h);
            if (h % 2) c = -c;
            inner += t.scaled(c);
        }
        if (!inner.is_zero()) correction += xm1_ym1_expansion(r - k - 1, 0, Rational(1)) * inner;
    }
    result += Bivariate::syzygy_kernel() * correction;
    return result * detail::y_power(loops);
}

// T(M) = sum_a nu(M; a) gammabar(a), non-negative integer coefficients.
inline Bivariate tutte_via_frame(const Matroid& m, int flat_cap = default_flat_cap()) {
    CatenaryData data = catenary_data(m, flat_cap);
    Bivariate result;
    for (const auto& [a, count] : data.nu) result += gammabar_closed(a).scaled(Rational(count));
    return result;
}

}  // namespace tutteframe
