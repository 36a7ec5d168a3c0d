#include <doctest.h>

#include "tutteframe/jsonio.hpp"
#include "tutteframe/polynomial.hpp"

using namespace tutteframe;

namespace {

Bivariate from_poly(std::initializer_list<std::tuple<int, int, long long>> terms) {
    Bivariate p;
    for (const auto& [i, j, c] : terms) p.add_term(i, j, Rational(c));
    return p;
}

// Corank-nullity sum for a uniform matroid, as an independent oracle.
Bivariate uniform_brute(int r, int n) {
    Bivariate p;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        int sz = __builtin_popcountll(mask);
        int rk = std::min(sz, r);
        p += xm1_ym1_expansion(r - rk, sz - rk, Rational(1));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial ring operations") {
    Bivariate x = Bivariate::x(), y = Bivariate::y(), one = Bivariate::constant(Rational(1));
    CHECK((x + y) * one == x + y);
    // (xy - x - y)(x - 1) = x^2 y - x^2 - 2xy + x + y
    CHECK(Bivariate::syzygy_kernel() * (x - one) ==
          from_poly({{2, 1, 1}, {2, 0, -1}, {1, 1, -2}, {1, 0, 1}, {0, 1, 1}}));
    CHECK((x + y).eval(Rational(1), Rational(1)) == Rational(2));
    CHECK((x + y).coeff(1, 0) == Rational(1));
    CHECK((x + y).coeff(2, 0) == Rational(0));
    CHECK((x - x).is_zero());
}

TEST_CASE("tau polynomials") {
    CHECK(tau(5, 4) == from_poly({{0, 0, 70}, {0, 1, 35}, {0, 2, 15}, {0, 3, 5}, {0, 4, 1}}));
    CHECK(tau(0, 3).is_zero());
    CHECK(tau(3, -2).is_zero());
    CHECK(tau(3, 1) == from_poly({{0, 0, 3}, {0, 1, 1}}));
    // tau(4, 9) = 220 + 165 y + ... + y^9
    Bivariate t49 = tau(4, 9);
    CHECK(t49.coeff(0, 0) == Rational(220));
    CHECK(t49.coeff(0, 1) == Rational(165));
    CHECK(t49.coeff(0, 9) == Rational(1));
    CHECK(t49.y_degree() == 9);
}

TEST_CASE("tau equals its (y-1) binomial form") {
    CHECK(tau_binomial_form(5, 4) == tau(5, 4));
    CHECK(tau_binomial_form(7, 0) == Bivariate::constant(Rational(1)));
    CHECK(tau_binomial_form(2, 1) == from_poly({{0, 0, 2}, {0, 1, 1}}));
    for (int d = 1; d <= 12; ++d)
        for (int alpha = 0; alpha <= 12; ++alpha) CHECK(tau_binomial_form(d, alpha) == tau(d, alpha));
}

TEST_CASE("tau recursion in the truncation length") {
    // tau(d, alpha+1) = binom(d+alpha, alpha+1) + y tau(d, alpha)
    for (int d = 1; d <= 12; ++d)
        for (int alpha = 0; alpha <= 12; ++alpha) {
            Bivariate lhs = tau(d, alpha + 1);
            Bivariate rhs = Bivariate::constant(Rational(binomial(d + alpha, alpha + 1))) +
                            Bivariate::y() * tau(d, alpha);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("uniform Tutte polynomials") {
    CHECK(tutte_uniform(1, 2) == from_poly({{1, 0, 1}, {0, 1, 1}}));
    CHECK(tutte_uniform(2, 3) == from_poly({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    Bivariate u313 = tutte_uniform(3, 13);
    CHECK(u313.coeff(1, 0) == Rational(55));
    CHECK(u313.coeff(0, 1) == Rational(55));
    CHECK(u313.coeff(2, 0) == Rational(10));
    CHECK(u313.coeff(0, 2) == Rational(45));
    CHECK(u313.coeff(0, 3) == Rational(36));
    Bivariate u440 = tutte_uniform(4, 40);
    CHECK(u440.coeff(1, 0) == Rational(8436));
    CHECK(u440.coeff(2, 0) == Rational(666));
    CHECK(u440.coeff(3, 0) == Rational(36));
    CHECK(u440.coeff(4, 0) == Rational(1));
    CHECK(u440.coeff(0, 1) == Rational(8436));
    CHECK(u440.coeff(0, 2) == Rational(7770));
    CHECK_THROWS_AS(tutte_uniform(5, 4), Error);
}

TEST_CASE("uniform Tutte matches corank-nullity for all n <= 12") {
    for (int n = 0; n <= 12; ++n)
        for (int r = 0; r <= n; ++r) {
            Bivariate u = tutte_uniform(r, n);
            CHECK(u == uniform_brute(r, n));
            if (0 < r && r < n) {
                CHECK(u.coeff(0, 0) == Rational(0));
                for (int i = 1; i <= r; ++i) CHECK(u.coeff(i, 0) == Rational(binomial(n - i - 1, r - i)));
                for (int j = 1; j <= n - r; ++j)
                    CHECK(u.coeff(0, j) == Rational(binomial(n - j - 1, n - r - j)));
                for (int i = 1; i <= r; ++i)
                    for (int j = 1; j <= n - r; ++j) CHECK(u.coeff(i, j) == Rational(0));
            }
            if (n >= 1) CHECK(u.eval(Rational(1), Rational(0)) == Rational(binomial(n - 1, r - 1)));
            CHECK(u.eval(Rational(1), Rational(1)) == Rational(binomial(n, r)));
        }
}

TEST_CASE("uniform Tutte against the tau pair, up to the binomial constant") {
    for (int n = 2; n <= 12; ++n)
        for (int r = 1; r < n; ++r) {
            // tau(n-r, r; x) + tau(r, n-r; y) - T(U_{r,n}) = binom(n, r)
            Bivariate tx;  // tau in x: transpose the y-only polynomial
            Bivariate ty = tau(n - r, r);
            for (const auto& [k, c] : ty.terms()) tx.add_term(k.second, k.first, c);
            Bivariate diff = tx + tau(r, n - r) - tutte_uniform(r, n);
            CHECK(diff == Bivariate::constant(Rational(binomial(n, r))));
        }
}

TEST_CASE("syzygy terms") {
    // moving the third one-bit of 11010 one place left
    CHECK(syzygy_term(2, 3, 3, 5) ==
          Bivariate::syzygy_kernel().scaled(Rational(1, 12)));
    CHECK(syzygy_term(1, 2, 2, 4) ==
          Bivariate::syzygy_kernel().scaled(Rational(1, factorial(2).to_int64() * factorial(2).to_int64())));
    CHECK_THROWS_AS(syzygy_term(3, 3, 3, 5), Error);
    CHECK_THROWS_AS(syzygy_term(1, 1, 3, 5), Error);
}

TEST_CASE("exact division by the syzygy kernel") {
    Bivariate q = from_poly({{0, 0, 3}, {0, 1, 1}});
    CHECK(divide_by_syzygy(Bivariate::syzygy_kernel() * q) == q);
    CHECK_THROWS_AS(divide_by_syzygy(Bivariate::x() + Bivariate::y()), Error);
    // random integer polynomials round-trip
    uint64_t state = 0xa4093822299f31d0ull;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state;
    };
    for (int it = 0; it < 50; ++it) {
        Bivariate p;
        int terms = 1 + static_cast<int>(next() % 8);
        for (int t = 0; t < terms; ++t)
            p.add_term(static_cast<int>(next() % 5), static_cast<int>(next() % 5),
                       Rational(static_cast<long long>(next() % 21) - 10));
        CHECK(divide_by_syzygy(Bivariate::syzygy_kernel() * p) == p);
    }
}

TEST_CASE("tableau rendering and parsing") {
    Bivariate u12 = tutte_uniform(1, 2);
    CHECK(render_tableau_text(u12, 1) == "  1\n1\n");
    CHECK(parse_tableau_text(render_tableau_text(u12, 1)) == u12);

    // zeros render blank, columns right-aligned
    Bivariate p = from_poly({{0, 1, 120}, {1, 0, 7}, {2, 2, -3}});
    std::string text = render_tableau_text(p, 2);
    CHECK(parse_tableau_text(text) == p);

    // rationals round-trip too
    Bivariate q = Bivariate::monomial(1, 1, Rational(2, 3)) + Bivariate::monomial(0, 0, Rational(-5));
    CHECK(parse_tableau_text(render_tableau_text(q, 1)) == q);
    CHECK(render_tableau_text(Bivariate(), 0) == "\n");
}

TEST_CASE("polynomial JSON round-trip") {
    Bivariate p = tutte_uniform(3, 7) + Bivariate::monomial(1, 1, Rational(1, 3));
    json j = polynomial_to_json(p, 7, 3);
    int n = 0, r = 0;
    CHECK(polynomial_from_json(j, &n, &r) == p);
    CHECK(n == 7);
    CHECK(r == 3);
    // terms sorted by (i, j)
    auto& terms = j.at("terms");
    for (std::size_t t = 1; t < terms.size(); ++t) {
        auto a = std::make_pair(terms[t - 1].at("i").get<int>(), terms[t - 1].at("j").get<int>());
        auto b = std::make_pair(terms[t].at("i").get<int>(), terms[t].at("j").get<int>());
        CHECK(a < b);
    }
}

TEST_CASE("poly string rendering") {
    CHECK(tutte_uniform(1, 2).to_poly_string() == "y + x");
    CHECK(Bivariate().to_poly_string() == "0");
    CHECK(Bivariate::monomial(2, 1, Rational(-3)).to_poly_string() == "-3*x^2*y");
}
