#include <doctest.h>

#include "tutteframe/ginvariant.hpp"

using namespace tutteframe;

namespace {

std::vector<Composition> loopless_compositions(int n) {
    std::vector<Composition> out;
    for (uint64_t cuts = 0; cuts < (1ull << (n - 1)); ++cuts) {
        std::vector<int> parts{0};
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (cuts & (1ull << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(Composition(parts));
    }
    return out;
}

// The falling-factorial form of the gamma expansion, as an independent route:
// sum over b-compositions of (a_0)_{b_0} prod_j a_j (a_j - 1 + s_j)_{b_j - 1}.
SymbolCombination gamma_falling_factorial(const Composition& a) {
    SymbolCombination out;
    out.n = a.n();
    out.r = a.r();
    auto falling = [](int t, int k) {
        BigInt r(1);
        for (int i = 0; i < k; ++i) r *= BigInt(t - i);
        return r;
    };
    for_each_filter_element(a, [&](const BitSequence& b, const ShiftVector& s) {
        Composition bc = Composition::from_bits(b);
        BigInt coeff = falling(a.a(0), bc.a(0));
        for (int j = 1; j <= a.r(); ++j)
            coeff *= BigInt(a.a(j)) * falling(a.a(j) - 1 + s[j - 1], bc.a(j) - 1);
        out.add(b, coeff);
    });
    return out;
}

}  // namespace

TEST_CASE("specialized symbols") {
    // [11100] against the hand expansion
    Bivariate p = specialize_symbol(BitSequence::from_string("11100"));
    Bivariate expected = xm1_ym1_expansion(3, 0, Rational(1, 120)) +
                         xm1_ym1_expansion(2, 0, Rational(5, 120)) +
                         xm1_ym1_expansion(1, 0, Rational(10, 120)) +
                         xm1_ym1_expansion(0, 0, Rational(10, 120)) +
                         xm1_ym1_expansion(0, 1, Rational(5, 120)) +
                         xm1_ym1_expansion(0, 2, Rational(1, 120));
    CHECK(p == expected);

    // [1^r 0^{n-r}] = T(U_{r,n}) / n!
    for (int n = 1; n <= 9; ++n)
        for (int r = 0; r <= n; ++r) {
            BitSequence top{n, (r == 0) ? 0 : ((1ull << r) - 1)};
            CHECK(specialize_symbol(top) ==
                  tutte_uniform(r, n).scaled(Rational(BigInt(1), factorial(n))));
        }

    // adjacent swap produces a syzygy term
    Bivariate diff = specialize_symbol(BitSequence::from_string("11010")) -
                     specialize_symbol(BitSequence::from_string("11100"));
    CHECK(diff == Bivariate::syzygy_kernel().scaled(Rational(1, 12)));
    CHECK(diff == syzygy_term(2, 3, 3, 5));
}

TEST_CASE("iterated syzygy reconstruction for 10100") {
    // [10100] = (1/5!)(T(U_{2,5}) + 10 (xy-x-y))
    Bivariate lhs = specialize_symbol(BitSequence::from_string("10100"));
    Bivariate rhs = (tutte_uniform(2, 5) + Bivariate::syzygy_kernel().scaled(Rational(10)))
                        .scaled(Rational(BigInt(1), factorial(5)));
    CHECK(lhs == rhs);
}

TEST_CASE("gamma expansions in the symbol basis") {
    // gamma(0,1,1,3,5) = 720 (15 [1111000000] + 5 [1110100000] + [1110010000])
    SymbolCombination g = gamma_symbols(Composition({0, 1, 1, 3, 5}));
    REQUIRE(g.coefficients.size() == 3);
    CHECK(g.coefficients.at(BitSequence::from_string("1111000000")) == BigInt(720 * 15));
    CHECK(g.coefficients.at(BitSequence::from_string("1110100000")) == BigInt(720 * 5));
    CHECK(g.coefficients.at(BitSequence::from_string("1110010000")) == BigInt(720));

    // gamma(0,1,2,3,4): seven symbols, coefficients 0!1!2!3!4! * {60,30,12,3,10,4,1}
    SymbolCombination g2 = gamma_symbols(Composition({0, 1, 2, 3, 4}));
    REQUIRE(g2.coefficients.size() == 7);
    long long pref = 2 * 6 * 24;
    CHECK(g2.coefficients.at(BitSequence::from_string("1111000000")) == BigInt(pref * 60));
    CHECK(g2.coefficients.at(BitSequence::from_string("1110100000")) == BigInt(pref * 30));
    CHECK(g2.coefficients.at(BitSequence::from_string("1110010000")) == BigInt(pref * 12));
    CHECK(g2.coefficients.at(BitSequence::from_string("1110001000")) == BigInt(pref * 3));
    CHECK(g2.coefficients.at(BitSequence::from_string("1101100000")) == BigInt(pref * 10));
    CHECK(g2.coefficients.at(BitSequence::from_string("1101010000")) == BigInt(pref * 4));
    CHECK(g2.coefficients.at(BitSequence::from_string("1101001000")) == BigInt(pref * 1));

    // free matroid: single symbol, unit coefficient
    SymbolCombination g3 = gamma_symbols(Composition({0, 1, 1, 1}));
    REQUIRE(g3.coefficients.size() == 1);
    CHECK(g3.coefficients.begin()->second == BigInt(1));
}

TEST_CASE("gamma agrees with the falling-factorial sum") {
    for (int n = 1; n <= 8; ++n) {
        // all compositions incl. a_0 > 0
        for (int a0 = 0; a0 <= n; ++a0) {
            int rest = n - a0;
            if (rest == 0) continue;
            for (const Composition& tail : loopless_compositions(rest)) {
                std::vector<int> parts = tail.parts;
                parts[0] = a0;
                Composition a(parts);
                CHECK(gamma_symbols(a) == gamma_falling_factorial(a));
            }
        }
    }
}

TEST_CASE("symbol count of gamma equals a!-scaled filter norm") {
    for (int n = 1; n <= 10; ++n)
        for (const Composition& a : loopless_compositions(n)) {
            SymbolCombination g = gamma_symbols(a);
            BigInt total(0);
            for (const auto& [b, c] : g.coefficients) total += c;
            CHECK(total == composition_factorial(a) * norm_closed(a));
        }
}

TEST_CASE("catenary data of small matroids") {
    // U_{2,3}: single composition (0,1,2), three flags
    CatenaryData u23 = catenary_data(matroid_from_spec("uniform:2,3"));
    REQUIRE(u23.nu.size() == 1);
    CHECK(u23.nu.at(Composition({0, 1, 2})) == BigInt(3));

    // H_{3,3}
    CatenaryData h33 = catenary_data(matroid_from_spec("sum(multipoint:0;3|line:3,1,1)"));
    CHECK(h33.nu.at(Composition({0, 3, 3, 2})) == BigInt(2));
    CHECK(h33.nu.at(Composition({0, 3, 2, 3})) == BigInt(1));
    CHECK(h33.nu.at(Composition({0, 3, 1, 4})) == BigInt(2));
    CHECK(h33.nu.at(Composition({0, 1, 3, 4})) == BigInt(2));
    CHECK(h33.nu.at(Composition({0, 1, 4, 3})) == BigInt(2));
    CHECK(h33.nu.size() == 5);

    // PG(3,3): a perfect design, one composition
    CatenaryData pg33 = catenary_data(matroid_from_spec("pg:3,3"));
    REQUIRE(pg33.nu.size() == 1);
    CHECK(pg33.nu.at(Composition({0, 1, 3, 9, 27})) == BigInt(2080));

    // loops shift every composition's first part
    CatenaryData loopy = catenary_data(matroid_from_spec("multipoint:2;2,1"));
    for (const auto& [a, count] : loopy.nu) CHECK(a.a(0) == 2);
}

TEST_CASE("permutation-route G-invariant") {
    SymbolCombination u12 = g_invariant_perm(matroid_from_spec("uniform:1,2"));
    REQUIRE(u12.coefficients.size() == 1);
    CHECK(u12.coefficients.at(BitSequence::from_string("10")) == BigInt(2));

    SymbolCombination lp = g_invariant_perm(matroid_from_spec("multipoint:1;1"));
    REQUIRE(lp.coefficients.size() == 2);
    CHECK(lp.coefficients.at(BitSequence::from_string("10")) == BigInt(1));
    CHECK(lp.coefficients.at(BitSequence::from_string("01")) == BigInt(1));

    SymbolCombination u11 = g_invariant_perm(matroid_from_spec("uniform:1,1"));
    REQUIRE(u11.coefficients.size() == 1);
    CHECK(u11.coefficients.at(BitSequence::from_string("1")) == BigInt(1));

    CHECK_THROWS_AS(g_invariant_perm(matroid_from_spec("uniform:2,9")), Error);
}

TEST_CASE("permutation route equals catenary route on the small zoo") {
    for (const char* spec : {"uniform:1,2", "uniform:2,4", "uniform:3,6", "pg:2,2",
                             "line:3,1,1", "multipoint:1;2,3", "multipoint:2;1,1,2",
                             "echelon:1010100", "complete:4", "sum(uniform:1,2|uniform:1,3)",
                             "bases:4,2,{1 2;1 3;1 4;2 3;2 4;3 4}"}) {
        Matroid m = matroid_from_spec(spec);
        CHECK(g_invariant_perm(m) == g_invariant_catenary(m));
    }
}

TEST_CASE("Sp sends the G-invariant to the Tutte polynomial") {
    for (const char* spec : {"uniform:2,4", "pg:2,2", "line:3,1,1", "multipoint:1;2,3",
                             "complete:4", "echelon:1000110000",
                             "sum(multipoint:0;3|line:3,1,1)"}) {
        Matroid m = matroid_from_spec(spec);
        CHECK(tutte_via_sp(m) == tutte_direct(m));
    }
}

TEST_CASE("tutte_via_sp reproduces the echelon tableau") {
    Bivariate t = tutte_via_sp(matroid_from_spec("echelon:1000110000"));
    // rows 10,10,10,10,6,3,1 / 10,4,4,4 / 4,1,1,1 / 1
    long long row0[] = {0, 10, 10, 10, 10, 6, 3, 1};
    for (int j = 0; j <= 7; ++j) CHECK(t.coeff(0, j) == Rational(row0[j]));
    long long row1[] = {10, 4, 4, 4};
    for (int j = 0; j <= 3; ++j) CHECK(t.coeff(1, j) == Rational(row1[j]));
    long long row2[] = {4, 1, 1, 1};
    for (int j = 0; j <= 3; ++j) CHECK(t.coeff(2, j) == Rational(row2[j]));
    CHECK(t.coeff(3, 0) == Rational(1));
    CHECK(t.x_degree() == 3);
    CHECK(t.y_degree() == 7);
}

TEST_CASE("specialized symbols at (1,0): magnitude and observed sign") {
    // |Sp[b](1,0)| = binom(n-1, a_r - 1)/n!; observed sign (-1)^{n-r+a_r-1}
    for (int n = 1; n <= 10; ++n)
        for (const Composition& a : loopless_compositions(n)) {
            Bivariate p = specialize_symbol(a.to_bits());
            Rational v = p.eval(Rational(1), Rational(0));
            int ar = a.a(a.r());
            Rational expected(binomial(n - 1, ar - 1), factorial(n));
            CHECK(v.abs() == expected);
            if (!v.is_zero()) {
                bool negative = ((n - a.r() + ar - 1) % 2) != 0;
                CHECK(v.num().is_negative() == negative);
            }
        }
}
