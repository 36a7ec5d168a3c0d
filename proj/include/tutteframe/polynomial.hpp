#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tutteframe/bitseq.hpp"
#include "tutteframe/rational.hpp"

namespace tutteframe {

// Sparse exact bivariate polynomial; key = (x-degree, y-degree).
class Bivariate {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rational>;

    Bivariate() = default;

    static Bivariate monomial(int i, int j, Rational c = Rational(1)) {
        Bivariate p;
        p.add_term(i, j, std::move(c));
        return p;
    }
    static Bivariate constant(Rational c) { return monomial(0, 0, std::move(c)); }
    static Bivariate x() { return monomial(1, 0); }
    static Bivariate y() { return monomial(0, 1); }
    // x*y - x - y, the syzygy kernel every route shares.
    static Bivariate syzygy_kernel() {
        Bivariate p;
        p.add_term(1, 1, Rational(1));
        p.add_term(1, 0, Rational(-1));
        p.add_term(0, 1, Rational(-1));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int i, int j, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            terms_.emplace(Key{i, j}, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int x_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    int y_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }

    friend Bivariate operator+(const Bivariate& a, const Bivariate& b) {
        Bivariate r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend Bivariate operator-(const Bivariate& a, const Bivariate& b) {
        Bivariate r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
        Bivariate r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    Bivariate& operator+=(const Bivariate& b) { *this = *this + b; return *this; }
    Bivariate& operator-=(const Bivariate& b) { *this = *this - b; return *this; }
    Bivariate& operator*=(const Bivariate& b) { *this = *this * b; return *this; }

    Bivariate scaled(const Rational& c) const {
        Bivariate r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Bivariate& a, const Bivariate& b) { return !(a == b); }

    Rational eval(const Rational& x0, const Rational& y0) const {
        // Exact substitution via cached powers.
        std::vector<Rational> xp{Rational(1)}, yp{Rational(1)};
        for (int i = 1; i <= x_degree(); ++i) xp.push_back(xp.back() * x0);
        for (int j = 1; j <= y_degree(); ++j) yp.push_back(yp.back() * y0);
        Rational s(0);
        for (const auto& [k, c] : terms_) s += c * xp[k.first] * yp[k.second];
        return s;
    }

    bool all_integer() const {
        for (const auto& [k, c] : terms_)
            if (!c.is_integer()) return false;
        return true;
    }
    bool all_nonnegative_integer() const {
        for (const auto& [k, c] : terms_)
            if (!c.is_integer() || c.num().is_negative()) return false;
        return true;
    }

    // Deterministic algebraic rendering, terms in (i, j) order.
    std::string to_poly_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = c.abs();
            bool neg = c.num().is_negative();
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            bool unit = (a == Rational(1)) && (k.first > 0 || k.second > 0);
            if (!unit) os << a.to_string();
            if (k.first > 0) {
                if (!unit) os << "*";
                os << "x";
                if (k.first > 1) os << "^" << k.first;
            }
            if (k.second > 0) {
                if (!unit || k.first > 0) os << "*";
                os << "y";
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

// (x-1)^a (y-1)^b expanded, scaled by c.
inline Bivariate xm1_ym1_expansion(int a, int b, const Rational& c) {
    Bivariate p;
    for (int i = 0; i <= a; ++i) {
        BigInt bi = binomial(a, i);
        if ((a - i) % 2) bi = -bi;
        for (int j = 0; j <= b; ++j) {
            BigInt bj = binomial(b, j);
            if ((b - j) % 2) bj = -bj;
            p.add_term(i, j, c * Rational(bi * bj));
        }
    }
    return p;
}

// Truncated binomial series tau(d, alpha; y); zero when d <= 0 or alpha < 0.
inline Bivariate tau(int d, int alpha) {
    Bivariate p;
    if (d <= 0 || alpha < 0) return p;
    for (int i = 0; i <= alpha; ++i) p.add_term(0, i, Rational(binomial(alpha + d - 1 - i, alpha - i)));
    return p;
}

// Same polynomial assembled from its (y-1)-expansion; must agree with tau().
inline Bivariate tau_binomial_form(int d, int alpha) {
    if (d < 1 || alpha < 0) throw invalid_error("tau_binomial_form: requires d >= 1, alpha >= 0");
    Bivariate p;
    for (int s = 0; s <= alpha; ++s)
        p += xm1_ym1_expansion(0, s, Rational(binomial(alpha + d, alpha - s)));
    return p;
}

// T(U_{r,n}) via the (x-1)/(y-1) binomial expansion.
inline Bivariate tutte_uniform(int r, int n) {
    if (r < 0 || n < 0 || r > n) throw invalid_error("tutte_uniform: need 0 <= r <= n");
    Bivariate p;
    for (int i = 0; i <= r; ++i) p += xm1_ym1_expansion(r - i, 0, Rational(binomial(n, i)));
    for (int j = r + 1; j <= n; ++j) p += xm1_ym1_expansion(0, j - r, Rational(binomial(n, j)));
    return p;
}

// Syzygy term for moving the (k+1)-th one-bit from position m+1 to m in an
// (n, r)-sequence: (xy-x-y)(x-1)^{r-k-1}(y-1)^{m-k-1} / (m!(n-m)!).
inline Bivariate syzygy_term(int k, int m, int r, int n) {
    if (!(0 <= k && k < r && k + 1 <= m && m < n))
        throw invalid_error("syzygy_term: need 0 <= k < r and k+1 <= m < n");
    Rational c(BigInt(1), factorial(m) * factorial(n - m));
    return Bivariate::syzygy_kernel() * xm1_ym1_expansion(r - k - 1, m - k - 1, c);
}

// Exact quotient by (xy - x - y); throws when a nonzero remainder appears.
inline Bivariate divide_by_syzygy(const Bivariate& p) {
    Bivariate rem = p, q;
    while (!rem.is_zero()) {
        // Lex-leading term (x before y); it must be divisible by xy.
        auto it = rem.terms().rbegin();
        int i = it->first.first, j = it->first.second;
        if (i < 1 || j < 1)
            throw invalid_error("divide_by_syzygy: not divisible (remainder term x^" +
                                std::to_string(i) + " y^" + std::to_string(j) + ")");
        Rational c = it->second;
        q.add_term(i - 1, j - 1, c);
        rem -= Bivariate::syzygy_kernel() * Bivariate::monomial(i - 1, j - 1, c);
    }
    return q;
}

// --- tableau rendering -------------------------------------------------
//
// Row i (top to bottom, starting at x-degree 0), column j = y-degree.
// Zeros print as blanks; columns are right-aligned and single-space separated.

inline std::string render_tableau_text(const Bivariate& p, int rows_hint = -1) {
    int rmax = std::max(p.x_degree(), rows_hint);
    int cmax = p.y_degree();
    std::vector<std::vector<std::string>> cells(rmax + 1, std::vector<std::string>(cmax + 1));
    for (int i = 0; i <= rmax; ++i)
        for (int j = 0; j <= cmax; ++j) {
            Rational c = p.coeff(i, j);
            if (!c.is_zero()) cells[i][j] = c.to_string();
        }
    std::vector<std::size_t> width(cmax + 1, 0);
    for (int j = 0; j <= cmax; ++j)
        for (int i = 0; i <= rmax; ++i) width[j] = std::max(width[j], cells[i][j].size());
    std::ostringstream os;
    for (int i = 0; i <= rmax; ++i) {
        std::string line;
        for (int j = 0; j <= cmax; ++j) {
            if (j) line += ' ';
            std::string cell = cells[i][j];
            line += std::string(width[j] - cell.size(), ' ') + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

// Inverse of render_tableau_text. Columns are recovered from right-aligned
// token end positions, which are shared within a column by construction.
inline Bivariate parse_tableau_text(const std::string& text) {
    struct Token {
        int row;
        std::size_t end;
        std::string value;
    };
    std::vector<Token> tokens;
    std::vector<std::size_t> ends;
    std::istringstream is(text);
    std::string line;
    int row = 0;
    while (std::getline(is, line)) {
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ') { ++i; continue; }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ') ++i;
            tokens.push_back({row, i, line.substr(start, i - start)});
            ends.push_back(i);
        }
        ++row;
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    Bivariate p;
    for (const auto& t : tokens) {
        auto it = std::lower_bound(ends.begin(), ends.end(), t.end);
        int col = static_cast<int>(it - ends.begin());
        p.add_term(t.row, col, Rational::from_string(t.value));
    }
    return p;
}

}  // namespace tutteframe
