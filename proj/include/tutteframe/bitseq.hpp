#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutteframe/bigint.hpp"

namespace tutteframe {

struct Error : std::runtime_error {
    enum class Kind { parse, infeasible, invalid, internal };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error parse_error(const std::string& msg) { return Error(Error::Kind::parse, msg); }
inline Error infeasible_error(const std::string& msg) { return Error(Error::Kind::infeasible, msg); }
inline Error invalid_error(const std::string& msg) { return Error(Error::Kind::invalid, msg); }

// Bit sequence of length n with weight(bits) one-bits, positions 1..n packed LSB-first.
struct BitSequence {
    int n = 0;
    uint64_t bits = 0;

    int bit(int pos) const { return static_cast<int>((bits >> (pos - 1)) & 1u); }
    int weight() const { return __builtin_popcountll(bits); }
    int prefix_weight(int m) const {
        if (m <= 0) return 0;
        uint64_t mask = (m >= 64) ? ~0ull : ((1ull << m) - 1);
        return __builtin_popcountll(bits & mask);
    }
    std::vector<int> one_positions() const {
        std::vector<int> p;
        for (int i = 1; i <= n; ++i)
            if (bit(i)) p.push_back(i);
        return p;
    }

    std::string to_string() const {
        std::string s(n, '0');
        for (int i = 1; i <= n; ++i)
            if (bit(i)) s[i - 1] = '1';
        return s;
    }
    static BitSequence from_string(const std::string& s) {
        if (s.empty() || s.size() > 64) throw parse_error("bit sequence must have length 1..64");
        BitSequence b;
        b.n = static_cast<int>(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') b.bits |= 1ull << i;
            else if (s[i] != '0') throw parse_error("bit sequence may contain only 0 and 1");
        }
        return b;
    }

    friend bool operator==(const BitSequence& a, const BitSequence& b) {
        return a.n == b.n && a.bits == b.bits;
    }
    friend bool operator<(const BitSequence& a, const BitSequence& b) {
        return a.n != b.n ? a.n < b.n : a.bits < b.bits;
    }
};

// Composition a_0, a_1, ..., a_r with a_0 >= 0 and a_i >= 1 for i >= 1.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }
    Composition(std::initializer_list<int> p) : parts(p) { validate(); }

    int r() const { return static_cast<int>(parts.size()) - 1; }
    int n() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int a(int i) const { return parts[i]; }
    // Inclusive range sum a_{i:j} (symmetric in i, j).
    int range_sum(int i, int j) const {
        if (i > j) std::swap(i, j);
        int s = 0;
        for (int k = i; k <= j; ++k) s += parts[k];
        return s;
    }

    void validate() const {
        if (parts.empty()) throw invalid_error("composition needs at least a_0");
        if (parts[0] < 0) throw invalid_error("composition: a_0 must be >= 0");
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] < 1) throw invalid_error("composition: a_i must be >= 1 for i >= 1");
    }

    BitSequence to_bits() const {
        int len = n();
        if (len > 64) throw invalid_error("composition: n > 64 unsupported as bit sequence");
        BitSequence b;
        b.n = len;
        int pos = parts[0];
        for (int i = 1; i <= r(); ++i) {
            b.bits |= 1ull << pos;  // one-bit at position pos+1
            pos += parts[i];
        }
        return b;
    }

    static Composition from_bits(const BitSequence& b) {
        std::vector<int> parts;
        auto ones = b.one_positions();
        parts.push_back(ones.empty() ? b.n : ones[0] - 1);
        for (std::size_t i = 0; i < ones.size(); ++i) {
            int next = (i + 1 < ones.size()) ? ones[i + 1] : b.n + 1;
            parts.push_back(next - ones[i]);
        }
        return Composition(parts);
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ",";
            os << parts[i];
        }
        return os.str();
    }
    static Composition from_string(const std::string& s) {
        std::vector<int> parts;
        std::string tok;
        std::istringstream is(s);
        while (std::getline(is, tok, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                parts.push_back(v);
            } catch (const std::exception&) {
                throw parse_error("composition: bad part '" + tok + "'");
            }
        }
        if (parts.empty()) throw parse_error("composition: empty");
        try {
            return Composition(parts);
        } catch (const Error& e) {
            throw parse_error(std::string("composition: ") + e.what());
        }
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts < b.parts; }
};

inline std::vector<int> partial_sums(const Composition& a) {
    std::vector<int> xi(a.parts.size());
    int s = 0;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        s += a.parts[i];
        xi[i] = s;
    }
    return xi;
}

inline BigInt composition_factorial(const Composition& a) {
    BigInt r(1);
    for (int p : a.parts) r *= factorial(p);
    return r;
}

inline bool dominates(const BitSequence& t, const BitSequence& u) {
    if (t.n != u.n || t.weight() != u.weight())
        throw invalid_error("dominates: sequences must share (n, r)");
    int wt = 0, wu = 0;
    for (int i = 1; i <= t.n; ++i) {
        wt += t.bit(i);
        wu += u.bit(i);
        if (wt < wu) return false;
    }
    return true;
}

using ShiftVector = std::vector<int>;

// Shift vector of b relative to a: leftward displacement of each one-bit.
// Empty result when b does not dominate a.
inline std::optional<ShiftVector> shift_vector(const BitSequence& b, const Composition& a) {
    BitSequence ab = a.to_bits();
    if (b.n != ab.n || b.weight() != ab.weight())
        throw invalid_error("shift_vector: size mismatch");
    if (!dominates(b, ab)) return std::nullopt;
    auto p = b.one_positions();
    auto q = ab.one_positions();
    ShiftVector s(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) s[i] = q[i] - p[i];
    return s;
}

inline bool in_box(const Composition& a, const ShiftVector& s) {
    int r = a.r();
    if (static_cast<int>(s.size()) != r) return false;
    if (r == 0) return true;
    if (s[0] < 0 || s[0] > a.a(0)) return false;
    for (int i = 2; i <= r; ++i) {
        int bound = a.range_sum(0, i - 1) - i + 1;
        if (s[i - 1] < 0 || s[i - 1] > bound) return false;
    }
    return true;
}

// Coefficient function of the gamma expansion: prod_i binom(a_i + s_i - 1, s_i).
// The i = 1 factor also carries the -1; this is what makes the gamma elements
// match their flag-counting definition when a_0 > 0 (checked against the
// falling-factorial form and the loop identities).
inline BigInt coefficient_c(const Composition& a, const ShiftVector& s) {
    if (!in_box(a, s)) throw invalid_error("coefficient_c: shift vector outside Box");
    BigInt r(1);
    for (int i = 1; i <= a.r(); ++i) r *= binomial(a.a(i) + s[i - 1] - 1, s[i - 1]);
    return r;
}

struct SliceClause {
    int coordinate = 0;  // 1..r
    bool is_equality = true;
    int bound = 0;
};

// Conjunction of = / <= clauses on single shift coordinates.
struct SliceConstraint {
    std::vector<SliceClause> clauses;

    bool satisfied(const ShiftVector& s) const {
        for (const auto& c : clauses) {
            if (c.coordinate < 1 || c.coordinate > static_cast<int>(s.size()))
                throw invalid_error("slice: coordinate out of range");
            int v = s[c.coordinate - 1];
            if (c.is_equality ? (v != c.bound) : (v > c.bound)) return false;
        }
        return true;
    }

    // "s5<=2" or "s4=0", comma-separated clauses; whitespace ignored.
    static SliceConstraint from_string(const std::string& text) {
        SliceConstraint sc;
        std::string cleaned;
        for (char ch : text)
            if (!isspace(static_cast<unsigned char>(ch))) cleaned += ch;
        if (cleaned.empty()) return sc;
        std::istringstream is(cleaned);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            SliceClause c;
            if (tok.size() < 3 || (tok[0] != 's' && tok[0] != 'S'))
                throw parse_error("slice: expected sK=V or sK<=V, got '" + tok + "'");
            auto le = tok.find("<=");
            auto eq = tok.find('=');
            std::size_t op_pos, op_len;
            if (le != std::string::npos) { op_pos = le; op_len = 2; c.is_equality = false; }
            else if (eq != std::string::npos) { op_pos = eq; op_len = 1; c.is_equality = true; }
            else throw parse_error("slice: missing relation in '" + tok + "'");
            try {
                c.coordinate = std::stoi(tok.substr(1, op_pos - 1));
                c.bound = std::stoi(tok.substr(op_pos + op_len));
            } catch (const std::exception&) {
                throw parse_error("slice: bad clause '" + tok + "'");
            }
            if (c.coordinate < 1) throw parse_error("slice: coordinate must be >= 1");
            if (c.bound < 0) throw parse_error("slice: bound must be >= 0");
            sc.clauses.push_back(c);
        }
        return sc;
    }
};

inline int default_filter_cap() { return 20; }

struct FilterElement {
    BitSequence sequence;
    ShiftVector shifts;
};

// Walks the principal dominance filter [a) in lexicographic shift-vector order
// (coordinate 1 outermost). Membership: 0 <= s_1 <= a_0, and for i >= 2,
// s_i <= a_{i-1} - 1 + s_{i-1}.
inline void for_each_filter_element(const Composition& a,
                                    const std::function<void(const BitSequence&, const ShiftVector&)>& fn,
                                    int cap = default_filter_cap()) {
    int n = a.n(), r = a.r();
    if (n > cap)
        throw infeasible_error("filter enumeration refused: n = " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
    std::vector<int> xi = partial_sums(a);  // a's one-bits sit at xi[i-1] + 1
    ShiftVector s(r, 0);
    BitSequence b;
    b.n = n;
    std::function<void(int)> rec = [&](int i) {
        if (i > r) {
            b.bits = 0;
            for (int k = 1; k <= r; ++k) b.bits |= 1ull << (xi[k - 1] - s[k - 1]);
            fn(b, s);
            return;
        }
        int hi = (i == 1) ? a.a(0) : a.a(i - 1) - 1 + s[i - 2];
        for (int v = 0; v <= hi; ++v) {
            s[i - 1] = v;
            rec(i + 1);
        }
    };
    rec(1);
}

inline std::vector<FilterElement> enumerate_filter(const Composition& a, int cap = default_filter_cap()) {
    std::vector<FilterElement> out;
    for_each_filter_element(a, [&](const BitSequence& b, const ShiftVector& s) {
        out.push_back({b, s});
    }, cap);
    return out;
}

// Coefficient-weighted count of the slice of [a) cut out by the constraint:
// the brute-force (oracle) route.
inline BigInt norm(const Composition& a, const SliceConstraint& c = {}, int cap = default_filter_cap()) {
    BigInt total(0);
    for_each_filter_element(a, [&](const BitSequence&, const ShiftVector& s) {
        if (c.satisfied(s)) total += coefficient_c(a, s);
    }, cap);
    return total;
}

// Closed form: binom(n, a_0) * prod_{i=1}^{r-1} binom(a_i + ... + a_r - 1, a_i - 1).
inline BigInt norm_closed(const Composition& a) {
    int r = a.r();
    BigInt result = binomial(a.n(), a.a(0));
    for (int i = 1; i <= r - 1; ++i) result *= binomial(a.range_sum(i, r) - 1, a.a(i) - 1);
    return result;
}

inline int thickness(const Composition& a) {
    int r = a.r();
    if (a.a(0) > 0) return r;
    for (int i = 1; i <= r; ++i)
        if (a.a(i) >= 2) return r - i;
    return 0;  // all middle parts equal 1
}

}  // namespace tutteframe
