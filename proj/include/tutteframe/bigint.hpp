#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace tutteframe {

// Arbitrary-precision signed integer, base 1e9 limbs (little-endian).
// Sized for exact combinatorics at desk scale (factorials to ~50!), not for
// cryptographic workloads.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long u = (v < 0) ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (u > 0) { mag_.push_back(static_cast<uint32_t>(u % kBase)); u /= kBase; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long long u) {
        while (u > 0) { mag_.push_back(static_cast<uint32_t>(u % kBase)); u /= kBase; }
        sign_ = mag_.empty() ? 0 : 1;
    }
    BigInt(std::size_t u) : BigInt(static_cast<unsigned long long>(u)) {}

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t pos = 0;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (std::size_t i = pos; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        for (std::size_t end = s.size(); end > pos;) {
            std::size_t begin = (end - pos >= 9) ? end - 9 : pos;
            r.mag_.push_back(static_cast<uint32_t>(std::strtoul(s.substr(begin, end - begin).c_str(), nullptr, 10)));
            end = begin;
        }
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        static const BigInt lo = BigInt::from_string("-9223372036854775808");
        static const BigInt hi = BigInt::from_string("9223372036854775807");
        return cmp(lo, *this) <= 0 && cmp(*this, hi) <= 0;
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        long long v = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = v * kBase + mag_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        for (std::size_t i = mag_.size() - 1; i-- > 0;) {
            std::string limb = std::to_string(mag_[i]);
            s += std::string(9 - limb.size(), '0') + limb;
        }
        return s;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            const BigInt& big = (c > 0) ? a : b;
            const BigInt& small = (c > 0) ? b : a;
            r.mag_ = sub_mag(big.mag_, small.mag_);
            r.sign_ = big.sign_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.mag_.size();
            while (carry > 0) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (C semantics on signs); throws on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& rem) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); rem = a; return; }
        q.mag_.clear(); rem.mag_.clear();
        divmod_mag(a.mag_, b.mag_, q.mag_, rem.mag_);
        q.trim(); rem.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }
    BigInt& operator/=(const BigInt& b) { *this = *this / b; return *this; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a.is_zero() ? BigInt(1) : a;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        uint32_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = static_cast<uint32_t>(cur / kBase);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires a >= b.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += kBase; borrow = 1; }
            else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Schoolbook long division, |a| >= |b| > 0.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& rem) {
        if (b.size() == 1) {
            uint64_t d = b[0], cur = 0;
            q.assign(a.size(), 0);
            for (std::size_t i = a.size(); i-- > 0;) {
                cur = cur * kBase + a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                cur %= d;
            }
            rem.clear();
            if (cur > 0) rem.push_back(static_cast<uint32_t>(cur));
            return;
        }
        // Normalize so the divisor's top limb is >= base/2; the two-limb
        // quotient estimate then overshoots by at most two.
        uint32_t scale = static_cast<uint32_t>(kBase / (static_cast<uint64_t>(b.back()) + 1));
        if (scale == 0) scale = 1;
        std::vector<uint32_t> A = (scale > 1) ? mul_small(a, scale) : a;
        std::vector<uint32_t> B = (scale > 1) ? mul_small(b, scale) : b;
        q.assign(A.size(), 0);
        std::vector<uint32_t> r;  // running remainder, always < B
        r.reserve(B.size() + 1);
        for (std::size_t i = A.size(); i-- > 0;) {
            r.insert(r.begin(), A[i]);
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (cmp_mag(r, B) < 0) continue;
            uint64_t top;
            std::size_t rb = r.size();
            if (rb > B.size()) top = static_cast<uint64_t>(r[rb - 1]) * kBase + r[rb - 2];
            else top = r[rb - 1];
            uint64_t qd = top / B.back();
            if (qd >= kBase) qd = kBase - 1;
            std::vector<uint32_t> prod = mul_small(B, static_cast<uint32_t>(qd));
            while (cmp_mag(prod, r) > 0) {
                --qd;
                prod = sub_mag(prod, B);
            }
            r = sub_mag(r, prod);
            q[i] = static_cast<uint32_t>(qd);
        }
        // Undo the normalization on the remainder (exact by construction).
        if (scale > 1) {
            uint64_t cur = 0;
            rem.assign(r.size(), 0);
            for (std::size_t i = r.size(); i-- > 0;) {
                cur = cur * kBase + r[i];
                rem[i] = static_cast<uint32_t>(cur / scale);
                cur %= scale;
            }
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        } else {
            rem = r;
        }
    }

    static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint32_t m) {
        std::vector<uint32_t> r(a.size() + 1, 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * m + carry;
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[a.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

// Generalized binomial: falling factorial over k!, any integer n, k >= 0.
// In particular binom(-1, k) = (-1)^k, which the boundary cases of the
// summation identities rely on.
inline BigInt binomial(long long n, long long k) {
    if (k < 0) return BigInt(0);
    if (n >= 0 && k > n) return BigInt(0);
    if (n < 0) {
        BigInt r = binomial(-n + k - 1, k);
        return (k % 2) ? -r : r;
    }
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

inline BigInt pow_int(const BigInt& base, int e) {
    BigInt r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace tutteframe
