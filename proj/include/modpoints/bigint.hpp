#pragma once

// Signed arbitrary-precision integers, base 2^32 schoolbook arithmetic.
// Everything in this project stays below a few hundred bits (worst case:
// trace-power identities around 2*ell^21), so clarity beats asymptotics.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace modpoints {

class Int {
public:
    Int() = default;
    Int(long long v) {  // NOLINT: implicit by design
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (m) {
            d_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
            m >>= 32;
        }
    }
    Int(int v) : Int(static_cast<long long>(v)) {}

    static Int from_string(const std::string& s) {
        Int r;
        size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) sg = s[i++] == '-' ? -1 : 1;
        if (i == s.size()) fail(errc::malformed_record, "empty integer");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail(errc::malformed_record, "bad digit in integer");
            r = r * Int(10) + Int(s[i] - '0');
        }
        if (!r.is_zero()) r.sign_ = sg;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool odd() const { return !d_.empty() && (d_[0] & 1); }

    bool fits_ll() const {
        if (d_.size() > 2) return false;
        unsigned long long m = mag_ull();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
        return m <= 0x8000000000000000ull;
    }
    long long to_ll() const {
        if (!fits_ll()) fail(errc::internal, "Int does not fit in long long");
        unsigned long long m = mag_ull();
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    friend Int operator-(const Int& a) {
        Int r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend Int operator+(const Int& a, const Int& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        Int r;
        if (a.sign_ == b.sign_) {
            r.d_ = add_mag(a.d_, b.d_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.d_, b.d_);
            if (c == 0) return Int();
            if (c > 0) {
                r.d_ = sub_mag(a.d_, b.d_);
                r.sign_ = a.sign_;
            } else {
                r.d_ = sub_mag(b.d_, a.d_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) { return a + (-b); }

    friend Int operator*(const Int& a, const Int& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return Int();
        Int r;
        r.d_.assign(a.d_.size() + b.d_.size(), 0);
        for (size_t i = 0; i < a.d_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.d_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.d_[i]) * b.d_[j] + r.d_[i + j] + carry;
                r.d_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.d_[i + b.d_.size()] = static_cast<uint32_t>(carry);
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    friend void divmod(const Int& a, const Int& b, Int& q, Int& r) {
        if (b.sign_ == 0) fail(errc::internal, "Int division by zero");
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.d_, b.d_, qm, rm);
        q.d_ = std::move(qm);
        q.trim();
        q.sign_ = q.d_.empty() ? 0 : a.sign_ * b.sign_;
        r.d_ = std::move(rm);
        r.trim();
        r.sign_ = r.d_.empty() ? 0 : a.sign_;
    }
    friend Int operator/(const Int& a, const Int& b) {
        Int q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Int operator%(const Int& a, const Int& b) {
        Int q, r;
        divmod(a, b, q, r);
        return r;
    }

    Int& operator+=(const Int& o) { return *this = *this + o; }
    Int& operator-=(const Int& o) { return *this = *this - o; }
    Int& operator*=(const Int& o) { return *this = *this * o; }

    friend bool operator==(const Int& a, const Int& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return a.cmp(b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return a.cmp(b) >= 0; }

    Int abs() const {
        Int r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = d_;
        std::string out;
        while (!m.empty()) {
            // divide magnitude by 10^9, emit remainder
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (m.empty())
                out = chunk + out;
            else
                out = std::string(9 - chunk.size(), '0') + chunk + out;
        }
        return sign_ < 0 ? "-" + out : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

private:
    int sign_ = 0;  // -1, 0, +1; zero iff d_ empty
    std::vector<uint32_t> d_;  // little-endian magnitude, trimmed

    void trim() {
        while (!d_.empty() && d_.back() == 0) d_.pop_back();
        if (d_.empty()) sign_ = 0;
    }
    unsigned long long mag_ull() const {
        unsigned long long m = 0;
        if (d_.size() > 1) m = static_cast<unsigned long long>(d_[1]) << 32;
        if (!d_.empty()) m |= d_[0];
        return m;
    }
    int cmp(const Int& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
        int c = cmp_mag(d_, o.d_);
        return sign_ >= 0 ? c : -c;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
        const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(x.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            uint64_t cur = carry + x[i] + (i < y.size() ? y[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[x.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes.
    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            return;
        }
        if (v.size() == 1) {
            uint64_t div = v[0], rem = 0;
            q.assign(u.size(), 0);
            for (size_t i = u.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<uint32_t>(cur / div);
                rem = cur % div;
            }
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        int s = 0;
        while (((v.back() << s) & 0x80000000u) == 0) ++s;
        std::vector<uint32_t> vn = shl_mag(v, s);
        std::vector<uint32_t> un = shl_mag(u, s);
        un.push_back(0);  // room for the top partial remainder
        size_t n = vn.size(), m = un.size() - n - 1;
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            uint64_t qhat = num / vn[n - 1];
            uint64_t rhat = num % vn[n - 1];
            while (qhat >> 32 || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >> 32) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t prod = qhat * vn[i] + carry;
                carry = prod >> 32;
                int64_t cur = static_cast<int64_t>(un[i + j]) - static_cast<int64_t>(prod & 0xffffffffull) - borrow;
                if (cur < 0) {
                    cur += (1ll << 32);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                un[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t cur = static_cast<int64_t>(un[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (cur < 0) {
                // qhat was one too large: add back
                cur += (1ll << 32);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t sum = static_cast<uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<uint32_t>(sum);
                    c2 = sum >> 32;
                }
                cur += static_cast<int64_t>(c2);
            }
            un[j + n] = static_cast<uint32_t>(cur);
            q[j] = static_cast<uint32_t>(qhat);
        }
        un.resize(n);
        r = shr_mag(un, s);
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i + 1]) << (32 - s));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline Int gcd(Int a, Int b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int pow(Int base, unsigned long long e) {
    Int r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// quotient rounded to nearest (ties toward zero); keeps Euclidean-style
// reductions small in the lattice algorithms
inline Int rounded_div(const Int& a, const Int& b) {
    Int q, r;
    divmod(a, b, q, r);
    Int twice = r + r;
    if (twice.abs() > b.abs()) q += Int(a.sign() * b.sign() >= 0 ? 1 : -1);
    return q;
}

// exact division; error if it does not divide
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) fail(errc::internal, "exact_div: not divisible");
    return q;
}

// p-adic valuation; a != 0
inline long long valuation(Int a, const Int& p) {
    if (a.is_zero()) fail(errc::internal, "valuation of zero");
    long long v = 0;
    for (;;) {
        Int q, r;
        divmod(a, p, q, r);
        if (!r.is_zero()) return v;
        a = q;
        ++v;
    }
}

// nonnegative representative of a mod m (m > 0, fits long long)
inline long long mod_ll(const Int& a, long long m) {
    Int r = a % Int(m);
    long long v = r.to_ll();
    return v < 0 ? v + m : v;
}

}  // namespace modpoints
