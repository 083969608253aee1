#pragma once

#include <string>

#include "bigint.hpp"

namespace modpoints {

// exact rational, denominator positive and reduced
struct Rat {
    Int num{0};
    Int den{1};

    Rat() = default;
    Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) fail(errc::internal, "rational with zero denominator");
        if (den.sign() < 0) {
            num = -num;
            den = -den;
        }
        Int g = gcd(num, den);
        if (g > Int(1)) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    explicit Rat(Int n) : num(std::move(n)), den(1) {}

    bool is_integer() const { return den == Int(1); }
    std::string str() const { return is_integer() ? num.str() : num.str() + "/" + den.str(); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

// ord_p of a rational; num != 0
inline long long rat_valuation(const Rat& r, long long p) {
    if (r.num.is_zero()) fail(errc::internal, "valuation of zero");
    return valuation(r.num, Int(p)) - valuation(r.den, Int(p));
}

}  // namespace modpoints
