#pragma once

// Machine-word number theory: primality, factorization, modular arithmetic,
// quadratic residue symbols, fundamental discriminants.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace modpoints {

using i64 = long long;
using i128 = __int128;

inline i64 gcd_ll(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    i128 r = static_cast<i128>(a) * b % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

inline i64 powmod(i64 a, i64 e, i64 m) {
    a %= m;
    if (a < 0) a += m;
    i64 r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// extended gcd: returns g, sets x with a*x ≡ g (mod m-ish usage)
inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 invmod(i64 a, i64 m) {
    a %= m;
    if (a < 0) a += m;
    i64 x, y;
    i64 g = egcd(a, m, x, y);
    if (g != 1) fail(errc::internal, "invmod: not a unit");
    x %= m;
    if (x < 0) x += m;
    return x;
}

inline i64 mod_pos(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// deterministic Miller-Rabin for 64-bit range
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<i64> primes_up_to(i64 n) {
    std::vector<bool> comp(std::max<i64>(n + 1, 2), false);
    std::vector<i64> out;
    for (i64 i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (i64 j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

// trial division; n > 0.  Fine for everything in this project (inputs are
// curve discriminants of modest size); bails out rather than returning a
// wrong factorization.
inline std::vector<std::pair<i64, int>> factor(i64 n) {
    if (n <= 0) fail(errc::internal, "factor: nonpositive input");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n && p < 2000000; p = p == 2 ? 3 : p + 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (!is_prime(n)) {
            i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
            for (i64 s = std::max<i64>(r - 2, 1); s <= r + 2; ++s)
                if (s * s == n) {
                    if (!is_prime(s)) fail(errc::unsupported, "cofactor too hard to factor");
                    out.emplace_back(s, 2);
                    return out;
                }
            fail(errc::unsupported, "cofactor too hard to factor");
        }
        out.emplace_back(n, 1);
    }
    return out;
}

inline i64 valuation_ll(i64 n, i64 p) {
    if (n == 0) fail(errc::internal, "valuation of zero");
    i64 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Jacobi symbol (a|n) for odd n > 0; Legendre symbol when n is prime.
inline int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) fail(errc::internal, "jacobi: modulus must be odd positive");
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

inline int legendre(i64 a, i64 p) { return jacobi(a, p); }

// does a*x^2 + b*x + c ≡ 0 (mod p) have a root in F_p?
inline bool quad_has_root(i64 a, i64 b, i64 c, i64 p) {
    a = mod_pos(a, p);
    b = mod_pos(b, p);
    c = mod_pos(c, p);
    if (p == 2) {
        for (i64 x = 0; x < 2; ++x)
            if ((a * x * x + b * x + c) % 2 == 0) return true;
        return false;
    }
    if (a == 0) return b != 0 || c == 0;
    i64 disc = mod_pos(b * b - 4 * a * c, p);
    return disc == 0 || legendre(disc, p) == 1;
}

// u * b^2 = D with u a fundamental discriminant; requires D < 0 here.
struct FundamentalDisc {
    i64 u;  // fundamental discriminant (≡ 0 or 1 mod 4)
    i64 b;  // positive
    int delta;  // 0 or 1, per u mod 4
};

inline FundamentalDisc fundamental_disc(i64 D) {
    if (D >= 0) fail(errc::non_negative_discriminant, "discriminant must be negative");
    i64 m = -D;
    i64 sqfree = 1, sq = 1;
    for (auto [p, e] : factor(m)) {
        if (e % 2) sqfree *= p;
        for (int i = 0; i < e / 2; ++i) sq *= p;
    }
    i64 d0 = -sqfree;  // squarefree part, negative
    FundamentalDisc out{};
    if (mod_pos(d0, 4) == 1) {
        out.u = d0;
        out.b = sq;
    } else {
        // D ≡ 0,1 (mod 4) forces the square part even here
        if (sq % 2 != 0) fail(errc::internal, "fundamental_disc: D not a discriminant");
        out.u = 4 * d0;
        out.b = sq / 2;
    }
    out.delta = mod_pos(out.u, 4) == 1 ? 1 : 0;
    return out;
}

}  // namespace modpoints
