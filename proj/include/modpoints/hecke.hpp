#pragma once

// Hecke eigenvalues of an elliptic curve over Q, newform coefficient
// expansion, and the exact trace-of-Frobenius-power identities.

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "curves.hpp"

namespace modpoints::hecke {

using curves::CurveModel;

inline i64 a_ell(const CurveModel& model, i64 ell) {
    curves::LocalData d = curves::local_data(model, ell);
    switch (d.kind) {
        case curves::ReductionKind::SplitMultiplicative: return 1;
        case curves::ReductionKind::NonSplitMultiplicative: return -1;
        case curves::ReductionKind::Additive: return 0;
        default: return curves::trace_of_frobenius(model, ell);
    }
}

// a_1 .. a_N by multiplicativity and the prime-power recurrences
inline std::vector<i64> a_coefficients(const CurveModel& model, i64 N) {
    if (N < 1) fail(errc::internal, "a_coefficients needs N >= 1");
    std::vector<i64> spf(N + 1, 0);  // smallest prime factor
    for (i64 i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (i64 j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = i;
    std::vector<i64> a(N + 1, 0);
    a[1] = 1;
    for (i64 n = 2; n <= N; ++n) {
        i64 p = spf[n];
        i64 pk = p, k = n / p;
        while (k % p == 0) {
            k /= p;
            pk *= p;
        }
        if (k > 1) {
            a[n] = a[pk] * a[k];
            continue;
        }
        // n = p^e
        if (pk == p) {
            a[n] = a_ell(model, p);
        } else {
            Int disc = curves::invariants(model).disc;
            bool good = valuation(disc, Int(p)) == 0;
            if (good)
                a[n] = a[p] * a[pk / p] - p * (pk / (p * p) >= 1 ? a[pk / (p * p)] : 0);
            else
                a[n] = a[p] * a[pk / p];
        }
    }
    a.erase(a.begin());  // drop index 0, result is a_1..a_N
    return a;
}

// t_n = tr(Fr^n) for the characteristic polynomial x^2 - a x + ell
inline Int trace_power(i64 a, i64 ell, long long n) {
    if (n < 0) fail(errc::internal, "trace_power needs n >= 0");
    Int t0(2), t1(a);
    if (n == 0) return t0;
    for (long long i = 1; i < n; ++i) {
        Int t2 = Int(a) * t1 - Int(ell) * t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

struct IdentityReport {
    bool ok = true;
    std::string counterexample;  // empty on success
    long long checked = 0;
};

// Exact checks of
//   (i)   t_{2n} = t_n^2 - 2 ell^n
//   (ii)  t_{2n+1}^2 - 4 ell^{2n+1} = (t_1^2-4 ell) ((1-2n) ell^n + sum_j ell^{n-j} t_j^2)^2
//   (iii) n = 2^r m, m odd:  t_n^2 - 4 ell^n = (t_m^2 - 4 ell^m) (prod_j t_{2^j m})^2
inline IdentityReport verify_trace_identities(i64 a, i64 ell, long long nmax) {
    if (nmax < 1) fail(errc::internal, "nmax >= 1");
    IdentityReport rep;
    std::vector<Int> t(2 * nmax + 2);
    for (long long i = 0; i <= 2 * nmax + 1; ++i) t[i] = trace_power(a, ell, i);
    Int L(ell);
    Int base = t[1] * t[1] - Int(4) * L;
    auto flag = [&](const std::string& what) {
        rep.ok = false;
        if (rep.counterexample.empty())
            rep.counterexample = "a=" + std::to_string(a) + " ell=" + std::to_string(ell) + " " + what;
    };
    for (long long n = 1; n <= nmax; ++n) {
        if (t[2 * n] != t[n] * t[n] - Int(2) * pow(L, n)) flag("doubling at n=" + std::to_string(n));
        ++rep.checked;
    }
    for (long long n = 0; n <= nmax; ++n) {
        Int s = Int(1 - 2 * n) * pow(L, n);
        for (long long j = 1; j <= n; ++j) s += pow(L, n - j) * t[j] * t[j];
        Int lhs = t[2 * n + 1] * t[2 * n + 1] - Int(4) * pow(L, 2 * n + 1);
        if (lhs != base * s * s) flag("odd case at n=" + std::to_string(n));
        ++rep.checked;
    }
    for (long long n = 1; n <= nmax; ++n) {
        long long m = n, r = 0;
        while (m % 2 == 0) {
            m /= 2;
            ++r;
        }
        Int prod(1);
        for (long long j = 0, pw = m; j < r; ++j, pw *= 2) prod *= t[pw];
        Int lhs = t[n] * t[n] - Int(4) * pow(L, n);
        Int rhs = (t[m] * t[m] - Int(4) * pow(L, m)) * prod * prod;
        if (lhs != rhs) flag("odd-part factorization at n=" + std::to_string(n));
        ++rep.checked;
    }
    return rep;
}

enum class SquareClass { Zero, Residue, NonResidue };

inline const char* square_class_name(SquareClass c) {
    switch (c) {
        case SquareClass::Zero: return "zero";
        case SquareClass::Residue: return "residue";
        case SquareClass::NonResidue: return "nonresidue";
    }
    return "?";
}

inline SquareClass square_class(const Int& x, i64 p) {
    if (p == 2) fail(errc::even_prime, "square class needs an odd prime");
    if (!is_prime(p)) fail(errc::not_prime, "square class needs a prime");
    i64 r = mod_ll(x, p);
    if (r == 0) return SquareClass::Zero;
    return legendre(r, p) == 1 ? SquareClass::Residue : SquareClass::NonResidue;
}

inline SquareClass square_class(i64 x, i64 p) { return square_class(Int(x), p); }

// zero counts as square
inline bool is_square_class(SquareClass c) { return c != SquareClass::NonResidue; }

// The computational content of the base-case proposition: the product
// identities force class(t_n^2-4 ell^n) to equal class(t_1^2-4 ell) except
// where a squared factor vanishes mod p, which can only push the class to
// Zero (and Zero at n=1 forces Zero for all n).  The check below is exact.
inline bool verify_square_equivalence(i64 a, i64 ell, i64 p, long long nmax) {
    if (ell == p) fail(errc::equal_primes, "ell and p must differ");
    if (p == 2) fail(errc::even_prime, "p must be odd");
    SquareClass c1 = square_class(Int(a) * Int(a) - Int(4 * ell), p);
    for (long long n = 1; n <= nmax; ++n) {
        Int tn = trace_power(a, ell, n);
        SquareClass cn = square_class(tn * tn - Int(4) * pow(Int(ell), n), p);
        bool compatible = (c1 == SquareClass::Zero) ? cn == SquareClass::Zero
                                                    : (cn == SquareClass::Zero || cn == c1);
        if (!compatible) return false;
    }
    return true;
}

}  // namespace modpoints::hecke
