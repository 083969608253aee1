#pragma once

// Heuristic certification of mod-p Galois image surjectivity (certify or
// abstain, never guess) and isogeny-hypothesis checks.

#include <string>
#include <vector>

#include "curves.hpp"
#include "hecke.hpp"

namespace modpoints::galois {

using curves::CurveModel;

struct Witness {
    i64 ell;
    i64 a_ell;
    char cls;  // 'a' nonresidue disc, 'b' nonzero residue disc, 'c' exceptional-image killer
};

struct SurjectivityVerdict {
    bool surjective = false;
    std::vector<Witness> witnesses;
    i64 bound = 0;
};

// Scans good primes ell <= Lmax coprime to p*N looking for
//   (a) a_ell^2 - 4 ell a nonresidue mod p, a_ell != 0 mod p
//   (b) a_ell^2 - 4 ell a nonzero residue mod p, a_ell != 0 mod p
//   (c) u = a_ell^2/ell mod p outside {0,1,2,4} with u^2-3u+1 != 0 mod p
// All three together force the image onto GL_2(F_p) (determinant
// surjectivity comes from the cyclotomic character).  One-sided: a miss
// yields Inconclusive, never a wrong Surjective.
inline SurjectivityVerdict surjectivity(const CurveModel& model, i64 p, i64 Lmax = 1000) {
    if (p == 2) fail(errc::even_prime, "surjectivity test needs an odd prime");
    if (!is_prime(p)) fail(errc::not_prime, "surjectivity test needs a prime");
    if (Lmax < 10) fail(errc::internal, "Lmax >= 10");
    SurjectivityVerdict v;
    v.bound = Lmax;
    i64 N = curves::conductor(model);
    bool have_a = false, have_b = false, have_c = false;
    for (i64 ell : primes_up_to(Lmax)) {
        if (have_a && have_b && have_c) break;
        if (N % ell == 0 || ell == p) continue;
        i64 a = curves::trace_of_frobenius(model, ell);
        i64 amod = mod_pos(a, p);
        i64 disc = mod_pos(a * a - 4 * ell, p);
        if (!have_a && amod != 0 && disc != 0 && legendre(disc, p) == -1) {
            have_a = true;
            v.witnesses.push_back({ell, a, 'a'});
        }
        if (!have_b && amod != 0 && disc != 0 && legendre(disc, p) == 1) {
            have_b = true;
            v.witnesses.push_back({ell, a, 'b'});
        }
        if (!have_c) {
            i64 u = mulmod(mulmod(a, a, p), invmod(ell % p, p), p);
            bool excluded = u == 0 || u == 1 || u == 2 || u == 4 ||
                            mod_pos(mulmod(u, u, p) - 3 * u + 1, p) == 0;
            if (!excluded) {
                have_c = true;
                v.witnesses.push_back({ell, a, 'c'});
            }
        }
    }
    v.surjective = have_a && have_b && have_c;
    return v;
}

// rational 2-isogeny <=> rational 2-torsion <=> the 2-division polynomial
// 4x^3 + b2 x^2 + 2 b4 x + b6 has a rational root
inline bool has_two_isogeny(const CurveModel& model) {
    curves::Invariants v = curves::invariants(model);
    Int A(4), B = v.b2, C = Int(2) * v.b4, D = v.b6;
    auto value_at = [&](const Int& num, i64 den) {
        // 4(n/d)^3 + b2(n/d)^2 + 2b4(n/d) + b6, cleared by d^3
        Int n = num, d(den);
        return A * n * n * n + B * n * n * d + C * n * d * d + D * d * d * d;
    };
    if (D.is_zero()) return true;  // x = 0
    Int absD = D.abs();
    if (!absD.fits_ll() || absD.to_ll() > 1000000000000ll)
        fail(errc::unsupported, "b6 too large for root search");
    i64 target = absD.to_ll();
    std::vector<i64> divs;
    for (i64 t = 1; t * t <= target; ++t)
        if (target % t == 0) {
            divs.push_back(t);
            if (t != target / t) divs.push_back(target / t);
        }
    for (i64 r : divs)
        for (i64 den : {1, 2, 4})
            for (int sg : {1, -1})
                if (value_at(Int(sg * r), den).is_zero()) return true;
    return false;
}

inline bool isogeny_coprimality(const std::vector<i64>& degrees, i64 N_E) {
    if (degrees.empty()) fail(errc::empty_degree_list, "no isogeny degrees given");
    for (i64 d : degrees)
        if (gcd_ll(d, N_E) != 1) return false;
    return true;
}

}  // namespace modpoints::galois
