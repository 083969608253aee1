#pragma once

// The integral Frobenius matrix attached to a trace/prime-power pair, its
// discriminant decomposition, and Borel membership modulo p^(n+1) decided by
// exhaustive fixed-point search on the projective line.

#include <optional>
#include <string>

#include "arith.hpp"
#include "pgl.hpp"

namespace modpoints::frobmat {

struct FrobeniusData {
    i64 a = 0;      // trace
    i64 q = 0;      // prime power, the determinant
    i64 u = 0;      // fundamental discriminant
    i64 b = 0;      // positive, u b^2 = a^2 - 4q
    int delta = 0;  // 0 or 1 per u mod 4
};

struct IntMatrix2 {
    i64 m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    i64 trace() const { return m00 + m11; }
    i64 det() const { return m00 * m11 - m01 * m10; }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
    std::string str() const {
        return "[[" + std::to_string(m00) + "," + std::to_string(m01) + "],[" + std::to_string(m10) +
               "," + std::to_string(m11) + "]]";
    }
};

inline FrobeniusData disc_decomposition(i64 a, i64 q) {
    i64 D = a * a - 4 * q;
    if (D >= 0) fail(errc::non_negative_discriminant, "a^2 - 4q must be negative");
    FundamentalDisc f = fundamental_disc(D);
    return {a, q, f.u, f.b, f.delta};
}

inline IntMatrix2 frobenius_matrix(i64 a, i64 q) {
    FrobeniusData f = disc_decomposition(a, q);
    i64 top = a + f.b * f.delta;
    i64 low = f.b * (f.u - f.delta);
    if (top % 2 != 0 || low % 4 != 0)
        fail(errc::non_integral_entry, "parity constraints violated for (a,q)");
    IntMatrix2 M{top / 2, f.b, low / 4, (a - f.b * f.delta) / 2};
    if (M.trace() != a || M.det() != q) fail(errc::internal, "frobenius matrix identities");
    return M;
}

// Fixed point of M on P^1(Z/p^(n+1)) if one exists; exhaustive search.  A
// fixed point is exactly membership of M mod p^(n+1) in a Borel subgroup.
inline std::optional<pgl::P1Point> borel_fixed_point(const IntMatrix2& M, i64 p, int n) {
    pgl::require_odd_prime(p);
    if (mod_pos(M.det(), p) == 0) fail(errc::bad_prime, "p divides det");
    i64 P = pgl::pow_ll(p, n + 1);
    for (const pgl::P1Point& pt : pgl::p1_enumerate(p, n)) {
        i64 wx = mod_pos(mulmod(mod_pos(M.m00, P), pt.x, P) + mulmod(mod_pos(M.m01, P), pt.y, P), P);
        i64 wy = mod_pos(mulmod(mod_pos(M.m10, P), pt.x, P) + mulmod(mod_pos(M.m11, P), pt.y, P), P);
        i64 cross = mod_pos(mulmod(pt.x, wy, P) - mulmod(pt.y, wx, P), P);
        if (cross == 0) return pt;
    }
    return std::nullopt;
}

// Conjugacy normal form of M modulo p^(n+1): companion matrix when p does
// not divide b, scalar-plus-p^j form otherwise.  For small moduli the
// conjugacy is certified by exhaustive search for a conjugator.
struct ConjugacyForm {
    IntMatrix2 form;       // entries reduced mod p^(n+1)
    bool verified = false;
    IntMatrix2 conjugator;  // meaningful when verified
};

inline ConjugacyForm conjugacy_form(const IntMatrix2& M, i64 p, int n) {
    pgl::require_odd_prime(p);
    if (mod_pos(M.det(), p) == 0) fail(errc::bad_prime, "p divides det");
    i64 a = M.trace(), q = M.det();
    i64 b = M.m01;  // matrices built by frobenius_matrix carry b top-right
    i64 P = pgl::pow_ll(p, n + 1);
    IntMatrix2 F;
    if (mod_pos(b, p) != 0) {
        F = {0, 1, mod_pos(-q, P), mod_pos(a, P)};
    } else {
        FrobeniusData fd = disc_decomposition(a, q);
        i64 j = valuation_ll(fd.b, p);
        i64 t = fd.b / pgl::pow_ll(p, j);
        i64 pj = pgl::pow_ll(p, j);
        i64 half_a = mulmod(mod_pos(a, P), invmod(2, P), P);
        i64 low = mulmod(mod_pos(pj, P), mulmod(mulmod(mod_pos(t, P), mod_pos(t, P), P),
                                                mulmod(mod_pos(fd.u, P), invmod(4, P), P), P), P);
        F = {half_a, mod_pos(pj, P), low, half_a};
    }
    ConjugacyForm out;
    out.form = F;
    if (P <= 30) {
        IntMatrix2 A{mod_pos(M.m00, P), mod_pos(M.m01, P), mod_pos(M.m10, P), mod_pos(M.m11, P)};
        for (i64 g0 = 0; g0 < P && !out.verified; ++g0)
            for (i64 g1 = 0; g1 < P && !out.verified; ++g1)
                for (i64 g2 = 0; g2 < P && !out.verified; ++g2)
                    for (i64 g3 = 0; g3 < P && !out.verified; ++g3) {
                        i64 det = mod_pos(g0 * g3 - g1 * g2, P);
                        if (det % p == 0) continue;
                        // g * A == F * g  mod P
                        i64 l00 = mod_pos(g0 * A.m00 + g1 * A.m10, P), r00 = mod_pos(F.m00 * g0 + F.m01 * g2, P);
                        i64 l01 = mod_pos(g0 * A.m01 + g1 * A.m11, P), r01 = mod_pos(F.m00 * g1 + F.m01 * g3, P);
                        i64 l10 = mod_pos(g2 * A.m00 + g3 * A.m10, P), r10 = mod_pos(F.m10 * g0 + F.m11 * g2, P);
                        i64 l11 = mod_pos(g2 * A.m01 + g3 * A.m11, P), r11 = mod_pos(F.m10 * g1 + F.m11 * g3, P);
                        if (l00 == r00 && l01 == r01 && l10 == r10 && l11 == r11) {
                            out.verified = true;
                            out.conjugator = {g0, g1, g2, g3};
                        }
                    }
        if (!out.verified) fail(errc::internal, "conjugacy form not conjugate at small modulus");
    }
    return out;
}

}  // namespace modpoints::frobmat
