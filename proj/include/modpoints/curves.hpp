#pragma once

// Integral Weierstrass models over Q: exact invariants, naive point counts
// over F_ell, Tate's algorithm for local reduction data, and the conductor.

#include <climits>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bigint.hpp"
#include "rational.hpp"

namespace modpoints::curves {

struct CurveModel {
    i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

struct Invariants {
    Int b2, b4, b6, b8, c4, c6, disc;
    Rat j;
};

inline Invariants invariants(const CurveModel& m) {
    Int a1(m.a1), a2(m.a2), a3(m.a3), a4(m.a4), a6(m.a6);
    Invariants v;
    v.b2 = a1 * a1 + Int(4) * a2;
    v.b4 = Int(2) * a4 + a1 * a3;
    v.b6 = a3 * a3 + Int(4) * a6;
    v.b8 = a1 * a1 * a6 + Int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    v.c4 = v.b2 * v.b2 - Int(24) * v.b4;
    v.c6 = -(v.b2 * v.b2 * v.b2) + Int(36) * v.b2 * v.b4 - Int(216) * v.b6;
    v.disc = -(v.b2 * v.b2) * v.b8 - Int(8) * v.b4 * v.b4 * v.b4 - Int(27) * v.b6 * v.b6 +
             Int(9) * v.b2 * v.b4 * v.b6;
    if (v.disc.is_zero()) fail(errc::singular_model, "discriminant is zero");
    if (Int(1728) * v.disc != v.c4 * v.c4 * v.c4 - v.c6 * v.c6)
        fail(errc::internal, "1728*disc identity failed");
    v.j = Rat(v.c4 * v.c4 * v.c4, v.disc);
    return v;
}

// #E(F_ell) for the reduction of the model (counts the singular point too if
// the reduction is bad; callers only use this at good primes)
inline i64 count_points(const CurveModel& m, i64 ell) {
    if (!is_prime(ell)) fail(errc::not_prime, "point count needs a prime");
    if (ell > 2000000) fail(errc::unsupported, "naive point count capped at 2e6");
    i64 a1 = mod_pos(m.a1, ell), a2 = mod_pos(m.a2, ell), a3 = mod_pos(m.a3, ell),
        a4 = mod_pos(m.a4, ell), a6 = mod_pos(m.a6, ell);
    if (ell == 2) {
        i64 n = 1;
        for (i64 x = 0; x < 2; ++x)
            for (i64 y = 0; y < 2; ++y) {
                i64 lhs = (y * y + a1 * x * y + a3 * y) % 2;
                i64 rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                if (lhs == rhs) ++n;
            }
        return n;
    }
    std::vector<signed char> chi(ell, -1);
    chi[0] = 0;
    for (i64 t = 1; t < ell; ++t) chi[mulmod(t, t, ell)] = 1;
    i64 n = 1;
    for (i64 x = 0; x < ell; ++x) {
        i64 lin = (a1 * x + a3) % ell;
        i64 cub = (((x + a2) % ell * x + a4) % ell * x + a6) % ell;
        i64 d = (mulmod(lin, lin, ell) + 4 * cub) % ell;
        n += 1 + chi[d];
    }
    return n;
}

inline i64 trace_of_frobenius(const CurveModel& m, i64 ell) { return ell + 1 - count_points(m, ell); }

// --- local reduction data ---------------------------------------------------

struct Kodaira {
    enum class Family { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };
    Family family = Family::In;
    long long index = 0;  // n for In / In*

    std::string str() const {
        switch (family) {
            case Family::In: return "I" + std::to_string(index);
            case Family::InStar: return "I" + std::to_string(index) + "*";
            case Family::II: return "II";
            case Family::III: return "III";
            case Family::IV: return "IV";
            case Family::IVStar: return "IV*";
            case Family::IIIStar: return "III*";
            case Family::IIStar: return "II*";
        }
        return "?";
    }
    friend bool operator==(const Kodaira&, const Kodaira&) = default;
};

enum class ReductionKind {
    GoodOrdinary,
    GoodSupersingular,
    SplitMultiplicative,
    NonSplitMultiplicative,
    Additive
};

inline const char* kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::GoodOrdinary: return "good-ordinary";
        case ReductionKind::GoodSupersingular: return "good-supersingular";
        case ReductionKind::SplitMultiplicative: return "split-multiplicative";
        case ReductionKind::NonSplitMultiplicative: return "nonsplit-multiplicative";
        case ReductionKind::Additive: return "additive";
    }
    return "?";
}

struct LocalData {
    i64 prime = 0;
    Kodaira kodaira;
    long long f = 0;       // conductor exponent
    i64 c = 1;             // Tamagawa number
    ReductionKind kind = ReductionKind::GoodOrdinary;
    bool anomalous = false;  // meaningful only for good reduction
    long long ord_disc = 0;
};

namespace detail {

struct WorkModel {
    Int a1, a2, a3, a4, a6;

    void rst(const Int& r, const Int& s, const Int& t) {
        Int na1 = a1 + Int(2) * s;
        Int na2 = a2 - s * a1 + Int(3) * r - s * s;
        Int na3 = a3 + r * a1 + Int(2) * t;
        Int na4 = a4 - s * a3 + Int(2) * r * a2 - (t + r * s) * a1 + Int(3) * r * r - Int(2) * s * t;
        Int na6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        a1 = na1;
        a2 = na2;
        a3 = na3;
        a4 = na4;
        a6 = na6;
    }
    Int b2() const { return a1 * a1 + Int(4) * a2; }
    Int b4() const { return Int(2) * a4 + a1 * a3; }
    Int b6() const { return a3 * a3 + Int(4) * a6; }
    Int b8() const {
        return a1 * a1 * a6 + Int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Int c4() const { return b2() * b2() - Int(24) * b4(); }
    Int disc() const {
        Int B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2) * B8 - Int(8) * B4 * B4 * B4 - Int(27) * B6 * B6 + Int(9) * B2 * B4 * B6;
    }
};

constexpr long long kInfVal = LLONG_MAX / 4;

inline long long vp(const Int& x, i64 p) { return x.is_zero() ? kInfVal : valuation(x, Int(p)); }

// roots of x^3 + b x^2 + c x + d over F_p, by scan (additive primes are small)
inline std::vector<i64> cubic_roots(i64 b, i64 c, i64 d, i64 p) {
    if (p > 2000000) fail(errc::unsupported, "cubic root scan capped at 2e6");
    std::vector<i64> out;
    for (i64 x = 0; x < p; ++x) {
        i64 v = (mulmod(mulmod(x, x, p) + mulmod(b, x, p) % p + c, x, p) + d) % p;
        if (mod_pos(v, p) == 0) out.push_back(x);
    }
    return out;
}

}  // namespace detail

struct TateResult {
    Kodaira kodaira;
    long long f = 0;
    i64 c = 1;
    long long ord_disc = 0;
    bool good = false;
    bool multiplicative = false;
    bool split = false;  // meaningful only when multiplicative
};

// Tate's algorithm at p for a globally minimal model.  If the run reaches the
// rescaling step the model was not minimal at p and we refuse rather than
// minimize.
inline TateResult tate_algorithm(const CurveModel& model, i64 p) {
    if (!is_prime(p)) fail(errc::not_prime, "local data needs a prime");
    using detail::vp;
    detail::WorkModel E{Int(model.a1), Int(model.a2), Int(model.a3), Int(model.a4), Int(model.a6)};
    Int disc = E.disc();
    if (disc.is_zero()) fail(errc::singular_model, "discriminant is zero");

    TateResult out;
    long long n = vp(disc, p);
    out.ord_disc = n;
    if (n == 0) {
        out.kodaira = {Kodaira::Family::In, 0};
        out.f = 0;
        out.c = 1;
        out.good = true;
        return out;
    }
    // quick minimality test, exact for p >= 5
    if (p >= 5 && vp(E.c4(), p) >= 4 && n >= 12)
        fail(errc::non_minimal_model, "model not minimal at " + std::to_string(p));

    auto redp = [&](const Int& x) { return mod_ll(x, p); };

    // move the singular point of the reduction to (0,0)
    {
        i64 r, t;
        if (p >= 5) {
            i64 b2 = redp(E.b2()), c4 = redp(E.c4());
            i64 c6 = mod_ll(-(E.b2() * E.b2() * E.b2()) + Int(36) * E.b2() * E.b4() - Int(216) * E.b6(), p);
            if (c4 % p == 0)
                r = mod_pos(-mulmod(invmod(12, p), b2, p), p);
            else
                r = mod_pos(-mulmod(invmod(mulmod(12, c4, p), p), (c6 + mulmod(b2, c4, p)) % p, p), p);
            t = mod_pos(-mulmod(invmod(2, p), (mulmod(redp(E.a1), r, p) + redp(E.a3)) % p, p), p);
        } else {
            r = -1;
            t = -1;
            for (i64 rr = 0; rr < p && r < 0; ++rr)
                for (i64 tt = 0; tt < p && r < 0; ++tt) {
                    detail::WorkModel C = E;
                    C.rst(Int(rr), Int(0), Int(tt));
                    if (mod_ll(C.a3, p) == 0 && mod_ll(C.a4, p) == 0 && mod_ll(C.a6, p) == 0) {
                        r = rr;
                        t = tt;
                    }
                }
            if (r < 0) fail(errc::internal, "singular point not found");
        }
        E.rst(Int(r), Int(0), Int(t));
    }
    if (mod_ll(E.a3, p) != 0 || mod_ll(E.a4, p) != 0 || mod_ll(E.a6, p) != 0)
        fail(errc::internal, "singular point translation failed");

    if (vp(E.c4(), p) == 0) {
        // multiplicative: type In, n = ord(disc)
        out.kodaira = {Kodaira::Family::In, n};
        out.f = 1;
        out.multiplicative = true;
        // tangent directions at the node: T^2 + a1 T - a2
        out.split = quad_has_root(1, redp(E.a1), mod_pos(-redp(E.a2), p), p);
        out.c = out.split ? n : (n % 2 == 0 ? 2 : 1);
        return out;
    }

    // additive from here on
    if (vp(E.a6, p) < 2) {
        out.kodaira = {Kodaira::Family::II, 0};
        out.f = n;
        out.c = 1;
        return out;
    }
    if (vp(E.b8(), p) < 3) {
        out.kodaira = {Kodaira::Family::III, 0};
        out.f = n - 1;
        out.c = 2;
        return out;
    }
    Int P(p), P2 = Int(p) * Int(p);
    if (vp(E.b6(), p) < 3) {
        out.kodaira = {Kodaira::Family::IV, 0};
        out.f = n - 2;
        i64 a3p = mod_ll(exact_div(E.a3, P), p);
        i64 a6p2 = mod_ll(exact_div(E.a6, P2), p);
        out.c = quad_has_root(1, a3p, mod_pos(-a6p2, p), p) ? 3 : 1;
        return out;
    }

    // normalize to p|a1,a2, p^2|a3,a4, p^3|a6
    {
        if (p == 2) {
            bool found = false;
            for (i64 ss = 0; ss < 4 && !found; ++ss)
                for (i64 tt = 0; tt < 4 && !found; ++tt) {
                    detail::WorkModel C = E;
                    C.rst(Int(0), Int(ss), Int(tt));
                    if (vp(C.a1, p) >= 1 && vp(C.a2, p) >= 1 && vp(C.a3, p) >= 2 &&
                        vp(C.a4, p) >= 2 && vp(C.a6, p) >= 3) {
                        E = C;
                        found = true;
                    }
                }
            if (!found) fail(errc::internal, "step-7 normalization failed at 2");
        } else {
            i64 s = mod_pos(-mulmod(invmod(2, p), redp(E.a1), p), p);
            i64 p2 = p * p;
            i64 t = mod_pos(-mulmod(invmod(2, p2), mod_ll(E.a3, p2), p2), p2);
            E.rst(Int(0), Int(s), Int(t));
            if (!(vp(E.a1, p) >= 1 && vp(E.a2, p) >= 1 && vp(E.a3, p) >= 2 && vp(E.a4, p) >= 2 &&
                  vp(E.a6, p) >= 3))
                fail(errc::internal, "step-7 normalization failed");
        }
    }

    Int P3 = P2 * P;
    i64 b = mod_ll(exact_div(E.a2, P), p);
    i64 c3 = mod_ll(exact_div(E.a4, P2), p);
    i64 d = mod_ll(exact_div(E.a6, P3), p);
    // discriminant of T^3 + b T^2 + c T + d
    i64 discP = mod_pos(18 * mulmod(mulmod(b, c3, p), d, p) - 4 * mulmod(mulmod(b, b, p), mulmod(b, d, p), p) +
                            mulmod(mulmod(b, b, p), mulmod(c3, c3, p), p) - 4 * mulmod(c3, mulmod(c3, c3, p), p) -
                            27 * mulmod(d, d, p),
                        p);
    if (discP != 0) {
        // three distinct roots over the closure: I0*
        out.kodaira = {Kodaira::Family::InStar, 0};
        out.f = n - 4;
        out.c = 1 + static_cast<i64>(detail::cubic_roots(b, c3, d, p).size());
        return out;
    }

    // repeated root of the cubic is rational; locate it
    i64 rstar = -1;
    for (i64 x : detail::cubic_roots(b, c3, d, p)) {
        i64 deriv = mod_pos(3 * mulmod(x, x, p) + 2 * mulmod(b, x, p) + c3, p);
        if (deriv == 0) {
            rstar = x;
            break;
        }
    }
    if (rstar < 0) fail(errc::internal, "repeated cubic root not found");
    bool triple = mod_pos(b + 3 * rstar, p) == 0 && mod_pos(c3 - 3 * mulmod(rstar, rstar, p), p) == 0 &&
                  mod_pos(d + mulmod(rstar, mulmod(rstar, rstar, p), p), p) == 0;

    if (!triple) {
        // type Im*: Tate's loop
        E.rst(P * Int(rstar), Int(0), Int(0));
        if (!(vp(E.a2, p) == 1 && vp(E.a3, p) >= 2 && vp(E.a4, p) >= 3 && vp(E.a6, p) >= 4))
            fail(errc::internal, "Im* entry valuations");
        long long ix = 3, iy = 3;
        Int mx = P2, my = P2;
        i64 cp = 0;
        for (long long guard = 0; guard < 4 * n + 16; ++guard) {
            i64 a2t = mod_ll(exact_div(E.a2, P), p);
            i64 a3t = mod_ll(exact_div(E.a3, my), p);
            i64 a4t = mod_ll(exact_div(E.a4, P * mx), p);
            i64 a6t = mod_ll(exact_div(E.a6, mx * my), p);
            if (mod_pos(mulmod(a3t, a3t, p) + 4 * a6t, p) == 0) {
                i64 y0 = p == 2 ? mod_pos(a6t, 2) : mod_pos(-mulmod(a3t, invmod(2, p), p), p);
                E.rst(Int(0), Int(0), my * Int(y0));
                my *= P;
                ++iy;
                a2t = mod_ll(exact_div(E.a2, P), p);
                a4t = mod_ll(exact_div(E.a4, P * mx), p);
                a6t = mod_ll(exact_div(E.a6, mx * my), p);
                if (mod_pos(mulmod(a4t, a4t, p) - 4 * mulmod(a2t, a6t, p), p) == 0) {
                    i64 x0 = p == 2 ? mod_pos(mulmod(a6t, a2t, p), 2)
                                    : mod_pos(-mulmod(a4t, invmod(2 * a2t % p, p), p), p);
                    E.rst(mx * Int(x0), Int(0), Int(0));
                    mx *= P;
                    ++ix;
                    continue;
                }
                cp = quad_has_root(a2t, a4t, a6t, p) ? 4 : 2;
                break;
            }
            cp = quad_has_root(1, a3t, mod_pos(-a6t, p), p) ? 4 : 2;
            break;
        }
        if (cp == 0) fail(errc::internal, "Im* loop did not terminate");
        long long m = ix + iy - 5;
        out.kodaira = {Kodaira::Family::InStar, m};
        out.f = n - m - 4;
        out.c = cp;
        return out;
    }

    // triple root: move it to 0
    E.rst(P * Int(rstar), Int(0), Int(0));
    if (!(vp(E.a2, p) >= 2 && vp(E.a3, p) >= 2 && vp(E.a4, p) >= 3 && vp(E.a6, p) >= 4))
        fail(errc::internal, "triple-root entry valuations");
    Int P4 = P2 * P2;
    i64 a3t = mod_ll(exact_div(E.a3, P2), p);
    i64 a6t = mod_ll(exact_div(E.a6, P4), p);
    if (mod_pos(mulmod(a3t, a3t, p) + 4 * a6t, p) != 0) {
        out.kodaira = {Kodaira::Family::IVStar, 0};
        out.f = n - 6;
        out.c = quad_has_root(1, a3t, mod_pos(-a6t, p), p) ? 3 : 1;
        return out;
    }
    {
        i64 y0 = p == 2 ? mod_pos(a6t, 2) : mod_pos(-mulmod(a3t, invmod(2, p), p), p);
        E.rst(Int(0), Int(0), P2 * Int(y0));
    }
    if (vp(E.a3, p) < 3 || vp(E.a6, p) < 5) fail(errc::internal, "II*/III* entry valuations");
    if (vp(E.a4, p) < 4) {
        out.kodaira = {Kodaira::Family::IIIStar, 0};
        out.f = n - 7;
        out.c = 2;
        return out;
    }
    if (vp(E.a6, p) < 6) {
        out.kodaira = {Kodaira::Family::IIStar, 0};
        out.f = n - 8;
        out.c = 1;
        return out;
    }
    fail(errc::non_minimal_model, "model not minimal at " + std::to_string(p));
}

inline LocalData local_data(const CurveModel& model, i64 ell) {
    TateResult t = tate_algorithm(model, ell);
    LocalData d;
    d.prime = ell;
    d.kodaira = t.kodaira;
    d.f = t.f;
    d.c = t.c;
    d.ord_disc = t.ord_disc;
    if (t.good) {
        i64 a = trace_of_frobenius(model, ell);
        d.kind = mod_pos(a, ell) == 0 ? ReductionKind::GoodSupersingular : ReductionKind::GoodOrdinary;
        d.anomalous = mod_pos(a - 1, ell) == 0;
    } else if (t.multiplicative) {
        d.kind = t.split ? ReductionKind::SplitMultiplicative : ReductionKind::NonSplitMultiplicative;
    } else {
        d.kind = ReductionKind::Additive;
    }
    return d;
}

struct ReductionClass {
    ReductionKind kind;
    bool anomalous;
};

inline ReductionClass reduction_class(const CurveModel& model, i64 p) {
    LocalData d = local_data(model, p);
    return {d.kind, d.anomalous};
}

inline i64 conductor(const CurveModel& model) {
    Invariants v = invariants(model);
    if (!v.disc.fits_ll()) fail(errc::unsupported, "discriminant too large to factor");
    i64 N = 1;
    for (auto [p, e] : factor(std::llabs(v.disc.to_ll()))) {
        (void)e;
        LocalData d = local_data(model, p);
        for (long long i = 0; i < d.f; ++i) N *= p;
    }
    return N;
}

}  // namespace modpoints::curves
