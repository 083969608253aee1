#pragma once

// The projective line over Z/p^(n+1), the group PGL_2(Z/p^(n+1)) acting on
// it, its distinguished subgroups (Borel, non-split Cartan, Sylow-p of the
// Borel), and the permutation lattices with recorded generator actions.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "arith.hpp"
#include "linalg.hpp"

namespace modpoints::pgl {

inline i64 pow_ll(i64 b, long long e) {
    i64 r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

inline void require_odd_prime(i64 p) {
    if (p == 2) fail(errc::even_prime, "p must be odd");
    if (!is_prime(p)) fail(errc::not_prime, "p must be prime");
}

// canonical representative: (t : 1) with t in [0, p^(n+1)), or (1 : p*s)
struct P1Point {
    i64 p = 3;
    int n = 0;
    i64 x = 0, y = 1;

    i64 modulus() const { return pow_ll(p, n + 1); }
    friend bool operator==(const P1Point&, const P1Point&) = default;
    friend bool operator<(const P1Point& a, const P1Point& b) {
        return std::tie(a.p, a.n, a.y, a.x) < std::tie(b.p, b.n, b.y, b.x);
    }
    std::string str() const { return "(" + std::to_string(x) + ":" + std::to_string(y) + ")"; }
};

inline P1Point p1_make(i64 p, int n, i64 x, i64 y) {
    i64 P = pow_ll(p, n + 1);
    x = mod_pos(x, P);
    y = mod_pos(y, P);
    if (y % p != 0) {
        i64 inv = invmod(y, P);
        return {p, n, mulmod(x, inv, P), 1};
    }
    if (x % p == 0) fail(errc::internal, "not a projective point");
    i64 inv = invmod(x, P);
    return {p, n, 1, mulmod(y, inv, P)};
}

inline std::vector<P1Point> p1_enumerate(i64 p, int n) {
    require_odd_prime(p);
    if (n < 0) fail(errc::internal, "level must be >= 0");
    i64 P = pow_ll(p, n + 1);
    std::vector<P1Point> out;
    out.reserve(P + P / p);
    for (i64 t = 0; t < P; ++t) out.push_back({p, n, t, 1});
    for (i64 s = 0; s < P / p; ++s) out.push_back({p, n, 1, p * s});
    return out;
}

// 2x2 matrix class mod p^(n+1) with unit determinant, normalized so the
// first unit entry in row-major order equals 1
struct PglElement {
    i64 p = 3;
    int n = 0;
    std::array<i64, 4> m{1, 0, 0, 1};  // row-major

    i64 modulus() const { return pow_ll(p, n + 1); }
    friend bool operator==(const PglElement&, const PglElement&) = default;
    friend bool operator<(const PglElement& a, const PglElement& b) {
        return std::tie(a.p, a.n, a.m) < std::tie(b.p, b.n, b.m);
    }
};

inline PglElement pgl_make(i64 p, int n, i64 a, i64 b, i64 c, i64 d) {
    i64 P = pow_ll(p, n + 1);
    std::array<i64, 4> m{mod_pos(a, P), mod_pos(b, P), mod_pos(c, P), mod_pos(d, P)};
    i64 det = mod_pos(mulmod(m[0], m[3], P) - mulmod(m[1], m[2], P), P);
    if (det % p == 0) fail(errc::internal, "determinant not a unit");
    for (i64 e : m)
        if (e % p != 0) {
            i64 inv = invmod(e, P);
            for (i64& x : m) x = mulmod(x, inv, P);
            break;
        }
    return {p, n, m};
}

inline void require_same_level(const PglElement& g, const PglElement& h) {
    if (g.p != h.p || g.n != h.n) fail(errc::level_mismatch, "elements live at different levels");
}

inline PglElement mul(const PglElement& g, const PglElement& h) {
    require_same_level(g, h);
    i64 P = g.modulus();
    return pgl_make(g.p, g.n, mulmod(g.m[0], h.m[0], P) + mulmod(g.m[1], h.m[2], P),
                    mulmod(g.m[0], h.m[1], P) + mulmod(g.m[1], h.m[3], P),
                    mulmod(g.m[2], h.m[0], P) + mulmod(g.m[3], h.m[2], P),
                    mulmod(g.m[2], h.m[1], P) + mulmod(g.m[3], h.m[3], P));
}

inline PglElement inverse(const PglElement& g) {
    return pgl_make(g.p, g.n, g.m[3], -g.m[1], -g.m[2], g.m[0]);  // adjugate
}

inline PglElement identity(i64 p, int n) { return pgl_make(p, n, 1, 0, 0, 1); }

inline long long order(const PglElement& g, long long cap = 1000000) {
    PglElement e = identity(g.p, g.n);
    PglElement x = g;
    for (long long k = 1; k <= cap; ++k) {
        if (x == e) return k;
        x = mul(x, g);
    }
    fail(errc::not_finite_order, "order exceeds cap");
}

inline P1Point act(const PglElement& g, const P1Point& pt) {
    if (g.p != pt.p || g.n != pt.n) fail(errc::level_mismatch, "act across levels");
    i64 P = g.modulus();
    return p1_make(g.p, g.n, mulmod(g.m[0], pt.x, P) + mulmod(g.m[1], pt.y, P),
                   mulmod(g.m[2], pt.x, P) + mulmod(g.m[3], pt.y, P));
}

// reduction P^1(Z/p^(n+2)) -> P^1(Z/p^(n+1)); every fiber has exactly p points
inline P1Point fiber_map(const P1Point& pt) {
    if (pt.n < 1) fail(errc::level_mismatch, "fiber_map needs level >= 1");
    return p1_make(pt.p, pt.n - 1, pt.x, pt.y);
}

inline PglElement reduce_level(const PglElement& g) {
    if (g.n < 1) fail(errc::level_mismatch, "reduce_level needs level >= 1");
    return pgl_make(g.p, g.n - 1, g.m[0], g.m[1], g.m[2], g.m[3]);
}

// --- subgroups --------------------------------------------------------------

enum class SubgroupKind { Borel, NonSplitCartan, SylowPOfBorel, FullGroup, Custom };

struct Subgroup {
    SubgroupKind kind = SubgroupKind::Custom;
    i64 p = 3;
    int n = 0;
    std::vector<PglElement> generators;
    i64 group_order = 0;
};

inline i64 group_order_formula(i64 p, int n) { return pow_ll(p, 3 * n + 1) * (p * p - 1); }

inline i64 primitive_root(i64 P, i64 p) {
    // smallest generator of (Z/P)^x, P = p^k with p odd
    i64 phi = P - P / p;
    std::vector<i64> qs;
    for (auto [q, e] : factor(phi)) {
        (void)e;
        qs.push_back(q);
    }
    for (i64 g = 2; g < P; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (i64 q : qs)
            if (powmod(g, phi / q, P) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail(errc::internal, "no primitive root found");
}

inline Subgroup borel(i64 p, int n) {
    require_odd_prime(p);
    i64 P = pow_ll(p, n + 1);
    i64 g = primitive_root(P, p);
    Subgroup s;
    s.kind = SubgroupKind::Borel;
    s.p = p;
    s.n = n;
    s.generators = {pgl_make(p, n, 1, 1, 0, 1), pgl_make(p, n, g, 0, 0, 1)};
    s.group_order = pow_ll(p, 2 * n + 1) * (p - 1);
    return s;
}

inline Subgroup sylow_p_of_borel(i64 p, int n) {
    require_odd_prime(p);
    Subgroup s;
    s.kind = SubgroupKind::SylowPOfBorel;
    s.p = p;
    s.n = n;
    s.generators = {pgl_make(p, n, 1, 1, 0, 1)};
    if (n >= 1) s.generators.push_back(pgl_make(p, n, 1 + p, 0, 0, 1));
    s.group_order = pow_ll(p, 2 * n + 1);
    return s;
}

// Cyclic of order p^(n+1)+p^n, built from the units of the unramified
// quadratic extension: classes of [[x, eps*y],[y, x]] with eps a
// non-residue.  Deterministic: first (x,y) in lexicographic order whose
// class has full order.
inline Subgroup nonsplit_cartan(i64 p, int n) {
    require_odd_prime(p);
    i64 P = pow_ll(p, n + 1);
    i64 eps = 0;
    for (i64 e = 2; e < p; ++e)
        if (legendre(e, p) == -1) {
            eps = e;
            break;
        }
    if (eps == 0) fail(errc::internal, "no quadratic non-residue");
    i64 target = pow_ll(p, n + 1) + pow_ll(p, n);
    for (i64 x = 0; x < P; ++x)
        for (i64 y = 0; y < P; ++y) {
            i64 det = mod_pos(mulmod(x, x, P) - mulmod(eps, mulmod(y, y, P), P), P);
            if (det % p == 0) continue;
            PglElement g = pgl_make(p, n, x, mulmod(eps, y, P), y, x);
            if (order(g, target) == target) {
                Subgroup s;
                s.kind = SubgroupKind::NonSplitCartan;
                s.p = p;
                s.n = n;
                s.generators = {g};
                s.group_order = target;
                return s;
            }
        }
    fail(errc::internal, "no full-order Cartan generator found");
}

inline Subgroup full_group(i64 p, int n) {
    require_odd_prime(p);
    i64 P = pow_ll(p, n + 1);
    Subgroup s;
    s.kind = SubgroupKind::FullGroup;
    s.p = p;
    s.n = n;
    s.generators = {pgl_make(p, n, 1, 1, 0, 1), pgl_make(p, n, 1, 0, 1, 1),
                    pgl_make(p, n, primitive_root(P, p), 0, 0, 1)};
    s.group_order = group_order_formula(p, n);
    return s;
}

struct StandardSubgroups {
    Subgroup borel;
    Subgroup cartan;
    Subgroup sylow;
};

inline StandardSubgroups subgroups(i64 p, int n) {
    return {borel(p, n), nonsplit_cartan(p, n), sylow_p_of_borel(p, n)};
}

// exhaustive closure of a generating set; guarded by the enumeration budget
inline std::vector<PglElement> enumerate_closure(const std::vector<PglElement>& gens,
                                                 i64 budget = 1000000) {
    std::map<std::array<i64, 4>, PglElement> seen;
    std::vector<PglElement> queue;
    if (gens.empty()) fail(errc::internal, "closure of empty set");
    PglElement e = identity(gens[0].p, gens[0].n);
    seen[e.m] = e;
    queue.push_back(e);
    while (!queue.empty()) {
        PglElement g = queue.back();
        queue.pop_back();
        for (const PglElement& h : gens) {
            PglElement x = mul(g, h);
            if (seen.emplace(x.m, x).second) {
                if (static_cast<i64>(seen.size()) > budget)
                    fail(errc::infeasible_size, "group enumeration budget exceeded");
                queue.push_back(x);
            }
        }
    }
    std::vector<PglElement> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

// full group enumeration by scanning all matrices; only for |G_n| <= budget
inline std::vector<PglElement> enumerate_group(i64 p, int n, i64 budget = 1000000) {
    require_odd_prime(p);
    if (group_order_formula(p, n) > budget) fail(errc::infeasible_size, "group too large to enumerate");
    i64 P = pow_ll(p, n + 1);
    std::map<std::array<i64, 4>, PglElement> seen;
    for (i64 a = 0; a < P; ++a)
        for (i64 b = 0; b < P; ++b)
            for (i64 c = 0; c < P; ++c)
                for (i64 d = 0; d < P; ++d) {
                    i64 det = mod_pos(mulmod(a, d, P) - mulmod(b, c, P), P);
                    if (det % p == 0) continue;
                    PglElement g = pgl_make(p, n, a, b, c, d);
                    seen.emplace(g.m, g);
                }
    std::vector<PglElement> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

// --- permutation lattices ---------------------------------------------------

enum class LatticeKind { Full, SumZero };

// Integer lattice with recorded generator actions.  Full: permutation action
// on the points of P^1.  SumZero: action on the basis e_i - e_last of the
// augmentation kernel.  mod = 0 means coefficients in Z, else Z/p^m.
struct GLattice {
    i64 p = 3;
    int n = 0;
    LatticeKind which = LatticeKind::Full;
    i64 mod = 0;
    size_t rank = 0;
    std::vector<P1Point> points;       // the underlying P^1 enumeration
    std::vector<std::string> labels;   // basis labels
    std::vector<Mat64> action;         // one matrix per generator
    Subgroup generators;
};

inline GLattice lattice(i64 p, int n, LatticeKind which, i64 mod, const Subgroup& H) {
    require_odd_prime(p);
    if (H.p != p || H.n != n) fail(errc::level_mismatch, "subgroup level mismatch");
    GLattice L;
    L.p = p;
    L.n = n;
    L.which = which;
    L.mod = mod;
    L.points = p1_enumerate(p, n);
    L.generators = H;
    size_t N = L.points.size();
    std::map<P1Point, size_t> index;
    for (size_t i = 0; i < N; ++i) index[L.points[i]] = i;
    std::vector<std::vector<size_t>> perms;
    for (const PglElement& g : H.generators) {
        std::vector<size_t> perm(N);
        for (size_t i = 0; i < N; ++i) perm[i] = index.at(act(g, L.points[i]));
        perms.push_back(std::move(perm));
    }
    if (which == LatticeKind::Full) {
        L.rank = N;
        for (size_t i = 0; i < N; ++i) L.labels.push_back("e" + L.points[i].str());
        for (auto& perm : perms) {
            Mat64 A(N, N);
            for (size_t j = 0; j < N; ++j) A.at(perm[j], j) = 1;
            L.action.push_back(std::move(A));
        }
    } else {
        L.rank = N - 1;
        for (size_t i = 0; i + 1 < N; ++i)
            L.labels.push_back("e" + L.points[i].str() + "-e" + L.points[N - 1].str());
        for (auto& perm : perms) {
            // g(e_j - e_last) = f_{g(j)} - f_{g(last)} with f_last = 0
            Mat64 A(N - 1, N - 1);
            for (size_t j = 0; j + 1 < N; ++j) {
                if (perm[j] + 1 < N) A.at(perm[j], j) += 1;
                if (perm[N - 1] + 1 < N) A.at(perm[N - 1], j) -= 1;
            }
            L.action.push_back(std::move(A));
        }
    }
    if (mod != 0)
        for (Mat64& A : L.action) A = A.reduced(mod);
    return L;
}

// Exact dimensions of the rational decomposition layers: W_{-1} is the
// constants, W_i the kernel of the fiber-summation map from level i to
// level i-1, computed as an exact kernel rank.
inline std::vector<long long> decomposition_dims(i64 p, int n) {
    require_odd_prime(p);
    std::vector<long long> dims{1};
    for (int i = 0; i <= n; ++i) {
        std::vector<P1Point> hi = p1_enumerate(p, i);
        if (i == 0) {
            MatI M(1, hi.size());
            for (size_t j = 0; j < hi.size(); ++j) M.at(0, j) = Int(1);
            dims.push_back(static_cast<long long>(hi.size()) - static_cast<long long>(rank_z(M)));
        } else {
            std::vector<P1Point> lo = p1_enumerate(p, i - 1);
            std::map<P1Point, size_t> index;
            for (size_t k = 0; k < lo.size(); ++k) index[lo[k]] = k;
            MatI M(lo.size(), hi.size());
            for (size_t j = 0; j < hi.size(); ++j) M.at(index.at(fiber_map(hi[j])), j) = Int(1);
            dims.push_back(static_cast<long long>(hi.size()) - static_cast<long long>(rank_z(M)));
        }
    }
    return dims;
}

}  // namespace modpoints::pgl
