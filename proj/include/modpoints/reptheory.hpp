#pragma once

// Mod-p submodule analysis of the permutation module on P^1_n: the Steinberg
// subspace, exhaustive socle classification, and the lattice-rigidity check.
// Universal claims are verified by spinning every vector up to scalar, never
// by sampling.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "pgl.hpp"

namespace modpoints::reptheory {

struct ModpModule {
    i64 p = 3;
    int n = 0;
    size_t dim = 0;
    std::vector<Mat64> action;  // generator matrices mod p
    std::string label;
};

inline ModpModule perm_module_mod_p(i64 p, int n) {
    pgl::Subgroup G = pgl::full_group(p, n);
    pgl::GLattice L = pgl::lattice(p, n, pgl::LatticeKind::Full, p, G);
    return {p, n, L.rank, L.action, "Fp[P1_n]"};
}

// functions constant on the fibers of P^1_n -> P^1_0 with fiber values
// summing to zero; dimension p
inline Mat64 steinberg_basis(i64 p, int n) {
    pgl::require_odd_prime(p);
    std::vector<pgl::P1Point> pts = pgl::p1_enumerate(p, n);
    std::vector<pgl::P1Point> base = pgl::p1_enumerate(p, 0);
    auto project = [&](pgl::P1Point q) {
        while (q.n > 0) q = pgl::fiber_map(q);
        return q;
    };
    std::map<pgl::P1Point, size_t> fiber_of;
    for (size_t i = 0; i < base.size(); ++i) fiber_of[base[i]] = i;
    Mat64 B(pts.size(), base.size() - 1);
    for (size_t i = 0; i < pts.size(); ++i) {
        size_t f = fiber_of.at(project(pts[i]));
        if (f + 1 < base.size())
            B.at(i, f) = 1;
        else
            for (size_t j = 0; j + 1 < base.size(); ++j) B.at(i, j) = p - 1;  // -1 mod p
    }
    return B;
}

inline Mat64 fixed_vectors_mod_p(const std::vector<Mat64>& gens, i64 p) {
    size_t rows = 0, dim = gens.empty() ? 0 : gens[0].cols;
    for (const Mat64& A : gens) rows += A.rows;
    Mat64 S(rows, dim);
    size_t off = 0;
    for (const Mat64& A : gens) {
        for (size_t i = 0; i < A.rows; ++i)
            for (size_t j = 0; j < A.cols; ++j)
                S.at(off + i, j) = mod_pos(A.at(i, j) - (i == j ? 1 : 0), p);
        off += A.rows;
    }
    return kernel_basis_fp(S, p);
}

namespace detail {

// reduced echelon basis of a subspace, used as a canonical signature
struct Echelon {
    i64 p;
    size_t dim;                       // ambient dimension
    std::vector<std::vector<i64>> rows;  // reduced, pivot-sorted
    std::vector<size_t> pivots;

    // returns true if v was independent (and absorbed)
    bool add(std::vector<i64> v) {
        for (size_t k = 0; k < rows.size(); ++k) {
            i64 c = v[pivots[k]];
            if (c)
                for (size_t j = 0; j < dim; ++j) v[j] = mod_pos(v[j] - c * rows[k][j], p);
        }
        size_t piv = dim;
        for (size_t j = 0; j < dim; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
        if (piv == dim) return false;
        i64 inv = invmod(v[piv], p);
        for (size_t j = 0; j < dim; ++j) v[j] = mulmod(v[j], inv, p);
        // back-substitute into earlier rows
        for (size_t k = 0; k < rows.size(); ++k) {
            i64 c = rows[k][piv];
            if (c)
                for (size_t j = 0; j < dim; ++j)
                    rows[k][j] = mod_pos(rows[k][j] - c * v[j], p);
        }
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, piv);
        return true;
    }
    bool contains(std::vector<i64> v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            i64 c = v[pivots[k]];
            if (c)
                for (size_t j = 0; j < dim; ++j) v[j] = mod_pos(v[j] - c * rows[k][j], p);
        }
        for (i64 x : v)
            if (x) return false;
        return true;
    }
    std::string signature() const {
        std::string s;
        for (const auto& r : rows)
            for (i64 x : r) s.push_back(static_cast<char>('0' + x));
        return s;
    }
};

inline std::vector<i64> apply(const Mat64& A, const std::vector<i64>& v, i64 p) {
    std::vector<i64> w(A.rows, 0);
    for (size_t i = 0; i < A.rows; ++i) {
        i64 acc = 0;
        for (size_t j = 0; j < A.cols; ++j) acc += A.at(i, j) * v[j];
        w[i] = mod_pos(acc, p);
    }
    return w;
}

// submodule generated by v under the generator matrices
inline Echelon spin(const ModpModule& M, const std::vector<i64>& v) {
    Echelon e{M.p, M.dim, {}, {}};
    std::vector<std::vector<i64>> queue;
    if (e.add(v)) queue.push_back(v);
    while (!queue.empty()) {
        std::vector<i64> w = queue.back();
        queue.pop_back();
        for (const Mat64& A : M.action) {
            std::vector<i64> u = apply(A, w, M.p);
            if (e.add(u)) queue.push_back(u);
        }
    }
    return e;
}

// iterate all nonzero vectors up to scalar in the column space of basis
// (basis columns independent); calls fn(vector) for each representative
template <typename F>
void for_each_projective(const Mat64& basis, i64 p, F&& fn) {
    size_t k = basis.cols, dim = basis.rows;
    // leading coefficient 1 at position lead, free digits after
    std::vector<i64> coeff(k, 0);
    for (size_t lead = 0; lead < k; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        for (;;) {
            std::vector<i64> v(dim, 0);
            for (size_t c = lead; c < k; ++c) {
                if (!coeff[c]) continue;
                for (size_t i = 0; i < dim; ++i) v[i] = mod_pos(v[i] + coeff[c] * basis.at(i, c), p);
            }
            fn(v);
            // odometer over positions lead+1..k-1
            size_t pos = k;
            for (size_t c = lead + 1; c < k; ++c)
                if (coeff[c] + 1 < p) {
                    pos = c;
                    break;
                } else {
                    coeff[c] = 0;
                }
            if (pos == k) break;
            ++coeff[pos];
            for (size_t c = lead + 1; c < pos; ++c) coeff[c] = 0;
        }
    }
}

inline long long projective_count(i64 p, size_t dim) {
    long long total = 0, pk = 1;
    for (size_t i = 0; i < dim; ++i) {
        total += pk;
        if (total > (1ll << 62) / p) fail(errc::infeasible_size, "projective space too large");
        pk *= p;
    }
    return total;  // (p^dim - 1)/(p - 1)
}

constexpr long long kSpinBudget = 2000000;

}  // namespace detail

struct SocleClass {
    std::string tag;  // "trivial", "steinberg", or "other"
    size_t dim = 0;
    size_t bfixed_dim = 0;
    size_t multiplicity = 0;
};

struct Verdict {
    bool pass = false;
    std::string detail;
};

// Distinct irreducible submodules of Fp[P1_n], found by exhaustive spin of
// every vector up to scalar and keeping the minimal submodules.
inline std::vector<SocleClass> socle_classes(i64 p, int n) {
    ModpModule M = perm_module_mod_p(p, n);
    if (detail::projective_count(p, M.dim) > detail::kSpinBudget)
        fail(errc::infeasible_size, "exhaustive spin budget exceeded");
    std::vector<Mat64> borel_gens = pgl::lattice(p, n, pgl::LatticeKind::Full, p, pgl::borel(p, n)).action;
    std::map<std::string, detail::Echelon> modules;
    detail::for_each_projective(Mat64::identity(M.dim), p, [&](const std::vector<i64>& v) {
        detail::Echelon e = detail::spin(M, v);
        modules.emplace(e.signature(), std::move(e));
    });
    // minimal elements under containment
    std::vector<const detail::Echelon*> all;
    for (auto& [sig, e] : modules) all.push_back(&e);
    std::map<std::pair<size_t, size_t>, size_t> counts;  // (dim, bfix) -> multiplicity
    for (const detail::Echelon* e : all) {
        bool minimal = true;
        for (const detail::Echelon* f : all) {
            if (f == e || f->rows.size() >= e->rows.size()) continue;
            bool contained = true;
            for (const auto& r : f->rows)
                if (!e->contains(r)) {
                    contained = false;
                    break;
                }
            if (contained) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        // B-fixed dimension inside the submodule
        size_t k = e->rows.size();
        size_t stacked_rows = borel_gens.size() * M.dim;
        Mat64 S(stacked_rows, k);
        for (size_t g = 0; g < borel_gens.size(); ++g)
            for (size_t c = 0; c < k; ++c) {
                std::vector<i64> img = detail::apply(borel_gens[g], e->rows[c], p);
                for (size_t i = 0; i < M.dim; ++i)
                    S.at(g * M.dim + i, c) = mod_pos(img[i] - e->rows[c][i], p);
            }
        size_t bfix = kernel_basis_fp(S, p).cols;
        counts[{k, bfix}]++;
    }
    std::vector<SocleClass> out;
    for (auto& [key, mult] : counts) {
        SocleClass c;
        c.dim = key.first;
        c.bfixed_dim = key.second;
        c.multiplicity = mult;
        c.tag = c.dim == 1 ? "trivial" : (c.dim == static_cast<size_t>(p) ? "steinberg" : "other");
        out.push_back(c);
    }
    return out;
}

namespace detail {

// core loop shared by the universal checks: spins every projective vector of
// span(basis) and verifies the generated submodule meets the B-fixed space.
// Early exit per vector once the partial span already contains a nonzero
// B-fixed vector (sound: partial span is inside the full submodule).
inline Verdict all_spins_have_bfixed(const ModpModule& M, const Mat64& basis,
                                     const std::vector<Mat64>& borel_gens) {
    i64 p = M.p;
    auto bfixed_in = [&](const Echelon& e) {
        size_t k = e.rows.size();
        Mat64 S(borel_gens.size() * M.dim, k);
        for (size_t g = 0; g < borel_gens.size(); ++g)
            for (size_t c = 0; c < k; ++c) {
                std::vector<i64> img = apply(borel_gens[g], e.rows[c], p);
                for (size_t i = 0; i < M.dim; ++i)
                    S.at(g * M.dim + i, c) = mod_pos(img[i] - e.rows[c][i], p);
            }
        return kernel_basis_fp(S, p).cols > 0;
    };
    std::map<std::string, bool> verified;  // submodule signature -> has B-fixed
    Verdict verdict;
    verdict.pass = true;
    long long spins = 0;
    for_each_projective(basis, p, [&](const std::vector<i64>& v) {
        if (!verdict.pass) return;
        ++spins;
        // incremental spin with early B-fixed exit
        Echelon e{p, M.dim, {}, {}};
        std::vector<std::vector<i64>> queue;
        e.add(v);
        queue.push_back(v);
        bool ok = bfixed_in(e);
        while (!ok && !queue.empty()) {
            std::vector<i64> w = queue.back();
            queue.pop_back();
            bool grew = false;
            for (const Mat64& A : M.action) {
                std::vector<i64> u = apply(A, w, p);
                if (e.add(u)) {
                    queue.push_back(u);
                    grew = true;
                }
            }
            if (grew) ok = bfixed_in(e);
        }
        if (!ok) {
            // full spin finished without B-fixed vectors: counterexample
            std::string vec;
            for (i64 x : v) vec += std::to_string(x);
            verdict.pass = false;
            verdict.detail = "counterexample vector " + vec;
        }
    });
    if (verdict.pass)
        verdict.detail = "all " + std::to_string(spins) + " cyclic submodules meet the B-fixed space";
    return verdict;
}

}  // namespace detail

// Every nonzero submodule of Fp[P1_n] has nonzero B_n-fixed part; verified
// over every cyclic submodule (each submodule contains one).
inline Verdict verify_not0(i64 p, int n) {
    ModpModule M = perm_module_mod_p(p, n);
    if (detail::projective_count(p, M.dim) > detail::kSpinBudget)
        fail(errc::infeasible_size, "exhaustive spin budget exceeded");
    std::vector<Mat64> borel_gens = pgl::lattice(p, n, pgl::LatticeKind::Full, p, pgl::borel(p, n)).action;
    return detail::all_spins_have_bfixed(M, Mat64::identity(M.dim), borel_gens);
}

// k=1 rigidity reduction: every nonzero submodule of the sum-zero part mod p
// has nonzero B_n-fixed part, hence a lattice squeezed between T_n and
// (1/p)T_n with the same B_n-fixed part equals T_n.  The k>1 cases reduce to
// this one by p-torsion descent.
inline Verdict verify_rigidity(i64 p, int n) {
    ModpModule M = perm_module_mod_p(p, n);
    if (detail::projective_count(p, M.dim - 1) > detail::kSpinBudget)
        fail(errc::infeasible_size, "exhaustive spin budget exceeded");
    std::vector<Mat64> borel_gens = pgl::lattice(p, n, pgl::LatticeKind::Full, p, pgl::borel(p, n)).action;
    // basis of the sum-zero subspace: e_i - e_last
    Mat64 basis(M.dim, M.dim - 1);
    for (size_t i = 0; i + 1 < M.dim; ++i) {
        basis.at(i, i) = 1;
        basis.at(M.dim - 1, i) = p - 1;
    }
    Verdict v = detail::all_spins_have_bfixed(M, basis, borel_gens);
    if (v.pass) v.detail += "; k>1 follows by p-torsion descent";
    return v;
}

}  // namespace modpoints::reptheory
