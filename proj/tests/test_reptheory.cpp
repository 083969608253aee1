#include <algorithm>

#include "doctest.h"
#include "modpoints/reptheory.hpp"

using namespace modpoints;
using namespace modpoints::reptheory;

namespace {
// is v in the column span of B mod p?
bool in_span(const Mat64& B, const std::vector<i64>& v, i64 p) {
    Mat64 aug(B.rows, B.cols + 1);
    for (size_t i = 0; i < B.rows; ++i) {
        for (size_t j = 0; j < B.cols; ++j) aug.at(i, j) = B.at(i, j);
        aug.at(i, B.cols) = mod_pos(v[i], p);
    }
    return rank_fp(aug, p) == rank_fp(B, p);
}
}  // namespace

TEST_CASE("steinberg basis: dimension p, stable, fiber-constant") {
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        Mat64 B = steinberg_basis(p, n);
        CHECK(B.cols == static_cast<size_t>(p));
        CHECK(rank_fp(B, p) == static_cast<size_t>(p));
        // G_n-stable: generator images stay inside the span
        ModpModule M = perm_module_mod_p(p, n);
        for (const Mat64& g : M.action)
            for (size_t c = 0; c < B.cols; ++c) {
                std::vector<i64> col(B.rows);
                for (size_t i = 0; i < B.rows; ++i) col[i] = B.at(i, c);
                CHECK(in_span(B, detail::apply(g, col, p), p));
            }
        // each basis vector sums to zero over the line
        for (size_t c = 0; c < B.cols; ++c) {
            i64 sum = 0;
            for (size_t i = 0; i < B.rows; ++i) sum += B.at(i, c);
            CHECK(mod_pos(sum, p) == 0);
        }
    }
}

TEST_CASE("fixed vectors mod p") {
    // constants are fixed in the full permutation module
    ModpModule M = perm_module_mod_p(3, 0);
    Mat64 fixed = fixed_vectors_mod_p(M.action, 3);
    CHECK(fixed.cols == 1);
    std::vector<i64> ones(M.dim, 1);
    CHECK(in_span(fixed, ones, 3));

    // Borel-fixed space of the permutation module at (3,0) has dimension 2
    std::vector<Mat64> bg = pgl::lattice(3, 0, pgl::LatticeKind::Full, 3, pgl::borel(3, 0)).action;
    Mat64 bfix = fixed_vectors_mod_p(bg, 3);
    CHECK(bfix.cols == 2);

    // the Steinberg space contains the Borel-fixed indicator of {C not above D0}
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        std::vector<pgl::P1Point> pts = pgl::p1_enumerate(p, n);
        auto project = [&](pgl::P1Point q) {
            while (q.n > 0) q = pgl::fiber_map(q);
            return q;
        };
        pgl::P1Point d0 = pgl::p1_make(p, 0, 1, 0);  // below the Borel's fixed point
        std::vector<i64> f(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) f[i] = project(pts[i]) == d0 ? 0 : 1;
        Mat64 st = steinberg_basis(p, n);
        CHECK(in_span(st, f, p));
        std::vector<Mat64> gens =
            pgl::lattice(p, n, pgl::LatticeKind::Full, p, pgl::borel(p, n)).action;
        for (const Mat64& g : gens) {
            std::vector<i64> img = detail::apply(g, f, p);
            CHECK(img == f);
        }
    }
}

TEST_CASE("socle classes: only trivial and Steinberg appear") {
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {5, 0}}) {
        std::vector<SocleClass> classes = socle_classes(p, n);
        REQUIRE(classes.size() == 2);
        bool have_trivial = false, have_steinberg = false;
        for (const SocleClass& c : classes) {
            if (c.tag == "trivial") {
                have_trivial = true;
                CHECK(c.dim == 1);
                CHECK(c.multiplicity == 1);
            }
            if (c.tag == "steinberg") {
                have_steinberg = true;
                CHECK(c.dim == static_cast<size_t>(p));
                CHECK(c.multiplicity == 1);
                CHECK(c.bfixed_dim > 0);
            }
        }
        CHECK(have_trivial);
        CHECK(have_steinberg);
    }
}

TEST_CASE("socle classes at (3,1) stay inside {trivial, steinberg}") {
    std::vector<SocleClass> classes = socle_classes(3, 1);
    for (const SocleClass& c : classes) {
        CHECK((c.tag == "trivial" || c.tag == "steinberg"));
        CHECK(c.bfixed_dim > 0);
    }
}

TEST_CASE("verify_not0 and verify_rigidity on the feasible grid") {
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {5, 0}}) {
        CHECK(verify_not0(p, n).pass);
        CHECK(verify_rigidity(p, n).pass);
    }
    CHECK_THROWS_AS(socle_classes(5, 1), error);  // 5^30 projective vectors
    try {
        socle_classes(5, 1);
    } catch (const error& e) {
        CHECK(e.code() == errc::infeasible_size);
    }
}

TEST_CASE("spins are independent of generator order") {
    ModpModule M = perm_module_mod_p(3, 1);
    ModpModule rev = M;
    std::reverse(rev.action.begin(), rev.action.end());
    std::vector<i64> v(M.dim, 0);
    v[0] = 1;
    v[3] = 2;
    CHECK(detail::spin(M, v).signature() == detail::spin(rev, v).signature());
    std::vector<i64> w(M.dim, 0);
    w[1] = 1;
    CHECK(detail::spin(M, w).signature() == detail::spin(rev, w).signature());
}

TEST_CASE("constants sit inside the sum-zero reduction exactly when n >= 1") {
    // |P^1_n| = p^n (p+1), divisible by p iff n >= 1
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        size_t N = pgl::p1_enumerate(p, n).size();
        bool constants_in_sumzero = mod_pos(static_cast<i64>(N), p) == 0;
        CHECK(constants_in_sumzero == (n >= 1));
    }
    // the Steinberg space never contains the constants: fiber values sum to
    // p+1 = 1, not 0
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {5, 0}, {3, 1}}) {
        Mat64 st = steinberg_basis(p, n);
        std::vector<i64> ones(st.rows, 1);
        CHECK_FALSE(in_span(st, ones, p));
    }
}
