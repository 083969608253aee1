#include "doctest.h"
#include "modpoints/cohom.hpp"

using namespace modpoints;
using namespace modpoints::pgl;

TEST_CASE("fixed sublattices") {
    // full group on the whole permutation module: constants only
    GLattice full = lattice(3, 0, LatticeKind::Full, 0, full_group(3, 0));
    MatI fixed = cohom::fixed_sublattice(full);
    REQUIRE(fixed.cols == 1);
    for (size_t i = 0; i < fixed.rows; ++i) CHECK(fixed.at(i, 0).abs() == Int(1));

    // Cartan on the sum-zero lattice: no fixed vectors at all
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}, {5, 1}}) {
        GLattice t = lattice(p, n, LatticeKind::SumZero, 0, nonsplit_cartan(p, n));
        CHECK(cohom::fixed_sublattice(t).cols == 0);
    }

    // Borel at (3,0) on the full module: the point (1:0) and its complement
    GLattice tb = lattice(3, 0, LatticeKind::Full, 0, borel(3, 0));
    CHECK(cohom::fixed_sublattice(tb).cols == 2);

    // over Z/p^m the generators have the order predicted by the defect
    GLattice tmod = lattice(3, 0, LatticeKind::Full, 9, borel(3, 0));
    CHECK(cohom::fixed_sublattice(tmod).cols >= 2);
}

TEST_CASE("cyclic cohomology via Smith form") {
    // trivial module Z with a cyclic group acting trivially
    GLattice triv = lattice(3, 0, LatticeKind::Full, 0, nonsplit_cartan(3, 0));
    triv.rank = 1;
    triv.labels = {"e"};
    triv.action = {Mat64::identity(1)};
    CHECK(cohom::h1_cyclic(triv, Mat64::identity(1), 4).factors.empty());

    // A_0 on T_0 at p = 3: H^1 = Z/4, trivial 3-part
    GLattice t0 = lattice(3, 0, LatticeKind::SumZero, 0, nonsplit_cartan(3, 0));
    cohom::InvariantFactors h0 = cohom::h1_cyclic(t0, t0.action[0]);
    REQUIRE(h0.factors.size() == 1);
    CHECK(h0.factors[0] == Int(4));
    CHECK(h0.p_part(3).empty());

    // A_1 on T_1 at p = 3: H^1 = Z/12 with 3-part Z/3
    GLattice t1 = lattice(3, 1, LatticeKind::SumZero, 0, nonsplit_cartan(3, 1));
    cohom::InvariantFactors h1 = cohom::h1_cyclic(t1, t1.action[0]);
    REQUIRE(h1.factors.size() == 1);
    CHECK(h1.factors[0] == Int(12));
    REQUIRE(h1.p_part(3).size() == 1);
    CHECK(h1.p_part(3)[0] == Int(3));

    // induced module: H^1(A_n, T_(n)) = 0
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        GLattice tf = lattice(p, n, LatticeKind::Full, 0, nonsplit_cartan(p, n));
        CHECK(cohom::h1_cyclic(tf, tf.action[0]).factors.empty());
    }
}

TEST_CASE("h1_cyclic does not depend on the generator") {
    Subgroup A = nonsplit_cartan(3, 1);
    GLattice t = lattice(3, 1, LatticeKind::SumZero, 0, A);
    // sigma^k for k coprime to 12 generates the same group
    Mat64 sigma = t.action[0];
    Mat64 sigma5 = sigma;
    for (int i = 1; i < 5; ++i) {
        MatI prod = sigma5.to_int() * sigma.to_int();
        for (size_t k = 0; k < prod.a.size(); ++k) sigma5.a[k] = prod.a[k].to_ll();
    }
    cohom::InvariantFactors h1 = cohom::h1_cyclic(t, sigma);
    cohom::InvariantFactors h5 = cohom::h1_cyclic(t, sigma5);
    REQUIRE(h1.factors.size() == h5.factors.size());
    for (size_t i = 0; i < h1.factors.size(); ++i) CHECK(h1.factors[i] == h5.factors[i]);
}

TEST_CASE("defect method agrees with the cyclic route") {
    // (A_1, T_1, 3, 3) -> 3
    Subgroup A1 = nonsplit_cartan(3, 1);
    GLattice t1 = lattice(3, 1, LatticeKind::SumZero, 0, A1);
    CHECK(cohom::h1_p_defect(A1, t1, 3, 3) == Int(3));
    // (B_0, T_0, 3, 2) -> 1 and (B_0, T_(0), 3, 2) -> 1
    Subgroup B0 = borel(3, 0);
    GLattice tz = lattice(3, 0, LatticeKind::SumZero, 0, B0);
    GLattice tf = lattice(3, 0, LatticeKind::Full, 0, B0);
    CHECK(cohom::h1_p_defect(B0, tz, 3, 2) == Int(1));
    CHECK(cohom::h1_p_defect(B0, tf, 3, 2) == Int(1));
    // agreement between the two methods on cyclic subgroups
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        Subgroup A = nonsplit_cartan(p, n);
        GLattice t = lattice(p, n, LatticeKind::SumZero, 0, A);
        cohom::InvariantFactors h = cohom::h1_cyclic(t, t.action[0]);
        Int ppart(1);
        for (const Int& f : h.p_part(p)) ppart *= f;
        CHECK(cohom::h1_p_defect(A, t, p, n + 2) == ppart);
    }
}

TEST_CASE("defect is nondecreasing in precision and stabilizes") {
    Subgroup A1 = nonsplit_cartan(3, 1);
    GLattice t1 = lattice(3, 1, LatticeKind::SumZero, 0, A1);
    Int prev(1);
    for (int m = 1; m <= 4; ++m) {
        Int d = cohom::h1_p_defect(A1, t1, 3, m);
        CHECK(d >= prev);
        prev = d;
    }
    CHECK(cohom::h1_p_defect(A1, t1, 3, 3) == cohom::h1_p_defect(A1, t1, 3, 4));
}

TEST_CASE("verify_h1 matches the published table") {
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {3, 1}, {5, 0}, {5, 1}}) {
        cohom::Verdict v = cohom::verify_h1(p, n, cohom::H1Which::CartanOnSumZero);
        CHECK(v.pass);
    }
    for (auto [p, n] : std::vector<std::pair<i64, int>>{{3, 0}, {5, 0}, {3, 1}}) {
        CHECK(cohom::verify_h1(p, n, cohom::H1Which::BorelOnSumZero).pass);
        CHECK(cohom::verify_h1(p, n, cohom::H1Which::BorelOnFull).pass);
    }
    CHECK_THROWS_AS(cohom::verify_h1(7, 2, cohom::H1Which::BorelOnFull), error);  // too large
}

TEST_CASE("infinite order is rejected") {
    GLattice t = lattice(3, 0, LatticeKind::SumZero, 0, borel(3, 0));
    Mat64 shear = Mat64::identity(3);
    shear.at(0, 1) = 1;  // infinite order over Z
    CHECK_THROWS_AS(cohom::h1_cyclic(t, shear, 0, 50), error);
}
