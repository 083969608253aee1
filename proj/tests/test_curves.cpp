#include "doctest.h"
#include "modpoints/checker.hpp"
#include "modpoints/curves.hpp"
#include "modpoints/hecke.hpp"

using namespace modpoints;
using curves::CurveModel;

namespace {
const char* kDataDir = MODPOINTS_DATA_DIR;
std::vector<checker::CurveRecord>& db() {
    static std::vector<checker::CurveRecord> d = checker::load_db(std::string(kDataDir) + "/curves.db");
    return d;
}
const CurveModel& model(const std::string& label) { return checker::find_by_label(db(), label).model; }
}  // namespace

TEST_CASE("invariants of the named models") {
    curves::Invariants v143 = curves::invariants(model("143a1"));
    CHECK(v143.disc == Int(-1859));  // -11 * 13^2, supported on {11,13}
    CHECK(Int(-1859) == Int(-11) * Int(13) * Int(13));

    curves::Invariants vj0 = curves::invariants({0, 0, 0, 0, 1});
    CHECK(vj0.disc == Int(-432));
    CHECK(vj0.j == Rat(Int(0)));

    // 35a1: both formulary routes agree exactly
    curves::Invariants v35 = curves::invariants(model("35a1"));
    CHECK(v35.disc == Int(-42875));  // -5^3 * 7^3
    CHECK(Int(1728) * v35.disc == v35.c4 * v35.c4 * v35.c4 - v35.c6 * v35.c6);
    CHECK(v35.j == Rat(Int(71991296), Int(42875)));

    CHECK_THROWS_AS(curves::invariants({0, 0, 0, 0, 0}), error);
}

TEST_CASE("local data at the landmark primes") {
    curves::LocalData d = curves::local_data(model("143a1"), 11);
    CHECK(d.kind == curves::ReductionKind::NonSplitMultiplicative);
    CHECK(d.f == 1);
    CHECK(d.kodaira == curves::Kodaira{curves::Kodaira::Family::In, d.ord_disc});
    CHECK(d.ord_disc == 1);

    // good prime: I0, f = 0, c = 1
    curves::LocalData g = curves::local_data(model("143a1"), 7);
    CHECK(g.f == 0);
    CHECK(g.c == 1);
    CHECK(g.kodaira.str() == "I0");

    // 45a1 at 3: additive with conductor exponent 2
    curves::LocalData a = curves::local_data(model("45a1"), 3);
    CHECK(a.kind == curves::ReductionKind::Additive);
    CHECK(a.f == 2);
}

TEST_CASE("reduction classes from the worked examples") {
    curves::ReductionClass r1 = curves::reduction_class(model("143a1"), 7);
    CHECK(r1.kind == curves::ReductionKind::GoodOrdinary);
    CHECK_FALSE(r1.anomalous);

    curves::ReductionClass r2 = curves::reduction_class(model("45a1"), 5);
    CHECK(r2.kind == curves::ReductionKind::NonSplitMultiplicative);

    curves::ReductionClass r3 = curves::reduction_class(model("34a1"), 3);
    CHECK(r3.kind == curves::ReductionKind::GoodOrdinary);
    CHECK(r3.anomalous);
}

TEST_CASE("conductors recompute across the whole dataset") {
    for (const checker::CurveRecord& r : db()) {
        CHECK(curves::conductor(r.model) == r.conductor);
    }
    CHECK(curves::conductor(model("143a1")) == 143);
    CHECK(curves::conductor(model("35a1")) == 35);
    CHECK(curves::conductor(model("37b3")) == 37);
}

TEST_CASE("Tamagawa rules for multiplicative primes") {
    for (const checker::CurveRecord& r : db()) {
        for (auto [p, e] : r.conductor_factorization) {
            (void)e;
            curves::LocalData d = curves::local_data(r.model, p);
            if (d.kind == curves::ReductionKind::SplitMultiplicative) {
                CHECK(d.c == d.ord_disc);
            } else if (d.kind == curves::ReductionKind::NonSplitMultiplicative) {
                CHECK(d.c == (d.ord_disc % 2 == 0 ? 2 : 1));
            }
            if (d.kind == curves::ReductionKind::SplitMultiplicative ||
                d.kind == curves::ReductionKind::NonSplitMultiplicative) {
                CHECK(d.f == 1);
                CHECK(d.kodaira.family == curves::Kodaira::Family::In);
                CHECK(d.kodaira.index == d.ord_disc);
                // for ell > 3 the -c6 quadratic-residue shortcut decides split
                if (p > 3) {
                    curves::Invariants v = curves::invariants(r.model);
                    bool split_shortcut = legendre(mod_ll(-v.c6, p), p) == 1;
                    CHECK(split_shortcut ==
                          (d.kind == curves::ReductionKind::SplitMultiplicative));
                }
            }
        }
    }
}

TEST_CASE("Kodaira landmarks in the dataset") {
    CHECK(curves::local_data(model("45a1"), 3).kodaira.str() == "I1*");
    CHECK(curves::local_data(model("27a1"), 3).kodaira.str() == "IV*");
    CHECK(curves::local_data(model("27a1"), 3).f == 3);
    CHECK(curves::local_data(model("24a1"), 2).f == 3);
    CHECK(curves::local_data(model("32a1"), 2).f == 5);
    CHECK(curves::local_data(model("49a1"), 7).kodaira.str() == "III");
    CHECK(curves::local_data(model("121b1"), 11).kodaira.str() == "III");
    CHECK(curves::local_data(model("36a1"), 2).kodaira.str() == "IV");
    CHECK(curves::local_data(model("36a1"), 3).kodaira.str() == "III");
}

TEST_CASE("synthetic additive types at p = 5") {
    // y^2 = x^3 + 5^k and y^2 = x^3 + 5^k x walk the additive ladder
    CHECK(curves::local_data({0, 0, 0, 0, 5}, 5).kodaira.str() == "II");
    CHECK(curves::local_data({0, 0, 0, 0, 25}, 5).kodaira.str() == "IV");
    CHECK(curves::local_data({0, 0, 0, 0, 625}, 5).kodaira.str() == "IV*");
    CHECK(curves::local_data({0, 0, 0, 0, 3125}, 5).kodaira.str() == "II*");
    CHECK(curves::local_data({0, 0, 0, 2, 0}, 2).kodaira.str() == "III");
    CHECK(curves::local_data({0, 0, 0, 125, 0}, 5).kodaira.str() == "III*");
    curves::LocalData i0 = curves::local_data({0, 0, 0, -25, 0}, 5);
    CHECK(i0.kodaira.str() == "I0*");
    CHECK(i0.c == 4);
    CHECK(i0.f == 2);
    // tame additive reduction at p >= 5 always has f = 2
    for (const char* lbl : {"49a1", "121b1"}) {
        for (auto [p, e] : checker::find_by_label(db(), lbl).conductor_factorization) {
            (void)e;
            if (p < 5) continue;
            curves::LocalData d = curves::local_data(model(lbl), p);
            if (d.kind == curves::ReductionKind::Additive) CHECK(d.f == 2);
        }
    }
}

TEST_CASE("non-minimal models are rejected, minimal ones are not") {
    // scaling y^2 = x^3 + 1 by u = 2 gives y^2 = x^3 + 64
    CHECK_THROWS_AS(curves::local_data({0, 0, 0, 0, 64}, 2), error);
    try {
        curves::local_data({0, 0, 0, 0, 64}, 2);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_minimal_model);
    }
    // p >= 5: the (c4, disc) valuation test fires
    CHECK_THROWS_AS(curves::local_data({0, 0, 0, 0, 15625}, 5), error);
    // 32a1 has v2(disc) = 12 and v2(c4) = 6 yet is minimal at 2
    CHECK(curves::local_data(model("32a1"), 2).f == 5);
    CHECK_THROWS_AS(curves::local_data(model("143a1"), 10), error);  // NotPrime
}

TEST_CASE("point counts and the Hasse bound") {
    // y^2 = x^3 + x + 1 over F_5 has 9 points (hand count: x = 0,2,3,4 give
    // squares 1,1,1,4, x = 1 gives the nonresidue 3)
    CHECK(curves::count_points({0, 0, 0, 1, 1}, 5) == 9);
    CHECK(curves::trace_of_frobenius({0, 0, 0, 1, 1}, 5) == -3);
    for (const checker::CurveRecord& r : db()) {
        for (i64 ell : primes_up_to(200)) {
            if (r.conductor % ell == 0) continue;
            i64 a = curves::trace_of_frobenius(r.model, ell);
            CHECK(a * a <= 4 * ell);
        }
    }
}
