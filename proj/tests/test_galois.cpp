#include "doctest.h"
#include "modpoints/checker.hpp"
#include "modpoints/galois.hpp"

using namespace modpoints;
using curves::CurveModel;

namespace {
std::vector<checker::CurveRecord>& db() {
    static std::vector<checker::CurveRecord> d =
        checker::load_db(std::string(MODPOINTS_DATA_DIR) + "/curves.db");
    return d;
}
const CurveModel& model(const std::string& label) { return checker::find_by_label(db(), label).model; }
}  // namespace

TEST_CASE("surjectivity certificates for the worked examples") {
    galois::SurjectivityVerdict v = galois::surjectivity(model("35a1"), 7, 1000);
    CHECK(v.surjective);
    CHECK(v.witnesses.size() == 3);
    CHECK(galois::surjectivity(model("143a1"), 7, 1000).surjective);
    CHECK(galois::surjectivity(model("21a4"), 5, 1000).surjective);
    CHECK(galois::surjectivity(model("45a1"), 5, 1000).surjective);
    // p = 3 is a documented limitation: class (c) cannot exist
    CHECK_FALSE(galois::surjectivity(model("37a1"), 3, 1000).surjective);
    CHECK_THROWS_AS(galois::surjectivity(model("37a1"), 2, 1000), error);
}

TEST_CASE("certificates are monotone in the scanning bound") {
    galois::SurjectivityVerdict v100 = galois::surjectivity(model("37a1"), 5, 100);
    galois::SurjectivityVerdict v1000 = galois::surjectivity(model("37a1"), 5, 1000);
    if (v100.surjective) CHECK(v1000.surjective);
    // witnesses found at the smaller bound persist at the larger one
    for (const galois::Witness& w : v100.witnesses) {
        bool found = false;
        for (const galois::Witness& x : v1000.witnesses)
            if (x.cls == w.cls && x.ell == w.ell) found = true;
        CHECK(found);
    }
}

TEST_CASE("a recorded p-isogeny blocks the surjectivity certificate") {
    for (const checker::CurveRecord& r : db())
        for (i64 d : r.isogeny_degrees) {
            if (d < 3 || !is_prime(d)) continue;
            CHECK_FALSE(galois::surjectivity(r.model, d, 300).surjective);
        }
}

TEST_CASE("CM curves never certify") {
    for (const char* lbl : {"27a1", "32a1", "36a1", "49a1"})
        for (i64 p : {5, 7, 11, 13})
            CHECK_FALSE(galois::surjectivity(model(lbl), p, 500).surjective);
}

TEST_CASE("rational 2-isogeny detection") {
    CHECK(galois::has_two_isogeny(model("21a4")));
    CHECK_FALSE(galois::has_two_isogeny(model("35a1")));
    CHECK(galois::has_two_isogeny({0, 0, 0, -1, 0}));  // y^2 = x^3 - x, full 2-torsion
    CHECK(galois::has_two_isogeny(model("17a1")));     // root at x = 11/4
    for (const checker::CurveRecord& r : db()) {
        bool recorded = false;
        for (i64 d : r.isogeny_degrees) recorded = recorded || d == 2;
        CHECK(galois::has_two_isogeny(r.model) == recorded);
    }
}

TEST_CASE("isogeny degree coprimality") {
    CHECK(galois::isogeny_coprimality({1, 3}, 143));
    CHECK(galois::isogeny_coprimality({1, 2, 4, 8}, 45));
    CHECK_FALSE(galois::isogeny_coprimality({1, 3, 9}, 21));
    CHECK_THROWS_AS(galois::isogeny_coprimality({}, 11), error);
    try {
        galois::isogeny_coprimality({}, 11);
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_degree_list);
    }
}
