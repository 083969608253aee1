#include <tuple>

#include "doctest.h"
#include "modpoints/checker.hpp"

using namespace modpoints;
using namespace modpoints::checker;

namespace {
const std::string kData = MODPOINTS_DATA_DIR;
std::vector<CurveRecord>& db() {
    static std::vector<CurveRecord> d = load_db(kData + "/curves.db");
    return d;
}
}  // namespace

TEST_CASE("record parsing and validation") {
    CurveRecord r = parse_record("143a1|0,-1,1,-1,-2|143|1");
    CHECK(r.label == "143a1");
    CHECK(r.model == curves::CurveModel{0, -1, 1, -1, -2});
    CHECK(r.conductor == 143);
    CHECK(r.isogeny_degrees == std::vector<i64>{1});

    CHECK_THROWS_AS(parse_record("sing|0,0,0,0,0|1|1"), error);
    try {
        parse_record("sing|0,0,0,0,0|1|1");
    } catch (const error& e) {
        CHECK(e.code() == errc::singular_model);
    }
    CHECK_THROWS_AS(parse_record("35a1|0,-1,1,9,1|34|1;3"), error);
    try {
        parse_record("35a1|0,-1,1,9,1|34|1;3");
    } catch (const error& e) {
        CHECK(e.code() == errc::conductor_mismatch);
    }
    CHECK_THROWS_AS(parse_record("x|1,2,3|7|1"), error);          // wrong arity
    CHECK_THROWS_AS(parse_record("x|0,0,1,-1,0|37|3;1"), error);  // degrees not ascending
    CHECK_THROWS_AS(parse_record("x|0,0,1,-1,0|37|2"), error);    // missing degree 1
}

TEST_CASE("round trip over the bundled dataset") {
    CHECK(db().size() >= 20);
    for (const CurveRecord& r : db()) {
        CurveRecord again = parse_record(render_record(r));
        CHECK(again.label == r.label);
        CHECK(again.model == r.model);
        CHECK(again.conductor == r.conductor);
        CHECK(again.isogeny_degrees == r.isogeny_degrees);
        // stored factorization multiplies back
        i64 prod = 1;
        for (auto [p, e] : r.conductor_factorization)
            for (int i = 0; i < e; ++i) prod *= p;
        CHECK(prod == r.conductor);
    }
    CHECK_THROWS_AS(load_db(kData + "/corrupt_conductor.db"), error);
    CHECK_THROWS_AS(load_db(kData + "/corrupt_singular.db"), error);
}

TEST_CASE("individual conditions on the first worked example") {
    const CurveRecord& E = find_by_label(db(), "143a1");
    const CurveRecord& A = find_by_label(db(), "35a1");
    Certificate c6 = check_condition(6, E, A, 7);
    CHECK(c6.status == Status::Pass);
    CHECK(c6.evidence.find("l=11:d=-35:r=0") != std::string::npos);
    CHECK(c6.evidence.find("l=13:d=-27:r=1") != std::string::npos);

    Certificate c1 = check_condition(1, find_by_label(db(), "37b3"), find_by_label(db(), "45a1"), 7);
    CHECK(c1.status == Status::Fail);  // 45 = 3^2 * 5 is not semistable

    Certificate c3 = check_condition(3, E, A, 7);
    CHECK(c3.status == Status::Pass);

    Certificate c2 = check_condition(2, E, A, 7);
    CHECK(c2.status == Status::Pass);
    CHECK(c2.evidence.find("good-ordinary") != std::string::npos);
}

TEST_CASE("the two fully-checked gate examples pass") {
    Verdict v1 = check_semibig(find_by_label(db(), "143a1"), find_by_label(db(), "35a1"), 7, 2);
    CHECK(v1.overall == Status::Pass);
    CHECK(v1.conclusion.find("7^2") != std::string::npos);
    for (const Certificate& c : v1.certificates) CHECK(c.status == Status::Pass);

    Verdict v2 = check_semibig(find_by_label(db(), "45a1"), find_by_label(db(), "21a4"), 5, 1);
    CHECK(v2.overall == Status::Pass);

    // strict mode evaluates ell = 3 too (3 divides N_A = 21): -11 = 4 mod 5
    Options strict;
    strict.strict_cond6 = true;
    Certificate c6 =
        check_condition(6, find_by_label(db(), "45a1"), find_by_label(db(), "21a4"), 5, strict);
    CHECK(c6.status == Status::Pass);
    CHECK(c6.evidence.find("l=3:d=-11:r=4") != std::string::npos);

    CHECK_THROWS_AS(check_semibig(find_by_label(db(), "143a1"), find_by_label(db(), "35a1"), 2),
                    error);
}

TEST_CASE("overall status aggregates structurally") {
    // p = 3 forces Unverified image certificates (never Surjective at 3)
    const CurveRecord& E = find_by_label(db(), "37a1");
    const CurveRecord& A = find_by_label(db(), "53a1");
    Verdict v = check_semibig(E, A, 3, 1);
    bool any_fail = false, any_unv = false;
    for (const Certificate& c : v.certificates) {
        if (c.status == Status::Fail) any_fail = true;
        if (c.status == Status::Unverified) any_unv = true;
    }
    Status expect = any_fail ? Status::Fail : (any_unv ? Status::Unverified : Status::Pass);
    CHECK(v.overall == expect);
    CHECK(any_unv);

    Options assume;
    assume.assume_surjective = true;
    Verdict va = check_semibig(E, A, 3, 1, assume);
    for (const Certificate& c : va.certificates)
        CHECK(c.status != Status::Unverified);  // the flag upgrades 4/5
}

TEST_CASE("search reproduces the third worked example") {
    SearchFilter f;
    f.E_label = "34a1";
    f.A_label = "37b3";
    SearchResult res = search(db(), f, 13);
    REQUIRE(res.passing.size() >= 1);
    CHECK(res.passing.front().p == 11);
    CHECK(res.passing.size() == 1);  // 3, 5, 7, 13 all fail
    // the p = 3 exclusion is the anomalous condition
    Verdict v3 = check_semibig(find_by_label(db(), "34a1"), find_by_label(db(), "37b3"), 3);
    CHECK(v3.certificates[1].status == Status::Fail);
    CHECK(v3.certificates[1].evidence.find("anomalous") != std::string::npos);
    // p = 5, 7, 13 fail the square condition
    for (i64 p : {5, 7, 13}) {
        Verdict vp = check_semibig(find_by_label(db(), "34a1"), find_by_label(db(), "37b3"), p);
        CHECK(vp.certificates[5].status == Status::Fail);
    }
}

TEST_CASE("search is worker-count independent and ordered") {
    SearchFilter f;
    f.prime_conductor_only = true;
    SearchResult one = search(db(), f, 7, {}, 1);
    SearchResult eight = search(db(), f, 7, {}, 8);
    REQUIRE(one.passing.size() == eight.passing.size());
    REQUIRE(one.unverified.size() == eight.unverified.size());
    for (size_t i = 0; i < one.passing.size(); ++i) {
        CHECK(one.passing[i].E_index == eight.passing[i].E_index);
        CHECK(one.passing[i].A_index == eight.passing[i].A_index);
        CHECK(one.passing[i].p == eight.passing[i].p);
    }
    // ascending (E-index, A-index, p) order
    auto key = [](const SearchHit& h) { return std::make_tuple(h.E_index, h.A_index, h.p); };
    for (size_t i = 0; i + 1 < one.passing.size(); ++i)
        CHECK(key(one.passing[i]) < key(one.passing[i + 1]));
    for (size_t i = 0; i + 1 < one.unverified.size(); ++i)
        CHECK(key(one.unverified[i]) < key(one.unverified[i + 1]));
}

TEST_CASE("valuation certificate") {
    // (143a1, 35a1, 7): A is split multiplicative at 7 with ord_7(j) = -3
    ValuationCertificate cert =
        log_valuation_certificate(find_by_label(db(), "143a1"), find_by_label(db(), "35a1"), 7);
    CHECK(cert.c == 3);
    CHECK(cert.valuation == 3);
    CHECK(cert.tamagawa_cA == 3);  // split multiplicative: c = ord(disc)
    CHECK(cert.tail_certified);
    CHECK(cert.terms.front().n == 1);
    CHECK(cert.terms.front().ord == 3);
    for (const SeriesTerm& t : cert.terms)
        if (t.n > 1) CHECK(t.ord > cert.valuation);

    // j(37b3) is integral at 7: not a Tate prime
    CHECK_THROWS_AS(
        log_valuation_certificate(find_by_label(db(), "37b3"), find_by_label(db(), "35a1"), 3),
        error);
    try {
        log_valuation_certificate(find_by_label(db(), "143a1"), find_by_label(db(), "37b3"), 7);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_tate_at_p);
    }
    // supersingular a_p: E = 36a1 has a_5 = 0, A = 65a1 is Tate at 5
    try {
        log_valuation_certificate(find_by_label(db(), "36a1"), find_by_label(db(), "65a1"), 5);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::supersingular_ap);
    }
    // additive reduction class: E = 45a1 at 3, A = 21a4 is Tate at 3
    try {
        log_valuation_certificate(find_by_label(db(), "45a1"), find_by_label(db(), "21a4"), 3);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_reduction_class);
    }
}

TEST_CASE("condition-6 prime set matches the hand lists") {
    // (143a1, 35a1, 7): {11, 13}; (45a1, 21a4, 5): {}; (34a1, 37b3, 11): {2, 17}
    auto primes_in_evidence = [&](const Certificate& c) {
        std::vector<i64> out;
        size_t pos = 0;
        while ((pos = c.evidence.find("l=", pos)) != std::string::npos) {
            pos += 2;
            out.push_back(std::stoll(c.evidence.substr(pos)));
        }
        return out;
    };
    Certificate a = check_condition(6, find_by_label(db(), "143a1"), find_by_label(db(), "35a1"), 7);
    CHECK(primes_in_evidence(a) == std::vector<i64>{11, 13});
    Certificate b = check_condition(6, find_by_label(db(), "45a1"), find_by_label(db(), "21a4"), 5);
    CHECK(primes_in_evidence(b).empty());
    Certificate c = check_condition(6, find_by_label(db(), "34a1"), find_by_label(db(), "37b3"), 11);
    CHECK(primes_in_evidence(c) == std::vector<i64>{2, 17});
}
