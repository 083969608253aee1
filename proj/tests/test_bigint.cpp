#include <random>

#include "doctest.h"
#include "modpoints/bigint.hpp"

using modpoints::Int;

TEST_CASE("small arithmetic matches long long") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000ll, 1000000000ll);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((Int(a) + Int(b)).to_ll() == a + b);
        CHECK((Int(a) - Int(b)).to_ll() == a - b);
        CHECK((Int(a) * Int(b)).to_ll() == a * b);  // |a|,|b| <= 1e9 so this fits
        if (b != 0) {
            CHECK((Int(a) / Int(b)).to_ll() == a / b);
            CHECK((Int(a) % Int(b)).to_ll() == a % b);
        }
    }
}

TEST_CASE("division identity on wide operands") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> dist(-(1ll << 62), 1ll << 62);
    for (int i = 0; i < 500; ++i) {
        Int a = Int(dist(rng)) * Int(dist(rng)) * Int(dist(rng));
        Int b = Int(dist(rng)) * Int(dist(rng));
        if (b.is_zero()) continue;
        Int q, r;
        divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("string round trip and powers") {
    Int big = modpoints::pow(Int(199), 21);
    CHECK(big.str() == Int::from_string(big.str()).str());
    CHECK(modpoints::pow(Int(10), 20).str() == "100000000000000000000");
    CHECK((modpoints::pow(Int(2), 100) - Int(1)).str() == "1267650600228229401496703205375");
    CHECK(Int::from_string("-42").to_ll() == -42);
}

TEST_CASE("gcd, valuation, rounded division") {
    CHECK(modpoints::gcd(Int(462), Int(1071)).to_ll() == 21);
    CHECK(modpoints::valuation(Int(2016), Int(2)) == 5);
    CHECK(modpoints::valuation(Int(-729), Int(3)) == 6);
    CHECK(modpoints::rounded_div(Int(8), Int(3)).to_ll() == 3);
    CHECK(modpoints::rounded_div(Int(-8), Int(3)).to_ll() == -3);
    CHECK(modpoints::rounded_div(Int(7), Int(3)).to_ll() == 2);
    CHECK(modpoints::rounded_div(Int(5), Int(2)).to_ll() == 2);  // tie toward zero
    CHECK(modpoints::mod_ll(Int(-5), 7) == 2);
}
