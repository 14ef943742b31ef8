#include "doctest.h"

#include <numeric>

#include "sidonlab/finite_field.hpp"

using namespace sidonlab;
using gf::Field;
using gf::FieldElement;

namespace {

// Independent order check by repeated multiplication.
Int brute_order(const Field& f, const FieldElement& a) {
    auto cur = a;
    Int ord = 1;
    while (cur != f.one()) {
        cur = f.mul(cur, a);
        ++ord;
        REQUIRE(ord <= f.order());
    }
    return ord;
}

std::vector<Int> divisors(Int n) {
    std::vector<Int> ds;
    for (Int d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    return ds;
}

}  // namespace

TEST_CASE("make_field picks the least irreducible modulus") {
    auto f = Field::make(13, 2);
    CHECK(f.order() == 169);
    CHECK(f.modulus() == std::vector<Int>{2, 0, 1});  // x^2 + 2

    auto prime = Field::make(7, 1);
    CHECK(prime.order() == 7);
    CHECK(prime.modulus() == std::vector<Int>{0, 1});  // x

    auto f8 = Field::make(2, 3);
    CHECK(f8.order() == 8);
    // Degree-3 oracle: irreducible over GF(2) iff no root in {0, 1}.
    const auto& m = f8.modulus();
    for (Int x : {Int(0), Int(1)}) {
        Int val = 0, pw = 1;
        for (Int c : m) {
            val = (val + c * pw) % 2;
            pw = pw * x % 2;  // 0^0 treated as 1 via pw's initial value
        }
        CHECK(val != 0);
    }
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(6, 1), NotPrimeError);
    CHECK_THROWS_AS(Field::make(4, 2), NotPrimeError);
    CHECK_THROWS_AS(Field::make(2, 25), DegreeTooLargeError);
    CHECK_THROWS_AS(Field::with_modulus(13, {1, 0, 1}), Error);  // x^2+1 = (x-5)(x+5) mod 13
}

TEST_CASE("arithmetic in GF(13^2) with modulus x^2+2") {
    auto f = Field::with_modulus(13, {2, 0, 1});
    auto theta = f.element({1, 3});  // 1 + 3x
    auto sq = f.mul(theta, theta);
    CHECK(sq == f.element({9, 6}));  // hand reduction: 1+6x+9x^2 = 9+6x

    CHECK(f.pow(theta, 0) == f.one());
    CHECK(f.pow(theta, 168) == f.one());
    CHECK(f.is_primitive(theta));
}

TEST_CASE("find_primitive returns the least generator") {
    CHECK(Field::make(13, 1).index_of(Field::make(13, 1).find_primitive()) == 2);
    CHECK(Field::make(2, 1).index_of(Field::make(2, 1).find_primitive()) == 1);

    // Brute-force oracle for GF(7): orders of 2 and 3.
    auto f7 = Field::make(7, 1);
    CHECK(brute_order(f7, f7.element({2})) == 3);
    CHECK(brute_order(f7, f7.element({3})) == 6);
    CHECK(f7.index_of(f7.find_primitive()) == 3);
}

TEST_CASE("primitive element has exact multiplicative order q-1") {
    for (auto [p, e] : {std::pair<Int, int>{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {13, 1}, {13, 2}}) {
        auto f = Field::make(p, e);
        auto theta = f.find_primitive();
        const Int n = f.order() - 1;
        CHECK(f.pow(theta, n) == f.one());
        for (Int d : divisors(n))
            if (d != n) CHECK(f.pow(theta, d) != f.one());
    }
}

TEST_CASE("discrete log matches the Bose example cells") {
    auto f = Field::with_modulus(13, {2, 0, 1});
    auto theta = f.element({1, 3});
    CHECK(f.discrete_log(theta, theta) == 1);
    CHECK(f.discrete_log(theta, f.one()) == 168);

    auto f13 = Field::make(13, 1);
    CHECK(f13.discrete_log(f13.element({2}), f13.one()) == 12);
    CHECK_THROWS_AS(f13.discrete_log(f13.element({2}), f13.zero()), ZeroTargetError);
}

TEST_CASE("discrete log round-trips exhaustively in GF(169)") {
    auto f = Field::with_modulus(13, {2, 0, 1});
    auto theta = f.element({1, 3});
    auto power = f.one();
    for (Int k = 1; k <= 168; ++k) {
        power = f.mul(power, theta);
        CHECK(f.discrete_log(theta, power) == k);
    }
}

TEST_CASE("baby-step/giant-step path above the dense-table cap") {
    Int p = (Int(1) << 20) + 7;
    while (!gf::is_prime(p)) ++p;
    auto f = Field::make(p, 1);
    auto theta = f.find_primitive();
    for (Int k : {Int(1), Int(2), Int(12345), p - 2, p - 1}) {
        CHECK(f.discrete_log(theta, f.pow(theta, k)) == k);
    }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, e] : {std::pair<Int, int>{2, 2}, {2, 3}, {3, 2}}) {
        auto f = Field::make(p, e);
        const Int q = f.order();
        std::vector<FieldElement> elems;
        for (Int i = 0; i < q; ++i) elems.push_back(f.from_index(i));

        for (const auto& a : elems) {
            // unique additive inverse; unique multiplicative inverse for a != 0
            int add_inv = 0, mul_inv = 0;
            for (const auto& b : elems) {
                if (f.add(a, b) == f.zero()) ++add_inv;
                if (!a.is_zero() && f.mul(a, b) == f.one()) ++mul_inv;
            }
            CHECK(add_inv == 1);
            if (!a.is_zero()) CHECK(mul_inv == 1);
        }
        for (const auto& a : elems)
            for (const auto& b : elems) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (const auto& c : elems) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
    }
}

TEST_CASE("mixing fields is rejected") {
    auto f4 = Field::make(2, 2);
    auto f9 = Field::make(3, 2);
    CHECK_THROWS_AS(f4.add(f4.one(), f9.one()), FieldMismatchError);

    // Same size, different modulus: also a mismatch.
    auto g169 = Field::with_modulus(13, {2, 0, 1});
    auto h169 = Field::with_modulus(13, {6, 0, 1});
    CHECK_THROWS_AS(g169.mul(g169.one(), h169.element({1, 1})), FieldMismatchError);
}
