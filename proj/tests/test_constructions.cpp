#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "sidonlab/constructions.hpp"
#include "sidonlab/verify.hpp"

using namespace sidonlab;
using namespace sidonlab::constructions;

namespace {

// Raw ordered pair-sum maximum, independent of verify's counting path.
Int raw_pair_max(const std::vector<Int>& a, Int mod = 0) {
    std::map<Int, Int> cnt;
    for (Int x : a)
        for (Int y : a) cnt[mod ? (x + y) % mod : x + y] += 1;
    Int m = 0;
    for (auto& [k, c] : cnt) m = std::max(m, c);
    return m;
}

std::vector<Int> sorted(std::vector<Int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("greedy reproduces Mian-Chowla") {
    auto mc = greedy(2, 2, IntegerSet({1}), 11);
    CHECK(mc.elements() == fixtures::kMianChowla11);

    auto mc17 = greedy(2, 2, IntegerSet({1}), 17);
    CHECK(mc17.elements()[16] == 290);

    CHECK(greedy(2, 2, IntegerSet({1}), 1).elements() == std::vector<Int>{1});
}

TEST_CASE("greedy is deterministic, idempotent, and minimal") {
    auto once = greedy(2, 3, IntegerSet({1, 2}), 20);
    CHECK(greedy(2, 3, once, 20) == once);
    CHECK(greedy(2, 3, IntegerSet({1, 2}), 20) == once);
    CHECK(verify::is_bstar(once, 2, 3));

    auto cubes = greedy(3, 6, IntegerSet({1}), 12);
    CHECK(verify::is_bstar(cubes, 3, 6));
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        // Minimality: no smaller choice of the i-th term keeps the property.
        std::vector<Int> prefix(cubes.elements().begin(), cubes.elements().begin() + i);
        Int lo = i == 0 ? 1 : prefix.back() + 1;
        for (Int m = lo; m < cubes.elements()[i]; ++m) {
            auto trial = prefix;
            trial.push_back(m);
            CHECK_FALSE(verify::is_bstar(IntegerSet(trial), 3, 6));
        }
    }
}

TEST_CASE("greedy rejects bad seeds") {
    CHECK_THROWS_AS(greedy(2, 2, IntegerSet({1, 2, 3}), 5), BadSeedError);
    CHECK_THROWS_AS(greedy(2, 2, IntegerSet({1}), 0), Error);
}

TEST_CASE("ruzsa_set matches the published p=13 table") {
    for (int k = 1; k <= 12; ++k) {
        auto r = ruzsa_set(13, 2, k);
        CHECK(r.set.modulus() == 156);
        CHECK(r.set.elements() == sorted(fixtures::kRuzsaTable[k - 1]));
        CHECK(verify::is_bstar_mod(r.set, r.cert.h, r.cert.g));
    }
}

TEST_CASE("ruzsa rows are translates of one another") {
    for (Int p : {Int(5), Int(13)}) {
        const Int theta = 2;  // primitive root for both
        const Int n = p * p - p;
        auto row1 = ruzsa_set(p, theta, 1).set.elements();
        for (Int k = 1; k < p; ++k) {
            // R(p,theta,k*theta) + p = R(p,theta,k)
            Int kt = k * theta % p;
            auto shifted = ruzsa_set(p, theta, kt).set.elements();
            for (Int& x : shifted) x = (x + p) % n;
            CHECK(sorted(shifted) == ruzsa_set(p, theta, k).set.elements());

            // ... hence every row is a translate of row 1.
            auto row = ruzsa_set(p, theta, k).set.elements();
            bool translate_found = false;
            for (Int shift = 0; shift < n && !translate_found; ++shift) {
                auto moved = row1;
                for (Int& x : moved) x = (x + shift) % n;
                translate_found = sorted(moved) == row;
            }
            CHECK(translate_found);
        }
    }
}

TEST_CASE("ruzsa small case and errors") {
    auto tiny = ruzsa_set(3, 2, 1);
    CHECK(tiny.set.modulus() == 6);
    CHECK(tiny.set.elements() == std::vector<Int>{4, 5});  // hand CRT
    CHECK(verify::is_bstar_mod(tiny.set, 2, 2));

    CHECK_THROWS_AS(ruzsa_set(9, 2, 1), NotPrimeError);
    CHECK_THROWS_AS(ruzsa_set(13, 3, 1), NotPrimitiveError);  // ord(3) = 3 mod 13
    CHECK_THROWS_AS(ruzsa_set(13, 2, 13), ElementOutOfRangeError);
}

TEST_CASE("ruzsa_union certificates") {
    auto single = ruzsa_union(13, 2, {5});
    CHECK(single.set == ruzsa_set(13, 2, 5).set);

    auto two = ruzsa_union(13, 2, {1, 2});
    CHECK(two.set.size() == 24);
    CHECK(two.cert.g == 8);
    CHECK(raw_pair_max(two.set.elements(), 156) <= 8);

    auto three = ruzsa_union(13, 2, {1, 2, 3});
    CHECK(three.set.size() == 36);
    CHECK(three.cert.g == 18);
    CHECK(raw_pair_max(three.set.elements(), 156) <= 18);
}

TEST_CASE("bose_set reproduces the GF(13^2) columns") {
    auto field = gf::Field::with_modulus(13, {2, 0, 1});
    auto theta = field.element({1, 3});
    // theta^a - k*theta lies in GF(13) iff the x-coefficient of theta^a is
    // 3k, so parameter k selects column c1 = 3k mod 13 of the log table.
    for (Int k = 1; k <= 12; ++k) {
        auto b = bose_set(2, field, theta, field.element({k}));
        int c1 = static_cast<int>(3 * k % 13);
        CHECK(b.set.elements() == sorted(fixtures::bose_column(c1)));
        CHECK(b.set.size() == 13);
        CHECK(b.set.modulus() == 168);
        CHECK(verify::is_bstar_mod(b.set, 2, 2));
    }
}

TEST_CASE("bose translation property") {
    auto field = gf::Field::with_modulus(13, {2, 0, 1});
    auto theta = field.element({1, 3});
    auto base = bose_set(2, field, theta, field.element({1})).set.elements();
    for (Int k : {Int(2), Int(5), Int(12)}) {
        Int shift = field.discrete_log(theta, field.element({k}));
        auto moved = base;
        for (Int& x : moved) x = (x + shift) % 168;
        CHECK(sorted(moved) == bose_set(2, field, theta, field.element({k})).set.elements());
    }
}

TEST_CASE("bose small and prime-power cases") {
    auto b22 = bose_set(2, 2);
    CHECK(b22.set.modulus() == 3);
    CHECK(b22.set.size() == 2);

    auto b24 = bose_set(2, 4);  // GF(16) over GF(4)
    CHECK(b24.set.modulus() == 15);
    CHECK(b24.set.size() == 4);
    CHECK(verify::is_bstar_mod(b24.set, 2, 2));

    auto b33 = bose_set(3, 3);  // B_3 set mod 26
    CHECK(b33.set.modulus() == 26);
    CHECK(b33.set.size() == 3);
    CHECK(b33.cert.g == 6);
    CHECK(verify::is_bstar_mod(b33.set, 3, 6));

    auto f9 = gf::Field::make(3, 2);
    CHECK_THROWS_AS(bose_set(2, f9, f9.one(), f9.one()), NotPrimitiveError);
}

TEST_CASE("bose_union bounds") {
    auto field = gf::Field::make(5, 2);
    auto theta = field.find_primitive();
    std::vector<gf::FieldElement> all_k;
    for (Int c = 1; c <= 4; ++c) all_k.push_back(field.element({c}));

    auto one = bose_union(field, theta, {all_k[0]});
    CHECK(one.set == bose_set(2, field, theta, all_k[0]).set);

    auto two = bose_union(field, theta, {all_k[0], all_k[1]});
    CHECK(two.set.size() == 10);
    CHECK(raw_pair_max(two.set.elements(), 24) <= 8);

    auto full = bose_union(field, theta, all_k);
    CHECK(full.set.size() == 20);
    CHECK(full.cert.g == 32);
    CHECK(raw_pair_max(full.set.elements(), 24) <= 32);

    // q = 13: two columns give 26 elements with pair counts <= 8.
    auto f169 = gf::Field::with_modulus(13, {2, 0, 1});
    auto t169 = f169.element({1, 3});
    auto u = bose_union(f169, t169, {f169.element({1}), f169.element({2})});
    CHECK(u.set.size() == 26);
    CHECK(raw_pair_max(u.set.elements(), 168) <= 8);
}

TEST_CASE("singer perfect difference sets") {
    auto s2 = singer_set(2, 2);
    CHECK(s2.set.modulus() == 7);
    CHECK(s2.set.size() == 3);
    CHECK(verify::canonical_form(s2.set).representative.elements() ==
          std::vector<Int>{0, 1, 3});

    auto s4 = singer_set(2, 4);
    CHECK(s4.set.modulus() == 21);
    CHECK(s4.set.size() == 5);
    CHECK(verify::is_bstar_mod(s4.set, 2, 2));

    for (Int q : {Int(2), Int(3), Int(4), Int(5), Int(7), Int(8), Int(9)}) {
        auto s = singer_set(2, q);
        CHECK(s.set.modulus() == q * q + q + 1);
        CHECK(static_cast<Int>(s.set.size()) == q + 1);
        CHECK(verify::is_bstar_mod(s.set, 2, 2));
    }

    auto s32 = singer_set(3, 2);  // B_3 mod 15
    CHECK(s32.set.modulus() == 15);
    CHECK(s32.set.size() == 3);
    CHECK(verify::is_bstar_mod(s32.set, 3, 6));
}

TEST_CASE("singer general kvec is exposed without a certificate") {
    auto field = gf::Field::make(2, 3);
    auto theta = field.find_primitive();
    auto plain = singer_set_general(2, field, theta, {field.one(), field.zero()});
    CHECK(plain == singer_set(2, field, theta).set);

    auto other = singer_set_general(2, field, theta, {field.zero(), field.one()});
    CHECK(other.modulus() == 7);
    CHECK(!other.empty());
}

TEST_CASE("erdos_turan quadratic sets") {
    auto p5 = erdos_turan_set(5);
    CHECK(p5.set.elements() == std::vector<Int>{11, 24, 34, 41});
    // Difference oracle: all 6 positive pairwise differences distinct.
    std::set<Int> diffs;
    const auto& e = p5.set.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) diffs.insert(e[j] - e[i]);
    CHECK(diffs == std::set<Int>{13, 23, 30, 10, 17, 7});

    CHECK(erdos_turan_set(3).set.elements() == std::vector<Int>{7, 13});

    for (Int p : {Int(5), Int(7), Int(11), Int(13)}) {
        auto s = erdos_turan_set(p);
        CHECK(static_cast<Int>(s.set.size()) == p - 1);
        CHECK(s.set.min() >= 2 * p + 1);
        CHECK(s.set.max() <= 2 * p * (p - 1) + 1);
        CHECK(verify::is_bstar(s.set, 2, 2));
    }
    CHECK_THROWS_AS(erdos_turan_set(8), NotPrimeError);
}

TEST_CASE("interleave") {
    CertifiedIntegerSet base{IntegerSet({0, 1, 3}), {2, 2, std::nullopt, "fixture"}};

    auto same = interleave(base, 1);
    CHECK(same.set == base.set);
    CHECK(same.cert.g == 2);

    auto doubled = interleave(base, 2);
    CHECK(doubled.set.elements() == std::vector<Int>{0, 1, 2, 3, 6, 7});
    CHECK(doubled.cert.g == 4);
    CHECK(raw_pair_max(doubled.set.elements()) <= 4);

    // Bose q=5 lifted to Z, interleaved with m=3.
    auto bose5 = bose_set(2, 5);
    CertifiedIntegerSet lifted{IntegerSet(bose5.set.elements()), {2, 2, std::nullopt, "lift"}};
    auto tripled = interleave(lifted, 3);
    CHECK(tripled.cert.g == 12);
    CHECK(raw_pair_max(tripled.set.elements()) <= 12);
    CHECK(tripled.set.size() == 15);

    CertifiedIntegerSet bad{IntegerSet({1, 2, 3}), {2, 2, std::nullopt, "bad"}};
    CHECK_THROWS_AS(interleave(bad, 2), BadCertificateError);
}

TEST_CASE("crt_combine") {
    CertifiedModularSet a{ModularSet(2, {0}), {2, 2, 2, "a"}};
    CertifiedModularSet b{ModularSet(7, {0, 1, 3}), {2, 2, 7, "b"}};
    auto ab = crt_combine(a, b);
    CHECK(ab.set.modulus() == 14);
    CHECK(ab.set.elements() == std::vector<Int>{0, 8, 10});
    CHECK(raw_pair_max(ab.set.elements(), 14) <= 2);

    // Combining with {0} mod 1 is the identity on the set.
    CertifiedModularSet unit{ModularSet(1, {0}), {2, 1, 1, "unit"}};
    CHECK(crt_combine(b, unit).set.elements() == b.set.elements());

    CertifiedModularSet c{ModularSet(13, {0, 1, 3, 9}), {2, 2, 13, "c"}};
    auto bc = crt_combine(b, c);
    CHECK(bc.set.modulus() == 91);
    CHECK(bc.set.size() == 12);
    CHECK(bc.cert.g == 4);
    CHECK(raw_pair_max(bc.set.elements(), 91) <= 4);

    // Projections recover the factors.
    std::set<Int> back7, back13;
    for (Int x : bc.set.elements()) {
        back7.insert(x % 7);
        back13.insert(x % 13);
    }
    CHECK(std::vector<Int>(back7.begin(), back7.end()) == b.set.elements());
    CHECK(std::vector<Int>(back13.begin(), back13.end()) == c.set.elements());

    CertifiedModularSet d{ModularSet(14, {0, 1}), {2, 2, 14, "d"}};
    CHECK_THROWS_AS(crt_combine(b, d), NotCoprimeError);
}

TEST_CASE("random_bstar_set sampling contract") {
    CHECK(random_bstar_set(10, 0.4, 0, 1).sample.empty());
    CHECK_THROWS_AS(random_bstar_set(10, 0.05, 100, 1), BadEpsilonError);

    auto s1 = random_bstar_set(10, 0.4, 5000, 42);
    auto s2 = random_bstar_set(10, 0.4, 5000, 42);
    CHECK(s1.sample == s2.sample);
    CHECK(s1.offending_sums == s2.offending_sums);

    // Deleting offenders certifies the claimed bound.
    auto cleaned = delete_offenders(s1);
    CHECK(verify::is_bstar(cleaned, 2, 10));
    CHECK(cleaned.size() + 5 >= s1.sample.size());  // few deletions at this scale
}
