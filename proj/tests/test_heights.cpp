#include "g2/factor.hpp"
#include "g2/heights.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace g2;

TEST_CASE("moduli height of the V4 example") {
    Igusa J = igusa(parse_sextic("x^6-14*x^4-82*x^2+1"));
    CHECK(factor(moduli_height(J)).str() == "2^14*1163^5");
}

TEST_CASE("moduli height is a moduli invariant") {
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        Sextic f = testing::random_sextic(rng, 3);
        Igusa J = igusa(f);
        if (J.J2 == 0) continue;
        CHECK(moduli_height(igusa(transform(f, testing::random_mobius(rng, 2)))) == moduli_height(J));
    }
}

TEST_CASE("prime reduction of x^6 + x^3 + 2^33") {
    Sextic f = Sextic({1, 0, 0, 1, 0, 0, Rat(pow(Int(2), 33))});
    PrimeReduction r = reduce_at_prime(f, 2);
    CHECK(r.m == 5u);
    CHECK(naive_height(r.form) == pow(Int(2), 18));
    CHECK(moduli_key(r.form) == moduli_key(f));
    CHECK_THROWS_AS(reduce_at_prime(f, 4), DomainError);
}

TEST_CASE("prime reduction never raises the height") {
    std::mt19937 rng(6);
    for (int i = 0; i < 20; ++i) {
        Sextic f = testing::random_sextic(rng, 6);
        for (long p : {2, 3, 5}) {
            PrimeReduction r = reduce_at_prime(content_primitive(f).second, p);
            CHECK(naive_height(r.form) <= naive_height(content_primitive(f).second));
            CHECK(moduli_key(r.form) == moduli_key(f));
        }
    }
}

TEST_CASE("minimal height finds a smaller model") {
    // x -> 2x applied to a height-1 form; stage 1 undoes it.
    Sextic f = transform(Sextic::from_ints({1, 0, 1, 0, 1, 0, 1}), Mobius{2, 0, 0, 1});
    HeightReport r = minimal_height(content_primitive(f).second);
    REQUIRE(r.minimal);
    CHECK(*r.minimal == 1);
    CHECK(moduli_key(r.witness) == moduli_key(f));
}

TEST_CASE("minimal height agrees with a brute-force height-1 key set") {
    std::set<std::string> h1;
    std::array<long, 7> c{};
    for (int idx = 0; idx < 2187; ++idx) {
        int r = idx;
        for (auto& x : c) {
            x = r % 3 - 1;
            r /= 3;
        }
        Sextic f = Sextic::from_ints(c);
        if (!f.zero() && igusa(f).J10 != 0) h1.insert(moduli_key(f).str());
    }
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> d(-2, 2);
    int seen1 = 0, seen2 = 0;
    while (seen1 + seen2 < 40) {
        Sextic f;
        for (auto& x : f.a) x = d(rng);
        if (naive_height(content_primitive(f.zero() ? Sextic::from_ints({1, 0, 0, 0, 0, 0, 1}) : f).second) != 2) continue;
        if (!f.primitive() || igusa(f).J10 == 0) continue;
        HeightReport r = minimal_height(f, 10, 2);
        REQUIRE(r.minimal);
        bool at1 = h1.count(moduli_key(f).str()) > 0;
        CHECK(*r.minimal == (at1 ? 1 : 2));
        CHECK(moduli_key(r.witness) == moduli_key(f));
        (at1 ? seen1 : seen2)++;
    }
    // Height-2 forms whose class already has a height-1 representative.
    std::array<long, 7> e{};
    for (long idx = 0, hits = 0; idx < 78125 && hits < 10; idx += 7) {
        long r = idx;
        for (auto& x : e) {
            x = r % 5 - 2;
            r /= 5;
        }
        Sextic f = Sextic::from_ints(e);
        if (f.zero() || !f.primitive() || naive_height(f) != 2 || igusa(f).J10 == 0) continue;
        if (!h1.count(moduli_key(f).str())) continue;
        ++hits;
        HeightReport rep = minimal_height(f, 10, 2);
        REQUIRE(rep.minimal);
        CHECK(*rep.minimal == 1);
        CHECK(moduli_key(rep.witness) == moduli_key(f));
        ++seen1;
    }
    CHECK(seen1 > 0);
    CHECK(seen2 > 0);
}

TEST_CASE("minimal height reports an unknown value above the budget") {
    Sextic f = Sextic({1, 0, 0, 1, 0, 0, Rat(pow(Int(2), 33))});
    HeightReport r = minimal_height(f, 10);
    CHECK_FALSE(r.minimal);
    CHECK(r.stage1_height == pow(Int(2), 18));
    CHECK(moduli_key(r.witness) == moduli_key(f));
}

TEST_CASE("minimal discriminant of the V4 example") {
    DiscriminantReport r = minimal_discriminant(parse_sextic("x^6-14*x^4-82*x^2+1"), true);
    CHECK(r.j10.str() == "-2^6*17^4*12301^2");
    CHECK(r.twist_degree == 2u);
}

TEST_CASE("minimal discriminant removes a scaled prime") {
    Sextic f = Sextic::from_ints({1, 0, 1, 0, 1, 0, 1});
    Sextic g = content_primitive(transform(f, Mobius{3, 0, 0, 1})).second;
    DiscriminantReport r = minimal_discriminant(g, false);
    CHECK(valuation(igusa(r.form).J10.get_num(), Int(3)) < valuation(igusa(g).J10.get_num(), Int(3)));
    CHECK(moduli_key(r.form) == moduli_key(f));
}

TEST_CASE("minimal V4 model matches the key") {
    for (auto [a, b] : {std::pair<long, long>{2, 3}, {-14, -82}, {5, -7}}) {
        Sextic f = Sextic::from_ints({1, 0, a, 0, b, 0, 1});
        Dihedral d = dihedral_uv_from_standard(a, b);
        CHECK(moduli_key(v4_minimal_model(d)) == moduli_key(f));
    }
    CHECK_THROWS_AS(v4_minimal_model({0, 5}), DomainError);
}
