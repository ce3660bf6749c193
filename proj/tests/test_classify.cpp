#include "g2/classify.hpp"
#include "g2/invariants.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace g2;

namespace {

Group group_of(const char* s) { return classify(moduli_key(parse_sextic(s))).group; }

}  // namespace

TEST_CASE("moduli point of x^6 - 14x^4 - 82x^2 + 1") {
    ModuliKey k = moduli_key(parse_sextic("x^6-14*x^4-82*x^2+1"));
    CHECK(k.r == -1);
    CHECK(k.x1 == Rat(Int(-49281147), Int(5410276)));
    CHECK(k.x2 == Rat(Int("706232480445"), Int("12584301976")));
    CHECK(k.x3 == Rat(Int("3071021069999403"), Int("17429644021121376256")));
    AutClass a = classify(k);
    CHECK(a.group == Group::V4);
    CHECK(a.gap() == "[4,2]");
}

TEST_CASE("key text round trips") {
    ModuliKey k = moduli_key(parse_sextic("x^6-14*x^4-82*x^2+1"));
    CHECK(parse_key(k.str()) == k);
    CHECK(parse_key("[-1, 81/20, -729/200, 729/25600000]") == sl2_3_key());
    CHECK_THROWS_AS(parse_key("(-1, 1, 2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_key("(3, 1, 2, 3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_key("(0, 1, 2, 3)"), std::invalid_argument);
}

TEST_CASE("special points from keys and curves") {
    CHECK(classify(ModuliKey{0, 0, 0, 0}).group == Group::C10);
    CHECK(classify(ModuliKey{-1, Rat(81, 20), Rat(-729, 200), Rat(729, 25600000)}).group == Group::SL2_3);
    CHECK(classify(ModuliKey{-1, Rat(-36, 5), Rat(1512, 25), Rat(243, 200000)}).group == Group::GL2_3);
    CHECK(group_of("x^6-x") == Group::C10);
    CHECK(group_of("x^6-1") == Group::SL2_3);
    CHECK(group_of("x^5-x") == Group::GL2_3);
    CHECK(moduli_key(parse_sextic("x^6-1")) == sl2_3_key());
    CHECK(moduli_key(parse_sextic("x^5-x")) == gl2_3_key());
}

TEST_CASE("dihedral curves from the tables") {
    CHECK(group_of("1,0,1,0,1,0,1") == Group::D4);
    CHECK(classify(moduli_key(parse_sextic("1,0,1,0,1,0,1"))).gap() == "[8,3]");
    CHECK(group_of("x^6+79*x^4-17*x^2+1") == Group::D6);
    CHECK(group_of("x^6+83*x^4+19*x^2+1") == Group::D6);
    CHECK(group_of("x^6+2*x^4+3*x^2+1") == Group::V4);
    CHECK(group_of("x^5+x^3-3/20*x") == Group::D4);
    CHECK(group_of("x^6+x^3+1/40") == Group::D6);
    CHECK(igusa(parse_sextic("x^6+x^3+1/40")).J2 == 0);
    CHECK(igusa(parse_sextic("x^6+x^3-1/40")).J2 == 12);
}

TEST_CASE("generic curves have only the hyperelliptic involution") {
    std::mt19937 rng(4);
    int c2 = 0;
    for (int i = 0; i < 30; ++i) c2 += classify(moduli_key(testing::random_sextic(rng, 9))).group == Group::C2;
    CHECK(c2 >= 28);
}

TEST_CASE("classification is constant on GL2 orbits") {
    std::mt19937 rng(21);
    const char* curves[] = {"1,0,1,0,1,0,1", "x^6+79*x^4-17*x^2+1", "x^6+2*x^4+3*x^2+1", "x^6-1", "x^5-x", "x^6-x"};
    for (auto s : curves) {
        Sextic f = parse_sextic(s);
        for (int i = 0; i < 3; ++i)
            CHECK(classify(moduli_key(transform(f, testing::random_mobius(rng, 2)))) == classify(moduli_key(f)));
    }
}

TEST_CASE("dihedral invariants") {
    Dihedral d = dihedral_uv_from_standard(2, 3);
    CHECK(d == Dihedral{6, 35});
    CHECK(key_from_igusa(dihedral_igusa(d)) == moduli_key(parse_sextic("x^6+2*x^4+3*x^2+1")));
    ModuliKey k = moduli_key(parse_sextic("x^6+2*x^4+3*x^2+1"));
    CHECK(key_from_igusa(dihedral_igusa(dihedral_uv_from_key(k))) == k);
    CHECK(classify_uv({0, 0}).group == Group::SL2_3);
    CHECK(classify_uv({225, 6750}).group == Group::SL2_3);
    CHECK(classify_uv({25, -250}).group == Group::GL2_3);
    CHECK(classify_uv({1, 2}).group == Group::D4);
    CHECK(classify_uv({25, 250}).group == Group::D4);
    CHECK(classify_uv({225, -6750}).group == Group::D4);
    CHECK(classify_uv({6, 35}).group == Group::V4);
    CHECK_THROWS_AS(classify_uv({1, -2}), DomainError);
}

TEST_CASE("dihedral classification agrees with the i-invariant classification") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> c(-12, 12);
    for (int n = 0; n < 60; ++n) {
        long a = c(rng), b = c(rng);
        Sextic f = Sextic::from_ints({1, 0, a, 0, b, 0, 1});
        if (igusa(f).J10 == 0) continue;
        CHECK(classify_uv(dihedral_uv_from_standard(a, b)) == classify(moduli_key(f)));
    }
}

TEST_CASE("V4 model reproduces the key, including the (35, 6) model") {
    Sextic m = v4_model({35, 6});
    CHECK(m.a[0] == -4 * 19591);
    CHECK(m.a[1] == -4 * Int(106564876));
    std::mt19937 rng(17);
    for (int n = 0; n < 10; ++n) {
        Dihedral d{testing::random_rat(rng, 20), testing::random_rat(rng, 20)};
        if (d.v * d.v == 4 * d.u * d.u * d.u || dihedral_igusa(d).J10 == 0) continue;
        CHECK(moduli_key(v4_model(d)) == key_from_igusa(dihedral_igusa(d)));
    }
}

TEST_CASE("locus polynomials vanish where expected") {
    ModuliKey v4 = moduli_key(parse_sextic("x^6+2*x^4+3*x^2+1"));
    CHECK(j30_poly(v4.x1, v4.x2, v4.x3) == 0);
    ModuliKey d4 = moduli_key(parse_sextic("1,0,1,0,1,0,1"));
    CHECK(d4_second(d4.x1, d4.x2) == 0);
    ModuliKey d6 = moduli_key(parse_sextic("x^6+x^3+2"));
    CHECK(d6_first(d6.x1, d6.x2) == 0);
    CHECK(d6_second(d6.x1, d6.x3) == 0);
}

TEST_CASE("J2 = 0 representatives reproduce their keys") {
    for (auto s : {"x^6+x^5+x+1/6", "x^5+x^3-3/20*x", "x^6-x", "x^6+x^3+1/40"}) {
        ModuliKey k = moduli_key(parse_sextic(s));
        CHECK(k.r == 0);
        CHECK(key_from_igusa(igusa_from_key(k)) == k);
    }
}
