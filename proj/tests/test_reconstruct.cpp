#include "g2/conic.hpp"
#include "g2/factor.hpp"
#include "g2/reconstruct.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace g2;

TEST_CASE("square roots modulo squarefree integers") {
    auto r = sqrt_mod_squarefree(2, 7 * 17, {7, 17});
    REQUIRE(r);
    CHECK((*r * *r - 2) % 119 == 0);
    CHECK_FALSE(sqrt_mod_squarefree(3, 7, {7}));
    auto z = sqrt_mod_squarefree(14, 14, {2, 7});
    REQUIRE(z);
    CHECK((*z * *z - 14) % 14 == 0);
}

TEST_CASE("Legendre descent") {
    for (auto [a, b] : {std::pair<long, long>{2, 7}, {-1, 2}, {5, 11}, {-3, 7}, {13, 17}, {3, 1}, {-6, 10}}) {
        auto s = legendre_descent(a, b);
        if (!s) continue;
        const Int &w = (*s)[0], &x = (*s)[1], &y = (*s)[2];
        CHECK(w * w == a * x * x + b * y * y);
        CHECK((w != 0 || x != 0 || y != 0));
    }
    CHECK_FALSE(legendre_descent(-1, -1));
    CHECK_FALSE(legendre_descent(3, 5));  // no solution modulo 3
    CHECK(legendre_descent(-1, 2));
}

TEST_CASE("conic solver agrees with brute force on small diagonal conics") {
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c : {-5L, -1L, 1L, 3L}) {
                if (a == 0 || b == 0) continue;
                Mat3 m{};
                m[0][0] = a;
                m[1][1] = b;
                m[2][2] = c;
                ConicSolution s = solve_conic(m);
                REQUIRE(s.status != ConicStatus::undecided);
                bool brute = conic_search(m, 40).has_value();
                CHECK((s.status == ConicStatus::point) == brute);
                if (s.point) CHECK(conic_value(m, *s.point) == 0);
            }
}

TEST_CASE("conic solver on random dense conics") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int n = 0; n < 60; ++n) {
        Mat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) m[i][j] = m[j][i] = d(rng);
        if (det3(m) == 0) continue;
        ConicSolution s = solve_conic(m);
        REQUIRE(s.status != ConicStatus::undecided);
        if (s.status == ConicStatus::point) {
            CHECK(conic_value(m, *s.point) == 0);
        } else {
            CHECK_FALSE(conic_search(m, 60));
            CHECK(s.quadratic_d != 1);
        }
    }
}

TEST_CASE("reconstruction round trip on random sextics") {
    std::mt19937 rng(2718);
    for (int n = 0; n < 25; ++n) {
        Sextic f = testing::random_sextic(rng, 4);
        ModuliKey k = moduli_key(f);
        Reconstruction r = reconstruct(k);
        REQUIRE(r.curve);
        CHECK(r.field.kind == FieldOfDefinition::Kind::rational);
        CHECK(moduli_key(*r.curve) == k);
        CHECK(classify(moduli_key(*r.curve)) == classify(k));
    }
}

TEST_CASE("conic and cubic scale with the Clebsch weights") {
    std::mt19937 rng(5);
    Sextic f = testing::random_sextic(rng, 3);
    ModuliKey k = moduli_key(f);
    ConicCubic cc = build_conic_cubic(k);
    ConicSolution s = solve_conic(cc.conic);
    REQUIRE(s.point);
    Clebsch c = cc.clebsch;
    for (Rat l : {Rat(2), Rat(-3, 5)}) {
        Clebsch sc{l * l * c.A, pow(l, 4) * c.B, pow(l, 6) * c.C, pow(l, 10) * c.D};
        ConicCubic scaled = conic_cubic_from_clebsch(sc);
        ConicSolution t = solve_conic(scaled.conic);
        REQUIRE(t.point);
        CHECK(moduli_key(mestre_sextic(scaled, *t.point)) == k);
    }
}

TEST_CASE("the Clebsch matrix is singular on the involution locus") {
    ModuliKey d4 = moduli_key(Sextic::from_ints({1, 0, 1, 0, 1, 0, 1}));
    CHECK_THROWS_WITH_AS(build_conic_cubic(d4), doctest::Contains("use dihedral model"), DomainError);
    CHECK(det3(conic_cubic_from_clebsch(clebsch_from_igusa(igusa_from_key(d4))).conic) == 0);
}

TEST_CASE("special points reconstruct to fixed curves") {
    Reconstruction r = reconstruct(sl2_3_key());
    REQUIRE(r.curve);
    CHECK(r.route == "special");
    CHECK(*r.curve == Sextic::from_ints({1, 0, 0, 0, 0, 0, -1}));
    r = reconstruct(gl2_3_key());
    CHECK(*r.curve == Sextic::from_ints({0, 1, 0, 0, 0, -1, 0}));
    r = reconstruct(ModuliKey{0, 0, 0, 0});
    CHECK(*r.curve == Sextic::from_ints({1, 0, 0, 0, 0, -1, 0}));
}

TEST_CASE("D4 and D6 parameters round trip") {
    std::mt19937 rng(41);
    for (int n = 0; n < 10; ++n) {
        Rat s = testing::random_rat(rng, 30);
        Sextic f({0, 1, 0, 1, 0, s, 0});
        if (igusa(f).J10 == 0 || classify(moduli_key(f)).group != Group::D4) continue;
        CHECK(d4_parameter(moduli_key(f)) == s);
    }
    for (int n = 0; n < 10; ++n) {
        Rat w = testing::random_rat(rng, 30);
        Sextic f({1, 0, 0, 1, 0, 0, w});
        if (igusa(f).J10 == 0 || classify(moduli_key(f)).group != Group::D6) continue;
        CHECK(d6_parameter(moduli_key(f)) == w);
    }
}

TEST_CASE("big-coefficient D6 curve recovers w = 2^33") {
    Sextic big = Sextic({Rat(Int("4294967297")), Rat(Int("77309411328")), Rat(Int("579820584969")),
                         Rat(Int("2319282339816")), Rat(Int("5218385264643")), Rat(Int("6262062317592")),
                         Rat(Int("3131031158771"))});
    ModuliKey k = moduli_key(big);
    CHECK(classify(k).group == Group::D6);
    Reconstruction r = reconstruct(k);
    CHECK(r.route == "d6");
    REQUIRE(r.parameter);
    CHECK(*r.parameter == Rat(pow(Int(2), 33)));
}

TEST_CASE("V4 keys reconstruct through the dihedral route") {
    ModuliKey k = moduli_key(parse_sextic("x^6-14*x^4-82*x^2+1"));
    Reconstruction r = reconstruct(k);
    CHECK(r.route == "v4");
    REQUIRE(r.curve);
    CHECK(moduli_key(*r.curve) == k);
    CHECK(rationality_obstruction(k).kind == FieldOfDefinition::Kind::rational);
    ModuliKey j0 = moduli_key(Sextic::from_ints({0, 1, -2, -2, -2, 1, 0}));
    CHECK(j0.r == 0);
    r = reconstruct(j0);
    CHECK(r.route == "v4");
    CHECK(moduli_key(*r.curve) == j0);
}

TEST_CASE("d^2 vanishes on the involution locus") {
    ModuliKey k = moduli_key(parse_sextic("x^6+2*x^4+3*x^2+1"));
    CHECK(d_squared(k) == 0);
    std::mt19937 rng(1);
    CHECK(d_squared(moduli_key(testing::random_sextic(rng))) != 0);
}

TEST_CASE("keys without a rational model carry a quadratic certificate") {
    // Weighted points that are not the invariants of any rational sextic.
    int quadratic = 0;
    for (long a = 1; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                Igusa J{a, b, c, 1};
                ModuliKey k = key_from_igusa(J);
                if (classify(k).group != Group::C2) continue;
                Reconstruction r = reconstruct(k);
                if (r.curve) {
                    CHECK(moduli_key(*r.curve) == k);
                    continue;
                }
                ++quadratic;
                CHECK(r.field.kind == FieldOfDefinition::Kind::quadratic);
                CHECK(r.field.d != 1);
                CHECK(squarefree_part(r.field.d) == r.field.d);
            }
    CHECK(quadratic > 0);
}

TEST_CASE("twist sets") {
    ModuliKey k = moduli_key(Sextic::from_ints({1, 0, 1, 0, 1, 0, 1}));
    auto tw = twist_set(k, 1);
    CHECK(std::find(tw.begin(), tw.end(), Sextic::from_ints({1, 0, 1, 0, 1, 0, 1})) != tw.end());
    for (auto& f : tw) CHECK(moduli_key(f) == k);
    CHECK(twist_set(k, 1, 2) == tw);
    CHECK(tw.size() < twist_set(k, 2).size());
}

TEST_CASE("dihedral fallbacks cover keys outside the one-parameter families") {
    for (const char* s : {"(-1, 9/4, 27/8, 243/6400000)", "(-1, -819/20, -30429/200, -210681/1600000)",
                          "(-1, 309/100, 7587/1000, 1/1024000)", "(-1, 1749/25, -96849/125, 19321/100000)"}) {
        ModuliKey k = parse_key(s);
        Reconstruction r = reconstruct(k);
        REQUIRE(r.curve);
        CHECK(moduli_key(*r.curve) == k);
        CHECK(classify(moduli_key(*r.curve)) == classify(k));
    }
    // u = 0 collapses the general V4 model to a sixth power.
    Reconstruction r = reconstruct(parse_key("(-1, 309/100, 7587/1000, 1/1024000)"));
    REQUIRE(r.uv);
    CHECK(r.uv->u == 0);
    CHECK(r.uv->v == -8);
}
