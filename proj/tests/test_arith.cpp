#include "g2/factor.hpp"
#include "g2/poly.hpp"
#include "g2/rational.hpp"
#include "g2/sextic.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace g2;

TEST_CASE("rationals parse to canonical form") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(to_string(parse_rat(" -10/4 ")) == "-5/2");
    CHECK(to_string(parse_rat("7")) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
}

TEST_CASE("exact square tests") {
    Int r;
    CHECK(is_square(Int(144), &r));
    CHECK(r == 12);
    CHECK_FALSE(is_square(Int(-4)));
    Rat q;
    CHECK(is_square(Rat(9, 49), &q));
    CHECK(q == Rat(3, 7));
    CHECK_FALSE(is_square(Rat(2, 9)));
}

TEST_CASE("factorization of known integers") {
    Int n = -pow(Int(2), 6) * pow(Int(17), 4) * pow(Int(12301), 2);
    Factorization f = factor(n);
    CHECK(f.complete());
    CHECK(f.str() == "-2^6*17^4*12301^2");
    CHECK(f.value() == n);
    // Product of two primes beyond trial division.
    Int p("1000000007"), q("998244353");
    Factorization g = factor(p * q * p);
    CHECK(g.str() == "998244353*1000000007^2");
    CHECK(factor(Int(1)).str() == "1");
    CHECK(valuation(Int(96), Int(2)) == 5u);
    CHECK(valuation(Rat(9, 8), Int(2)) == -3);
    CHECK(squarefree_part(Int(-72)) == -2);
    CHECK(squarefree_part(Rat(8, 27)) == 6);
}

TEST_CASE("factorization reconstructs random products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(2, 1000000);
    for (int i = 0; i < 30; ++i) {
        Int n = Int(d(rng)) * Int(d(rng)) * Int(d(rng));
        Factorization f = factor(n);
        CHECK(f.complete());
        CHECK(f.value() == n);
        for (auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
    }
}

TEST_CASE("resultant by Sylvester determinant") {
    Poly x = Poly::x();
    // det [[1,0,-1],[2,0,0],[0,2,0]]
    CHECK(resultant(x * x - Poly(Rat(1)), Rat(2) * x) == -4);
    CHECK(resultant(x - Poly(Rat(3)), x - Poly(Rat(5))) == -2);
    CHECK(det({{1, 2}, {3, 4}}) == -2);
    CHECK(det({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}) == -5);
}

TEST_CASE("polynomial gcd and rational roots") {
    Poly x = Poly::x();
    Poly a = (x - Poly(Rat(1, 2))) * (x + Poly(Rat(3))) * (x * x + Poly(Rat(1)));
    Poly b = (x + Poly(Rat(3))) * (x - Poly(Rat(7)));
    CHECK(gcd(a, b) == x + Poly(Rat(3)));
    auto r = rational_roots(a * (x + Poly(Rat(3))));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == -3);
    CHECK(r[1] == Rat(1, 2));
    Poly q, rem;
    divmod(a, b, q, rem);
    CHECK(q * b + rem == a);
    CHECK(rem.degree() < b.degree());
}

TEST_CASE("sextic grammar: list and polynomial agree") {
    Sextic a = parse_sextic("1,0,-14,0,-82,0,1");
    Sextic b = parse_sextic("x^6-14*x^4-82*x^2+1");
    CHECK(a == b);
    CHECK(parse_sextic("x^6+x^5+x+1/6") == Sextic({1, 1, 0, 0, 0, 1, Rat(1, 6)}));
    CHECK(parse_sextic("x^5 - x") == Sextic::from_ints({0, 1, 0, 0, 0, -1, 0}));
    CHECK_THROWS_AS(parse_sextic("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sextic("x^7+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sextic("x^6+*x"), std::invalid_argument);
    CHECK(coeff_list(a) == "1,0,-14,0,-82,0,1");
}

TEST_CASE("substitutions compose") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        Sextic f = testing::random_sextic(rng);
        Mobius m = testing::random_mobius(rng), n = testing::random_mobius(rng);
        CHECK(transform(transform(f, m), n) == transform(f, m * n));
    }
    CHECK_THROWS_AS(transform(Sextic::from_ints({1, 0, 0, 0, 0, 0, 1}), Mobius{1, 1, 1, 1}), DomainError);
}

TEST_CASE("content and naive height") {
    auto [c, g] = content_primitive(Sextic({Rat(-4, 3), 0, Rat(2, 3), 0, 0, 0, 2}));
    CHECK(g == Sextic::from_ints({2, 0, -1, 0, 0, 0, -3}));
    CHECK(c == Rat(-2, 3));
    CHECK(naive_height(g) == 3);
    CHECK_THROWS_AS(naive_height(Sextic({Rat(1, 2), 0, 0, 0, 0, 0, 1})), DomainError);
}
