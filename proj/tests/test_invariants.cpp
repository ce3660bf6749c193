#include "g2/classify.hpp"
#include "g2/invariants.hpp"
#include "g2/poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace g2;

namespace {

// Binary form of degree c.size()-1; c[j] multiplies x^(d-j) z^j.
using Form = std::vector<Rat>;

Form dx(const Form& f) {
    std::size_t d = f.size() - 1;
    Form g(d);
    for (std::size_t j = 0; j < d; ++j) g[j] = f[j] * static_cast<long>(d - j);
    return g;
}

Form dz(const Form& f) {
    std::size_t d = f.size() - 1;
    Form g(d);
    for (std::size_t j = 1; j <= d; ++j) g[j - 1] = f[j] * static_cast<long>(j);
    return g;
}

Form mul(const Form& a, const Form& b) {
    Form c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Rat fact(long n) {
    Rat r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Form deriv(Form f, long nx, long nz) {
    for (long i = 0; i < nx; ++i) f = dx(f);
    for (long i = 0; i < nz; ++i) f = dz(f);
    return f;
}

// (f, g)_k with the (m-k)!(n-k)!/(m! n!) normalization.
Form transvectant(const Form& f, const Form& g, long k) {
    long m = static_cast<long>(f.size()) - 1, n = static_cast<long>(g.size()) - 1;
    Form out(static_cast<std::size_t>(m + n - 2 * k + 1));
    Rat binom = 1;
    for (long i = 0; i <= k; ++i) {
        Form t = mul(deriv(f, k - i, i), deriv(g, i, k - i));
        Rat s = (i % 2 ? -binom : binom);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += s * t[j];
        binom = binom * (k - i) / (i + 1);
    }
    Rat norm = fact(m - k) * fact(n - k) / (fact(m) * fact(n));
    for (auto& c : out) c *= norm;
    return out;
}

Form form_of(const Sextic& f) { return Form(f.a.begin(), f.a.end()); }

}  // namespace

TEST_CASE("Igusa-Clebsch vector of y^2 = x^6 + x^5 + x + 1/6") {
    Sextic f = parse_sextic("x^6+x^5+x+1/6");
    IgusaClebsch ic = igusa_clebsch(igusa(f));
    CHECK(ic.I2 == 0);
    CHECK(ic.I4 == -32000);
    CHECK(ic.I6 == Rat(5120000, 3));
    CHECK(ic.I10 == Rat(Int("295116800000"), Int(81)));
    CHECK_THROWS_WITH_AS(absolute_i(igusa(f)), doctest::Contains("J2 = 0"), DomainError);
}

TEST_CASE("J10 agrees with the resultant formula") {
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
        Sextic f = testing::random_sextic(rng);
        CHECK(igusa(f).J10 == j10_by_resultant(f));
    }
    Sextic quintic = Sextic::from_ints({0, 1, 0, 0, 0, -1, 0});
    CHECK(igusa(quintic).J10 == j10_by_resultant(quintic));
}

TEST_CASE("moduli key is GL2 invariant") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        Sextic f = testing::random_sextic(rng, 4);
        Mobius m = testing::random_mobius(rng, 3);
        Rat c = testing::random_rat(rng, 9);
        if (c == 0) c = 1;
        CHECK(moduli_key(scale(transform(f, m), c)) == moduli_key(f));
    }
}

TEST_CASE("invariants have weight 6i under substitution, J10 weight 30") {
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        Sextic f = testing::random_sextic(rng, 4);
        Mobius m = testing::random_mobius(rng, 3);
        Igusa a = igusa(f), b = igusa(transform(f, m));
        Rat d = m.det();
        CHECK(b.J2 == pow(d, 6) * a.J2);
        CHECK(b.J4 == pow(d, 12) * a.J4);
        CHECK(b.J6 == pow(d, 18) * a.J6);
        CHECK(b.J10 == pow(d, 30) * a.J10);
        Rat c = 3;
        CHECK(igusa(scale(f, c)) == rescale(a, c));
    }
}

TEST_CASE("Clebsch A and B agree with transvectants") {
    std::mt19937 rng(99);
    for (int n = 0; n < 20; ++n) {
        Sextic f = testing::random_sextic(rng, 6);
        Form F = form_of(f);
        Form A = transvectant(F, F, 6);
        Form i4 = transvectant(F, F, 4);
        Form B = transvectant(i4, i4, 4);
        Clebsch c = clebsch(f);
        REQUIRE(A.size() == 1);
        REQUIRE(B.size() == 1);
        CHECK(c.A == A[0]);
        CHECK(c.B == B[0]);
    }
}

TEST_CASE("conversion round trips are exact") {
    std::mt19937 rng(1);
    for (int n = 0; n < 30; ++n) {
        Igusa J = igusa(testing::random_sextic(rng));
        CHECK(igusa_from_clebsch(clebsch_from_igusa(J)) == J);
        CHECK(igusa_from_igusa_clebsch(igusa_clebsch(J)) == J);
        if (J.J2 == 0) continue;
        AbsoluteI i = absolute_i(J);
        CHECK(i_from_j(j_from_i(i)) == i);
        CHECK(absolute_i(igusa_from_i(i)) == i);
        CHECK(j_from_i(i) == j_invariants(J));
    }
}

TEST_CASE("all basic invariants vanish on a fourfold root") {
    std::mt19937 rng(8);
    Poly x = Poly::x();
    for (int n = 0; n < 15; ++n) {
        Rat r = testing::random_rat(rng, 5);
        Rat b = testing::random_rat(rng, 5), c = testing::random_rat(rng, 5);
        Poly g = pow(x - Poly(r), 4) * (x * x + b * x + Poly(c));
        Sextic f;
        for (std::size_t i = 0; i < 7; ++i) f.a[i] = g[static_cast<int>(6 - i)];
        Sextic h = transform(f, testing::random_mobius(rng));
        Igusa J = igusa(h);
        CHECK(J.J2 == 0);
        CHECK(J.J4 == 0);
        CHECK(J.J6 == 0);
        CHECK(J.J10 == 0);
    }
    // A triple root alone keeps J2 nonzero in general.
    Igusa t = igusa(Sextic::from_ints({1, -3, 3, -1, 0, 0, 0}) /* x^3 (x - 1)^3 */);
    CHECK(t.J10 == 0);
    CHECK(t.J2 != 0);
}

TEST_CASE("J16 closed form matches the Clebsch minor") {
    std::mt19937 rng(12);
    for (int n = 0; n < 20; ++n) {
        Igusa J = igusa(testing::random_sextic(rng));
        if (J.J2 == 0) continue;
        CHECK_NOTHROW(j16_minor_check(J));
    }
}

TEST_CASE("J30 is the determinant of the Clebsch matrix") {
    std::mt19937 rng(13);
    for (int n = 0; n < 20; ++n) {
        Igusa J = igusa(testing::random_sextic(rng));
        CHECK(j30(J) == det3(clebsch_matrix(clebsch_from_igusa(J))));
    }
    CHECK(j30(igusa(Sextic::from_ints({1, 0, 1, 0, 1, 0, 1}))) == 0);
}

TEST_CASE("t-invariants and a-invariants name their branch") {
    Igusa J = igusa(Sextic::from_ints({1, 0, 0, 0, 0, -1, 0}));
    CHECK(J.J2 == 0);
    CHECK(J.J4 == 0);
    TInvariants t = t_invariants(J);
    CHECK(t.t2 == 0);
    CHECK(t.t3 == 0);
    CHECK_THROWS_AS(a_invariants(J), DomainError);
}
