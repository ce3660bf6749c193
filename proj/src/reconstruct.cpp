#include "g2/reconstruct.hpp"

#include "g2/enumerate.hpp"
#include "g2/factor.hpp"
#include "g2/heights.hpp"
#include "g2/poly.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace g2 {

ConicCubic conic_cubic_from_clebsch(const Clebsch& c) {
    const Rat &A = c.A, &B = c.B, &C = c.C, &D = c.D;
    ConicCubic cc;
    cc.clebsch = c;
    cc.conic = clebsch_matrix(c);
    Rat A2 = A * A, B2 = B * B, B3 = B2 * B, B4 = B3 * B, C2 = C * C;
    auto& a = cc.cubic;
    a[0][0][0] = Rat(2, 9) * (A2 * C - 6 * B * C + 9 * D);
    a[0][0][1] = Rat(1, 9) * (2 * B3 + 4 * A * B * C + 12 * C2 + 3 * A * D);
    a[0][0][2] = Rat(1, 9) * (A * B3 + Rat(4, 3) * A2 * B * C + 4 * B2 * C + 6 * A * C2 + 3 * B * D);
    a[0][1][1] = a[0][0][2];
    a[0][1][2] = Rat(1, 18) * (2 * B4 + 4 * A * B2 * C + Rat(4, 3) * A2 * C2 + 4 * B * C2 + 3 * A * B * D + 12 * C * D);
    a[0][2][2] = Rat(1, 18) * (A * B4 + Rat(4, 3) * A2 * B2 * C + Rat(16, 3) * B3 * C + Rat(26, 3) * A * B * C2 +
                               8 * C2 * C + 3 * B2 * D + 2 * A * C * D);
    a[1][1][1] = Rat(1, 9) * (3 * B4 + 6 * A * B2 * C + Rat(8, 3) * A2 * C2 + 2 * B * C2 - 3 * C * D);
    a[1][1][2] = Rat(1, 18) * (Rat(-2, 3) * B3 * C - Rat(4, 3) * A * B * C2 - 4 * C2 * C + 9 * B2 * D + 8 * A * C * D);
    a[1][2][2] = Rat(1, 18) * (B4 * B + 2 * A * B3 * C + Rat(8, 9) * A2 * B * C2 + Rat(2, 3) * B2 * C2 - B * C * D +
                               9 * D * D);
    a[2][2][2] = Rat(1, 36) * (-2 * B4 * C - 4 * A * B2 * C2 - Rat(16, 9) * A2 * C2 * C - Rat(4, 3) * B * C2 * C +
                               9 * B3 * D + 12 * A * B * C * D + 20 * C2 * D);
    return cc;
}

ConicCubic build_conic_cubic(const ModuliKey& k) {
    ConicCubic cc = conic_cubic_from_clebsch(clebsch_from_igusa(igusa_from_key(k)));
    if (det3(cc.conic) == 0) throw DomainError("J30 = 0: singular conic, use dihedral model");
    return cc;
}

namespace {

// 3! / prod(mult!) for a sorted index triple.
int multiplicity(std::size_t j, std::size_t k, std::size_t l) {
    if (j == k && k == l) return 1;
    if (j == k || k == l) return 3;
    return 6;
}

template <class T>
T cubic_sum(const ConicCubic& cc, const std::array<T, 3>& x) {
    T s = T(Rat(0));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = j; k < 3; ++k)
            for (std::size_t l = k; l < 3; ++l)
                s += x[j] * x[k] * x[l] * (cc.cubic[j][k][l] * multiplicity(j, k, l));
    return s;
}

Sextic normalized(const Sextic& f) { return content_primitive(f).second; }

bool verifies(const Sextic& f, const ModuliKey& k) {
    Igusa J = igusa(f);
    return J.J10 != 0 && key_from_igusa(J) == k;
}

}  // namespace

Rat cubic_value(const ConicCubic& cc, const std::array<Rat, 3>& x) {
    Rat s = 0;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = j; k < 3; ++k)
            for (std::size_t l = k; l < 3; ++l) s += cc.cubic[j][k][l] * multiplicity(j, k, l) * x[j] * x[k] * x[l];
    return s;
}

Sextic mestre_sextic(const ConicCubic& cc, const Point3& p) {
    std::size_t kk = p[2] != 0 ? 2 : p[1] != 0 ? 1 : 0;
    std::size_t i = kk == 0 ? 1 : 0, j = kk == 2 ? 1 : 2;
    // R(t) = t e_i + e_j does not pass through p.
    const Mat3& M = cc.conic;
    Poly t = Poly::x();
    Poly psiR = M[i][i] * t * t + Rat(2) * M[i][j] * t + Poly(M[j][j]);
    Rat bi = 0, bj = 0;
    for (std::size_t a = 0; a < 3; ++a) {
        bi += Rat(p[a]) * M[a][i];
        bj += Rat(p[a]) * M[a][j];
    }
    Poly bPR = bi * t + Poly(bj);
    std::array<Poly, 3> X;
    for (std::size_t a = 0; a < 3; ++a) X[a] = -(psiR * Rat(p[a]));
    X[i] += Rat(2) * bPR * t;
    X[j] += Rat(2) * bPR;
    Poly g = cubic_sum(cc, X);
    if (g.degree() > 6) throw std::logic_error("mestre_sextic: degree exceeds 6");
    Sextic f;
    for (std::size_t m = 0; m < 7; ++m) f.a[m] = g[static_cast<int>(6 - m)];
    if (f.zero()) throw DomainError("conic parametrization gives the zero form");
    return normalized(f);
}

Rat d_squared(const ModuliKey& k) {
    if (k.r != -1) throw DomainError("J2 = 0: d^2 needs the i-invariants");
    Rat c = Rat(pow(Int(2), 50) * pow(Int(3), 56) * pow(Int(5), 30));
    return -j30_poly(k.x1, k.x2, k.x3) * clebsch_d_factor(k.x1, k.x2, k.x3) / c;
}

Rat d4_parameter(const ModuliKey& k) {
    if (k.r != -1) return Rat(-3, 20);
    const Rat &i1 = k.x1, &i2 = k.x2;
    Rat den = 2925 * i1 * i1 + 250 * i1 * i2 - 54000 * i1 - 9450 * i2 + 139968;
    if (den == 0) throw DomainError("D4 parameter formula has a zero denominator at this key");
    return Rat(-3, 4) * (345 * i1 * i1 + 50 * i1 * i2 - 1296 * i1 - 90 * i2) / den;
}

Rat d6_parameter(const ModuliKey& k) {
    if (k.r != -1) return Rat(1, 40);
    const Rat &i1 = k.x1, &i2 = k.x2;
    Rat den = 2700 * i1 * i1 + 1000 * i1 * i2 + 204525 * i1 + 40950 * i2 - 708588;
    if (den == 0) throw DomainError("D6 parameter formula has a zero denominator at this key");
    return Rat(1, 4) * (540 * i1 * i1 + 100 * i1 * i2 - 1782 * i1 + 45 * i2) / den;
}

namespace {

// On J2 = 0 the involution locus has u = -15; v solves t2 and t3.
Dihedral dihedral_at_j2_zero(const ModuliKey& k) {
    Poly v = Poly::x();
    Rat u = -15;
    Poly J4 = Rat(4) * (Poly(u * u - 126 * u + 405) + Rat(12) * v);
    Poly J6 = Rat(-8) * (Poly(3 * u * u * u - 53 * u * u - 2583 * u + 14985) + (20 * u + 12) * v);
    Poly s = Poly(u * u + 18 * u - 27) - Rat(4) * v;
    Poly J10 = Rat(-64) * s * s;
    Poly P = k.x2 * pow(J10, 2) - pow(J4, 5);
    Poly Q = k.x3 * pow(J10, 3) - pow(J6, 5);
    for (auto& r : rational_roots(gcd(P, Q))) {
        Dihedral d{u, r};
        Igusa J = dihedral_igusa(d);
        if (J.J10 != 0 && key_from_igusa(J) == k) return d;
    }
    throw DomainError("no rational dihedral invariants for this key");
}

Sextic smaller(const std::optional<Sextic>& a, const Sextic& b) {
    if (!a) return b;
    return naive_height(b) < naive_height(*a) ? b : *a;
}

// Smallest verified model among the dihedral families at (u, v).
std::optional<Sextic> dihedral_model(const Dihedral& d, const ModuliKey& k) {
    std::vector<Sextic> cands;
    const Rat disc = d.v * d.v - 4 * d.u * d.u * d.u;
    if (d.u == 0) cands.push_back(Sextic({d.v * d.v, 0, 0, 0, d.v, 0, 1}));
    if (disc != 0) {
        if (d.u != 0) cands.push_back(v4_minimal_model(d));
        cands.push_back(v4_model(d));
    }
    // t x^6 + t x^4 + u x^2 + 1 with t^2 - v t + u^3 = 0.
    Rat r;
    if (is_square(disc, &r))
        for (const Rat& t : std::array<Rat, 2>{(d.v + r) / 2, (d.v - r) / 2})
            if (t != 0) cands.push_back(Sextic({t, 0, t, 0, d.u, 0, 1}));
    std::optional<Sextic> best;
    for (auto& f : cands) {
        if (f.zero() || !verifies(f, k)) continue;
        best = smaller(best, normalized(f));
    }
    return best;
}

Dihedral dihedral_of(const ModuliKey& k) {
    return k.r == -1 ? dihedral_uv_from_key(k) : dihedral_at_j2_zero(k);
}

}  // namespace

Reconstruction reconstruct(const ModuliKey& k, long search_bound) {
    AutClass aut = classify(k);
    Reconstruction out;
    out.field = {FieldOfDefinition::Kind::rational, 1, "involution"};
    auto finish = [&](const Sextic& f) {
        Sextic g = normalized(f);
        if (!verifies(g, k)) throw std::logic_error("reconstruction failed self-verification on route " + out.route);
        out.curve = g;
        return out;
    };
    switch (aut.group) {
        case Group::C10:
        case Group::SL2_3:
        case Group::GL2_3: {
            out.route = "special";
            out.field.reason = "special";
            for (auto c : {std::array<long, 7>{1, 0, 0, 0, 0, -1, 0}, std::array<long, 7>{1, 0, 0, 0, 0, 0, -1},
                           std::array<long, 7>{0, 1, 0, 0, 0, -1, 0}}) {
                Sextic f = Sextic::from_ints(c);
                if (verifies(f, k)) return finish(f);
            }
            throw std::logic_error("special key without a special curve");
        }
        case Group::D4: {
            out.route = "d4";
            Rat s = d4_parameter(k);
            Sextic f({0, 1, 0, 1, 0, s, 0});
            if (verifies(f, k)) {
                out.parameter = s;
                return finish(f);
            }
            // The one-parameter family misses some rational D4 points.
            out.uv = dihedral_of(k);
            auto g = dihedral_model(*out.uv, k);
            if (!g) throw std::logic_error("reconstruction failed self-verification on route d4");
            return finish(*g);
        }
        case Group::D6: {
            out.route = "d6";
            Rat w = d6_parameter(k);
            Sextic f({1, 0, 0, 1, 0, 0, w});
            if (verifies(f, k)) {
                out.parameter = w;
                return finish(f);
            }
            out.uv = dihedral_of(k);
            auto g = dihedral_model(*out.uv, k);
            if (!g) throw std::logic_error("reconstruction failed self-verification on route d6");
            return finish(*g);
        }
        case Group::V4: {
            out.route = "v4";
            out.uv = dihedral_of(k);
            auto g = dihedral_model(*out.uv, k);
            if (!g) throw std::logic_error("reconstruction failed self-verification on route v4");
            return finish(*g);
        }
        case Group::C2:
            break;
    }
    out.route = "mestre";
    ConicCubic cc = build_conic_cubic(k);
    ConicSolution sol = solve_conic(cc.conic);
    if (sol.status == ConicStatus::undecided) {
        auto p = conic_search(cc.conic, search_bound);
        if (!p) throw DomainError("point search exhausted: no conic point with coordinates up to " +
                                  std::to_string(search_bound) + " and factorization incomplete");
        sol.status = ConicStatus::point;
        sol.point = p;
    }
    if (sol.status == ConicStatus::no_point) {
        out.field = {FieldOfDefinition::Kind::quadratic, sol.quadratic_d, "conic"};
        return out;
    }
    out.field = {FieldOfDefinition::Kind::rational, 1, "conic"};
    // Prefer a small point when one exists nearby.
    if (auto p = conic_search(cc.conic, std::min<long>(search_bound, 8))) sol.point = p;
    Sextic f = mestre_sextic(cc, *sol.point);
    if (!verifies(f, k)) {
        if (cc.clebsch.D == 0)
            throw DomainError("Clebsch D = 0: obstruction undecided by d^2 and the conic curve does not match");
        throw std::logic_error("reconstruction failed self-verification on route mestre");
    }
    out.curve = f;
    return out;
}

FieldOfDefinition rationality_obstruction(const ModuliKey& k) {
    return reconstruct(k).field;
}

std::vector<Sextic> twist_set(const ModuliKey& k, int h, unsigned jobs) {
    const enumerate::Matcher match(k);
    std::mutex mu;
    std::set<enumerate::Tuple> found;
    auto flip = [](enumerate::Tuple t) {
        std::reverse(t.begin(), t.end());
        for (auto c : t)
            if (c != 0) {
                if (c < 0)
                    for (auto& x : t) x = static_cast<std::int8_t>(-x);
                break;
            }
        return t;
    };
    enumerate::for_each_canonical(1, h, jobs, [&](unsigned, const enumerate::Tuple* t, const enumerate::Inv4* inv,
                                                  std::size_t n) {
        std::vector<enumerate::Tuple> local;
        for (std::size_t i = 0; i < n; ++i)
            if (match.matches(t[i], inv[i])) local.push_back(std::min(t[i], flip(t[i])));
        if (local.empty()) return;
        std::lock_guard lock(mu);
        found.insert(local.begin(), local.end());
    });
    std::vector<Sextic> out;
    for (auto& t : found) out.push_back(enumerate::to_sextic(t));
    return out;
}

}  // namespace g2
