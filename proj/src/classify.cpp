#include "g2/classify.hpp"

#include "g2/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace g2 {

std::string ModuliKey::str() const {
    return "(" + std::to_string(r) + ", " + to_string(x1) + ", " + to_string(x2) + ", " + to_string(x3) + ")";
}

bool operator<(const ModuliKey& a, const ModuliKey& b) {
    if (a.r != b.r) return a.r < b.r;
    if (int c = cmp(a.x1, b.x1)) return c < 0;
    if (int c = cmp(a.x2, b.x2)) return c < 0;
    return cmp(a.x3, b.x3) < 0;
}

ModuliKey parse_key(std::string_view in) {
    std::string s;
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '"') s += ch;
    if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.erase(0, 1);
    if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto c = s.find(',', start);
        parts.push_back(s.substr(start, c == std::string::npos ? c : c - start));
        if (c == std::string::npos) break;
        start = c + 1;
    }
    if (parts.size() != 4) throw std::invalid_argument("malformed key: expected 4 entries (r, x1, x2, x3)");
    ModuliKey k;
    Rat r = parse_rat(parts[0]);
    if (r != -1 && r != 0) throw std::invalid_argument("malformed key: r must be -1 or 0");
    k.r = r == -1 ? -1 : 0;
    k.x1 = parse_rat(parts[1]);
    k.x2 = parse_rat(parts[2]);
    k.x3 = parse_rat(parts[3]);
    if (k.r == 0 && k.x1 != 0) throw std::invalid_argument("malformed key: r = 0 requires x1 = 0");
    return k;
}

ModuliKey key_from_igusa(const Igusa& v) {
    if (v.J10 == 0) throw DomainError("J10 = 0: not genus 2");
    if (v.J2 != 0) {
        auto i = absolute_i(v);
        return {-1, i.i1, i.i2, i.i3};
    }
    auto t = t_invariants(v);
    return {0, 0, t.t2, t.t3};
}

ModuliKey moduli_key(const Sextic& f) { return key_from_igusa(igusa(f)); }

namespace {

bool fifth_root(const Rat& q, Rat& out) {
    Int n, d;
    Int an = abs(q.get_num());
    if (mpz_root(n.get_mpz_t(), an.get_mpz_t(), 5) == 0) return false;
    if (mpz_root(d.get_mpz_t(), q.get_den_mpz_t(), 5) == 0) return false;
    out = Rat(q < 0 ? Int(-n) : n, d);
    return true;
}

}  // namespace

Igusa igusa_from_key(const ModuliKey& k) {
    if (k.r == -1) return igusa_from_i({k.x1, k.x2, k.x3});
    const Rat &t2 = k.x2, &t3 = k.x3;
    if (t2 == 0 && t3 == 0) return {0, 0, 0, 1};
    if (t2 == 0) return {0, 0, t3 * t3, t3 * t3 * t3};
    if (t3 == 0) return {0, t2, 0, t2 * t2};
    // a1 = J4 J6 / J10 and a2 = J6 J10 / J4^4 satisfy a1^5 = t2 t3, a2^5 = t3 / t2^4.
    Rat a1, a2;
    if (!fifth_root(t2 * t3, a1) || !fifth_root(t3 / pow(t2, 4), a2))
        throw DomainError("J2 = 0 key has no invariant vector over Q");
    return {0, a2 / a1, a2 * a2 / a1, pow(a2 / a1, 3)};
}

std::string AutClass::gap() const { return "[" + std::to_string(order) + "," + std::to_string(index) + "]"; }

AutClass aut_class(Group g) {
    switch (g) {
        case Group::C2: return {g, 2, 1, "C2"};
        case Group::C10: return {g, 10, 2, "C10"};
        case Group::V4: return {g, 4, 2, "V4"};
        case Group::D4: return {g, 8, 3, "D4"};
        case Group::D6: return {g, 12, 4, "D6"};
        case Group::SL2_3: return {g, 24, 3, "SL2(3)"};
        case Group::GL2_3: return {g, 48, 29, "GL2(3)"};
    }
    return {};
}

Rat j30_poly(const Rat& i1, const Rat& i2, const Rat& i3) {
    Rat a2 = i1 * i1, a3 = a2 * i1, a4 = a3 * i1, a5 = a4 * i1, a6 = a5 * i1, a7 = a6 * i1;
    Rat b2 = i2 * i2, b3 = b2 * i2, b4 = b3 * i2, b5 = b4 * i2;
    Rat c2 = i3 * i3, c3 = c2 * i3;
    return 9 * a7 + 2 * a6 * i2 - 27 * a6 - 18 * a4 * b2 - 4 * a3 * b3 + 331776 * a5 * i3 + 54 * a3 * b2 +
           9 * i1 * b4 + 2 * b5 - 55240704 * a4 * i3 - 47278080 * a3 * i2 * i3 - 8294400 * a2 * b2 * i3 -
           27 * b4 + 161243136 * a3 * i3 + 107495424 * a2 * i2 * i3 - 52254720 * i1 * b2 * i3 -
           12441600 * b3 * i3 - Rat(Int("9459597312000")) * a2 * c2 - Rat(Int("2866544640000")) * i1 * i2 * c2 +
           161243136 * b2 * i3 + Rat(Int("111451255603200")) * i1 * c2 + Rat(Int("20639121408000")) * i2 * c2 -
           Rat(Int("264180754022400000")) * c3 - Rat(Int("240734712102912")) * c2;
}

Rat d4_second(const Rat& i1, const Rat& i2) {
    return -243 * i1 * i1 + 80 * i1 * i1 * i1 - 1458 * i2 + 540 * i2 * i1 + 100 * i2 * i2;
}

Rat d6_first(const Rat& i1, const Rat& i2) {
    return 3888 * i1 + 432 * i2 - 1188 * i1 * i1 + 5 * i1 * i1 * i1 - 25 * i2 * i2 - 360 * i2 * i1;
}

Rat d6_second(const Rat& i1, const Rat& i3) {
    Rat a2 = i1 * i1, a3 = a2 * i1;
    return 26873856 * i3 + 5184000 * i3 * a2 - 9331200 * i3 * i1 - Rat(Int("149299200000")) * i3 * i3 - 729 * a2 -
           27 * a3 * i1 + 243 * a3 + a3 * a2;
}

Rat clebsch_d_factor(const Rat& i1, const Rat& i2, const Rat& i3) {
    return 675 * i1 * i1 + 250 * i1 * i2 - 13500 * i1 - 2700 * i2 + 86400000 * i3 + 34992;
}

Rat eq_j2(const Rat& t2, const Rat& t3) {
    auto I = [](const char* s) { return Rat(Int(s)); };
    Rat p2 = t2 * t2, p3 = p2 * t2, p4 = p3 * t2, p5 = p4 * t2, p6 = p5 * t2;
    Rat q2 = t3 * t3, q3 = q2 * t3, q4 = q3 * t3, q5 = q4 * t3;
    return p6 * t3 - 15265260 * p5 * t3 - 27949860 * p4 * q2 - 118098 * p3 * q3 + I("14693280768") * p5 +
           I("93437786558880") * p4 * t3 - I("878290475269680") * p3 * q2 + I("85811055510240") * p2 * q3 -
           I("1139016237660") * t2 * q4 + I("3486784401") * q5 - I("223154201664000000") * p4 -
           I("287728673929542000000") * p3 * t3 - I("2469658010168691000000") * p2 * q2 -
           I("109818018101695500000") * t2 * q3 - I("70607384120250000") * q4 +
           I("1355661775108800000000000") * p3 + I("433843541357670112500000000") * p2 * t3 -
           I("662569101476807962500000000") * t2 * q2 + I("571919811374025000000000") * q3 -
           I("4117822641892980000000000000000") * p2 - I("327077365625983809843750000000000") * t2 * t3 -
           I("2316275236064801250000000000000") * q2 + I("6253943137374963375000000000000000000") * t2 +
           I("4690457353031222531250000000000000000") * t3 - I("3799270455955290250312500000000000000000000");
}

ModuliKey sl2_3_key() { return {-1, Rat(81, 20), Rat(-729, 200), Rat(729, 25600000)}; }
ModuliKey gl2_3_key() { return {-1, Rat(-36, 5), Rat(1512, 25), Rat(243, 200000)}; }

namespace {

// J2 = 0 curves with D4 and D6 automorphisms.
const ModuliKey& d4_j2zero_key() {
    static const ModuliKey k = moduli_key(Sextic({0, 1, 0, 1, 0, Rat(-3, 20), 0}));
    return k;
}

const ModuliKey& d6_j2zero_key() {
    static const ModuliKey k = moduli_key(Sextic({1, 0, 0, 1, 0, 0, Rat(1, 40)}));
    return k;
}

}  // namespace

AutClass classify(const ModuliKey& k) {
    if (k.r == -1) {
        const Rat &i1 = k.x1, &i2 = k.x2, &i3 = k.x3;
        if (i1 == 0 && i2 == 0 && i3 == 0) return aut_class(Group::C10);
        if (k == sl2_3_key()) return aut_class(Group::SL2_3);
        if (k == gl2_3_key()) return aut_class(Group::GL2_3);
        Rat j30 = j30_poly(i1, i2, i3);
        if (j30 == 0 && d4_second(i1, i2) == 0) return aut_class(Group::D4);
        if (d6_first(i1, i2) == 0 && d6_second(i1, i3) == 0) return aut_class(Group::D6);
        if (j30 == 0) return aut_class(Group::V4);
        return aut_class(Group::C2);
    }
    // J2 = 0: t2 = t3 = 0 means J4 = J6 = 0.
    if (k.x2 == 0 && k.x3 == 0) return aut_class(Group::C10);
    if (k == d4_j2zero_key()) return aut_class(Group::D4);
    if (k == d6_j2zero_key()) return aut_class(Group::D6);
    if (eq_j2(k.x2, k.x3) == 0) return aut_class(Group::V4);
    return aut_class(Group::C2);
}

Dihedral dihedral_uv_from_standard(const Rat& a, const Rat& b) {
    Dihedral d{a * b, a * a * a + b * b * b};
    if (dihedral_igusa(d).J10 == 0) throw DomainError("J10 = 0: y^2 = x^6 + a x^4 + b x^2 + 1 is singular");
    return d;
}

Sextic v4_model(const Dihedral& dd) {
    const Rat &u = dd.u, &v = dd.v;
    Rat u2 = u * u, u3 = u2 * u, d = v * v - 4 * u3, d2 = d * d, d3 = d2 * d;
    Rat e0 = v * v + u2 * v - 2 * u3, e1 = 2 * (u2 + 3 * v), e2 = 15 * v * v - u2 * v - 30 * u3;
    return Sextic({e0, e1 * d, e2 * d, 4 * (5 * v - u2) * d2, d2 * e2, e1 * d3, d3 * e0});
}

Igusa dihedral_igusa(const Dihedral& d) {
    const Rat &u = d.u, &v = d.v;
    Rat u2 = u * u, u3 = u2 * u, s = u2 + 18 * u - 4 * v - 27;
    return {-16 * (u + 15), 4 * (u2 - 126 * u + 12 * v + 405),
            -8 * (3 * u3 - 53 * u2 + 20 * u * v - 2583 * u + 12 * v + 14985), -64 * s * s};
}

Dihedral dihedral_uv_from_key(const ModuliKey& k) {
    if (k.r != -1) throw DomainError("J2 = 0: dihedral inversion needs J2 != 0 (u = -15 there)");
    if (classify(k).group == Group::C2 || classify(k).group == Group::C10)
        throw DomainError("key not in the involution locus");
    const Rat &i1 = k.x1, &i2 = k.x2, &i3 = k.x3;
    Poly u = Poly::x();
    // v(u) makes the i1 relation hold identically.
    Poly v = (Rat(4) * i1 * pow(u + Poly(Rat(15)), 2) - Rat(9) * pow(u, 2) + Rat(1134) * u - Poly(Rat(3645))) *
             Rat(1, 108);
    Poly J2 = Rat(-16) * (u + Poly(Rat(15)));
    Poly J4 = Rat(4) * (pow(u, 2) - Rat(126) * u + Rat(12) * v + Poly(Rat(405)));
    Poly J6 = Rat(-8) * (Rat(3) * pow(u, 3) - Rat(53) * pow(u, 2) + Rat(20) * u * v - Rat(2583) * u + Rat(12) * v +
                         Poly(Rat(14985)));
    Poly s = pow(u, 2) + Rat(18) * u - Rat(4) * v - Poly(Rat(27));
    Poly J10 = Rat(-64) * s * s;
    Poly P = i2 * pow(J2, 3) + Rat(1728) * (J2 * J4 - Rat(3) * J6);
    Poly Q = i3 * pow(J2, 5) - Rat(486) * J10;
    Poly g = gcd(P, Q);
    auto roots = rational_roots(g);
    std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) {
        int c = cmp(abs(a), abs(b));
        return c != 0 ? c < 0 : a < b;
    });
    for (auto& r : roots) {
        if (r == -15) continue;
        Dihedral d{r, v(r)};
        Igusa J = dihedral_igusa(d);
        if (J.J10 != 0 && key_from_igusa(J) == k) return d;
    }
    throw DomainError("no rational dihedral invariants for this key");
}

AutClass classify_uv(const Dihedral& d) {
    const Rat &u = d.u, &v = d.v;
    if (u * u + 18 * u - 4 * v - 27 == 0) throw DomainError("J10 = 0: (u, v) gives a singular curve");
    if ((u == 0 && v == 0) || (u == 225 && v == 6750)) return aut_class(Group::SL2_3);
    if (u == 25 && v == -250) return aut_class(Group::GL2_3);
    if (v * v - 4 * u * u * u == 0) return aut_class(Group::D4);
    // u = 70 + 30 sqrt 5 is excluded too, but it is irrational.
    if (4 * v - u * u + 110 * u - 1125 == 0) return aut_class(Group::D6);
    return aut_class(Group::V4);
}

}  // namespace g2
