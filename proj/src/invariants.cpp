#include "g2/invariants.hpp"

#include "g2/invariant_tables.hpp"
#include "g2/poly.hpp"

#include <stdexcept>

namespace g2 {

namespace {

Int eval_table(const tables::Term* t, std::size_t n, const std::array<std::array<Int, 11>, 7>& pw) {
    Int s = 0, m;
    for (std::size_t k = 0; k < n; ++k) {
        m = t[k].coef;
        for (int i = 0; i < 7; ++i)
            if (t[k].e[i]) m *= pw[static_cast<std::size_t>(i)][t[k].e[i]];
        s += m;
    }
    return s;
}

}  // namespace

Igusa igusa(const Sextic& f) {
    if (f.zero()) throw DomainError("zero form");
    auto [c, g] = content_primitive(f);
    std::array<std::array<Int, 11>, 7> pw;
    for (std::size_t i = 0; i < 7; ++i) {
        pw[i][0] = 1;
        for (std::size_t e = 1; e <= 10; ++e) pw[i][e] = pw[i][e - 1] * g.a[i].get_num();
    }
    Igusa v{Rat(eval_table(tables::j2_terms, tables::j2_size, pw)),
            Rat(eval_table(tables::j4_terms, tables::j4_size, pw)),
            Rat(eval_table(tables::j6_terms, tables::j6_size, pw)),
            Rat(eval_table(tables::j10_terms, tables::j10_size, pw))};
    return rescale(v, c);
}

Rat j10_by_resultant(const Sextic& f) {
    if (f.zero()) throw DomainError("zero form");
    // A nonzero a0 keeps the dehomogenized degree at 6; otherwise shift x -> x + k z.
    Sextic g = f;
    Rat shift = 0;
    for (long k = 1; g.a[0] == 0; ++k) {
        shift = k;
        g = transform(f, Mobius{1, 0, shift, 1});
        if (k > 7) return 0;  // f vanishes identically on 7 points: zero form
    }
    Poly p = g.dehomogenized();
    // Res(p, p') = (-1)^15 a0 disc(p) for degree 6.
    return -resultant(p, p.derivative()) / g.a[0];
}

Igusa rescale(const Igusa& v, const Rat& c) {
    Rat c2 = c * c;
    return rescale_weight(v, c2);
}

Igusa rescale_weight(const Igusa& v, const Rat& s) {
    Rat s2 = s * s, s3 = s2 * s, s5 = s3 * s2;
    return {v.J2 * s, v.J4 * s2, v.J6 * s3, v.J10 * s5};
}

Clebsch clebsch(const Sextic& f) { return clebsch_from_igusa(igusa(f)); }

Clebsch clebsch_from_igusa(const Igusa& v) {
    const Rat &J2 = v.J2, &J4 = v.J4, &J6 = v.J6, &J10 = v.J10;
    Clebsch c;
    c.A = -J2 / 120;
    c.B = (J2 * J2 + 20 * J4) / Rat(Int(8 * 27 * 625));
    c.C = -(J2 * J2 * J2 + 80 * J2 * J4 - 600 * J6) / Rat(Int(32 * 243) * Int(15625));
    Rat J2_2 = J2 * J2, J2_3 = J2_2 * J2, J2_5 = J2_3 * J2_2;
    c.D = -(9 * J2_5 + 700 * J2_3 * J4 - 3600 * J2_2 * J6 - 12400 * J2 * J4 * J4 + 48000 * J4 * J6 +
            10800000 * J10) /
          Rat(pow(Int(2), 8) * pow(Int(3), 9) * pow(Int(5), 10));
    return c;
}

Igusa igusa_from_clebsch(const Clebsch& c) {
    Igusa v;
    v.J2 = -120 * c.A;
    v.J4 = 90 * (75 * c.B - 8 * c.A * c.A);
    v.J6 = (Rat(Int(32 * 243) * Int(15625)) * c.C + v.J2 * v.J2 * v.J2 + 80 * v.J2 * v.J4) / 600;
    Rat J2_2 = v.J2 * v.J2, J2_3 = J2_2 * v.J2, J2_5 = J2_3 * J2_2;
    Rat rest = 9 * J2_5 + 700 * J2_3 * v.J4 - 3600 * J2_2 * v.J6 - 12400 * v.J2 * v.J4 * v.J4 + 48000 * v.J4 * v.J6;
    v.J10 = (-Rat(pow(Int(2), 8) * pow(Int(3), 9) * pow(Int(5), 10)) * c.D - rest) / 10800000;
    return v;
}

IgusaClebsch igusa_clebsch(const Igusa& v) {
    return {v.J2 * 16, v.J4 * 256, v.J6 * 4096, v.J10 * Rat(Int(1) << 20)};
}

Igusa igusa_from_igusa_clebsch(const IgusaClebsch& v) {
    return {v.I2 / 16, v.I4 / 256, v.I6 / 4096, v.I10 / Rat(Int(1) << 20)};
}

AbsoluteI absolute_i(const Igusa& v) {
    if (v.J2 == 0) throw DomainError("J2 = 0: absolute invariants undefined, use t-invariants");
    const Rat& J2 = v.J2;
    Rat J2_2 = J2 * J2, J2_3 = J2_2 * J2;
    return {144 * v.J4 / J2_2, -1728 * (J2 * v.J4 - 3 * v.J6) / J2_3, 486 * v.J10 / (J2_3 * J2_2)};
}

Igusa igusa_from_i(const AbsoluteI& i) {
    // J4 = i1/144, J6 = (i2/1728 + J4)/3, J10 = i3/486 at J2 = 1.
    Rat J4 = i.i1 / 144;
    return {1, J4, (i.i2 / 1728 + J4) / 3, i.i3 / 486};
}

TInvariants t_invariants(const Igusa& v) {
    if (v.J10 == 0) throw DomainError("J10 = 0: not a genus-2 curve");
    Rat J10_2 = v.J10 * v.J10;
    return {pow(v.J2, 5) / v.J10, pow(v.J4, 5) / J10_2, pow(v.J6, 5) / (J10_2 * v.J10)};
}

std::array<Rat, 3> j_invariants(const Igusa& v) {
    if (v.J2 == 0) throw DomainError("J2 = 0: j-invariants undefined");
    if (v.J10 == 0) throw DomainError("J10 = 0: not a genus-2 curve");
    auto I = igusa_clebsch(v);
    Rat A2 = I.I2 * I.I2, A3 = A2 * I.I2;
    return {A3 * A2 / I.I10, I.I4 * A3 / I.I10, I.I6 * A2 / I.I10};
}

std::array<Rat, 3> j_from_i(const AbsoluteI& i) {
    if (i.i3 == 0) throw DomainError("i3 = 0: j-invariants undefined");
    return {486 / i.i3, Rat(27, 8) * i.i1 / i.i3, Rat(3, 32) * (i.i2 + 12 * i.i1) / i.i3};
}

AbsoluteI i_from_j(const std::array<Rat, 3>& j) {
    if (j[0] == 0) throw DomainError("j1 = 0: absolute invariants undefined");
    return {144 * j[1] / j[0], -1728 * (j[1] - 3 * j[2]) / j[0], 486 / j[0]};
}

std::array<Rat, 2> a_invariants(const Igusa& v) {
    if (v.J2 != 0) throw DomainError("J2 != 0: a-invariants apply only on J2 = 0, use absolute invariants");
    if (v.J10 == 0) throw DomainError("J10 = 0: not a genus-2 curve");
    if (v.J4 == 0) throw DomainError("J4 = 0: use J6^5/J10^3");
    if (v.J6 == 0) throw DomainError("J6 = 0: use J4^5/J10^2");
    return {v.J4 * v.J6 / v.J10, v.J6 * v.J10 / pow(v.J4, 4)};
}

Rat j16(const Igusa& v) {
    const Rat &J2 = v.J2, &J4 = v.J4, &J6 = v.J6, &J10 = v.J10;
    Rat J2_2 = J2 * J2, J2_3 = J2_2 * J2, J4_2 = J4 * J4;
    return 15 * J2_3 * J4 * J6 - 4 * J2_3 * J2 * J4_2 - 175 * J2_2 * J4_2 * J4 + 2430 * J10 * J2_3 -
           9 * J2_2 * J6 * J6 + 1488 * J2 * J4_2 * J6 - 64 * J4_2 * J4_2 + 113400 * J10 * J2 * J4 -
           2880 * J4 * J6 * J6 - 648000 * J10 * J6;
}

Mat3 clebsch_matrix(const Clebsch& c) {
    const Rat &A = c.A, &B = c.B, &C = c.C, &D = c.D;
    Rat B2AC = B * B + A * C;
    Rat A11 = 2 * C + A * B / 3;
    Rat A12 = Rat(2, 3) * B2AC;
    Rat A22 = D, A13 = D;
    Rat A23 = B * B2AC / 3 + C * A11 / 3;
    Rat A33 = B * D / 2 + Rat(2, 9) * C * B2AC;
    return {{{A11, A12, A13}, {A12, A22, A23}, {A13, A23, A33}}};
}

Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rat j30(const Igusa& v) { return det3(clebsch_matrix(clebsch_from_igusa(v))); }

Rat j16_minor_check(const Igusa& v) {
    if (v.J2 == 0) throw DomainError("J2 = 0: minor closed form divides by J2");
    Igusa n = rescale_weight(v, 120 / v.J2);
    Mat3 m = clebsch_matrix(clebsch_from_igusa(n));
    Rat minor = m[0][0] * m[1][1] - m[0][1] * m[0][1];
    Rat closed = Rat(Int(1) << 16) * j16(v) / (Rat(Int(729) * 625) * pow(v.J2, 8));
    if (minor != closed)
        throw std::logic_error("J16 minor disagrees with its closed form: " + to_string(minor) + " vs " +
                               to_string(closed));
    return minor;
}

}  // namespace g2
