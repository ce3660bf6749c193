#pragma once

#include "g2/rational.hpp"
#include "g2/sextic.hpp"

#include <array>

namespace g2 {

// Igusa invariants; J_{2i} has degree 2i in the coefficients.
struct Igusa {
    Rat J2, J4, J6, J10;
    friend bool operator==(const Igusa&, const Igusa&) = default;
};

struct Clebsch {
    Rat A, B, C, D;
    friend bool operator==(const Clebsch&, const Clebsch&) = default;
};

// (I2, I4, I6, I10) = (2^4 J2, 2^8 J4, 2^12 J6, 2^20 J10).
struct IgusaClebsch {
    Rat I2, I4, I6, I10;
    friend bool operator==(const IgusaClebsch&, const IgusaClebsch&) = default;
};

struct AbsoluteI {
    Rat i1, i2, i3;
    friend bool operator==(const AbsoluteI&, const AbsoluteI&) = default;
};

struct TInvariants {
    Rat t1, t2, t3;
    friend bool operator==(const TInvariants&, const TInvariants&) = default;
};

using Mat3 = std::array<std::array<Rat, 3>, 3>;

Igusa igusa(const Sextic& f);
// J10 from -Res(f, f')/lc after moving a root-free point to infinity if needed.
Rat j10_by_resultant(const Sextic& f);

// (c^2 J2, c^4 J4, c^6 J6, c^10 J10)
Igusa rescale(const Igusa& v, const Rat& c);
// Weighted rescaling with J2 -> s J2, J4 -> s^2 J4, ...; s need not be a square.
Igusa rescale_weight(const Igusa& v, const Rat& s);

Clebsch clebsch(const Sextic& f);
Clebsch clebsch_from_igusa(const Igusa& v);
Igusa igusa_from_clebsch(const Clebsch& c);
IgusaClebsch igusa_clebsch(const Igusa& v);
Igusa igusa_from_igusa_clebsch(const IgusaClebsch& v);

AbsoluteI absolute_i(const Igusa& v);
// Representative with J2 = 1 of the weighted class of (i1, i2, i3).
Igusa igusa_from_i(const AbsoluteI& i);
TInvariants t_invariants(const Igusa& v);

std::array<Rat, 3> j_invariants(const Igusa& v);
std::array<Rat, 3> j_from_i(const AbsoluteI& i);
AbsoluteI i_from_j(const std::array<Rat, 3>& j);

std::array<Rat, 2> a_invariants(const Igusa& v);

Rat j16(const Igusa& v);
Mat3 clebsch_matrix(const Clebsch& c);
Rat det3(const Mat3& m);
Rat j30(const Igusa& v);
// A11 A22 - A12^2 of the Clebsch matrix normalized to A = -1, checked against
// the closed form 2^16 J16 / (3^6 5^4 J2^8).
Rat j16_minor_check(const Igusa& v);

}  // namespace g2
