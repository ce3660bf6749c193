#pragma once

#include "g2/invariants.hpp"
#include "g2/rational.hpp"
#include "g2/sextic.hpp"

#include <optional>
#include <string>

namespace g2 {

// r = -1: (i1, i2, i3); r = 0: (t1 = 0, t2, t3).
struct ModuliKey {
    int r = -1;
    Rat x1, x2, x3;
    friend bool operator==(const ModuliKey&, const ModuliKey&) = default;
    std::string str() const;  // "(-1, i1, i2, i3)"
};

bool operator<(const ModuliKey& a, const ModuliKey& b);

// Accepts "(-1,x1,x2,x3)", "[-1,x1,x2,x3]" or "-1,x1,x2,x3".
ModuliKey parse_key(std::string_view s);

ModuliKey moduli_key(const Sextic& f);
ModuliKey key_from_igusa(const Igusa& v);
// A representative invariant vector in the weighted class of the key.
Igusa igusa_from_key(const ModuliKey& k);

enum class Group { C2, C10, V4, D4, D6, SL2_3, GL2_3 };

struct AutClass {
    Group group = Group::C2;
    int order = 2, index = 1;
    std::string name = "C2";
    friend bool operator==(const AutClass& a, const AutClass& b) { return a.group == b.group; }
    std::string gap() const;  // "[8,3]"
};

AutClass aut_class(Group g);
AutClass classify(const ModuliKey& k);

// Locus polynomials in the absolute invariants.
Rat j30_poly(const Rat& i1, const Rat& i2, const Rat& i3);
Rat d4_second(const Rat& i1, const Rat& i2);
Rat d6_first(const Rat& i1, const Rat& i2);
Rat d6_second(const Rat& i1, const Rat& i3);
Rat clebsch_d_factor(const Rat& i1, const Rat& i2, const Rat& i3);
// Vanishes on the J2 = 0 part of the extra-involution locus.
Rat eq_j2(const Rat& t2, const Rat& t3);

ModuliKey sl2_3_key();
ModuliKey gl2_3_key();

struct Dihedral {
    Rat u, v;
    friend bool operator==(const Dihedral&, const Dihedral&) = default;
};

Dihedral dihedral_uv_from_standard(const Rat& a, const Rat& b);
// y^2 = (v^2+u^2 v-2u^3) x^6 + ...: the model over Q(u, v).
Sextic v4_model(const Dihedral& d);
Igusa dihedral_igusa(const Dihedral& d);
Dihedral dihedral_uv_from_key(const ModuliKey& k);
AutClass classify_uv(const Dihedral& d);

}  // namespace g2
