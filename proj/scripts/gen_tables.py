#!/usr/bin/env python3
"""Emit src/invariant_tables.cpp: monomial tables for J2, J4, J6, J10 of a
generic binary sextic a0 x^6 + a1 x^5 z + ... + a6 z^6.

J2, J4, J6 come from the Clebsch transvectants A=(f,f)_6, B=(i,i)_4,
C=(i,(i,i)_2)_4 with i=(f,f)_4; J10 is the classical discriminant.
"""
import sys
from sympy import symbols, diff, binomial, factorial, Rational, expand, Poly, discriminant

a = symbols('a0:7')
x, z = symbols('x z')


def tv(f, g, k):
    m = Poly(f, x, z).total_degree()
    n = Poly(g, x, z).total_degree()
    s = 0
    for i in range(k + 1):
        s += (-1) ** i * binomial(k, i) * diff(f, x, k - i, z, i) * diff(g, x, i, z, k - i)
    return expand(Rational(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n)) * s)


def tables():
    f = sum(a[i] * x ** (6 - i) * z ** i for i in range(7))
    i4 = tv(f, f, 4)
    A = tv(f, f, 6)
    B = tv(i4, i4, 4)
    C = tv(i4, tv(i4, i4, 2), 4)
    J2 = expand(-120 * A)
    J4 = expand(90 * (75 * B - 8 * A ** 2))
    J6 = expand((2**5 * 3**5 * 5**6 * C + J2**3 + 80 * J2 * J4) / 600)
    J10 = expand(discriminant(f.subs(z, 1), x))
    out = {}
    for name, e in (('j2', J2), ('j4', J4), ('j6', J6), ('j10', J10)):
        p = Poly(e, *a)
        terms = []
        for mon, c in sorted(p.terms()):
            assert c.q == 1
            terms.append((int(c), mon))
        out[name] = terms
    return out


def main(path):
    t = tables()
    with open(path, 'w') as fh:
        fh.write('// Generated by scripts/gen_tables.py; do not edit.\n')
        fh.write('#include "g2/invariant_tables.hpp"\n\nnamespace g2::tables {\n\n')
        for name, terms in t.items():
            fh.write(f'const Term {name}_terms[] = {{\n')
            for c, mon in terms:
                e = ', '.join(str(m) for m in mon)
                fh.write(f'    {{{c}, {{{e}}}}},\n')
            fh.write('};\n')
            fh.write(f'const std::size_t {name}_size = {len(terms)};\n\n')
        fh.write('}  // namespace g2::tables\n')


if __name__ == '__main__':
    main(sys.argv[1] if len(sys.argv) > 1 else 'src/invariant_tables.cpp')
