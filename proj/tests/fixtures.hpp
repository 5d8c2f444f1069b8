#pragma once

// Polynomials as printed in the source derivations, built from their factored forms.

#include "mtp/poly.hpp"

namespace fixtures {

using mtp::Poly;
using mtp::Rational;

inline Poly xp(unsigned n) { return Poly::monomial(Rational(1), n); }
inline Poly lin2(long c0, long c2) { return Poly(Rational(c0)) + xp(2) * Rational(c2); }

// 17x^12 + 15x^8(15837 - 176x^2) + 8100x^4(64519 - 1687x^2) + 3200(50205015 - 4035906x^2)
inline Poly pade_left_q() {
    return xp(12) * Rational(17) + xp(8) * lin2(15837, -176) * Rational(15) +
           xp(4) * lin2(64519, -1687) * Rational(8100) + lin2(50205015, -4035906) * Rational(3200);
}

// x^8(1291 - 13x^2) + x^4(2004240 - 66913x^2) + 480(632604 - 74625x^2), verbatim
inline Poly pade_right_r_printed() {
    return xp(8) * lin2(1291, -13) + xp(4) * lin2(2004240, -66913) + lin2(632604, -74625) * Rational(480);
}

// The same with the x^2 coefficient that the expansion actually produces (74025).
inline Poly pade_right_r_expanded() {
    return xp(8) * lin2(1291, -13) + xp(4) * lin2(2004240, -66913) + lin2(632604, -74025) * Rational(480);
}

// -t^3 (2t^8 - 75t^6 + 1120t^4 - 7680t^2 + 19200) / 7200
inline Poly yang_p() {
    const Poly inner = xp(8) * Rational(2) + xp(6) * Rational(-75) + xp(4) * Rational(1120) +
                       xp(2) * Rational(-7680) + Poly(Rational(19200));
    return xp(3) * inner * Rational(-1, 7200);
}

// 4t (t - t^3/6 + t^5/120)^2
inline Poly yang_q() {
    const Poly s = xp(1) + xp(3) * Rational(-1, 6) + xp(5) * Rational(1, 120);
    return xp(1) * s * s * Rational(4);
}

// t^5 (t^4 (65 - 2t^2) + 160 (24 - 5t^2)) / 14400
inline Poly yang_endpoint() {
    return xp(5) * (xp(4) * lin2(65, -2) + lin2(24, -5) * Rational(160)) * Rational(1, 14400);
}

// x^9 (20000 - 1560x^2 + 60x^4 - x^6) / 1728000
inline Poly mortici_tp() {
    const Poly r = Poly(Rational(20000)) + xp(2) * Rational(-1560) + xp(4) * Rational(60) - xp(6);
    return xp(9) * r * Rational(1, 1728000);
}

}  // namespace fixtures
