#pragma once

#include "mtp/poly.hpp"
#include "mtp/rational.hpp"

#include <string>

namespace mtp {

enum class TrigFunction { sin, cos };
enum class Direction { upward, downward };

/// Generated bounds never exceed this degree; larger requests report budget exhaustion.
inline constexpr unsigned kMaxTaylorDegree = 200;

/// Taylor polynomial of sin or cos at 0 together with the side it bounds the
/// function from on 0 <= x <= sqrt(radius_squared).
struct TaylorBound {
    TrigFunction func = TrigFunction::sin;
    unsigned degree = 0;
    Direction direction = Direction::upward;
    unsigned long radius_squared = 0;  // (n+3)(n+4)
    Poly poly;
};

/// sum_{i=0}^{(n-1)/2} (-1)^i x^(2i+1)/(2i+1)!; upward iff n = 1 (mod 4).
TaylorBound taylor_sin(unsigned n);
/// sum_{i=0}^{n/2} (-1)^i x^(2i)/(2i)!; upward iff n = 0 (mod 4).
TaylorBound taylor_cos(unsigned n);

inline TaylorBound sin_downward(unsigned s) { return taylor_sin(4 * s + 3); }
inline TaylorBound sin_upward(unsigned s) { return taylor_sin(4 * s + 1); }
inline TaylorBound cos_downward(unsigned k) { return taylor_cos(4 * k + 2); }
inline TaylorBound cos_upward(unsigned k) { return taylor_cos(4 * k); }

/// radius_squared exceeds half_pi_hi()^2, i.e. the bound direction holds on (0, pi/2).
bool covers_half_pi(const TaylorBound& bound);

std::string to_string(TrigFunction f);
std::string to_string(Direction d);

/// 1/10^6.
Rational default_root_eps();

enum class RootKind { c_k, d_k };

/// Closed enclosure [lo, hi] of c_k (zero of the degree 4k+2 downward cosine
/// bound) or d_k (where cos x = |that bound|, to the right of c_k).
struct RootEnclosure {
    unsigned k = 0;
    Rational lo;
    Rational hi;
    RootKind kind = RootKind::c_k;
    unsigned bracket_degree = 0;  // d_k only: m of the cos bracket [T(m+2), T(m)]
};

RootEnclosure cos_root_ck(unsigned k, const Rational& eps = default_root_eps());

/// d_k is bracketed through cos between the degree m+2 and degree m bounds;
/// m (a multiple of 4) is raised until the bracket roots fit in width eps.
RootEnclosure cos_crossing_dk(unsigned k, unsigned m, const Rational& eps = default_root_eps());

/// Certified enclosures for 0 <= x <= 3 from degree-41/43 (sin) and 40/42 (cos) bounds.
struct TrigEnclosure {
    Rational lo;
    Rational hi;
};
TrigEnclosure enclose_sin(const Rational& x);
TrigEnclosure enclose_cos(const Rational& x);

}  // namespace mtp
