// Exact classification of Pisot and Salem numbers by their minimal
// polynomials. Root-modulus questions are settled without floating point:
// roots inside the unit disk are counted through a Cayley transform (the
// count of upper-half-plane roots of an integer polynomial pair via a Cauchy
// index), and roots on the circle reduce to real roots of a trace polynomial
// in [-2, 2].
#pragma once

#include <optional>

#include "univoq/algebraic.hpp"
#include "univoq/intpoly.hpp"

namespace univoq {

enum class PisotStatus { Pisot, NotPisot, Reducible };

struct PisotCheck {
    PisotStatus status = PisotStatus::NotPisot;
    std::optional<AlgebraicReal> root;  // the dominant root, set iff Pisot
    bool ok() const { return status == PisotStatus::Pisot; }
};

// p monic irreducible with exactly one real root > 1 and all other roots of
// modulus < 1; reducible input is reported as such rather than "not Pisot"
PisotCheck is_pisot(const IntPoly& p);

struct SalemCheck {
    bool salem = false;
    std::optional<AlgebraicReal> root;  // the root in (1, oo), set iff salem
};

// p monic irreducible self-reciprocal with one real root > 1, one in (0, 1),
// and every other root on the unit circle
SalemCheck is_salem(const IntPoly& p);

// number of roots of p with |z| < 1, counted with multiplicity; requires
// that p has no roots on the unit circle and p(-1) != 0
int open_disk_count(const IntPoly& p);

// true iff p has a root of modulus exactly 1
bool has_unit_circle_root(const IntPoly& p);

// for self-reciprocal p of even degree 2m: the unique q with
// p(x) = x^m q(x + 1/x); deg q = m and q inherits p's leading coefficient
IntPoly trace_polynomial(const IntPoly& p);

}  // namespace univoq
