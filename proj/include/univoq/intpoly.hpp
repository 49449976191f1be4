// Dense univariate polynomials with arbitrary-precision integer coefficients.
// Coefficients are stored constant term first; the zero polynomial is the
// empty vector and reports degree -1. All arithmetic is exact.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace univoq {

using Int = mpz_class;
using Rat = mpq_class;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& c);
    // x^k with an optional scalar
    static IntPoly monomial(const Int& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& lc() const;           // leading coefficient; poly must be nonzero
    const Int& operator[](int i) const;   // 0 outside the stored range
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;

    // quotient of an exact division; throws std::domain_error on inexact
    IntPoly divexact(const IntPoly& d) const;
    // true and sets q when d divides *this exactly
    bool try_divexact(const IntPoly& d, IntPoly* q) const;

    IntPoly derivative() const;
    // x^n * p(1/x) for n = degree (coefficient reversal)
    IntPoly reciprocal() const;
    // p(-x)
    IntPoly negate_variable() const;
    // p(x) * x^k
    IntPoly shift_up(int k) const;

    Int content() const;             // gcd of coefficients, >= 0 (0 for zero poly)
    IntPoly primitive_part() const;  // content and leading sign stripped off
    bool is_monic() const { return !is_zero() && lc() == 1; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;
    // sign of the (possibly infinite) limit at +inf / -inf
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    // 1 + max |a_i| / |lc|: every complex root has modulus < this bound
    Rat root_bound() const;

    std::string to_string() const;   // canonical text form, highest power first
    static IntPoly parse(const std::string& text);

private:
    void normalize();
    std::vector<Int> c_;
};

// gcd of primitive parts, positive leading coefficient (primitive PRS)
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// p with repeated roots stripped: p / gcd(p, p')
IntPoly squarefree_part(const IntPoly& p);

}  // namespace univoq
