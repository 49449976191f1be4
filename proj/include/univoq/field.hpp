// Arithmetic in a real number field Q(beta): elements are rational
// coordinate vectors over the power basis 1, beta, ..., beta^(d-1), with the
// generating root pinned down by an isolating interval so that signs, floors,
// and comparisons are exact.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "univoq/algebraic.hpp"
#include "univoq/intpoly.hpp"

namespace univoq {

class FieldElement;

class NumberField {
public:
    // minpoly must be monic irreducible; root must be a root of it
    NumberField(const IntPoly& minpoly, const AlgebraicReal& root);

    // factor p, locate its unique real root in (lo, hi), and build the field
    // generated by that root; throws if the root count there is not one
    static NumberField adjoin_root(const IntPoly& p, const Rat& lo, const Rat& hi);

    int degree() const;
    const IntPoly& minpoly() const;
    const AlgebraicReal& root() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement beta() const;                      // the generator
    FieldElement from_rat(const Rat& q) const;
    FieldElement from_coords(std::vector<Rat> co) const;  // length <= degree

    bool same_field(const NumberField& o) const;

private:
    friend class FieldElement;
    struct Rep;
    std::shared_ptr<const Rep> rep_;
};

class FieldElement {
public:
    FieldElement() = default;  // empty; unusable until assigned

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rat& q) const;
    FieldElement operator+(const Rat& q) const;
    FieldElement operator-(const Rat& q) const;

    FieldElement inverse() const;  // throws std::domain_error on zero

    bool operator==(const FieldElement& o) const;
    bool is_zero() const;

    int sign() const;                       // exact
    int compare(const FieldElement& o) const;
    int compare(const Rat& q) const;
    Int floor() const;                      // exact
    Int ceil() const;

    const std::vector<Rat>& coords() const { return co_; }
    std::string key() const;                // canonical coordinate string

    // rational interval certain to contain the value, of width <= w
    std::pair<Rat, Rat> enclosure(const Rat& w) const;

private:
    friend class NumberField;
    FieldElement(std::shared_ptr<const NumberField::Rep> rep, std::vector<Rat> co);
    std::shared_ptr<const NumberField::Rep> rep_;
    std::vector<Rat> co_;  // length = degree, constant coordinate first
};

}  // namespace univoq
