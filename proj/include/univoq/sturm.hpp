// Sturm chains over the integers (primitive scaling keeps coefficients small
// while preserving signs) and exact real root counting / isolation.
#pragma once

#include <utility>
#include <vector>

#include "univoq/intpoly.hpp"

namespace univoq {

class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    // sign variations of the chain at x (roots of intermediate polys are fine)
    int variations_at(const Rat& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    // number of distinct real roots in (lo, hi]
    int count(const Rat& lo, const Rat& hi) const;
    // number of distinct real roots on the whole line
    int count_all() const;

    const IntPoly& squarefree() const { return chain_.front(); }

private:
    std::vector<IntPoly> chain_;
};

// distinct real roots of p in the open interval (lo, hi); each returned pair
// (a, b) satisfies a < b, p(a) != 0, p(b) != 0, and exactly one root inside
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, const Rat& lo,
                                                    const Rat& hi);

// Cauchy index of q/p over the whole real line, computed with exact signed
// remainder sequences: the number of -inf -> +inf jumps minus +inf -> -inf
// jumps of q/p. Used by the unit-disk root counter.
int cauchy_index(const IntPoly& p, const IntPoly& q);

}  // namespace univoq
