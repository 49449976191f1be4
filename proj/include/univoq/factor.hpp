// Exact factorization over the integers: rational-root and cyclotomic
// pre-stripping, Yun squarefree decomposition, then Zassenhaus (factor mod a
// small prime, Hensel lift, subset recombination). Degrees here stay modest
// (worst cases around 40), so no effort is spent on LLL-style recombination.
#pragma once

#include <vector>

#include "univoq/intpoly.hpp"

namespace univoq {

struct Factorization {
    Int content;  // signed content: p = content * prod factors^mult
    std::vector<std::pair<IntPoly, int>> factors;  // primitive, lc > 0, irreducible
};

Factorization factorize(const IntPoly& p);

// true iff p is irreducible over Q (equivalently: primitive part irreducible
// over Z); constants are not irreducible
bool is_irreducible(const IntPoly& p);

// n-th cyclotomic polynomial
IntPoly cyclotomic(int n);

}  // namespace univoq
