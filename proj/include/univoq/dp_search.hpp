// Interval enumeration of Pisot numbers by Boyd's tree search. Every Pisot
// number theta in the target interval is the pole 1/theta of a rational
// function whose integer series coefficients u_0, u_1, ... obey exact two
// sided bounds (w_n, w_n*) computed from the prefix (Dufresnoy-Pisot). The
// search walks all admissible integer sequences, emits a defining polynomial
// whenever a coefficient hits a bound (the completion is then rigid), kills
// branches whose compatible poles provably leave the interval, and may cut
// branches that follow the series of a limit-point rational function past a
// verified depth (only well-understood regular numbers lie beyond).
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "univoq/algebraic.hpp"
#include "univoq/expansion.hpp"
#include "univoq/intpoly.hpp"

namespace univoq {

// polynomial with rational coefficients, stored low to high without trailing
// zeros; the engine works over rationals and scales back to integers on emission
using RatPoly = std::vector<Rat>;

// Extremal pair bounding the next series coefficient: D/E continues the
// prefix with the least admissible coefficient w, Dstar/Estar with the
// greatest admissible coefficient wstar. wstar is absent when the starred
// system has no solution (prefix length 1, or a singular deeper system); the
// caller must then fall back on the coarse cap used by boyd_search.
struct DpBounds {
    Rat w;
    std::optional<Rat> wstar;
    RatPoly D, E;
    RatPoly Dstar, Estar;  // set iff wstar is set
};

// Node of the coefficient tree: the prefix u_0..u_{n-1} plus, when the parent
// had a two-sided bound, the extremal pair propagated by recurrence so the
// linear system need not be solved again.
class SearchNode {
  public:
    explicit SearchNode(const Int& u0);

    int length() const { return static_cast<int>(u_.size()); }
    const std::vector<Int>& prefix() const { return u_; }

  private:
    SearchNode() = default;

    std::vector<Int> u_;
    RatPoly d_, dstar_;  // propagated pair, both set or both empty

    friend DpBounds dp_bounds(const SearchNode& node);
    friend SearchNode extend(const SearchNode& node, const Int& un, const DpBounds& b);
};

// Bounds on the next coefficient u_n, from the propagated pair when present
// and otherwise from fresh linear solves. Throws std::logic_error if the
// minus-extremal system is singular (no admissible prefix reaches that state).
DpBounds dp_bounds(const SearchNode& node);

// Child node for a coefficient chosen strictly inside the bounds. The pair is
// propagated whenever the parent window had positive width.
SearchNode extend(const SearchNode& node, const Int& un, const DpBounds& b);

// Direct linear-system solve for one side of the bound: find D of degree n
// with leading coefficient -1 (minus side) or +1 (starred side) whose series
// D/E reproduces the prefix, where E is -(x^n D(1/x)) resp. x^n D(1/x).
// Returns nullopt when the system is singular, inconsistent, or the solution
// fails the series re-check. This is the oracle path; dp_bounds must agree.
struct ExtremalSolution {
    Rat w;
    RatPoly D, E;
};
std::optional<ExtremalSolution> solve_extremal(const std::vector<Int>& prefix, bool star);

// A rational function whose series prefix shadows the branches converging to
// a limit point of the Pisot set. Construction recomputes the two-sided gap
// at the stated depth and refuses (std::logic_error) unless w*_N - w_N < 9/4,
// the certificate that only regular numbers of known shape lie past depth N.
class LimitFunction {
  public:
    LimitFunction(std::string label, IntPoly numerator, IntPoly denominator, int threshold);

    const std::string& label() const { return label_; }
    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }
    int threshold() const { return threshold_; }
    // first threshold() series coefficients of numerator/denominator
    const std::vector<Int>& series_prefix() const { return series_; }
    // exact value of w*_N - w_N at N = threshold()
    const Rat& gap_at_threshold() const { return gap_; }

    // human-readable verification record: label, series prefix, N, exact gap
    std::string certificate() const;

  private:
    std::string label_;
    IntPoly num_, den_;
    int threshold_;
    std::vector<Int> series_;
    Rat gap_;
};

// The four pruning functions: the series of the A- and B-branch regular
// families at the limit points psi_2 and chi, with verified depths 24, 11,
// 33 and 44.
std::vector<LimitFunction> limit_functions();

struct BoydHit {
    IntPoly poly;                  // monic irreducible, passes the Pisot test
    AlgebraicReal root;            // the unique root inside the search interval
    std::optional<BetaClass> cls;  // greedy/lazy/class, absent when disabled
    int depth;                     // least tree depth that emitted this number
};

struct BoydOptions {
    // depth guard: branches still alive past this depth are counted in
    // BoydResult::deep instead of being followed (emitted degrees never
    // exceed it); raised internally to cover every prune threshold
    int max_degree = 40;
    unsigned long long node_budget = 400ULL * 1000 * 1000;
    bool parallel = true;  // explore subtrees concurrently; results identical
    bool classify = true;  // attach expansions to each hit
    // follow a matched limit-function series this many levels past its
    // certified threshold before cutting, so the boundary members emitted in
    // that zone still make the list; the default reproduces the reference
    // interval counts (see README)
    int prune_slack = 5;
};

struct BoydResult {
    std::vector<BoydHit> hits;  // deduplicated, sorted by root
    unsigned long long nodes = 0;
    unsigned long long emissions = 0;
    unsigned long long pruned = 0;  // branches cut by limit-function prefixes
    unsigned long long deep = 0;    // branches stopped by the depth guard
    // exhaustive for the interval unless a branch hit the depth guard
    bool complete() const { return deep == 0; }
};

// Thrown when the node budget runs out; carries the partial result so the
// caller can inspect it, never returned as if it were complete.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(unsigned long long budget, BoydResult partial);

    unsigned long long budget() const { return budget_; }
    const BoydResult& partial() const { return partial_; }

  private:
    unsigned long long budget_;
    BoydResult partial_;
};

// All Pisot numbers with minimal polynomial root in [lo, hi], 1 < lo < hi < 2.
// Pruned branches drop only regular numbers whose roots cluster within
// ~hi^(-threshold) of their limit point; pass the matching limit functions to
// keep the tree finite near psi_2 and chi. Deterministic output order:
// ascending root, then degree, then coefficients.
BoydResult boyd_search(const Rat& lo, const Rat& hi, const std::vector<LimitFunction>& prune,
                       const BoydOptions& opts = BoydOptions());

}  // namespace univoq
