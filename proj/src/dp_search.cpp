#include "univoq/dp_search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "univoq/factor.hpp"
#include "univoq/pisot_salem.hpp"
#include "univoq/sturm.hpp"

namespace univoq {

namespace {

// ---- rational polynomial helpers (coefficients low to high) ----

void rp_norm(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat rp_coeff(const RatPoly& p, int i) {
    if (i < 0 || i >= static_cast<int>(p.size())) return Rat(0);
    return p[i];
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    rp_norm(r);
    return r;
}

RatPoly rp_scale(const RatPoly& a, const Rat& c) {
    RatPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    rp_norm(r);
    return r;
}

// multiply by (1 + s*z), s = +1 or -1
RatPoly rp_mul_linear(const RatPoly& a, int s) {
    RatPoly r(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        if (s > 0)
            r[i + 1] += a[i];
        else
            r[i + 1] -= a[i];
    }
    rp_norm(r);
    return r;
}

// x^n p(1/x): coefficient i of the result is coefficient n-i of p
RatPoly rp_sharp(const RatPoly& p, int n) {
    RatPoly r(n + 1);
    for (int i = 0; i <= n; ++i) r[n - i] = rp_coeff(p, i);
    rp_norm(r);
    return r;
}

// first N+1 coefficients of the power series num/den; requires den(0) != 0
std::vector<Rat> rp_series(const RatPoly& num, const RatPoly& den, int N) {
    const Rat d0 = den[0];
    const int dtop = static_cast<int>(den.size()) - 1;
    std::vector<Rat> c(N + 1);
    for (int j = 0; j <= N; ++j) {
        Rat s = rp_coeff(num, j);
        const int top = std::min(j, dtop);
        for (int i = 1; i <= top; ++i) s -= den[i] * c[j - i];
        c[j] = s / d0;
    }
    return c;
}

// clear denominators with a positive factor (root set and signs unchanged)
IntPoly int_scaled(const RatPoly& p) {
    Int l(1);
    for (const Rat& c : p) l = lcm(l, Int(c.get_den()));
    std::vector<Int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[i] = Int(p[i].get_num()) * (l / Int(p[i].get_den()));
    return IntPoly(std::move(q));
}

// integer coefficients of the reversal of e (the emitted candidate: the
// numerator of the rigid completion read off the extremal denominator)
std::vector<Int> recip_ints(const RatPoly& e) {
    RatPoly r(e.rbegin(), e.rend());
    return int_scaled(r).coeffs();
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rat rat_pow(Rat base, int e) {
    Rat r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

SearchNode::SearchNode(const Int& u0) {
    if (u0 < 1) throw std::invalid_argument("SearchNode: leading coefficient must be >= 1");
    u_.push_back(u0);
}

std::optional<ExtremalSolution> solve_extremal(const std::vector<Int>& prefix, bool star) {
    const int n = static_cast<int>(prefix.size());
    if (n < 1) return std::nullopt;
    std::vector<Rat> u(prefix.begin(), prefix.end());
    const Rat sgn = star ? Rat(-1) : Rat(1);

    // row j states that series coefficient j of D/E equals u_j; the unknowns
    // are d_1..d_n, column n holds the right-hand side
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1));
    for (int j = 0; j < n; ++j) {
        M[j][n - j - 1] += 1;
        for (int i = 1; i <= j; ++i) M[j][i - 1] += sgn * u[j - i];
        M[j][n] = u[j];
    }

    int rank = 0;
    std::vector<int> piv;
    for (int col = 0; col < n && rank < n; ++col) {
        int p = -1;
        for (int r = rank; r < n; ++r) {
            if (M[r][col] != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(M[rank], M[p]);
        const Rat inv = Rat(1) / M[rank][col];
        for (int c = col; c <= n; ++c) M[rank][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            const Rat f = M[r][col];
            for (int c = col; c <= n; ++c) M[r][c] -= f * M[rank][c];
        }
        piv.push_back(col);
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (M[r][n] != 0) return std::nullopt;
    if (rank < n) return std::nullopt;

    std::vector<Rat> d(n);
    for (int idx = 0; idx < rank; ++idx) d[piv[idx]] = M[idx][n];
    RatPoly D(n + 1);
    D[n] = star ? 1 : -1;
    for (int i = 1; i <= n; ++i) D[n - i] = d[i - 1];
    RatPoly E = rp_sharp(D, n);
    if (!star) E = rp_scale(E, Rat(-1));

    // guard against spurious solutions: the series must reproduce the prefix
    std::vector<Rat> c = rp_series(D, E, n);
    for (int j = 0; j < n; ++j)
        if (c[j] != u[j]) return std::nullopt;
    return ExtremalSolution{c[n], std::move(D), std::move(E)};
}

DpBounds dp_bounds(const SearchNode& node) {
    const int n = node.length();
    if (!node.d_.empty()) {
        DpBounds out;
        out.D = node.d_;
        out.E = rp_scale(rp_sharp(out.D, n), Rat(-1));
        out.Dstar = node.dstar_;
        out.Estar = rp_sharp(out.Dstar, n);
        out.w = rp_series(out.D, out.E, n)[n];
        out.wstar = rp_series(out.Dstar, out.Estar, n)[n];
        return out;
    }
    auto minus = solve_extremal(node.u_, false);
    if (!minus) throw std::logic_error("dp_bounds: singular minus-extremal system");
    DpBounds out;
    out.w = minus->w;
    out.D = std::move(minus->D);
    out.E = std::move(minus->E);
    if (n >= 2) {
        // one coefficient does not determine the starred side
        if (auto starred = solve_extremal(node.u_, true)) {
            out.wstar = starred->w;
            out.Dstar = std::move(starred->D);
            out.Estar = std::move(starred->E);
        }
    }
    return out;
}

SearchNode extend(const SearchNode& node, const Int& un, const DpBounds& b) {
    const Rat u(un);
    if (u <= b.w || (b.wstar && u >= *b.wstar))
        throw std::invalid_argument("extend: coefficient not strictly inside the bounds");
    SearchNode child;
    child.u_ = node.u_;
    child.u_.push_back(un);
    if (b.wstar) {
        const Rat a = u - b.w;
        const Rat bb = *b.wstar - u;
        const Rat q = a + bb;
        if (q > 0) {
            // convex mix of the parent pair: the child extremal polynomials
            //   D'  = (bb*(1+z)*D + a*(1-z)*D*) / q   (leading coefficient -1)
            //   D*' = (bb*(1-z)*D + a*(1+z)*D*) / q   (leading coefficient +1)
            const Rat invq = Rat(1) / q;
            child.d_ = rp_scale(rp_add(rp_mul_linear(rp_scale(b.D, bb), +1),
                                       rp_mul_linear(rp_scale(b.Dstar, a), -1)),
                                invq);
            child.dstar_ = rp_scale(rp_add(rp_mul_linear(rp_scale(b.D, bb), -1),
                                           rp_mul_linear(rp_scale(b.Dstar, a), +1)),
                                    invq);
        }
    }
    return child;
}

LimitFunction::LimitFunction(std::string label, IntPoly numerator, IntPoly denominator,
                             int threshold)
    : label_(std::move(label)), num_(std::move(numerator)), den_(std::move(denominator)),
      threshold_(threshold) {
    if (threshold_ < 2) throw std::logic_error("limit function threshold must be at least 2");
    if (den_.is_zero() || den_[0] == 0)
        throw std::logic_error("limit function denominator needs a nonzero constant term");

    RatPoly rn(num_.coeffs().begin(), num_.coeffs().end());
    RatPoly rd(den_.coeffs().begin(), den_.coeffs().end());
    const std::vector<Rat> ser = rp_series(rn, rd, threshold_);
    series_.reserve(threshold_);
    for (int j = 0; j < threshold_; ++j) {
        if (ser[j].get_den() != 1)
            throw std::logic_error("limit function series is not integral: " + label_);
        series_.push_back(Int(ser[j].get_num()));
    }
    if (series_[0] != 1)
        throw std::logic_error("limit function series must start with 1: " + label_);

    // walk the tree along the series and certify the two-sided gap at the
    // stated depth; the series must stay strictly inside the bounds on the way
    SearchNode node(series_[0]);
    for (int n = 1; n < threshold_; ++n) {
        const DpBounds b = dp_bounds(node);
        const Rat un(series_[n]);
        if (un <= b.w || (b.wstar && un >= *b.wstar))
            throw std::logic_error("limit function series leaves the coefficient tree: " +
                                   label_);
        node = extend(node, series_[n], b);
    }
    const DpBounds b = dp_bounds(node);
    if (!b.wstar)
        throw std::logic_error("no two-sided bound at the stated depth: " + label_);
    gap_ = *b.wstar - b.w;
    if (!(gap_ < Rat(9, 4)))
        throw std::logic_error("gap certificate failed: " + certificate());
}

std::string LimitFunction::certificate() const {
    std::ostringstream os;
    os << label_ << ": (" << num_.to_string() << ") / (" << den_.to_string() << ")\n";
    os << "  series prefix u_0..u_" << threshold_ - 1 << " =";
    for (const Int& c : series_) os << ' ' << c.get_str();
    os << "\n  depth N = " << threshold_ << ", exact gap w*_N - w_N = " << gap_.get_str()
       << (gap_ < Rat(9, 4) ? " < 9/4" : " (NOT below 9/4)") << "\n";
    return os.str();
}

std::vector<LimitFunction> limit_functions() {
    std::vector<LimitFunction> out;
    out.reserve(4);
    out.emplace_back("B branch at psi_2", IntPoly{-1, -1}, IntPoly{-1, 1, 1, 1}, 24);
    out.emplace_back("A branch at psi_2", IntPoly{-1, 0, 0, 1}, IntPoly{-1, 1, 1, 1}, 11);
    out.emplace_back("A branch at chi", IntPoly{1, 1, -1, -1}, IntPoly{1, -1, -2, 0, 1}, 33);
    out.emplace_back("B branch at chi", IntPoly{1, 0, -1, 0, 1}, IntPoly{1, -1, -2, 0, 1}, 44);
    return out;
}

BudgetExceeded::BudgetExceeded(unsigned long long budget, BoydResult partial)
    : std::runtime_error("search node budget of " + std::to_string(budget) + " exceeded"),
      budget_(budget), partial_(std::move(partial)) {}

namespace {

struct Emission {
    std::vector<Int> coeffs;
    int depth;
};

struct Tally {
    std::vector<Emission> emissions;
    unsigned long long pruned = 0;
    unsigned long long deep = 0;
};

struct Ctx {
    Rat lo, hi, inv_lo, inv_hi;
    int depth_cap = 0;
    const std::vector<LimitFunction>* prune = nullptr;
    // per prune function: series extended to threshold + slack, the depth at
    // which a still-matching branch is finally cut
    std::vector<std::vector<Int>> prune_series;
    int slack = 0;
    unsigned long long budget = 0;
    std::atomic<unsigned long long> nodes{0};
    std::atomic<bool> stop{false};
};

struct Frontier {
    SearchNode node;
    std::vector<int> alive;
};

// coarse cap on the next coefficient when no starred bound exists: members
// whose pole lies in [1/hi, 1) cannot grow faster than this
Rat u_cap(const Rat& hi, int n) {
    return (hi * hi - 1) * (rat_pow(hi, n - 1) + Rat(1) / hi + (hi + 1) / (hi * hi));
}

// Zeros of e that survive cancellation against d, i.e. the genuine poles of
// the rational function d/e. Factors shared with d (with multiplicity) are
// removable singularities and must not count.
IntPoly pole_part(const IntPoly& e, const IntPoly& d) {
    const IntPoly g = poly_gcd(e, d);
    if (g.degree() < 1) return e;
    IntPoly q;
    if (!e.try_divexact(g, &q)) return e;
    return q;
}

// Exact root-location kills. Upper: if the reduced form of D/E has a pole in
// (0, 1/hi], the minimal completion already blows up by 1/hi; every
// compatible series dominates it coefficientwise, so its pole sits at least
// as close to the origin and theta > hi. Lower: if the reduced form of
// D*/E* has no pole in (0, 1/lo], the maximal completion stays analytic
// through 1/lo, every compatible series is dominated by it, and theta < lo.
// Interval endpoints are rational while the targets are irrational, so
// boundary coincidences cannot drop a number.
bool window_kill(const DpBounds& b, const Ctx& ctx) {
    const IntPoly e = int_scaled(b.E);
    if (SturmChain(e).count(Rat(0), ctx.inv_hi) >= 1) {
        if (SturmChain(pole_part(e, int_scaled(b.D))).count(Rat(0), ctx.inv_hi) >= 1)
            return true;
    }
    if (b.wstar) {
        const IntPoly es = int_scaled(b.Estar);
        if (SturmChain(es).count(Rat(0), ctx.inv_lo) == 0) return true;
        if (SturmChain(pole_part(es, int_scaled(b.Dstar))).count(Rat(0), ctx.inv_lo) == 0)
            return true;
    }
    return false;
}

// Handle one node: count it against the budget, cut branches that follow a
// limit-function series to its verified depth, stop at the depth guard,
// bound the next coefficient, apply the interval kills, record boundary
// emissions (the completion is rigid there) and hand back the children that
// still need exploring. Returns false once the node budget is exhausted.
bool visit(const SearchNode& node, const std::vector<int>& alive, Ctx& ctx, Tally& t,
           std::vector<Frontier>& out) {
    if (ctx.stop.load(std::memory_order_relaxed)) return false;
    if (ctx.nodes.fetch_add(1, std::memory_order_relaxed) >= ctx.budget) {
        ctx.stop.store(true, std::memory_order_relaxed);
        return false;
    }
    const int n = node.length();

    std::vector<int> alive2;
    alive2.reserve(alive.size());
    for (int k : alive) {
        if (node.prefix()[n - 1] != ctx.prune_series[k][n - 1]) continue;
        if (n >= (*ctx.prune)[k].threshold() + ctx.slack) {
            t.pruned += 1;
            return true;
        }
        alive2.push_back(k);
    }
    if (n >= ctx.depth_cap) {
        t.deep += 1;
        return true;
    }

    const DpBounds b = dp_bounds(node);
    if (window_kill(b, ctx)) return true;

    const Int lo_i = rat_ceil(b.w);
    const Int hi_i = b.wstar ? rat_floor(*b.wstar) : rat_floor(u_cap(ctx.hi, n));
    for (Int u = lo_i; u <= hi_i; u += 1) {
        if (Rat(u) == b.w) {
            t.emissions.push_back({recip_ints(b.E), n});
            continue;
        }
        if (b.wstar && Rat(u) == *b.wstar) {
            t.emissions.push_back({recip_ints(b.Estar), n});
            continue;
        }
        out.push_back({extend(node, u, b), alive2});
    }
    return true;
}

void explore(const SearchNode& node, const std::vector<int>& alive, Ctx& ctx, Tally& t) {
    std::vector<Frontier> kids;
    if (!visit(node, alive, ctx, t, kids)) return;
    for (const Frontier& k : kids) explore(k.node, k.alive, ctx, t);
}

BoydResult finish(Tally& total, Ctx& ctx, const BoydOptions& opts) {
    BoydResult res;
    res.nodes = ctx.nodes.load();
    res.emissions = total.emissions.size();
    res.pruned = total.pruned;
    res.deep = total.deep;

    // dedupe raw candidates before factoring, keeping the least depth
    std::map<std::vector<Int>, int> raw;
    for (const Emission& e : total.emissions) {
        auto [it, fresh] = raw.try_emplace(e.coeffs, e.depth);
        if (!fresh && e.depth < it->second) it->second = e.depth;
    }

    struct Entry {
        AlgebraicReal root;
        int depth;
    };
    std::map<std::vector<Int>, Entry> found;
    for (const auto& [coeffs, depth] : raw) {
        IntPoly cand(coeffs);
        if (cand.degree() < 2) continue;
        const Factorization fz = factorize(cand);
        for (const auto& [f, mult] : fz.factors) {
            (void)mult;
            if (f.degree() < 2 || !f.is_monic()) continue;
            const PisotCheck pc = is_pisot(f);
            if (!pc.ok()) continue;
            if (pc.root->compare(ctx.lo) < 0 || pc.root->compare(ctx.hi) > 0) continue;
            auto [it, fresh] = found.try_emplace(f.coeffs(), Entry{*pc.root, depth});
            if (!fresh && depth < it->second.depth) it->second.depth = depth;
        }
    }

    res.hits.reserve(found.size());
    for (auto& [coeffs, entry] : found)
        res.hits.push_back(BoydHit{IntPoly(coeffs), entry.root, std::nullopt, entry.depth});
    std::sort(res.hits.begin(), res.hits.end(), [](const BoydHit& a, const BoydHit& b) {
        const int c = a.root.compare(b.root);
        if (c != 0) return c < 0;
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.coeffs() < b.poly.coeffs();
    });

    if (opts.classify) {
        std::exception_ptr err;
        const long m = static_cast<long>(res.hits.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (long i = 0; i < m; ++i) {
            try {
                BoydHit& h = res.hits[i];
                const auto iv = h.root.refine(Rat(1, 1024));
                h.cls = classify_beta(beta_field(h.poly, iv.first, iv.second));
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    }
    return res;
}

}  // namespace

BoydResult boyd_search(const Rat& lo, const Rat& hi, const std::vector<LimitFunction>& prune,
                       const BoydOptions& opts) {
    if (!(Rat(1) < lo && lo < hi && hi < Rat(2)))
        throw std::invalid_argument("boyd_search: interval must satisfy 1 < lo < hi < 2");

    Ctx ctx;
    ctx.lo = lo;
    ctx.hi = hi;
    ctx.inv_lo = Rat(1) / lo;
    ctx.inv_hi = Rat(1) / hi;
    ctx.slack = std::max(0, opts.prune_slack);
    // the guard must clear every prune cut depth or the cuts could never fire
    ctx.depth_cap = std::max(opts.max_degree, 4);
    for (const LimitFunction& f : prune)
        ctx.depth_cap = std::max(ctx.depth_cap, f.threshold() + ctx.slack + 1);
    ctx.prune = &prune;
    ctx.budget = opts.node_budget;

    // extend each certified series through the slack zone; these functions
    // expand with integer coefficients by construction
    ctx.prune_series.reserve(prune.size());
    for (const LimitFunction& f : prune) {
        const RatPoly num(f.numerator().coeffs().begin(), f.numerator().coeffs().end());
        const RatPoly den(f.denominator().coeffs().begin(), f.denominator().coeffs().end());
        const RatPoly ext = rp_series(num, den, f.threshold() + ctx.slack);
        std::vector<Int> coeffs;
        coeffs.reserve(ext.size());
        for (const Rat& c : ext) {
            if (c.get_den() != 1)
                throw std::logic_error("boyd_search: prune series is not integral");
            coeffs.push_back(Int(c.get_num()));
        }
        ctx.prune_series.push_back(std::move(coeffs));
    }

    std::vector<int> all(prune.size());
    std::iota(all.begin(), all.end(), 0);

    Tally total;
    // coefficient sequences of members below 2 always start with u_0 = 1
    std::vector<Frontier> frontier;
    frontier.push_back({SearchNode(Int(1)), all});

    if (opts.parallel) {
        int threads = 1;
#ifdef _OPENMP
        threads = omp_get_max_threads();
#endif
        // grow a frontier of independent subtrees breadth-first, then share it
        const std::size_t want = static_cast<std::size_t>(std::max(64, 8 * threads));
        while (frontier.size() < want) {
            std::vector<Frontier> next;
            bool expanded = false;
            for (Frontier& f : frontier) {
                if (f.node.length() >= 12) {
                    next.push_back(std::move(f));
                    continue;
                }
                visit(f.node, f.alive, ctx, total, next);
                expanded = true;
            }
            frontier = std::move(next);
            if (!expanded || frontier.empty()) break;
        }

        std::vector<Tally> part(frontier.size());
        std::exception_ptr err;
        const long m = static_cast<long>(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (long i = 0; i < m; ++i) {
            try {
                explore(frontier[i].node, frontier[i].alive, ctx, part[i]);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (Tally& p : part) {
            total.pruned += p.pruned;
            total.deep += p.deep;
            std::move(p.emissions.begin(), p.emissions.end(),
                      std::back_inserter(total.emissions));
        }
    } else {
        explore(frontier.front().node, frontier.front().alive, ctx, total);
    }

    BoydResult res = finish(total, ctx, opts);
    if (ctx.stop.load()) throw BudgetExceeded(opts.node_budget, std::move(res));
    return res;
}

}  // namespace univoq
