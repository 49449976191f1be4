#include "univoq/intpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace univoq {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(const Int& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(const Int& c, int k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = c;
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::lc() const {
    if (is_zero()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

const Int& IntPoly::operator[](int i) const {
    static const Int kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

bool IntPoly::try_divexact(const IntPoly& d, IntPoly* q) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) {
        *q = IntPoly();
        return true;
    }
    if (degree() < d.degree()) return false;
    std::vector<Int> rem = c_;
    std::vector<Int> quo(degree() - d.degree() + 1, Int(0));
    for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
        Int& top = rem[i + d.degree()];
        if (top == 0) continue;
        Int f;
        mpz_fdiv_qr(f.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(),
                    d.lc().get_mpz_t());
        if (top != 0) return false;  // leading term not divisible
        quo[i] = f;
        for (int j = 0; j < d.degree(); ++j) rem[i + j] -= f * d.c_[j];
    }
    for (int j = 0; j < d.degree(); ++j)
        if (rem[j] != 0) return false;
    *q = IntPoly(std::move(quo));
    return true;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    IntPoly q;
    if (!try_divexact(d, &q)) throw std::domain_error("inexact polynomial division");
    return q;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reciprocal() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::negate_variable() const {
    IntPoly r(*this);
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPoly IntPoly::shift_up(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + k, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    IntPoly r(*this);
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lc()); }

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sgn(lc());
    return (degree() % 2 == 0) ? s : -s;
}

Rat IntPoly::root_bound() const {
    if (degree() < 1) return Rat(1);
    Int m(0);
    for (int i = 0; i < degree(); ++i) {
        Int a = abs(c_[i]);
        if (a > m) m = a;
    }
    Rat b(m);
    b /= abs(lc());
    return b + 1;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? "-" : "+");
        }
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("expected integer in polynomial");
        return Int(s.substr(start, i - start));
    }
};

}  // namespace

IntPoly IntPoly::parse(const std::string& text) {
    Parser p(text);
    std::vector<Int> coeffs;
    auto add_term = [&coeffs](const Int& c, long e) {
        if (e < 0 || e > 100000) throw std::invalid_argument("bad exponent");
        if (coeffs.size() <= static_cast<size_t>(e)) coeffs.resize(e + 1, Int(0));
        coeffs[e] += c;
    };
    bool any = false;
    while (true) {
        p.skip_ws();
        if (p.i >= p.s.size()) break;
        int sign = 1;
        while (p.peek('+') || p.peek('-')) {
            if (p.eat('-'))
                sign = -sign;
            else
                p.eat('+');
        }
        p.skip_ws();
        if (p.i >= p.s.size()) throw std::invalid_argument("dangling sign in polynomial");
        Int coef(1);
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(p.s[p.i]))) {
            coef = p.integer();
            saw_coef = true;
        }
        p.eat('*');
        long expo = 0;
        if (p.peek('x') || p.peek('X')) {
            ++p.i;
            expo = 1;
            if (p.eat('^')) expo = p.integer().get_si();
        } else if (!saw_coef) {
            throw std::invalid_argument("expected term in polynomial");
        }
        add_term(sign * coef, expo);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return IntPoly(std::move(coeffs));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    // primitive PRS; content is irrelevant for the gcd of primitive parts
    while (!g.is_zero()) {
        // pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g
        int k = f.degree() - g.degree() + 1;
        IntPoly r = f;
        Int glc = g.lc();
        for (int step = 0; step < k && !r.is_zero() && r.degree() >= g.degree();
             ++step) {
            Int fc = r.lc();
            int off = r.degree() - g.degree();
            std::vector<Int> rc(r.coeffs());
            for (auto& v : rc) v *= glc;
            for (int j = 0; j <= g.degree(); ++j) rc[off + j] -= fc * g[j];
            r = IntPoly(std::move(rc));
        }
        f = g;
        g = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return f.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p.primitive_part();
    return p.primitive_part().divexact(g);
}

}  // namespace univoq
