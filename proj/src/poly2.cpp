#include "quasiphase/poly2.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quasiphase {

Poly2 Poly2::constant(const Rat& c) { return term(c, 0, 0); }

Poly2 Poly2::term(const Rat& c, int i, int j) {
    Poly2 p;
    p.add_term(c, i, j);
    return p;
}

int Poly2::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
}

Rat Poly2::coeff(int i, int j) const {
    auto it = terms_.find(Mono{i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

std::pair<Mono, Rat> Poly2::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return *terms_.begin();
}

bool Poly2::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void Poly2::add_term(const Rat& c, int i, int j) {
    if (i < 0 || j < 0) throw std::domain_error("negative exponent in polynomial term");
    if (c.is_zero()) return;
    Mono m{i, j};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
    Rat acc;
    for (const auto& [m, c] : terms_) acc += c * pow(x, m.i) * pow(y, m.j);
    return acc;
}

double Poly2::eval(double x, double y) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) acc += c.to_double() * std::pow(x, m.i) * std::pow(y, m.j);
    return acc;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m.i, m.j);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m.i, m.j);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.i + mb.i, ma.j + mb.j);
    return r;
}

Poly2 operator*(const Rat& s, const Poly2& a) {
    Poly2 r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(s * c, m.i, m.j);
    return r;
}

std::string Poly2::str(const std::string& xname, const std::string& yname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (m.degree() == 0) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (mag != Rat(1)) {
            os << mag;
            need_star = true;
        }
        auto factor = [&](const std::string& name, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        factor(xname, m.i);
        factor(yname, m.j);
    }
    return os.str();
}

Poly2 add(const Poly2& p, const Poly2& q) { return p + q; }
Poly2 mul(const Poly2& p, const Poly2& q) { return p * q; }

Poly2 pow(const Poly2& p, int e) {
    if (e < 0) throw std::domain_error("negative polynomial power");
    Poly2 r = Poly2::constant(Rat(1));
    for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

Poly2 partial(const Poly2& p, Axis var) {
    Poly2 r;
    for (const auto& [m, c] : p.terms()) {
        if (var == Axis::X && m.i > 0) r.add_term(c * Rat(m.i), m.i - 1, m.j);
        if (var == Axis::Y && m.j > 0) r.add_term(c * Rat(m.j), m.i, m.j - 1);
    }
    return r;
}

std::vector<std::pair<int, Poly2>> homogeneous_parts(const Poly2& p) {
    std::map<int, Poly2> parts;
    for (const auto& [m, c] : p.terms()) parts[m.degree()].add_term(c, m.i, m.j);
    return {parts.begin(), parts.end()};
}

UPoly restrict_u(const Poly2& p) {
    std::vector<Rat> v(static_cast<size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [m, c] : p.terms()) v[static_cast<size_t>(m.j)] += c;
    return UPoly(std::move(v));
}

UPoly restrict_v(const Poly2& p) {
    std::vector<Rat> v(static_cast<size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [m, c] : p.terms()) v[static_cast<size_t>(m.i)] += c;
    return UPoly(std::move(v));
}

Poly2 swap_variables(const Poly2& p) {
    Poly2 r;
    for (const auto& [m, c] : p.terms()) r.add_term(c, m.j, m.i);
    return r;
}

Poly2 compose(const Poly2& p, const Poly2& xs, const Poly2& ys) {
    Poly2 r;
    for (const auto& [m, c] : p.terms()) r += c * (pow(xs, m.i) * pow(ys, m.j));
    return r;
}

std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    auto [ld, cd] = d.leading();
    Poly2 q, r = p;
    while (!r.is_zero()) {
        auto [lr, cr] = r.leading();
        if (lr.i < ld.i || lr.j < ld.j) return std::nullopt;
        Poly2 t = Poly2::term(cr / cd, lr.i - ld.i, lr.j - ld.j);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly2 homogenize_slope(const UPoly& f) {
    Poly2 r;
    int k = f.degree();
    for (int e = 0; e <= k; ++e) r.add_term(f.coeff(e), k - e, e);
    return r;
}

} // namespace quasiphase
