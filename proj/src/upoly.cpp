#include "quasiphase/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quasiphase {

UPoly::UPoly(std::initializer_list<Rat> low_to_high) : c_(low_to_high) { trim(); }
UPoly::UPoly(std::vector<Rat> low_to_high) : c_(std::move(low_to_high)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(k)];
}

Rat UPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat UPoly::eval(const Rat& u) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double UPoly::eval(double u) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + it->to_double();
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return UPoly(std::move(d));
}

UPoly UPoly::derivative(int k) const {
    UPoly r = *this;
    for (int i = 0; i < k; ++i) r = r.derivative();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rat lc = leading();
    std::vector<Rat> v = c_;
    for (auto& x : v) x /= lc;
    return UPoly(std::move(v));
}

int UPoly::trailing_zero_order() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return 0;
}

UPoly UPoly::reflect() const {
    std::vector<Rat> v = c_;
    for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

UPoly operator*(const Rat& s, const UPoly& a) {
    std::vector<Rat> v = a.c_;
    for (auto& x : v) x *= s;
    return UPoly(std::move(v));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c.is_zero()) continue;
        Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rat(1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly r = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0);
    Rat lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat f = r.leading() / lb;
        q[static_cast<size_t>(shift)] += f;
        r = r - UPoly::monomial(f, shift) * b;
    }
    return {UPoly(std::move(q)), r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<int, UPoly>> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<std::pair<int, UPoly>> out;
    if (f.degree() == 0) return out;
    UPoly fm = f.monic();
    UPoly d = fm.derivative();
    UPoly a = gcd(fm, d);
    UPoly b = divmod(fm, a).first;
    UPoly c = divmod(d, a).first;
    UPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(i, g.monic());
        b = divmod(b, g).first;
        c = divmod(e, g).first;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

UPoly primitive_integer(const UPoly& f) {
    if (f.is_zero()) return {};
    BigInt l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.den());
    BigInt g = 0;
    std::vector<BigInt> ints;
    for (const auto& c : f.coeffs()) {
        BigInt v = c.num() * (l / c.den());
        ints.push_back(v);
        g = gcd(g, v);
    }
    if (f.leading().sign() < 0) g = -g;
    std::vector<Rat> out;
    for (auto& v : ints) out.emplace_back(BigInt(v / g));
    return UPoly(std::move(out));
}

} // namespace quasiphase
