#include "quasiphase/gcd.hpp"

#include <stdexcept>
#include <vector>

namespace quasiphase {

namespace {

// Polynomial in y with coefficients in Q[x]; index is the power of y.
using YPoly = std::vector<UPoly>;

YPoly to_ypoly(const Poly2& p) {
    YPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(r.size()) <= m.j) r.resize(static_cast<size_t>(m.j) + 1);
        r[static_cast<size_t>(m.j)] = r[static_cast<size_t>(m.j)] + UPoly::monomial(c, m.i);
    }
    return r;
}

Poly2 from_ypoly(const YPoly& a) {
    Poly2 r;
    for (size_t j = 0; j < a.size(); ++j)
        for (int i = 0; i <= a[j].degree(); ++i) r.add_term(a[j].coeff(i), i, static_cast<int>(j));
    return r;
}

void trim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly content(const YPoly& a) {
    UPoly g;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

YPoly primitive_part(const YPoly& a) {
    UPoly c = content(a);
    YPoly r;
    for (const auto& coef : a) r.push_back(divmod(coef, c).first);
    trim(r);
    return r;
}

YPoly pseudo_remainder(YPoly a, const YPoly& b) {
    int n = ydeg(b);
    const UPoly& lb = b.back();
    trim(a);
    while (!a.empty() && ydeg(a) >= n) {
        int shift = ydeg(a) - n;
        UPoly la = a.back();
        for (auto& c : a) c = lb * c;
        for (int k = 0; k <= n; ++k) {
            auto idx = static_cast<size_t>(k + shift);
            a[idx] = a[idx] - la * b[static_cast<size_t>(k)];
        }
        trim(a);
    }
    return a;
}

} // namespace

Poly2 normalize_primitive(const Poly2& p) {
    if (p.is_zero()) return p;
    BigInt l = 1;
    for (const auto& [m, c] : p.terms()) l = lcm(l, c.den());
    BigInt g = 0;
    for (const auto& [m, c] : p.terms()) g = gcd(g, c.num() * (l / c.den()));
    Rat scale(l, g);
    if (p.leading().second.sign() < 0) scale = -scale;
    return scale * p;
}

Poly2 gcd_bivariate(const Poly2& p, const Poly2& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd of two zero polynomials is undefined");
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);

    YPoly a = to_ypoly(p), b = to_ypoly(q);
    UPoly cont = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (ydeg(a) < ydeg(b)) std::swap(a, b);
    while (true) {
        if (ydeg(b) <= 0) {
            b = YPoly{UPoly::constant(Rat(1))};
            break;
        }
        YPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        a = std::move(b);
        b = primitive_part(r);
    }
    YPoly g;
    for (const auto& c : b) g.push_back(cont * c);
    return normalize_primitive(from_ypoly(g));
}

bool coprime(const Poly2& p, const Poly2& q) { return gcd_bivariate(p, q).is_constant(); }

} // namespace quasiphase
