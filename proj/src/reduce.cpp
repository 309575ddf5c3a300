#include "quasiphase/reduce.hpp"

#include "quasiphase/errors.hpp"
#include "quasiphase/gcd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quasiphase {

namespace {

constexpr const char* kReduction = "reduction to the associated homogeneous system";

double real_pow(double v, const Rat& e) {
    if (e.is_zero()) return 1.0;
    if (v >= 0) return std::pow(v, e.to_double());
    if (e.den() % 2 == 0) throw DomainError("even root of a negative base", kReduction);
    double m = std::pow(-v, e.to_double());
    return e.num() % 2 == 0 ? m : -m;
}

std::string power(const std::string& name, const Rat& e) {
    if (e == Rat(1)) return name;
    return name + "^" + e.str();
}

void add_divided(Poly2& out, const std::vector<FracTerm>& terms, const FracMono& r) {
    for (const auto& t : terms) {
        Rat p = t.p - r.p, q = t.q - r.q;
        if (!p.is_integer() || !q.is_integer() || p.sign() < 0 || q.sign() < 0)
            throw DomainError("time rescaling leaves the non-integer exponent pair (" + p.str() + ", " + q.str() +
                                  ")",
                              kReduction);
        out.add_term(t.c, static_cast<int>(p.num().get_si()), static_cast<int>(q.num().get_si()));
    }
}

} // namespace

std::string FracMono::str(const std::string& xname, const std::string& yname) const {
    if (is_one()) return "1";
    std::string s;
    if (!p.is_zero()) s = power(xname, p);
    if (!q.is_zero()) s += (s.empty() ? "" : " * ") + power(yname, q);
    return s;
}

double FracMono::eval(double X, double Y) const { return real_pow(X, p) * real_pow(Y, q); }

std::string to_string(Quadrant q) {
    switch (q) {
    case Quadrant::XPositive: return "x>0";
    case Quadrant::YPositive: return "y>0";
    case Quadrant::FirstQuadrant: return "x>0,y>0";
    }
    return "?";
}

bool in_quadrant(Quadrant q, double x, double y) {
    switch (q) {
    case Quadrant::XPositive: return x > 0;
    case Quadrant::YPositive: return y > 0;
    case Quadrant::FirstQuadrant: return x > 0 && y > 0;
    }
    return false;
}

std::string to_string(HomogKind k) {
    switch (k) {
    case HomogKind::H0: return "H0";
    case HomogKind::H1: return "H1";
    case HomogKind::H2: return "H2";
    }
    return "?";
}

FracMonoField pushforward_field(const PolySys& sys, const WeightVector& w) {
    FracMonoField out;
    Rat s1(w.s1), s2(w.s2);
    for (const auto& [m, c] : sys.p.terms())
        out.f.push_back({s2 * c, Rat(w.s2 - 1 + m.i) / s2, Rat(m.j) / s1});
    for (const auto& [m, c] : sys.q.terms())
        out.g.push_back({s1 * c, Rat(m.i) / s2, Rat(w.s1 - 1 + m.j) / s1});
    return out;
}

Reduction reduce(const PolySys& sys, const WeightVector& w) {
    if (!verify_weight(sys, w))
        throw DomainError("weight vector " + w.str() + " does not satisfy the scaling law of the system",
                          "quasi-homogeneous scaling law");
    if (w.homogeneous())
        throw DomainError("equal weight exponents: the system is already homogeneous",
                          "quasi-homogeneous non-homogeneous scope");

    FracMonoField field = pushforward_field(sys, w);
    FracMono r{field.f.front().p, field.f.front().q};
    for (const auto* comp : {&field.f, &field.g})
        for (const auto& t : *comp) {
            r.p = std::min(r.p, t.p);
            r.q = std::min(r.q, t.q);
        }

    Reduction red;
    red.source = sys;
    red.weight = w;
    red.rescale = r;
    add_divided(red.target.pn, field.f, r);
    add_divided(red.target.qn, field.g, r);
    const Poly2 &pn = red.target.pn, &qn = red.target.qn;
    if (!pn.is_homogeneous() || !qn.is_homogeneous() || pn.degree() != qn.degree())
        throw DomainError("rescaled field " + red.target.str() + " is not homogeneous", kReduction);
    red.target.n = pn.degree();
    if (red.target.n > 2)
        throw DomainError("reduced degree " + std::to_string(red.target.n) + " exceeds 2", kReduction);

    Poly2 g = gcd_bivariate(pn, qn);
    red.coprime_target = g.is_constant();
    if (!red.coprime_target) red.diagnostics.push_back("reduced components share the factor " + g.str());

    SymmetryKind sym = symmetry_class(w).kind;
    if (red.target.n == 0) {
        red.quadrant = Quadrant::FirstQuadrant;
        red.diagnostics.push_back("constant reduced field: analysis restricted to the open first quadrant "
                                  "instead of the symmetry half-plane " +
                                  to_string(sym == SymmetryKind::ReflectY ? Quadrant::YPositive
                                                                          : Quadrant::XPositive));
    } else {
        red.quadrant = sym == SymmetryKind::ReflectY ? Quadrant::YPositive : Quadrant::XPositive;
    }
    red.inverse_map = "x = X^(1/" + std::to_string(w.s2) + "), y = Y^(1/" + std::to_string(w.s1) + ")";
    return red;
}

HomogKind classify_target(const Reduction& red) {
    const Poly2 &p = red.target.pn, &q = red.target.qn;
    auto fail = [](const std::string& c) -> HomogKind {
        throw DomainError("reduced system violates the constraint " + c, "homogeneous reduction theorem");
    };
    switch (red.target.n) {
    case 0:
        if (p.coeff(0, 0).is_zero() || q.coeff(0, 0).is_zero()) fail("c0 d0 != 0");
        return HomogKind::H0;
    case 1: {
        Rat c10 = p.coeff(1, 0), c01 = p.coeff(0, 1), d10 = q.coeff(1, 0), d01 = q.coeff(0, 1);
        bool ok = !(c01 * d10).is_zero() || (d10.is_zero() && !(c01 * c10 * d01).is_zero()) ||
                  (c01.is_zero() && !(c10 * d01 * d10).is_zero());
        if (!ok) fail("c01 d10 != 0, or d10 = 0 and c01 c10 d01 != 0, or c01 = 0 and c10 d01 d10 != 0");
        return HomogKind::H1;
    }
    case 2: {
        Rat c20 = p.coeff(2, 0), c02 = p.coeff(0, 2), d20 = q.coeff(2, 0), d02 = q.coeff(0, 2);
        bool ok = !(c02 * d20).is_zero() || (c02.is_zero() && d20.is_zero() && !(c20 * d02).is_zero());
        if (!ok) fail("c02 d20 != 0, or c02 = d20 = 0 and c20 d02 != 0");
        return HomogKind::H2;
    }
    default: fail("degree in {0, 1, 2}");
    }
    return HomogKind::H0;
}

double pushforward_check(const PolySys& sys, const Reduction& red, std::array<double, 2> pt) {
    auto [x, y] = pt;
    if (!in_quadrant(red.quadrant, x, y))
        throw DomainError("point lies outside the region " + to_string(red.quadrant), kReduction);
    const WeightVector& w = red.weight;
    auto rel = [](double l, double r) {
        double s = std::max(std::abs(l), std::abs(r));
        return s == 0 ? 0.0 : std::abs(l - r) / s;
    };
    if (red.rescale.is_one()) {
        Rat xr = Rat::from_double(x), yr = Rat::from_double(y);
        Rat X = pow(xr, static_cast<int>(w.s2)), Y = pow(yr, static_cast<int>(w.s1));
        Rat lf = Rat(w.s2) * pow(xr, static_cast<int>(w.s2 - 1)) * sys.p.eval(xr, yr);
        Rat lg = Rat(w.s1) * pow(yr, static_cast<int>(w.s1 - 1)) * sys.q.eval(xr, yr);
        Rat rf = red.target.pn.eval(X, Y), rg = red.target.qn.eval(X, Y);
        auto exact_rel = [&](const Rat& l, const Rat& r) {
            return l == r ? 0.0 : rel(l.to_double(), r.to_double());
        };
        return std::max(exact_rel(lf, rf), exact_rel(lg, rg));
    }
    double X = std::pow(x, static_cast<double>(w.s2)), Y = std::pow(y, static_cast<double>(w.s1));
    double lf = static_cast<double>(w.s2) * std::pow(x, static_cast<double>(w.s2 - 1)) * sys.p.eval(x, y);
    double lg = static_cast<double>(w.s1) * std::pow(y, static_cast<double>(w.s1 - 1)) * sys.q.eval(x, y);
    double m = red.rescale.eval(X, Y);
    return std::max(rel(lf, m * red.target.pn.eval(X, Y)), rel(lg, m * red.target.qn.eval(X, Y)));
}

} // namespace quasiphase
