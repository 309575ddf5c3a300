#include "quasiphase/analysis.hpp"

#include "quasiphase/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace quasiphase {

namespace {

constexpr const char* kBlowUp = "blow-up characteristic-direction criterion";
constexpr const char* kTangency = "vertical tangency criterion";
constexpr const char* kCenter = "homogeneous global center criterion";
constexpr int kCenterManifoldOrder = 6;

/// Coefficients of the terms free of z, as a polynomial in the chart variable.
UPoly restrict_z0(const Poly2& p) {
    std::vector<Rat> c;
    for (const auto& [m, v] : p.terms())
        if (m.j == 0) {
            if (c.size() <= static_cast<size_t>(m.i)) c.resize(static_cast<size_t>(m.i) + 1, Rat(0));
            c[static_cast<size_t>(m.i)] = v;
        }
    return UPoly(std::move(c));
}

int min_z_power(const Poly2& p) {
    int k = -1;
    for (const auto& [m, c] : p.terms()) k = k < 0 ? m.j : std::min(k, m.j);
    return k;
}

Poly2 drop_z(const Poly2& p, int k) {
    Poly2 r;
    for (const auto& [m, c] : p.terms()) r.add_term(c, m.i, m.j - k);
    return r;
}

/// Cancels the largest common power of z when both components are non-zero.
ChartSys finish_chart(Poly2 f, Poly2 g, bool reduce) {
    ChartSys out{std::move(f), std::move(g), 0, false};
    if (!reduce || out.f.is_zero() || out.g.is_zero()) return out;
    int k = std::min(min_z_power(out.f), min_z_power(out.g));
    if (k > 0) {
        out.f = drop_z(out.f, k);
        out.g = drop_z(out.g, k);
        out.z_power_removed = k;
        out.line_filled = true;
    }
    return out;
}

using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b) {
    Series r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// p(a, h(a)) truncated to the length of h.
Series series_eval(const Poly2& p, const Series& h) {
    size_t n = h.size();
    Series r(n, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        Series t(n, Rat(0));
        if (static_cast<size_t>(m.i) >= n) continue;
        t[static_cast<size_t>(m.i)] = c;
        for (int k = 0; k < m.j; ++k) t = series_mul(t, h);
        for (size_t k = 0; k < n; ++k) r[k] += t[k];
    }
    return r;
}

SingularityClass center_manifold(const ChartSys& chart, const Rat& u0) {
    Poly2 F = compose(chart.f, Poly2::x() + Poly2::constant(u0), Poly2::y());
    Poly2 G = compose(chart.g, Poly2::x() + Poly2::constant(u0), Poly2::y());
    Rat a11 = F.coeff(1, 0), a12 = F.coeff(0, 1), a21 = G.coeff(1, 0), a22 = G.coeff(0, 1);
    Rat lambda = a11 + a22;

    std::array<Rat, 2> v0 = !(a11.is_zero() && a12.is_zero()) ? std::array<Rat, 2>{a12, -a11}
                                                               : std::array<Rat, 2>{a22, -a21};
    std::array<Rat, 2> v1{a12, lambda - a11};
    if (v1[0].is_zero() && v1[1].is_zero()) v1 = {lambda - a22, a21};
    Rat det = v0[0] * v1[1] - v1[0] * v0[1];
    Poly2 X = v0[0] * Poly2::x() + v1[0] * Poly2::y();
    Poly2 Z = v0[1] * Poly2::x() + v1[1] * Poly2::y();
    Poly2 Fa = compose(F, X, Z), Ga = compose(G, X, Z);
    // inverse of [v0 v1]
    Poly2 A = (v1[1] / det) * Fa - (v1[0] / det) * Ga;
    Poly2 B = (v0[0] / det) * Ga - (v0[1] / det) * Fa;

    const size_t n = kCenterManifoldOrder + 1;
    Series h(n, Rat(0));
    for (size_t k = 2; k < n; ++k) {
        Series dh(n, Rat(0));
        for (size_t j = 1; j < n; ++j) dh[j - 1] = Rat(static_cast<long>(j)) * h[j];
        Series lhs = series_mul(dh, series_eval(A, h));
        Series rhs = series_eval(B, h);
        h[k] = (lhs[k] - rhs[k]) / lambda;
    }
    Series reduced = series_eval(A, h);
    for (size_t m = 2; m < n; ++m) {
        if (reduced[m].is_zero()) continue;
        SingularityClass out;
        if (m % 2 == 0) {
            out.kind = SingKind::SaddleNode;
        } else if ((reduced[m] / lambda).sign() > 0) {
            out.kind = SingKind::Node;
            out.stability = lambda.sign();
        } else {
            out.kind = SingKind::Saddle;
        }
        out.note = "semi-hyperbolic, center-manifold leading order " + std::to_string(m);
        return out;
    }
    return {SingKind::NeedsBlowUp, std::nullopt,
            "center-manifold expansion vanishes through order " + std::to_string(kCenterManifoldOrder)};
}

std::string slope_text(const RealRoot& r) {
    if (!r.is_exact()) return "u0*x, u0 in " + r.str();
    const Rat& v = r.value();
    if (v.is_zero()) return "0";
    if (v == Rat(1)) return "x";
    if (v == Rat(-1)) return "-x";
    return v.str() + "*x";
}

} // namespace

std::string to_string(SingKind k) {
    switch (k) {
    case SingKind::Saddle: return "saddle";
    case SingKind::Node: return "node";
    case SingKind::SaddleNode: return "saddle-node";
    case SingKind::Focus: return "focus";
    case SingKind::Center: return "center";
    case SingKind::LineAtInfinity: return "degenerate-line-at-infinity";
    case SingKind::ConstantField: return "constant-field";
    case SingKind::NeedsBlowUp: return "needs-blow-up";
    case SingKind::Degenerate: return "degenerate";
    }
    return "?";
}

std::string to_string(Tangency t) {
    switch (t) {
    case Tangency::None: return "none";
    case Tangency::One: return "one";
    case Tangency::InfinitelyMany: return "infinitely-many";
    }
    return "?";
}

Poly2 g_poly(const HomogSys& hs) { return Poly2::x() * hs.qn - Poly2::y() * hs.pn; }

Poly2 h_poly(const HomogSys& hs) { return Poly2::y() * hs.qn + Poly2::x() * hs.pn; }

std::string CharDir::str() const {
    std::string dir = slope ? "u = " + slope->str() : std::string("vertical");
    return dir + " (m = " + std::to_string(multiplicity) + ")";
}

std::vector<CharDir> characteristic_directions(const HomogSys& hs) {
    Poly2 G = g_poly(hs);
    if (G.is_zero())
        throw DomainError("xQ - yP vanishes identically: every direction is characteristic", kBlowUp);
    std::vector<CharDir> out;
    UPoly gu = restrict_u(G), pu = restrict_u(hs.pn);
    if (gu.degree() > 0)
        for (const auto& [root, m] : real_roots(gu))
            out.push_back({root, m, root.sign_of(pu), root.sign_of(gu.derivative(m))});
    UPoly gv = restrict_v(G);
    int mv = gv.trailing_zero_order();
    if (mv > 0) {
        int s = gv.coeff(mv).sign() * (mv % 2 == 0 ? 1 : -1);
        out.push_back({std::nullopt, mv, h_poly(hs).coeff(0, hs.n + 1).sign(), s});
    }
    return out;
}

SingularityClass classify_direction(const CharDir& cd, const HomogSys&) {
    if (cd.vertical()) throw std::invalid_argument("classify_direction needs a non-vertical direction");
    if (cd.multiplicity % 2 == 0) return {SingKind::SaddleNode, std::nullopt, kBlowUp};
    int s = cd.sign_p * cd.sign_gm;
    if (s < 0) return {SingKind::Saddle, std::nullopt, kBlowUp};
    return {SingKind::Node, std::nullopt, kBlowUp};
}

Tangency vertical_tangency(const HomogSys& hs) {
    for (const auto& cd : characteristic_directions(hs)) {
        if (!cd.vertical()) continue;
        if (cd.sign_p == 0)
            throw DomainError("H vanishes on the vertical characteristic direction", kTangency);
        if (cd.multiplicity % 2 == 0) return Tangency::InfinitelyMany;
        return cd.sign_gm * cd.sign_p > 0 ? Tangency::InfinitelyMany : Tangency::One;
    }
    return Tangency::None;
}

double vertical_g_derivative_numeric(const HomogSys& hs, int m) {
    Poly2 G = g_poly(hs);
    auto f = [&](double t) { return G.eval(std::cos(t), std::sin(t)); };
    const double h = 1e-2, t0 = std::numbers::pi / 2;
    double sum = 0, binom = 1;
    for (int k = 0; k <= m; ++k) {
        sum += (k % 2 == 0 ? 1 : -1) * binom * f(t0 + (m / 2.0 - k) * h);
        binom = binom * (m - k) / (k + 1);
    }
    return sum / std::pow(h, m);
}

std::string InvariantLine::str() const {
    if (vertical()) return "x = 0";
    return "y = " + slope_text(*slope);
}

std::vector<InvariantLine> invariant_lines(const HomogSys& hs) {
    Poly2 G = g_poly(hs);
    std::vector<InvariantLine> out;
    if (G.is_zero()) return out;
    if (restrict_v(G).trailing_zero_order() > 0) out.push_back({std::nullopt});
    UPoly gu = restrict_u(G);
    if (gu.degree() > 0)
        for (const auto& rm : real_roots(gu)) out.push_back({rm.root});
    return out;
}

CenterTest global_center_test(const HomogSys& hs) {
    if (hs.n % 2 == 0)
        throw DomainError("a homogeneous system of even degree " + std::to_string(hs.n) +
                              " cannot have a center",
                          kCenter);
    CenterTest out;
    Poly2 G = g_poly(hs);
    if (G.is_zero()) throw DomainError("xQ - yP vanishes identically", kCenter);
    if (restrict_v(G).trailing_zero_order() > 0) {
        out.reason = "x = 0 is an invariant line";
        return out;
    }
    UPoly gu = restrict_u(G), pu = restrict_u(hs.pn);
    if (gu.degree() > 0 && !real_roots(gu).empty()) {
        out.reason = "G(1,u) has a real root, giving an invariant line";
        return out;
    }
    if (pu.reflect() * gu == -(pu * gu.reflect())) {
        out.center = true;
        out.symbolic = true;
        out.reason = "Pn(1,u)/G(1,u) is odd";
        return out;
    }
    // u = tan t; the paired integrand is bounded near t = pi/2.
    auto integrand = [&](double t) {
        double c = std::cos(t), s = std::sin(t);
        return (hs.pn.eval(c, s) / G.eval(c, s) + hs.pn.eval(c, -s) / G.eval(c, -s)) / c;
    };
    double err = 0;
    out.integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0,
                                                                                   std::numbers::pi / 2, 15,
                                                                                   1e-12, &err);
    out.error_estimate = err;
    out.center = std::abs(out.integral) <= std::max(1e-9, 10 * err);
    out.reason = out.center ? "integral vanishes within quadrature tolerance" : "integral is non-zero: focus";
    return out;
}

ChartSys compactify_u(const PolySys& sys) {
    int d = sys.degree();
    int mult = d >= 1 ? d - 1 : 0;
    Poly2 f, g;
    for (const auto& [m, c] : sys.q.terms()) f.add_term(c, m.j, 1 + mult - m.i - m.j);
    for (const auto& [m, c] : sys.p.terms()) {
        f.add_term(-c, m.j + 1, 1 + mult - m.i - m.j);
        g.add_term(-c, m.j, 2 + mult - m.i - m.j);
    }
    return finish_chart(std::move(f), std::move(g), d >= 1);
}

ChartSys compactify_v(const PolySys& sys) {
    int d = sys.degree();
    int mult = d >= 1 ? d - 1 : 0;
    Poly2 f, g;
    for (const auto& [m, c] : sys.p.terms()) f.add_term(c, m.i, 1 + mult - m.i - m.j);
    for (const auto& [m, c] : sys.q.terms()) {
        f.add_term(-c, m.i + 1, 1 + mult - m.i - m.j);
        g.add_term(-c, m.i, 2 + mult - m.i - m.j);
    }
    return finish_chart(std::move(f), std::move(g), d >= 1);
}

SingularityClass classify_chart_point(const ChartSys& chart, const RealRoot& u0) {
    UPoly fu = restrict_z0(partial(chart.f, Axis::X)), fz = restrict_z0(partial(chart.f, Axis::Y));
    UPoly gu = restrict_z0(partial(chart.g, Axis::X)), gz = restrict_z0(partial(chart.g, Axis::Y));
    UPoly det = fu * gz - fz * gu, tr = fu + gz;
    UPoly disc = tr * tr - Rat(4) * det;
    int sdet = u0.sign_of(det), str = u0.sign_of(tr);
    if (sdet < 0) return {SingKind::Saddle, std::nullopt, "hyperbolic"};
    if (sdet > 0) {
        if (u0.sign_of(disc) >= 0) return {SingKind::Node, str, "hyperbolic"};
        if (str != 0) return {SingKind::Focus, str, "hyperbolic"};
        return {SingKind::Center, std::nullopt, "linear center"};
    }
    if (str == 0) return {SingKind::NeedsBlowUp, std::nullopt, "nilpotent or zero linear part"};
    if (!u0.is_exact())
        return {SingKind::NeedsBlowUp, std::nullopt, "semi-hyperbolic point in an irrational direction"};
    return center_manifold(chart, u0.value());
}

InfinityReport infinity_report(const PolySys& sys) {
    InfinityReport out;
    out.u_chart = compactify_u(sys);
    out.v_chart = compactify_v(sys);
    ChartSys u = out.u_chart, v = out.v_chart;
    if (sys.degree() == 0) {
        // constant fields keep a spurious factor z in both charts
        u = finish_chart(u.f, u.g, true);
        v = finish_chart(v.f, v.g, true);
        u.line_filled = v.line_filled = false;
    }
    out.line_filled = u.line_filled;

    UPoly F = restrict_z0(u.f), Gz = restrict_z0(u.g);
    bool whole_line = F.is_zero() && Gz.is_zero();
    if (whole_line) {
        out.line_filled = true;
        out.chart_v_origin = SingularityClass{SingKind::LineAtInfinity, std::nullopt, "equator of singular points"};
        return out;
    }
    {
        UPoly cand = F.is_zero() ? Gz : (Gz.is_zero() ? F : gcd(F, Gz));
        if (cand.degree() > 0)
            for (const auto& rm : real_roots(cand)) out.chart_u.push_back({rm.root, classify_chart_point(u, rm.root)});
    }
    if (v.f.coeff(0, 0).is_zero() && v.g.coeff(0, 0).is_zero())
        out.chart_v_origin = classify_chart_point(v, RealRoot::exact(Rat(0)));
    return out;
}

} // namespace quasiphase
