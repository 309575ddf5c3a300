#include <doctest.h>

#include "oracles.hpp"
#include "quasiphase/errors.hpp"

#include <cmath>

using namespace quasiphase;
using qp_test::P;
using qp_test::S;

namespace {

/// Reduced 3d family: x' = x(x + a y), y' = 2y(b x + y).
HomogSys tilde_3d(const Rat& a, const Rat& b) {
    return {P("x^2") + a * P("x*y"), Rat(2) * b * P("x*y") + P("2y^2"), 2};
}

PolySys family_3d(const Rat& a, const Rat& b) {
    return {P("x^2") + a * P("x*y^2"), b * P("x*y") + P("y^3")};
}

HomogSys H(const std::string& s, int n) {
    PolySys sys = S(s);
    return {sys.p, sys.q, n};
}

Rat R(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }

} // namespace

TEST_CASE("g_poly and h_poly") {
    CHECK(g_poly(H("dx = x; dy = -y", 1)) == P("-2x*y"));
    CHECK(g_poly(H("dx = y; dy = -x", 1)) == P("-x^2 - y^2"));
    Rat a(3), b(1);
    Poly2 g2 = g_poly(tilde_3d(a, b));
    CHECK(restrict_u(g2) == UPoly{Rat(0), Rat(2) * b - Rat(1), Rat(2) - a});

    CHECK(h_poly(H("dx = y; dy = -x", 1)).is_zero());
    CHECK(h_poly(H("dx = x; dy = y", 1)) == P("x^2 + y^2"));
    CHECK(h_poly(H("dx = x; dy = -y", 1)) == P("x^2 - y^2"));
}

TEST_CASE("characteristic directions of the reduced 3d family") {
    auto cds = characteristic_directions(tilde_3d(3, 1));
    REQUIRE(cds.size() == 3);
    CHECK(cds[0].slope->value() == Rat(0));
    CHECK(cds[0].multiplicity == 1);
    CHECK(cds[1].slope->value() == Rat(1));
    CHECK(cds[1].multiplicity == 1);
    // G(v,1) = (2b-1)v^2 + (2-a)v vanishes simply at v = 0
    CHECK(cds[2].vertical());
    CHECK(cds[2].multiplicity == 1);

    auto half = characteristic_directions(tilde_3d(3, R(1, 2)));
    REQUIRE(half.size() == 2);
    CHECK(half[0].slope->value() == Rat(0));
    CHECK(half[0].multiplicity == 2);

    CHECK(characteristic_directions(H("dx = y; dy = -x", 1)).empty());
    CHECK_THROWS_AS(characteristic_directions(H("dx = x; dy = y", 1)), DomainError);
}

TEST_CASE("classify_direction") {
    HomogSys hs = tilde_3d(3, 1);
    auto cds = characteristic_directions(hs);
    // P(1,0) = 1, G'(1,0) = 2b - 1 = 1
    CHECK(classify_direction(cds[0], hs).kind == SingKind::Node);
    // P(1,1) = 4, G'(1,1) = -1
    CHECK(classify_direction(cds[1], hs).kind == SingKind::Saddle);
    CHECK_THROWS(classify_direction(cds[2], hs));

    HomogSys sn = tilde_3d(3, R(1, 2));
    CHECK(classify_direction(characteristic_directions(sn)[0], sn).kind == SingKind::SaddleNode);

    HomogSys s = tilde_3d(R(3, 2), R(1, 4));
    CHECK(classify_direction(characteristic_directions(s)[0], s).kind == SingKind::Saddle);
}

TEST_CASE("vertical tangency") {
    CHECK(vertical_tangency(tilde_3d(3, 1)) == Tangency::InfinitelyMany);
    CHECK(vertical_tangency(tilde_3d(1, R(3, 4))) == Tangency::One);
    CHECK(vertical_tangency(tilde_3d(R(3, 2), R(1, 4))) == Tangency::One);
    CHECK(vertical_tangency(H("dx = y; dy = -x", 1)) == Tangency::None);
    // x' = y^2, y' = x^2 - ... has G = x^3 - y^3 with no vertical root
    CHECK(vertical_tangency(H("dx = y^2; dy = x^2", 2)) == Tangency::None);
}

TEST_CASE("vertical derivative sign agrees with numeric differentiation") {
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        HomogSys hs{qp_test::random_homogeneous(rng, n), qp_test::random_homogeneous(rng, n), n};
        // force x | G by making Pn(0,1) = 0
        hs.pn = hs.pn - Poly2::term(hs.pn.coeff(0, n), 0, n);
        if (hs.pn.is_zero() || g_poly(hs).is_zero()) continue;
        for (const auto& cd : characteristic_directions(hs)) {
            if (!cd.vertical()) continue;
            double d = vertical_g_derivative_numeric(hs, cd.multiplicity);
            CHECK(((d > 0) - (d < 0)) == cd.sign_gm);
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("invariant lines") {
    Rat a(3);
    auto lines = invariant_lines(tilde_3d(a, R(1, 4)));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].str() == "x = 0");
    // u1 = (1 - 2b)/(2 - a), listed in increasing slope order
    CHECK(lines[1].slope->value() == (Rat(1) - Rat(2) * R(1, 4)) / (Rat(2) - a));
    CHECK(lines[1].str() == "y = -1/2*x");
    CHECK(lines[2].str() == "y = 0");

    auto xy = invariant_lines(H("dx = x; dy = -y", 1));
    REQUIRE(xy.size() == 2);
    CHECK(xy[0].str() == "x = 0");
    CHECK(xy[1].str() == "y = 0");
    CHECK(invariant_lines(H("dx = y; dy = -x", 1)).empty());
}

TEST_CASE("reported invariant lines are tangent to the field") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        HomogSys hs{qp_test::random_homogeneous(rng, n), qp_test::random_homogeneous(rng, n), n};
        Poly2 G = g_poly(hs);
        if (G.is_zero()) continue;
        for (const auto& line : invariant_lines(hs)) {
            if (line.vertical()) {
                CHECK(divide_exact(G, P("x")).has_value());
            } else if (line.slope->is_exact()) {
                Poly2 l = P("y") - line.slope->value() * P("x");
                CHECK(divide_exact(G, l).has_value());
            } else {
                CHECK(divmod(restrict_u(G), line.slope->defining()).second.is_zero());
            }
        }
    }
}

TEST_CASE("global center test") {
    auto c = global_center_test(H("dx = -y^3; dy = x^3", 3));
    CHECK(c.center);
    CHECK(c.symbolic);

    auto f = global_center_test(H("dx = -y^3 + x^3; dy = x^3", 3));
    CHECK_FALSE(f.center);
    CHECK_FALSE(f.symbolic);
    CHECK(std::abs(f.integral) > 1e-3);

    auto num = global_center_test(H("dx = x - 2y; dy = x - y", 1));
    CHECK_FALSE(num.symbolic);
    CHECK(num.center);
    CHECK(std::abs(num.integral) < 1e-9);

    auto focus = global_center_test(H("dx = 1/5x - y; dy = x + 1/5y", 1));
    CHECK_FALSE(focus.center);
    // principal value is pi times the trace ratio
    CHECK(focus.integral == doctest::Approx(std::numbers::pi / 5).epsilon(1e-9));

    CHECK_FALSE(global_center_test(H("dx = x; dy = -y", 1)).center);
    CHECK_THROWS_AS(global_center_test(H("dx = -y^2; dy = x^2", 2)), DomainError);
}

TEST_CASE("compactify_u") {
    Rat a(3), b(R(2, 5));
    ChartSys t = compactify_u(tilde_3d(a, b).sys());
    CHECK(t.f == (Rat(2) - a) * P("x^2") + (Rat(2) * b - Rat(1)) * P("x"));
    CHECK(t.g == -(P("y") * (P("1") + a * P("x"))));
    CHECK_FALSE(t.line_filled);

    ChartSys d = compactify_u(family_3d(a, b));
    CHECK(d.f == (Rat(1) - a) * P("x^3") + (b - Rat(1)) * P("x*y"));
    CHECK(d.g == -(P("y") * (P("y") + a * P("x^2"))));
    CHECK_FALSE(d.line_filled);

    ChartSys c = compactify_u(S("dx = 1; dy = 1"));
    CHECK(c.f == P("y - x*y"));
    CHECK(c.g == P("-y^2"));
    CHECK(c.str("u") == "du = -u*z + z; dz = -z^2");

    ChartSys filled = compactify_u(family_3d(1, b));
    CHECK(filled.line_filled);
    CHECK(filled.z_power_removed == 1);
    CHECK(filled.f == (b - Rat(1)) * P("x"));
}

TEST_CASE("compactify_v") {
    Rat a(3), b(R(2, 5));
    ChartSys t = compactify_v(tilde_3d(a, b).sys());
    CHECK(t.f == (a - Rat(2)) * P("x") + (Rat(1) - Rat(2) * b) * P("x^2"));
    CHECK(t.g == Rat(-2) * P("y") * (P("1") + b * P("x")));

    ChartSys d = compactify_v(family_3d(a, b));
    CHECK(d.f == (a - Rat(1)) * P("x") + (Rat(1) - b) * P("x^2*y"));
    CHECK(d.g == -(P("y") * (P("1") + b * P("x*y"))));

    ChartSys star = compactify_v(S("dx = x; dy = y"));
    CHECK(star.f.is_zero());
    CHECK(star.g == P("-y"));
}

TEST_CASE("compactification recovers a monomial multiple of the field") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> coord(0.2, 3.0);
    for (int t = 0; t < 20; ++t) {
        PolySys sys{qp_test::random_poly(rng, 3), qp_test::random_poly(rng, 3)};
        if (sys.degree() < 1 || sys.p.is_zero() || sys.q.is_zero()) continue;
        ChartSys ch = compactify_u(sys);
        for (int k = 0; k < 50; ++k) {
            double x = coord(rng), y = coord(rng) - 1.5;
            double P0 = sys.p.eval(x, y), Q0 = sys.q.eval(x, y);
            double ud = (Q0 * x - y * P0) / (x * x), zd = -P0 / (x * x);
            double u = y / x, z = 1 / x;
            double scale = std::pow(z, sys.degree() - 1 - ch.z_power_removed);
            double fu = ch.f.eval(u, z), gz = ch.g.eval(u, z);
            CHECK(std::abs(fu - scale * ud) <= 1e-10 * (std::abs(fu) + std::abs(scale * ud) + 1e-300));
            CHECK(std::abs(gz - scale * zd) <= 1e-10 * (std::abs(gz) + std::abs(scale * zd) + 1e-300));
        }
    }
}

TEST_CASE("infinity report of the reduced 3d family") {
    auto r = infinity_report(tilde_3d(3, 1).sys());
    REQUIRE(r.chart_v_origin);
    CHECK(r.chart_v_origin->kind == SingKind::Saddle);
    REQUIRE(r.chart_u.size() == 2);
    CHECK(r.chart_u[0].cls.kind == SingKind::Saddle);
    CHECK(r.chart_u[1].u.value() == Rat(1));
    // eigenvalues -1 and -4
    CHECK(r.chart_u[1].cls.kind == SingKind::Node);
    CHECK_FALSE(r.line_filled);

    auto s = infinity_report(tilde_3d(R(3, 2), R(1, 4)).sys());
    REQUIRE(s.chart_v_origin);
    CHECK(s.chart_v_origin->kind == SingKind::Node);

    auto sn = infinity_report(tilde_3d(3, R(1, 2)).sys());
    REQUIRE(sn.chart_u.size() == 1);
    CHECK(sn.chart_u[0].cls.kind == SingKind::SaddleNode);
}

TEST_CASE("infinity of the 3d family with a = 1 is filled with singular points") {
    auto r = infinity_report(family_3d(1, 3));
    CHECK(r.line_filled);
    CHECK_FALSE(infinity_report(family_3d(2, 3)).line_filled);
    CHECK(infinity_report(S("dx = x; dy = y")).line_filled);
}

TEST_CASE("semi-hyperbolic points use the center manifold") {
    auto cls = [](const std::string& f, const std::string& g) {
        return classify_chart_point(ChartSys{P(f), P(g)}, RealRoot::exact(Rat(0)));
    };
    CHECK(cls("x^3", "-y").kind == SingKind::Saddle);
    CHECK(cls("-x^3", "-y").kind == SingKind::Node);
    CHECK(cls("x^2", "-y").kind == SingKind::SaddleNode);
    CHECK(cls("x*y", "-y + x^2").kind == SingKind::Saddle);
    CHECK(cls("-x*y", "-y + x^2").kind == SingKind::Node);
    CHECK(cls("x*y", "y + x^2").kind == SingKind::Saddle);
    CHECK(cls("-x*y", "y + x^2").kind == SingKind::Node);
    CHECK(cls("y", "0*x").kind == SingKind::NeedsBlowUp);
    CHECK(cls("y", "x^2").kind == SingKind::NeedsBlowUp);
    CHECK(cls("0*x", "-y").kind == SingKind::NeedsBlowUp);
}

TEST_CASE("blow-up classification agrees with the numeric Jacobian and with the dual point at infinity") {
    std::mt19937_64 rng(59);
    int checked = 0;
    while (checked < 200) {
        auto hs = qp_test::random_simple_homog(rng, 2 + static_cast<int>(rng() % 2));
        if (!hs) continue;
        auto inf = infinity_report(hs->sys());
        for (const auto& cd : characteristic_directions(*hs)) {
            if (cd.vertical()) continue;
            SingKind e1 = classify_direction(cd, *hs).kind;
            CHECK(e1 == qp_test::numeric_blowup_class(*hs, cd.slope->approx()));
            bool found = false;
            for (const auto& p : inf.chart_u)
                if (p.u.approx() == doctest::Approx(cd.slope->approx())) {
                    found = true;
                    CHECK((e1 == SingKind::Saddle) == (p.cls.kind == SingKind::Node));
                    CHECK((e1 == SingKind::Node) == (p.cls.kind == SingKind::Saddle));
                }
            CHECK(found);
        }
        ++checked;
    }
}

TEST_CASE("duality holds for multiple directions too") {
    for (const auto& [a, b] : {std::pair{Rat(3), R(1, 2)}, std::pair{Rat(-1), R(1, 2)}}) {
        HomogSys hs = tilde_3d(a, b);
        auto inf = infinity_report(hs.sys());
        for (const auto& cd : characteristic_directions(hs)) {
            if (cd.vertical() || cd.multiplicity % 2 == 1) continue;
            CHECK(classify_direction(cd, hs).kind == SingKind::SaddleNode);
            for (const auto& p : inf.chart_u)
                if (p.u.approx() == doctest::Approx(cd.slope->approx())) CHECK(p.cls.kind == SingKind::SaddleNode);
        }
    }
}
