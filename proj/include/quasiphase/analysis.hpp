#pragma once

#include "quasiphase/reduce.hpp"
#include "quasiphase/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quasiphase {

enum class SingKind {
    Saddle,
    Node,
    SaddleNode,
    Focus,
    Center,
    LineAtInfinity,
    ConstantField,
    NeedsBlowUp,
    /// Zero linear part, resolved by the blow-up directions.
    Degenerate,
};

std::string to_string(SingKind k);

struct SingularityClass {
    SingKind kind = SingKind::NeedsBlowUp;
    /// -1 attracting, +1 repelling; set for nodes and foci when known.
    std::optional<int> stability;
    std::string note;

    friend bool operator==(const SingularityClass& a, const SingularityClass& b) { return a.kind == b.kind; }
};

/// xQn - yPn.
Poly2 g_poly(const HomogSys& hs);
/// yQn + xPn.
Poly2 h_poly(const HomogSys& hs);

/// A root of G(1, u), or the vertical direction x = 0.
struct CharDir {
    std::optional<RealRoot> slope;  // empty for the vertical direction
    int multiplicity = 1;
    /// sign Pn(1, u0) and sign of the m-th derivative of G(1, u) at u0. For
    /// the vertical direction: sign H(0, 1) and sign of the m-th theta
    /// derivative of G(cos t, sin t) at t = pi/2.
    int sign_p = 0;
    int sign_gm = 0;

    bool vertical() const { return !slope.has_value(); }
    std::string str() const;
};

/// Real roots of G(1, u) with multiplicities, then the vertical direction
/// when x divides G. Throws DomainError when G is identically zero.
std::vector<CharDir> characteristic_directions(const HomogSys& hs);

/// Type of the point (0, u0) on the exceptional line of the blow-up y = ux.
SingularityClass classify_direction(const CharDir& cd, const HomogSys& hs);

enum class Tangency { None, One, InfinitelyMany };

std::string to_string(Tangency t);

/// Number of orbits reaching the origin tangent to the y-axis.
Tangency vertical_tangency(const HomogSys& hs);

/// Numeric value of the m-th theta derivative of G(cos t, sin t) at t = pi/2.
double vertical_g_derivative_numeric(const HomogSys& hs, int m);

/// Line through the origin: y = u0 x, or x = 0 when vertical.
struct InvariantLine {
    std::optional<RealRoot> slope;

    bool vertical() const { return !slope.has_value(); }
    std::string str() const;
};

std::vector<InvariantLine> invariant_lines(const HomogSys& hs);

struct CenterTest {
    bool center = false;
    /// Decided by the odd-integrand identity, without quadrature.
    bool symbolic = false;
    /// Principal value of the integral of Pn(1,u)/G(1,u) over the real line.
    double integral = 0;
    double error_estimate = 0;
    std::string reason;
};

/// Global center criterion for homogeneous systems of odd degree. Throws
/// DomainError for even degree.
CenterTest global_center_test(const HomogSys& hs);

/// Polynomial system in a Poincare chart. Variables are stored as x -> u
/// (or v) and y -> z.
struct ChartSys {
    Poly2 f;
    Poly2 g;
    /// Power of z cancelled from both components.
    int z_power_removed = 0;
    /// The equator consists of singular points.
    bool line_filled = false;

    std::string str(const std::string& var) const { return PolySys{f, g}.str(var, "z"); }
};

/// x = 1/z, y = u/z.
ChartSys compactify_u(const PolySys& sys);
/// x = v/z, y = 1/z.
ChartSys compactify_v(const PolySys& sys);

/// Type of the singular point (u0, 0) of a chart system with rational
/// coefficients. Uses the exact Jacobian, then a center-manifold expansion
/// for one zero eigenvalue.
SingularityClass classify_chart_point(const ChartSys& chart, const RealRoot& u0);

struct InfinitePoint {
    RealRoot u;
    SingularityClass cls;
};

struct InfinityReport {
    std::vector<InfinitePoint> chart_u;
    /// Origin of the v-chart (end of the y-axis) when singular.
    std::optional<SingularityClass> chart_v_origin;
    bool line_filled = false;
    ChartSys u_chart;
    ChartSys v_chart;
};

InfinityReport infinity_report(const PolySys& sys);

} // namespace quasiphase
