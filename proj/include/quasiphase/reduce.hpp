#pragma once

#include "quasiphase/system.hpp"
#include "quasiphase/weights.hpp"

#include <array>
#include <string>
#include <vector>

namespace quasiphase {

/// c * X^p * Y^q with rational exponents.
struct FracTerm {
    Rat c;
    Rat p;
    Rat q;
};

/// Vector field whose components are sums of fractional monomials.
struct FracMonoField {
    std::vector<FracTerm> f;
    std::vector<FracTerm> g;
};

/// X^p * Y^q.
struct FracMono {
    Rat p;
    Rat q;

    bool is_one() const { return p.is_zero() && q.is_zero(); }
    /// "1", "x^1/2 * y^2/3", "y^2/3", ...
    std::string str(const std::string& xname = "x", const std::string& yname = "y") const;
    /// Value at a point of the reduced plane; negative bases need odd denominators.
    double eval(double X, double Y) const;
};

/// Planar homogeneous system of common degree n.
struct HomogSys {
    Poly2 pn;
    Poly2 qn;
    int n = 0;

    PolySys sys() const { return {pn, qn}; }
    std::string str(const std::string& xname = "x", const std::string& yname = "y") const {
        return sys().str(xname, yname);
    }
};

enum class Quadrant { XPositive, YPositive, FirstQuadrant };

std::string to_string(Quadrant q);

/// Whether (x, y) lies in the open region.
bool in_quadrant(Quadrant q, double x, double y);

struct Reduction {
    PolySys source;
    WeightVector weight;
    HomogSys target;
    /// Time rescaling dt = dt1 / rescale(X, Y).
    FracMono rescale;
    Quadrant quadrant = Quadrant::FirstQuadrant;
    /// x = X^(1/s2), y = Y^(1/s1).
    std::string inverse_map;
    bool coprime_target = true;
    std::vector<std::string> diagnostics;
};

/// X' = s2 x^(s2-1) P, Y' = s1 y^(s1-1) Q written in X = x^s2, Y = y^s1.
FracMonoField pushforward_field(const PolySys& sys, const WeightVector& w);

/// Reduces a quasi-homogeneous non-homogeneous system to its homogeneous
/// associate through X = x^s2, Y = y^s1 and a monomial time rescaling.
/// Throws DomainError when w fails the scaling law, when s1 = s2, or when the
/// quotient is not a homogeneous polynomial field of degree at most 2.
Reduction reduce(const PolySys& sys, const WeightVector& w);

enum class HomogKind { H0, H1, H2 };

std::string to_string(HomogKind k);

/// Degree tag of the target after checking its non-degeneracy constraints.
/// Throws DomainError naming the violated constraint.
HomogKind classify_target(const Reduction& red);

/// Largest componentwise relative residual of the chain rule at (x, y).
/// Exactly zero when the rescale is 1 and the identity holds.
double pushforward_check(const PolySys& sys, const Reduction& red, std::array<double, 2> pt);

} // namespace quasiphase
