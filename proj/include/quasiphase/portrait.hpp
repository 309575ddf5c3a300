#pragma once

#include "quasiphase/analysis.hpp"
#include "quasiphase/family.hpp"
#include "quasiphase/reduce.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quasiphase {

/// Signs of A = 2b - 1, B = 2(a - 2), C = 2(1 - ab) for the reduced 3d family.
struct SignTriple {
    int A = 0;
    int B = 0;
    int C = 0;

    int positives() const { return (A > 0) + (B > 0) + (C > 0); }
};

SignTriple sign_triple(const Rat& a, const Rat& b);

/// Invariant curve y^s1 = u0 x^s2 (or an axis) and its number of branches
/// leaving the origin.
struct SkeletonCurve {
    std::string curve;
    int branches = 0;
    /// Defining polynomial, invariant under the field.
    Poly2 defining;
    /// Reduced invariant line the curve comes from.
    InvariantLine line;
};

struct LocatedSingularity {
    std::string where;
    SingularityClass cls;
    bool at_infinity = false;
    /// Plane point, or a unit direction for points at infinity.
    std::array<double, 2> position{0.0, 0.0};
};

struct Provenance {
    std::string stage;
    std::string lemma;
};

struct PortraitClass {
    std::string figure_tag;
    std::optional<CanonicalFamily> family;
    WeightVector weight;
    SymmetryClass symmetry;
    std::optional<Reduction> reduction;
    std::optional<HomogKind> kind;
    std::optional<SignTriple> signs;
    std::optional<Tangency> tangency;
    bool line_filled = false;
    std::vector<LocatedSingularity> finite_singularities;
    /// Blow-up points over the origin of the reduced system.
    std::vector<LocatedSingularity> origin_directions;
    std::vector<LocatedSingularity> infinite_singularities;
    std::vector<SkeletonCurve> skeleton;
    std::vector<Provenance> provenance;
    std::vector<std::string> notes;
};

/// Reduced 3d family x' = x(x + a y), y' = 2y(b x + y).
HomogSys reduced_3d(const Rat& a, const Rat& b);

/// Portrait of the reduced 3d family: F2A/F2B/F2C off the lines b = 1/2 and
/// a = 2, F3A/F3B on them. Throws DomainError when the components share a
/// factor (ab = 1, or a = 2 and b = 1/2).
PortraitClass classify_H2(const Rat& a, const Rat& b);

/// Portrait of the 3d family: F4A..F4E for a != 1, F5A..F5C for a = 1.
PortraitClass classify_3d(const Rat& a, const Rat& b);

/// Linear target x' = c10 x + c01 y, y' = d10 x + d01 y: F6A saddle, F6B node,
/// F6C focus (closed tracks after pull-back), F6D center.
PortraitClass classify_H1(const Rat& c01, const Rat& c10, const Rat& d01, const Rat& d10);

/// Constant target: F7A for 2a, F7B for 3c.
PortraitClass classify_H0(const Rat& c0, const Rat& d0, const CanonicalFamily& family);

/// Figure tags admitted for quasi-homogeneous non-homogeneous systems of the degree.
const std::set<std::string>& admissible_tags(int degree);

/// y^s1 - u0 x^s2 for rational u0; for an irrational u0 the product over the
/// conjugate roots of its defining polynomial.
Poly2 skeleton_polynomial(const InvariantLine& line, const WeightVector& w);

/// Whether the Lie derivative of f along sys is a polynomial multiple of f.
bool is_invariant(const Poly2& f, const PolySys& sys);

/// Full pipeline: family, weight, reduction, homogeneous classification,
/// pull-back of the invariant lines and the infinite singularities.
PortraitClass global_portrait(const PolySys& sys);

} // namespace quasiphase
