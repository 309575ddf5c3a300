#pragma once

#include "quasiphase/system.hpp"
#include "quasiphase/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quasiphase {

/// Normal forms of quadratic and cubic quasi-homogeneous non-homogeneous systems:
///   2a  x' = y^2,            y' = x
///   2b  x' = a x y,          y' = x + y^2
///   2c  x' = x + y^2,        y' = a y
///   3a  x' = y(a x + b y^2), y' = x + y^2    (a != b)
///       x' = y(a x +- y^2),  y' = x
///   3b  x' = x^2 + y^3,      y' = a x y
///   3c  x' = y^3,            y' = x^2
///   3d  x' = x(x + a y^2),   y' = y(b x + y^2)
///   3e  x' = a x y^2,        y' = +-x^2 + y^3
///   3f  x' = a x y^2,        y' = x + y^3
///   3g  x' = a x + y^3,      y' = y
enum class FamilyTag { F2a, F2b, F2c, F3a, F3b, F3c, F3d, F3e, F3f, F3g, None };

std::string to_string(FamilyTag t);

/// The minimal weight vector every member of a family shares.
WeightVector family_weight(FamilyTag t);

struct CanonicalFamily {
    FamilyTag tag = FamilyTag::None;
    /// Rescaling invariants. For the second form of 3a only a^2 is rational in
    /// general ("a_squared"); "a" (taken >= 0) is present when it is rational.
    std::map<std::string, Rat> parameters;
    /// +1/-1 for the families with a +- coefficient.
    std::optional<int> sign_variant;
    /// 3a only: 1 for y' = x + y^2, 2 for y' = x.
    int subform = 0;
    /// True when the match needed x and y exchanged.
    bool swapped = false;
    /// Rescaling x = lambda X, y = mu Y, t = nu T that produced `normal_form`.
    std::optional<std::array<Rat, 3>> rescaling;
    std::optional<PolySys> normal_form;
    std::vector<std::string> diagnostics;
};

/// Applies x = lambda X, y = mu Y, t = nu T and returns the system in (X, Y, T).
PolySys rescale(const PolySys& sys, const Rat& lambda, const Rat& mu, const Rat& nu);

/// Canonical member of a family for the given parameters.
PolySys family_instance(FamilyTag t, const std::map<std::string, Rat>& params = {}, int sign_variant = 1,
                        int subform = 1);

/// Identifies the family by monomial support, then extracts the parameters by
/// solving the axis-rescaling equations. Exchanging x and y is tried when the
/// support matches no family directly. Throws DomainError for degrees other
/// than 2 and 3 and for homogeneous input; returns tag None with diagnostics
/// when nothing matches.
CanonicalFamily match_family(const PolySys& sys);

} // namespace quasiphase
