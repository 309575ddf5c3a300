#pragma once

#include "quasiphase/rat.hpp"
#include "quasiphase/system.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quasiphase {

/// Weight exponents (s1, s2) and weight degree d: P(a^s1 x, a^s2 y) = a^(s1+d-1) P(x, y)
/// and Q(a^s1 x, a^s2 y) = a^(s2+d-1) Q(x, y) for all a > 0.
struct WeightVector {
    long s1 = 1;
    long s2 = 1;
    long d = 1;

    bool homogeneous() const { return s1 == s2; }
    std::string str() const;
    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

enum class WeightSolutionKind {
    None,          // no positive solution: not quasi-homogeneous
    Ray,           // one-dimensional solution ray; `vectors` holds its primitive generator
    TwoParameter,  // every monomial imposes the same constraint; `basis` spans the solutions
};

struct WeightSolution {
    WeightSolutionKind kind = WeightSolutionKind::None;
    std::vector<WeightVector> vectors;
    /// Rational basis of (s1, s2, d - 1) solutions for the two-parameter case.
    std::vector<std::array<Rat, 3>> basis;
};

/// Solves the exponent equations of every monomial for (s1, s2, d).
/// Throws DomainError if a component is zero or P, Q share a factor.
WeightSolution weight_vectors(const PolySys& sys);

/// Exact symbolic check of the scaling law for every monomial.
bool verify_weight(const PolySys& sys, const WeightVector& w);

/// The componentwise-minimal element. Throws if the list is empty or no
/// element is below all others.
WeightVector minimal_weight(std::span<const WeightVector> vectors);

/// Minimal weight vector of a quasi-homogeneous system with a solution ray.
/// Throws DomainError when the system is not quasi-homogeneous.
WeightVector minimal_weight(const PolySys& sys);

enum class SymmetryKind {
    ReflectY,  // (x, y) -> (x, -y)
    ReflectX,  // (x, y) -> (-x, y)
    Point,     // (x, y) -> (-x, -y)
};

struct SymmetryClass {
    SymmetryKind kind = SymmetryKind::Point;
    /// Left unspecified: the classification ignores the direction of time.
    std::optional<bool> time_reversed;
};

std::string to_string(SymmetryKind k);

/// Symmetry from the parities of (s1, s2). Throws DomainError if both are even.
SymmetryClass symmetry_class(const WeightVector& w);

/// Image of a point under the symmetry.
inline std::array<double, 2> apply_symmetry(SymmetryKind k, double x, double y) {
    switch (k) {
    case SymmetryKind::ReflectY: return {x, -y};
    case SymmetryKind::ReflectX: return {-x, y};
    case SymmetryKind::Point: return {-x, -y};
    }
    return {x, y};
}

} // namespace quasiphase
