#pragma once

#include "quasiphase/rat.hpp"
#include "quasiphase/upoly.hpp"

#include <string>
#include <vector>

namespace quasiphase {

/// A real algebraic number: either an exact rational, or the unique root of a
/// square-free `defining` polynomial inside the open interval (lo, hi), where
/// `defining` changes sign between the endpoints.
class RealRoot {
public:
    static RealRoot exact(const Rat& v);
    static RealRoot isolated(UPoly defining, Rat lo, Rat hi);

    bool is_exact() const { return exact_; }
    /// The exact value; only valid when is_exact().
    const Rat& value() const;
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    const UPoly& defining() const { return defining_; }

    /// Halves the isolating interval until its width is at most `width`.
    /// May discover that the root is a bisection point and become exact.
    void refine(const Rat& width);
    double approx() const;

    /// Sign of f at this root, decided exactly.
    int sign_of(const UPoly& f) const;
    int compare(const Rat& r) const;

    /// "n/d" for exact roots, "[lo, hi]" in decimals otherwise.
    std::string str() const;

private:
    bool exact_ = true;
    Rat lo_, hi_;
    UPoly defining_;
};

struct RootWithMultiplicity {
    RealRoot root;
    int multiplicity = 1;
};

/// Number of distinct real roots of f in (a, b] by Sturm's theorem.
int sturm_count(const UPoly& f, const Rat& a, const Rat& b);

/// All real roots of f in increasing order with exact multiplicities.
/// Rational roots are returned exactly. Throws on the zero polynomial.
std::vector<RootWithMultiplicity> real_roots(const UPoly& f);

} // namespace quasiphase
