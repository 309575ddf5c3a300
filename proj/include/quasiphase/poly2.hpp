#pragma once

#include "quasiphase/rat.hpp"
#include "quasiphase/upoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quasiphase {

/// Exponent pair of x^i y^j.
struct Mono {
    int i = 0;
    int j = 0;

    int degree() const { return i + j; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded-lex "greater": higher total degree first, then higher power of x.
struct GradLexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.i > b.i;
    }
};

enum class Axis { X, Y };

/// Sparse bivariate polynomial over Q. Terms iterate in descending graded-lex
/// order; no stored coefficient is zero.
class Poly2 {
public:
    using Terms = std::map<Mono, Rat, GradLexGreater>;

    Poly2() = default;
    static Poly2 constant(const Rat& c);
    static Poly2 term(const Rat& c, int i, int j);
    static Poly2 x() { return term(Rat(1), 1, 0); }
    static Poly2 y() { return term(Rat(1), 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    /// -1 for the zero polynomial.
    int degree() const;
    Rat coeff(int i, int j) const;
    const Terms& terms() const { return terms_; }
    /// Leading term under graded-lex order. Requires non-zero.
    std::pair<Mono, Rat> leading() const;
    bool is_homogeneous() const;

    void add_term(const Rat& c, int i, int j);

    Rat eval(const Rat& x, const Rat& y) const;
    double eval(double x, double y) const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rat& s, const Poly2& a);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

    /// Canonical text, e.g. "x^2 + 3/2*x*y - y^2".
    std::string str(const std::string& xname = "x", const std::string& yname = "y") const;

private:
    Terms terms_;
};

Poly2 add(const Poly2& p, const Poly2& q);
Poly2 mul(const Poly2& p, const Poly2& q);
Poly2 pow(const Poly2& p, int e);
Poly2 partial(const Poly2& p, Axis var);

/// Degree-graded summands in increasing degree; the zero polynomial has none.
std::vector<std::pair<int, Poly2>> homogeneous_parts(const Poly2& p);

/// p(1, u).
UPoly restrict_u(const Poly2& p);
/// p(v, 1).
UPoly restrict_v(const Poly2& p);

/// p(y, x).
Poly2 swap_variables(const Poly2& p);

/// p(xs(x, y), ys(x, y)).
Poly2 compose(const Poly2& p, const Poly2& xs, const Poly2& ys);

/// Quotient if d divides p exactly in Q[x, y].
std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& d);

/// Homogenizes a univariate f(u) of degree k to x^k f(y/x).
Poly2 homogenize_slope(const UPoly& f);

} // namespace quasiphase
