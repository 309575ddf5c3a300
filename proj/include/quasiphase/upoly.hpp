#pragma once

#include "quasiphase/rat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace quasiphase {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The coefficient vector never ends in a zero.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<Rat> low_to_high);
    explicit UPoly(std::vector<Rat> low_to_high);

    static UPoly constant(const Rat& c);
    /// c * u^k
    static UPoly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const;
    Rat leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& u) const;
    double eval(double u) const;
    int sign_at(const Rat& u) const { return eval(u).sign(); }

    UPoly derivative() const;
    /// k-th derivative.
    UPoly derivative(int k) const;
    UPoly monic() const;
    /// Multiplicity of u = 0 as a root.
    int trailing_zero_order() const;
    /// f(-u).
    UPoly reflect() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rat& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean division: a = q*b + r, deg r < deg b. Throws on b == 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Square-free decomposition f = c * prod_i f_i^i (Yun). Returns (i, f_i) with
/// each f_i monic, square-free, non-constant and pairwise coprime.
std::vector<std::pair<int, UPoly>> squarefree_decomposition(const UPoly& f);

/// Scales f to an integer polynomial with coprime coefficients and positive
/// leading coefficient.
UPoly primitive_integer(const UPoly& f);

} // namespace quasiphase
