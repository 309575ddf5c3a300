#pragma once

#include "quasiphase/poly2.hpp"

#include <algorithm>
#include <string>

namespace quasiphase {

/// Planar polynomial system x' = P(x, y), y' = Q(x, y).
struct PolySys {
    Poly2 p;
    Poly2 q;

    int degree() const { return std::max(p.degree(), q.degree()); }
    std::string str(const std::string& xname = "x", const std::string& yname = "y") const {
        return "d" + xname + " = " + p.str(xname, yname) + "; d" + yname + " = " + q.str(xname, yname);
    }
    friend bool operator==(const PolySys&, const PolySys&) = default;
};

/// The system with the roles of x and y exchanged.
inline PolySys swap_variables(const PolySys& s) { return {swap_variables(s.q), swap_variables(s.p)}; }

} // namespace quasiphase
