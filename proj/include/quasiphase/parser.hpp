#pragma once

#include "quasiphase/system.hpp"

#include <string>
#include <utility>

namespace quasiphase {

/// Variable names of a system description; the equations are "d<first> = ..."
/// and "d<second> = ...".
struct VarNames {
    std::string first = "x";
    std::string second = "y";
};

struct SystemSource {
    std::string raw;
    PolySys sys;
    VarNames vars;
};

/// Parses one expanded polynomial, e.g. "x^2 + 3/2*x*y - y^2" or "2x*y^2".
/// Parentheses are rejected.
Poly2 parse_poly(const std::string& text, const VarNames& vars = {});

/// Parses "dx = <poly>; dy = <poly>" (either order, optional trailing ';').
/// Throws ParseError on malformed text and DomainError when a component is zero
/// or when the components share a non-constant factor.
SystemSource parse_system(const std::string& text, const VarNames& vars = {});

/// Same grammar as parse_system but without the domain checks.
PolySys parse_system_unchecked(const std::string& text, const VarNames& vars = {});

} // namespace quasiphase
