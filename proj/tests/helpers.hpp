#pragma once

#include "quasiphase/parser.hpp"
#include "quasiphase/poly2.hpp"

#include <random>
#include <string>

namespace qp_test {

inline quasiphase::Poly2 P(const std::string& s) { return quasiphase::parse_poly(s); }
inline quasiphase::PolySys S(const std::string& s) { return quasiphase::parse_system_unchecked(s); }

/// Small non-zero rational with numerator and denominator bounded by `range`.
inline quasiphase::Rat random_rat(std::mt19937_64& rng, int range = 5, bool allow_zero = false) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    while (true) {
        int n = num(rng);
        if (n == 0 && !allow_zero) continue;
        return quasiphase::Rat(quasiphase::BigInt(n), quasiphase::BigInt(den(rng)));
    }
}

/// Random dense-ish polynomial of total degree at most `max_degree`.
inline quasiphase::Poly2 random_poly(std::mt19937_64& rng, int max_degree, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    quasiphase::Poly2 p;
    for (int d = 0; d <= max_degree; ++d)
        for (int i = 0; i <= d; ++i)
            if (keep(rng)) p.add_term(random_rat(rng), i, d - i);
    return p;
}

/// Random homogeneous polynomial of exact degree n with non-zero leading coefficient.
inline quasiphase::Poly2 random_homogeneous(std::mt19937_64& rng, int n, int range = 4) {
    quasiphase::Poly2 p;
    std::bernoulli_distribution keep(0.7);
    for (int i = 0; i <= n; ++i)
        if (keep(rng)) p.add_term(random_rat(rng, range), i, n - i);
    if (p.is_zero()) p.add_term(random_rat(rng, range), n, 0);
    return p;
}

} // namespace qp_test
