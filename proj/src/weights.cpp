#include "quasiphase/weights.hpp"

#include "quasiphase/errors.hpp"
#include "quasiphase/gcd.hpp"

#include <algorithm>
#include <sstream>

namespace quasiphase {

namespace {

using Row = std::array<Rat, 3>;

/// Constraint rows in the unknowns (s1, s2, t) with t = d - 1.
std::vector<Row> exponent_rows(const PolySys& sys) {
    std::vector<Row> rows;
    for (const auto& [m, c] : sys.p.terms()) rows.push_back({Rat(m.i - 1), Rat(m.j), Rat(-1)});
    for (const auto& [m, c] : sys.q.terms()) rows.push_back({Rat(m.i), Rat(m.j - 1), Rat(-1)});
    return rows;
}

/// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<Row>& rows) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < 3 && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][static_cast<size_t>(col)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rat inv = Rat(1) / rows[r][static_cast<size_t>(col)];
        for (auto& v : rows[r]) v *= inv;
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k == r) continue;
            Rat f = rows[k][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (size_t c = 0; c < 3; ++c) rows[k][c] -= f * rows[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<Row> nullspace(std::vector<Row> rows) {
    auto pivots = rref(rows);
    std::vector<Row> basis;
    for (int free = 0; free < 3; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        Row v{Rat(0), Rat(0), Rat(0)};
        v[static_cast<size_t>(free)] = Rat(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[static_cast<size_t>(pivots[k])] = -rows[k][static_cast<size_t>(free)];
        basis.push_back(v);
    }
    return basis;
}

std::optional<WeightVector> positive_generator(Row v) {
    if (v[0].sign() < 0 || (v[0].is_zero() && v[1].sign() < 0))
        for (auto& x : v) x = -x;
    if (v[0].sign() <= 0 || v[1].sign() <= 0 || v[2].sign() < 0) return std::nullopt;
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, x.den());
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x.num() * (l / x.den()));
    std::array<long, 3> ints{};
    for (size_t k = 0; k < 3; ++k) ints[k] = BigInt(v[k].num() * (l / v[k].den()) / g).get_si();
    return WeightVector{ints[0], ints[1], ints[2] + 1};
}

} // namespace

std::string WeightVector::str() const {
    std::ostringstream os;
    os << "(" << s1 << "," << s2 << "," << d << ")";
    return os.str();
}

WeightSolution weight_vectors(const PolySys& sys) {
    if (sys.p.is_zero() || sys.q.is_zero())
        throw DomainError("zero component: both right-hand sides must be non-zero",
                          "non-vanishing vector field components");
    Poly2 g = gcd_bivariate(sys.p, sys.q);
    if (!g.is_constant())
        throw DomainError("components share the non-constant factor " + g.str(), "coprimality of P and Q");

    WeightSolution out;
    auto basis = nullspace(exponent_rows(sys));
    if (basis.size() == 1) {
        if (auto w = positive_generator(basis[0])) {
            out.kind = WeightSolutionKind::Ray;
            out.vectors.push_back(*w);
        }
    } else if (basis.size() >= 2) {
        out.kind = WeightSolutionKind::TwoParameter;
        out.basis = std::move(basis);
    }
    return out;
}

bool verify_weight(const PolySys& sys, const WeightVector& w) {
    if (w.s1 <= 0 || w.s2 <= 0 || w.d <= 0) return false;
    long t = w.d - 1;
    for (const auto& [m, c] : sys.p.terms())
        if ((m.i - 1) * w.s1 + m.j * w.s2 != t) return false;
    for (const auto& [m, c] : sys.q.terms())
        if (m.i * w.s1 + (m.j - 1) * w.s2 != t) return false;
    return true;
}

WeightVector minimal_weight(std::span<const WeightVector> vectors) {
    if (vectors.empty()) throw std::invalid_argument("minimal_weight of an empty list");
    for (const auto& cand : vectors) {
        bool below_all = true;
        for (const auto& o : vectors)
            if (cand.s1 > o.s1 || cand.s2 > o.s2 || cand.d > o.d) below_all = false;
        if (below_all) return cand;
    }
    throw DomainError("weight vectors have no componentwise minimum", "minimal weight vector definition");
}

WeightVector minimal_weight(const PolySys& sys) {
    WeightSolution sol = weight_vectors(sys);
    if (sol.kind != WeightSolutionKind::Ray)
        throw DomainError("system is not quasi-homogeneous with a unique weight ray",
                          "quasi-homogeneous scaling law");
    return minimal_weight(std::span<const WeightVector>(sol.vectors));
}

std::string to_string(SymmetryKind k) {
    switch (k) {
    case SymmetryKind::ReflectY: return "reflect-y";
    case SymmetryKind::ReflectX: return "reflect-x";
    case SymmetryKind::Point: return "point";
    }
    return "?";
}

SymmetryClass symmetry_class(const WeightVector& w) {
    bool e1 = w.s1 % 2 == 0, e2 = w.s2 % 2 == 0;
    if (e1 && e2)
        throw DomainError("both weight exponents are even, so the weight vector is not minimal",
                          "minimal weight vectors have an odd exponent");
    if (e1) return {SymmetryKind::ReflectY, std::nullopt};
    if (e2) return {SymmetryKind::ReflectX, std::nullopt};
    return {SymmetryKind::Point, std::nullopt};
}

} // namespace quasiphase
