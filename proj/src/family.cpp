#include "quasiphase/family.hpp"

#include "quasiphase/errors.hpp"

#include <set>
#include <sstream>

namespace quasiphase {

namespace {

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

using Support = std::set<Mono, MonoLess>;

Support support(const Poly2& p) {
    Support s;
    for (const auto& [m, c] : p.terms()) s.insert(m);
    return s;
}

bool subset(const Support& a, const Support& b) {
    for (const auto& m : a)
        if (!b.count(m)) return false;
    return true;
}

Poly2 term(const Rat& c, int i, int j) { return Poly2::term(c, i, j); }

std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
        return std::nullopt;
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
    return Rat(n, d);
}

int sign_of(const Rat& r) { return r.sign() < 0 ? -1 : 1; }

/// Matches without exchanging variables. Leaves tag None on no match.
CanonicalFamily match_direct(const PolySys& sys) {
    CanonicalFamily out;
    const Support sp = support(sys.p), sq = support(sys.q);
    auto p = [&](int i, int j) { return sys.p.coeff(i, j); };
    auto q = [&](int i, int j) { return sys.q.coeff(i, j); };
    auto set = [&](FamilyTag tag, Rat lambda, Rat mu, Rat nu) {
        out.tag = tag;
        out.rescaling = std::array<Rat, 3>{lambda, mu, nu};
    };
    const Support xy{{1, 1}}, y2{{0, 2}}, x1{{1, 0}}, y1{{0, 1}}, y3{{0, 3}}, x2{{2, 0}}, xy2{{1, 2}};
    auto both = [](Support a, const Support& b) {
        a.insert(b.begin(), b.end());
        return a;
    };

    if (sp == y2 && sq == x1) {
        Rat mu = Rat(1) / (p(0, 2) * q(1, 0));
        set(FamilyTag::F2a, mu / q(1, 0), mu, Rat(1));
    } else if (sp == xy && sq == both(x1, y2)) {
        out.parameters["a"] = p(1, 1) / q(0, 2);
        Rat mu = Rat(1) / q(0, 2);
        set(FamilyTag::F2b, mu / q(1, 0), mu, Rat(1));
    } else if (sp == both(x1, y2) && sq == y1) {
        out.parameters["a"] = q(0, 1) / p(1, 0);
        set(FamilyTag::F2c, p(0, 2) / p(1, 0), Rat(1), Rat(1) / p(1, 0));
    } else if (sp.count({0, 3}) && subset(sp, both(xy, y3)) && sq == both(x1, y2)) {
        out.subform = 1;
        out.parameters["a"] = p(1, 1) / q(0, 2);
        out.parameters["b"] = p(0, 3) * q(1, 0) / (q(0, 2) * q(0, 2));
        Rat mu = Rat(1) / q(0, 2);
        set(FamilyTag::F3a, mu / q(1, 0), mu, Rat(1));
    } else if (sp.count({0, 3}) && subset(sp, both(xy, y3)) && sq == x1) {
        out.tag = FamilyTag::F3a;
        out.subform = 2;
        Rat prod = q(1, 0) * p(0, 3);
        out.sign_variant = sign_of(prod);
        Rat scale = Rat(1) / abs(prod);
        out.parameters["a_squared"] = p(1, 1) * p(1, 1) * scale;
        if (auto r = exact_sqrt(scale)) {
            // nu * mu = +-r, the sign chosen so that a >= 0
            Rat mu = p(1, 1).sign() < 0 ? -*r : *r;
            out.parameters["a"] = mu * p(1, 1);
            out.rescaling = std::array<Rat, 3>{mu / q(1, 0), mu, Rat(1)};
        } else {
            if (p(1, 1).is_zero()) out.parameters["a"] = Rat(0);
            out.diagnostics.push_back("no rational rescaling reaches the normal form: |q10*p03| = " +
                                      abs(prod).str() + " is not a rational square");
        }
    } else if (sp == both(x2, y3) && sq == xy) {
        out.parameters["a"] = q(1, 1) / p(2, 0);
        Rat nu = p(2, 0) * p(0, 3);
        set(FamilyTag::F3b, Rat(1) / (nu * p(2, 0)), Rat(1) / nu, nu);
    } else if (sp == y3 && sq == x2) {
        Rat k = Rat(1) / (p(0, 3) * p(0, 3) * q(2, 0));
        Rat mu = k * k, nu = Rat(1) / (k * k * k);
        set(FamilyTag::F3c, nu * mu * mu * mu * p(0, 3), mu, nu);
    } else if (sp.count({2, 0}) && subset(sp, both(x2, xy2)) && sq.count({0, 3}) && subset(sq, both(xy, y3))) {
        out.parameters["a"] = p(1, 2) / q(0, 3);
        out.parameters["b"] = q(1, 1) / p(2, 0);
        set(FamilyTag::F3d, q(0, 3) / p(2, 0), Rat(1), Rat(1) / q(0, 3));
    } else if (sp == xy2 && sq == both(x2, y3)) {
        out.parameters["a"] = p(1, 2) / q(0, 3);
        out.sign_variant = sign_of(q(2, 0) * q(0, 3));
        Rat mu = abs(q(2, 0) / q(0, 3));
        set(FamilyTag::F3e, mu, mu, Rat(1) / (q(0, 3) * mu * mu));
    } else if (sp == xy2 && sq == both(x1, y3)) {
        out.parameters["a"] = p(1, 2) / q(0, 3);
        set(FamilyTag::F3f, q(0, 3) / q(1, 0), Rat(1), Rat(1) / q(0, 3));
    } else if (sp == both(x1, y3) && sq == y1) {
        out.parameters["a"] = p(1, 0) / q(0, 1);
        Rat nu = Rat(1) / q(0, 1);
        set(FamilyTag::F3g, nu * p(0, 3), Rat(1), nu);
    }
    return out;
}

} // namespace

std::string to_string(FamilyTag t) {
    switch (t) {
    case FamilyTag::F2a: return "2a";
    case FamilyTag::F2b: return "2b";
    case FamilyTag::F2c: return "2c";
    case FamilyTag::F3a: return "3a";
    case FamilyTag::F3b: return "3b";
    case FamilyTag::F3c: return "3c";
    case FamilyTag::F3d: return "3d";
    case FamilyTag::F3e: return "3e";
    case FamilyTag::F3f: return "3f";
    case FamilyTag::F3g: return "3g";
    case FamilyTag::None: return "none";
    }
    return "none";
}

WeightVector family_weight(FamilyTag t) {
    switch (t) {
    case FamilyTag::F2a: return {3, 2, 2};
    case FamilyTag::F2b: return {2, 1, 2};
    case FamilyTag::F2c: return {2, 1, 1};
    case FamilyTag::F3a: return {2, 1, 2};
    case FamilyTag::F3b: return {3, 2, 4};
    case FamilyTag::F3c: return {4, 3, 6};
    case FamilyTag::F3d: return {2, 1, 3};
    case FamilyTag::F3e: return {3, 2, 5};
    case FamilyTag::F3f: return {3, 1, 3};
    case FamilyTag::F3g: return {3, 1, 1};
    case FamilyTag::None: break;
    }
    throw std::invalid_argument("family_weight of tag none");
}

PolySys rescale(const PolySys& sys, const Rat& lambda, const Rat& mu, const Rat& nu) {
    if (lambda.is_zero() || mu.is_zero() || nu.is_zero()) throw std::invalid_argument("rescale by zero");
    PolySys out;
    for (const auto& [m, c] : sys.p.terms())
        out.p.add_term(nu * pow(lambda, m.i - 1) * pow(mu, m.j) * c, m.i, m.j);
    for (const auto& [m, c] : sys.q.terms())
        out.q.add_term(nu * pow(lambda, m.i) * pow(mu, m.j - 1) * c, m.i, m.j);
    return out;
}

PolySys family_instance(FamilyTag t, const std::map<std::string, Rat>& params, int sign_variant, int subform) {
    auto par = [&](const char* name) {
        auto it = params.find(name);
        if (it == params.end()) throw std::invalid_argument(std::string("missing family parameter ") + name);
        return it->second;
    };
    Rat s(sign_variant < 0 ? -1 : 1);
    switch (t) {
    case FamilyTag::F2a: return {term(Rat(1), 0, 2), term(Rat(1), 1, 0)};
    case FamilyTag::F2b: return {term(par("a"), 1, 1), term(Rat(1), 1, 0) + term(Rat(1), 0, 2)};
    case FamilyTag::F2c: return {term(Rat(1), 1, 0) + term(Rat(1), 0, 2), term(par("a"), 0, 1)};
    case FamilyTag::F3a:
        if (subform == 2) return {term(par("a"), 1, 1) + term(s, 0, 3), term(Rat(1), 1, 0)};
        return {term(par("a"), 1, 1) + term(par("b"), 0, 3), term(Rat(1), 1, 0) + term(Rat(1), 0, 2)};
    case FamilyTag::F3b: return {term(Rat(1), 2, 0) + term(Rat(1), 0, 3), term(par("a"), 1, 1)};
    case FamilyTag::F3c: return {term(Rat(1), 0, 3), term(Rat(1), 2, 0)};
    case FamilyTag::F3d:
        return {term(Rat(1), 2, 0) + term(par("a"), 1, 2), term(par("b"), 1, 1) + term(Rat(1), 0, 3)};
    case FamilyTag::F3e: return {term(par("a"), 1, 2), term(s, 2, 0) + term(Rat(1), 0, 3)};
    case FamilyTag::F3f: return {term(par("a"), 1, 2), term(Rat(1), 1, 0) + term(Rat(1), 0, 3)};
    case FamilyTag::F3g: return {term(par("a"), 1, 0) + term(Rat(1), 0, 3), term(Rat(1), 0, 1)};
    case FamilyTag::None: break;
    }
    throw std::invalid_argument("family_instance of tag none");
}

CanonicalFamily match_family(const PolySys& sys) {
    int deg = sys.degree();
    if (deg != 2 && deg != 3)
        throw DomainError("family matching covers degrees 2 and 3 only, got degree " + std::to_string(deg),
                          "normal forms of quadratic and cubic quasi-homogeneous systems");
    WeightSolution ws = weight_vectors(sys);
    if (ws.kind == WeightSolutionKind::TwoParameter ||
        (ws.kind == WeightSolutionKind::Ray && ws.vectors.front().homogeneous()))
        throw DomainError("system is homogeneous; only non-homogeneous quasi-homogeneous systems have a normal form",
                          "quasi-homogeneous non-homogeneous scope");
    if (ws.kind == WeightSolutionKind::None) {
        CanonicalFamily out;
        out.diagnostics.push_back("system is not quasi-homogeneous");
        return out;
    }

    CanonicalFamily out = match_direct(sys);
    if (out.tag == FamilyTag::None) {
        out = match_direct(swap_variables(sys));
        if (out.tag != FamilyTag::None) out.swapped = true;
    }
    if (out.tag == FamilyTag::None) {
        out.diagnostics.push_back("support of " + sys.str() + " matches no normal form of degree " +
                                  std::to_string(deg));
        return out;
    }
    if (out.rescaling) {
        PolySys base = out.swapped ? swap_variables(sys) : sys;
        const auto& [l, m, n] = *out.rescaling;
        PolySys nf = rescale(base, l, m, n);
        PolySys expect = family_instance(out.tag, out.parameters, out.sign_variant.value_or(1),
                                         out.subform == 0 ? 1 : out.subform);
        if (nf == expect) {
            out.normal_form = nf;
        } else {
            out.diagnostics.push_back("rescaled system " + nf.str() + " differs from the normal form " + expect.str());
        }
    }
    return out;
}

} // namespace quasiphase
