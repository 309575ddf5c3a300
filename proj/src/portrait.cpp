#include "quasiphase/portrait.hpp"

#include "quasiphase/errors.hpp"
#include "quasiphase/gcd.hpp"

#include <cmath>
#include <stdexcept>

namespace quasiphase {

namespace {

constexpr const char* kProp = "classification of the reduced 3d family";
constexpr const char* kThm3d = "classification of the 3d family";
constexpr const char* kLinear = "linear classification of the H1 target";
constexpr const char* kConstant = "constant H0 target";

int sgn(const Rat& r) { return r.sign(); }

std::string exponent(const std::string& v, long e) { return e == 1 ? v : v + "^" + std::to_string(e); }

std::string curve_text(const InvariantLine& line, const WeightVector& w) {
    if (line.vertical()) return "x = 0";
    const RealRoot& r = *line.slope;
    if (r.is_exact() && r.value().is_zero()) return "y = 0";
    std::string lhs = exponent("y", w.s1), rhs = exponent("x", w.s2);
    if (r.is_exact()) return lhs + " = " + r.value().str() + " * " + rhs;
    return lhs + " = u0 * " + rhs + ", u0 in " + r.str();
}

/// Branches of the curve leaving the origin in the full plane.
int branch_count(const InvariantLine& line, const WeightVector& w) {
    if (line.vertical()) return 2;
    double u0 = line.slope->approx();
    if (line.slope->is_exact() && line.slope->value().is_zero()) return 2;
    int count = 0;
    for (int sx : {1, -1}) {
        int s = (u0 > 0 ? 1 : -1) * ((w.s2 % 2 == 1) ? sx : 1);
        if (w.s1 % 2 == 1)
            count += 1;
        else if (s > 0)
            count += 2;
    }
    return count;
}

void add_infinity(PortraitClass& pc, const InfinityReport& inf) {
    for (const auto& p : inf.chart_u) {
        double u = p.u.approx(), n = std::hypot(1.0, u);
        pc.infinite_singularities.push_back({"infinity, direction u = " + p.u.str(), p.cls, true, {1.0 / n, u / n}});
    }
    if (inf.chart_v_origin)
        pc.infinite_singularities.push_back({"infinity, end of the y-axis", *inf.chart_v_origin, true, {0.0, 1.0}});
    pc.line_filled = inf.line_filled;
}

std::vector<SkeletonCurve> pull_back(const HomogSys& target, const WeightVector& w, const PolySys& sys,
                                     std::vector<std::string>& notes) {
    std::vector<SkeletonCurve> out;
    for (const auto& line : invariant_lines(target)) {
        Poly2 f = skeleton_polynomial(line, w);
        std::string text = curve_text(line, w);
        if (!is_invariant(f, sys)) {
            notes.push_back("reduced invariant line maps to the non-invariant curve " + text);
            continue;
        }
        out.push_back({text, branch_count(line, w), f, line});
    }
    return out;
}

} // namespace

SignTriple sign_triple(const Rat& a, const Rat& b) {
    return {sgn(Rat(2) * b - Rat(1)), sgn(Rat(2) * (a - Rat(2))), sgn(Rat(2) * (Rat(1) - a * b))};
}

HomogSys reduced_3d(const Rat& a, const Rat& b) {
    return {Poly2::term(Rat(1), 2, 0) + Poly2::term(a, 1, 1), Poly2::term(Rat(2) * b, 1, 1) + Poly2::term(Rat(2), 0, 2),
            2};
}

PortraitClass classify_H2(const Rat& a, const Rat& b) {
    HomogSys hs = reduced_3d(a, b);
    Poly2 g = gcd_bivariate(hs.pn, hs.qn);
    if (!g.is_constant())
        throw DomainError("parameters a = " + a.str() + ", b = " + b.str() + " give the common factor " + g.str(),
                          "coprimality of P and Q");
    PortraitClass pc;
    SignTriple s = sign_triple(a, b);
    pc.signs = s;
    if (s.A == 0) {
        pc.figure_tag = s.B > 0 ? "F3A" : "F3B";
    } else if (s.B == 0) {
        // same topology as the b = 1/2 line, keyed on the infinite singularities
        pc.figure_tag = s.A > 0 ? "F3A" : "F3B";
        pc.notes.push_back("a = 2 aliased to the b = 1/2 portraits");
    } else {
        int k = s.positives();
        if (k == 3) throw std::logic_error("sign triple with three positive entries");
        pc.figure_tag = k == 1 ? "F2A" : (k == 2 ? "F2B" : "F2C");
    }
    pc.kind = HomogKind::H2;
    pc.weight = {1, 1, 2};
    for (const auto& cd : characteristic_directions(hs)) {
        if (cd.vertical()) continue;
        pc.finite_singularities.push_back({"origin, direction u = " + cd.slope->str(), classify_direction(cd, hs)});
    }
    pc.tangency = vertical_tangency(hs);
    add_infinity(pc, infinity_report(hs.sys()));
    for (const auto& line : invariant_lines(hs))
        pc.skeleton.push_back({curve_text(line, pc.weight), 2, skeleton_polynomial(line, pc.weight), line});
    pc.provenance.push_back({"classify", kProp});
    return pc;
}

PortraitClass classify_3d(const Rat& a, const Rat& b) {
    if (a == Rat(1) && b == Rat(1)) throw DomainError("parameters a = b = 1 are excluded", kThm3d);
    PortraitClass core = classify_H2(a, b);
    PortraitClass pc;
    const std::string& t = core.figure_tag;
    if (a == Rat(1)) {
        if (t == "F2C") throw std::logic_error("F2C cannot occur for a = 1");
        pc.figure_tag = t == "F2A" ? "F5A" : (t == "F2B" ? "F5B" : "F5C");
    } else {
        pc.figure_tag = t == "F2A"   ? "F4A"
                        : t == "F2B" ? "F4B"
                        : t == "F2C" ? "F4C"
                        : t == "F3A" ? "F4D"
                                     : "F4E";
    }
    pc.notes.push_back("sub-letter keyed on the reduced class " + t);
    pc.signs = core.signs;
    pc.tangency = core.tangency;
    pc.kind = HomogKind::H2;
    pc.finite_singularities.push_back(
        {"origin", {SingKind::Degenerate, std::nullopt, "blow-up characteristic-direction criterion"}});
    for (auto s : core.finite_singularities) {
        s.where = "reduced " + s.where;
        pc.origin_directions.push_back(s);
    }
    PolySys sys = family_instance(FamilyTag::F3d, {{"a", a}, {"b", b}});
    pc.weight = family_weight(FamilyTag::F3d);
    pc.symmetry = symmetry_class(pc.weight);
    add_infinity(pc, infinity_report(sys));
    if (a == Rat(1) && !pc.line_filled) throw std::logic_error("a = 1 must give a line of singular points at infinity");
    pc.skeleton = pull_back(reduced_3d(a, b), pc.weight, sys, pc.notes);
    pc.provenance.push_back({"classify", kProp});
    pc.provenance.push_back({"pull-back", kThm3d});
    return pc;
}

PortraitClass classify_H1(const Rat& c01, const Rat& c10, const Rat& d01, const Rat& d10) {
    Rat det = c10 * d01 - c01 * d10, tr = c10 + d01;
    Rat disc = tr * tr - Rat(4) * det;
    PortraitClass pc;
    pc.kind = HomogKind::H1;
    SingularityClass origin;
    if (det.sign() < 0) {
        pc.figure_tag = "F6A";
        origin = {SingKind::Saddle, std::nullopt, kLinear};
    } else if (det.sign() > 0 && disc.sign() >= 0) {
        pc.figure_tag = "F6B";
        origin = {SingKind::Node, tr.sign(), kLinear};
    } else if (det.sign() > 0 && tr.sign() != 0) {
        pc.figure_tag = "F6C";
        origin = {SingKind::Focus, tr.sign(), kLinear};
        pc.notes.push_back("focus target: pulled-back portrait consists of closed tracks, center-equivalent; "
                           "orientation unspecified");
    } else if (det.sign() > 0) {
        pc.figure_tag = "F6D";
        origin = {SingKind::Center, std::nullopt, kLinear};
    } else {
        throw DomainError("linear target has zero determinant", kLinear);
    }
    pc.finite_singularities.push_back({"origin (reduced)", origin});
    pc.provenance.push_back({"classify", kLinear});
    return pc;
}

PortraitClass classify_H0(const Rat& c0, const Rat& d0, const CanonicalFamily& family) {
    if (c0.is_zero() || d0.is_zero()) throw DomainError("constant target needs c0 d0 != 0", kConstant);
    PortraitClass pc;
    pc.kind = HomogKind::H0;
    if (family.tag == FamilyTag::F2a)
        pc.figure_tag = "F7A";
    else if (family.tag == FamilyTag::F3c)
        pc.figure_tag = "F7B";
    else
        throw DomainError("constant targets arise only from families 2a and 3c, got " + to_string(family.tag),
                          kConstant);
    pc.family = family;
    pc.finite_singularities.push_back(
        {"origin (reduced)", {SingKind::ConstantField, std::nullopt, "no singular point in the reduced plane"}});
    pc.notes.push_back("infinite singularities located at the ends of the x-axis");
    pc.provenance.push_back({"classify", kConstant});
    return pc;
}

const std::set<std::string>& admissible_tags(int degree) {
    static const std::set<std::string> quadratic{"F6A", "F6B", "F6C", "F6D", "F7A"};
    static const std::set<std::string> cubic{"F4A", "F4B", "F4C", "F4D", "F4E", "F5A", "F5B", "F5C",
                                             "F6A", "F6B", "F6C", "F6D", "F7B"};
    static const std::set<std::string> none;
    return degree == 2 ? quadratic : (degree == 3 ? cubic : none);
}

Poly2 skeleton_polynomial(const InvariantLine& line, const WeightVector& w) {
    if (line.vertical()) return Poly2::x();
    const RealRoot& r = *line.slope;
    int s1 = static_cast<int>(w.s1), s2 = static_cast<int>(w.s2);
    if (r.is_exact()) {
        if (r.value().is_zero()) return Poly2::y();
        return Poly2::term(Rat(1), 0, s1) - Poly2::term(r.value(), s2, 0);
    }
    const UPoly& f = r.defining();
    Poly2 out;
    int k = f.degree();
    for (int i = 0; i <= k; ++i) out.add_term(f.coeff(i), s2 * (k - i), s1 * i);
    return out;
}

bool is_invariant(const Poly2& f, const PolySys& sys) {
    Poly2 lie = partial(f, Axis::X) * sys.p + partial(f, Axis::Y) * sys.q;
    return lie.is_zero() || divide_exact(lie, f).has_value();
}

PortraitClass global_portrait(const PolySys& sys) {
    CanonicalFamily fam = match_family(sys);
    if (fam.tag == FamilyTag::None) {
        std::string why;
        for (const auto& d : fam.diagnostics) why += (why.empty() ? "" : "; ") + d;
        throw DomainError("system matches no quadratic or cubic normal form: " + why,
                          "normal forms of quadratic and cubic quasi-homogeneous systems");
    }
    WeightVector w = minimal_weight(sys);
    Reduction red = reduce(sys, w);
    HomogKind kind = classify_target(red);
    const Poly2 &p = red.target.pn, &q = red.target.qn;

    PortraitClass pc;
    switch (kind) {
    case HomogKind::H0: pc = classify_H0(p.coeff(0, 0), q.coeff(0, 0), fam); break;
    case HomogKind::H1: pc = classify_H1(p.coeff(0, 1), p.coeff(1, 0), q.coeff(0, 1), q.coeff(1, 0)); break;
    case HomogKind::H2:
        if (fam.tag != FamilyTag::F3d) throw std::logic_error("quadratic target outside the 3d family");
        pc = classify_3d(fam.parameters.at("a"), fam.parameters.at("b"));
        pc.infinite_singularities.clear();
        pc.skeleton.clear();
        break;
    }
    pc.family = fam;
    pc.weight = w;
    pc.symmetry = symmetry_class(w);
    pc.kind = kind;
    pc.skeleton = pull_back(red.target, w, sys, pc.notes);
    add_infinity(pc, infinity_report(sys));
    for (const auto& d : red.diagnostics) pc.notes.push_back(d);
    pc.reduction = std::move(red);

    if (!admissible_tags(sys.degree()).count(pc.figure_tag))
        throw std::logic_error("figure tag " + pc.figure_tag + " is not admissible for degree " +
                               std::to_string(sys.degree()));
    pc.provenance.insert(pc.provenance.begin(),
                         {{"match_family", "normal forms of quadratic and cubic quasi-homogeneous systems"},
                          {"weight", "minimal weight vector"},
                          {"reduce", "reduction to the associated homogeneous system"}});
    pc.provenance.push_back({"infinity", "Poincare compactification"});
    return pc;
}

} // namespace quasiphase
