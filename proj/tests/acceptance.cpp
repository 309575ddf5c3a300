#include "oracles.hpp"
#include "quasiphase/cli.hpp"
#include "quasiphase/portrait.hpp"
#include "quasiphase/render.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace quasiphase;
using qp_test::S;

namespace {

Rat R(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

const FamilyTag kFamilies[] = {FamilyTag::F2a, FamilyTag::F2b, FamilyTag::F2c, FamilyTag::F3a, FamilyTag::F3b,
                               FamilyTag::F3c, FamilyTag::F3d, FamilyTag::F3e, FamilyTag::F3f, FamilyTag::F3g};

/// Valid random parameters, sign variant and sub-form for a family.
struct Instance {
    std::map<std::string, Rat> params;
    int sign = 1;
    int subform = 1;
};

Instance random_instance(FamilyTag t, std::mt19937_64& rng) {
    Instance in;
    in.sign = rng() % 2 ? 1 : -1;
    in.subform = t == FamilyTag::F3a ? 1 + static_cast<int>(rng() % 2) : 1;
    if (t == FamilyTag::F2a || t == FamilyTag::F3c) return in;
    if (t == FamilyTag::F3a || t == FamilyTag::F3d) {
        Rat a, b;
        do {
            a = qp_test::random_rat(rng, 6, true);
            b = qp_test::random_rat(rng, 6, true);
        } while (a == b || a * b == Rat(1) || (t == FamilyTag::F3a && in.subform == 1 && a.is_zero() && b.is_zero()) ||
                 (t == FamilyTag::F3a && in.subform == 2 && a.is_zero()));
        in.params["a"] = a;
        if (t == FamilyTag::F3a && in.subform == 2) return in;
        in.params["b"] = b;
        return in;
    }
    in.params["a"] = qp_test::random_rat(rng, 6);
    return in;
}

PolySys instance(FamilyTag t, const Instance& in) { return family_instance(t, in.params, in.sign, in.subform); }

/// Minimal weight vectors as listed for the ten normal forms.
WeightVector listed_weight(FamilyTag t) {
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
    return {};
}

Outcome criterion1() {
    Outcome o;
    std::mt19937_64 rng(101);
    int n = 0;
    for (FamilyTag t : kFamilies)
        for (int k = 0; k < 3; ++k) {
            Instance in = random_instance(t, rng);
            PolySys sys = rescale(instance(t, in), qp_test::random_rat(rng, 4), qp_test::random_rat(rng, 4),
                                  qp_test::random_rat(rng, 4));
            WeightVector w = minimal_weight(sys);
            ++n;
            if (!(w == listed_weight(t))) o.fail(to_string(t) + " gave " + w.str());
        }
    if (o.pass) o.detail = std::to_string(n) + " instances, all minimal weights as listed";
    return o;
}

/// Target and time rescale exponents listed for each normal form.
struct ListedReduction {
    PolySys target;
    Rat p;
    Rat q;
};

ListedReduction listed_reduction(FamilyTag t, const Instance& in) {
    Poly2 x = Poly2::x(), y = Poly2::y();
    auto a = [&] { return in.params.at("a"); };
    Rat s(in.sign), two(2), three(3), half = R(1, 2), two3 = R(2, 3);
    switch (t) {
    case FamilyTag::F2a: return {{Poly2::constant(two), Poly2::constant(three)}, half, two3};
    case FamilyTag::F2b: return {{a() * x, two * (x + y)}, Rat(0), half};
    case FamilyTag::F2c: return {{x + y, two * a() * y}, Rat(0), Rat(0)};
    case FamilyTag::F3a:
        if (in.subform == 2) return {{a() * x + s * y, two * x}, Rat(0), half};
        return {{a() * x + in.params.at("b") * y, two * (x + y)}, Rat(0), half};
    case FamilyTag::F3b: return {{two * (x + y), three * a() * y}, half, Rat(0)};
    case FamilyTag::F3c: return {{Poly2::constant(three), Poly2::constant(Rat(4))}, two3, R(3, 4)};
    case FamilyTag::F3d:
        return {{x * (a() * y + x), two * y * (in.params.at("b") * x + y)}, Rat(0), Rat(0)};
    case FamilyTag::F3e: return {{two * a() * x, three * (y + s * x)}, Rat(0), two3};
    case FamilyTag::F3f: return {{a() * x, three * (x + y)}, Rat(0), two3};
    case FamilyTag::F3g: return {{a() * x + y, three * y}, Rat(0), two3};
    case FamilyTag::None: break;
    }
    return {};
}

Outcome criterion2() {
    Outcome o;
    std::mt19937_64 rng(103);
    int lines = 0, matched = 0;
    std::set<FamilyTag> reported;
    for (FamilyTag t : kFamilies)
        for (int k = 0; k < 3; ++k) {
            Instance in = random_instance(t, rng);
            PolySys sys = instance(t, in);
            Reduction red = reduce(sys, minimal_weight(sys));
            classify_target(red);
            ListedReduction want = listed_reduction(t, in);
            ++lines;
            bool target_ok = red.target.sys() == want.target;
            bool rescale_ok = red.rescale.p == want.p && red.rescale.q == want.q;
            if (target_ok && rescale_ok) {
                ++matched;
                continue;
            }
            FracMono listed{want.p, want.q};
            std::string why = to_string(t) + ": ";
            if (!target_ok) why += "target " + red.target.str() + " vs listed " + want.target.str() + " ";
            if (!rescale_ok) why += "rescale " + red.rescale.str() + " vs listed " + listed.str();
            if (reported.insert(t).second) o.fail(why);
        }
    o.detail = std::to_string(matched) + "/" + std::to_string(lines) + " lines match" +
               (o.pass ? std::string() : "; " + o.detail);
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::set<std::string> tags;
    std::map<std::array<int, 3>, std::string> by_signs;
    auto grid = [](int k) { return R(-40 + 2 * k, 8); };  // -5 .. 5 in steps of 1/4
    std::vector<std::vector<std::string>> tag(41, std::vector<std::string>(41));
    for (int i = 0; i < 41; ++i)
        for (int j = 0; j < 41; ++j) {
            Rat a = grid(i), b = grid(j);
            if (b == R(1, 2) || a == Rat(2) || a * b == Rat(1)) continue;
            PortraitClass pc = classify_H2(a, b);
            tag[i][j] = pc.figure_tag;
            tags.insert(pc.figure_tag);
            std::array<int, 3> key{pc.signs->A, pc.signs->B, pc.signs->C};
            auto [it, fresh] = by_signs.emplace(key, pc.figure_tag);
            if (!fresh && it->second != pc.figure_tag) o.fail("tag not determined by the sign triple");
        }
    if (tags != std::set<std::string>{"F2A", "F2B", "F2C"}) o.fail("off-line grid produced " + std::to_string(tags.size()) + " tags");

    // Consecutive grid points along rows and columns change tag exactly when a
    // boundary line separates them.
    std::array<bool, 3> boundary_seen{};
    auto compare = [&](int i, int j, int i2, int j2) {
        SignTriple s1 = sign_triple(grid(i), grid(j)), s2 = sign_triple(grid(i2), grid(j2));
        std::array<bool, 3> crossed{s1.A != s2.A, s1.B != s2.B, s1.C != s2.C};
        bool changed = tag[i][j] != tag[i2][j2];
        if (changed && !(crossed[0] || crossed[1] || crossed[2])) o.fail("tag changes away from the boundary lines");
        if (changed)
            for (int k = 0; k < 3; ++k) boundary_seen[k] = boundary_seen[k] || crossed[k];
    };
    for (int line = 0; line < 41; ++line) {
        int last_row = -1, last_col = -1;
        for (int k = 0; k < 41; ++k) {
            if (!tag[line][k].empty()) {
                if (last_col >= 0) compare(line, last_col, line, k);
                last_col = k;
            }
            if (!tag[k][line].empty()) {
                if (last_row >= 0) compare(last_row, line, k, line);
                last_row = k;
            }
        }
    }
    if (!(boundary_seen[0] && boundary_seen[1] && boundary_seen[2])) o.fail("a boundary line separates no tags");

    std::set<std::string> tb, tc;
    for (int i = 0; i < 41; ++i) {
        Rat v = grid(i);
        if (v != Rat(2)) tb.insert(classify_H2(v, R(1, 2)).figure_tag);
        if (v != R(1, 2)) tc.insert(classify_H2(Rat(2), v).figure_tag);
    }
    std::set<std::string> f3{"F3A", "F3B"};
    if (tb != f3) o.fail("b = 1/2 tags differ from F3A/F3B");
    if (tc != f3) o.fail("a = 2 tags differ from F3A/F3B");
    if (o.pass) o.detail = "off-line grid F2A/F2B/F2C split by 2b-1, a-2, 1-ab; the b = 1/2 and a = 2 lines give F3A/F3B";
    return o;
}

SingKind infinite_kind(const PortraitClass& pc, const std::string& where) {
    for (const auto& s : pc.infinite_singularities)
        if (s.where == where) return s.cls.kind;
    return SingKind::NeedsBlowUp;
}

Outcome criterion4() {
    Outcome o;
    PortraitClass p = classify_H2(3, 1);
    HomogSys hs = reduced_3d(3, 1);
    std::string e1_note;
    bool origin_node = false;
    for (const auto& cd : characteristic_directions(hs)) {
        if (cd.vertical()) continue;
        SingKind k = classify_direction(cd, hs).kind;
        if (cd.slope->is_exact() && cd.slope->value().is_zero()) origin_node = k == SingKind::Node;
        if (cd.slope->is_exact() && cd.slope->value() == Rat(1)) e1_note = "blow-up point E1(0,1) is a " + to_string(k);
    }
    if (!origin_node) o.fail("(3,1): origin is not a node");
    if (infinite_kind(p, "infinity, direction u = 1") != SingKind::Node) o.fail("(3,1): point at infinity on u = 1 is not a node");
    if (infinite_kind(p, "infinity, end of the y-axis") != SingKind::Saddle) o.fail("(3,1): I1 is not a saddle");
    if (p.tangency != Tangency::InfinitelyMany) o.fail("(3,1): tangency is not infinitely many");

    PortraitClass q = classify_H2(R(3, 2), R(1, 4));
    HomogSys hq = reduced_3d(R(3, 2), R(1, 4));
    for (const auto& cd : characteristic_directions(hq))
        if (!cd.vertical() && cd.slope->is_exact() && cd.slope->value().is_zero() &&
            classify_direction(cd, hq).kind != SingKind::Saddle)
            o.fail("(1.5,0.25): origin is not a saddle");
    if (infinite_kind(q, "infinity, end of the y-axis") != SingKind::Node) o.fail("(1.5,0.25): I1 is not a node");
    if (q.tangency != Tangency::One) o.fail("(1.5,0.25): tangency is not exactly one");
    if (o.pass)
        o.detail = "(3,1) origin node, u = 1 node at infinity (" + e1_note +
                   "), I1 saddle, infinitely many tangent orbits; (1.5,0.25) origin saddle, I1 node, one tangent orbit";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::set<std::string> off, on;
    for (int i = -16; i <= 16; ++i)
        for (int j = -16; j <= 16; ++j) {
            Rat a = R(i, 4), b = R(j, 8);
            if (a * b == Rat(1) || (a == Rat(2) && b == R(1, 2))) continue;
            PortraitClass pc = global_portrait(family_instance(FamilyTag::F3d, {{"a", a}, {"b", b}}));
            (a == Rat(1) ? on : off).insert(pc.figure_tag);
        }
    if (off != std::set<std::string>{"F4A", "F4B", "F4C", "F4D", "F4E"}) o.fail("a != 1 tags differ from F4A..F4E");
    if (on != std::set<std::string>{"F5A", "F5B", "F5C"}) o.fail("a = 1 tags differ from F5A..F5C");
    if (o.pass) o.detail = "8 classes: F4A..F4E for a != 1, F5A..F5C for a = 1";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(107);
    std::set<std::string> seen2, seen3;
    int n = 0;
    for (FamilyTag t : kFamilies)
        for (int k = 0; k < 100; ++k) {
            Instance in = random_instance(t, rng);
            PolySys sys = rescale(instance(t, in), qp_test::random_rat(rng, 4), qp_test::random_rat(rng, 4),
                                  qp_test::random_rat(rng, 4));
            PortraitClass pc = global_portrait(sys);
            ++n;
            int deg = sys.degree();
            if (!admissible_tags(deg).count(pc.figure_tag)) o.fail(to_string(t) + " gave " + pc.figure_tag);
            (deg == 2 ? seen2 : seen3).insert(pc.figure_tag);
        }
    if (o.pass) {
        std::string s2, s3;
        for (const auto& s : seen2) s2 += " " + s;
        for (const auto& s : seen3) s3 += " " + s;
        o.detail = std::to_string(n) + " instances; quadratic:" + s2 + "; cubic:" + s3;
    }
    return o;
}

Outcome criteria7and8(bool duality) {
    Outcome o;
    std::mt19937_64 rng(109);
    int systems = 0, agree = 0, dual = 0, points = 0;
    while (systems < 200) {
        auto hs = qp_test::random_simple_homog(rng, 2 + static_cast<int>(rng() % 2));
        if (!hs) continue;
        ++systems;
        bool sys_agree = true, sys_dual = true;
        InfinityReport inf = infinity_report(hs->sys());
        for (const auto& cd : characteristic_directions(*hs)) {
            if (cd.vertical()) continue;
            ++points;
            SingKind e1 = classify_direction(cd, *hs).kind;
            if (e1 != qp_test::numeric_blowup_class(*hs, cd.slope->approx())) sys_agree = false;
            bool found = false;
            for (const auto& p : inf.chart_u)
                if (std::abs(p.u.approx() - cd.slope->approx()) < 1e-9) {
                    found = true;
                    SingKind e2 = p.cls.kind;
                    if ((e1 == SingKind::Saddle) != (e2 == SingKind::Node) ||
                        (e1 == SingKind::Node) != (e2 == SingKind::Saddle))
                        sys_dual = false;
                }
            if (!found) sys_dual = false;
        }
        agree += sys_agree;
        dual += sys_dual;
    }
    int got = duality ? dual : agree;
    if (got != 200) o.fail(std::to_string(got) + "/200");
    o.detail = std::to_string(got) + "/200 systems (" + std::to_string(points) + " blow-up points)";
    return o;
}

Outcome criterion9() {
    Outcome o;
    PolySys sys = S("dx = -y^3; dy = x^3");
    CenterTest ct = global_center_test({sys.p, sys.q, 3});
    if (!ct.center) o.fail("not classified as a global center");
    Orbit orbit = integrate(sys, {1, 0}, 1);
    const auto& last = orbit.samples.back();
    double gap = std::hypot(last.x - 1, last.y);
    if (orbit.termination != Termination::ClosedOrbit || gap >= 1e-6) o.fail("orbit gap " + std::to_string(gap));
    std::ostringstream d;
    d << "global center (" << (ct.symbolic ? "symbolic" : "quadrature") << "), orbit closes with gap " << gap;
    if (o.pass) o.detail = d.str();
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::ostringstream d;
    for (const char* text : {"dx = y^2; dy = x", "dx = x^2 + 3x*y^2; dy = x*y + y^3"}) {
        PolySys sys = S(text);
        PortraitClass pc = global_portrait(sys);
        RenderData rd = render_data(pc, sys, 0);
        double defect = qp_test::symmetry_defect(rd, pc.symmetry.kind);
        if (defect > 1e-9) o.fail(std::string(text) + " symmetry defect " + std::to_string(defect));
        d << to_string(pc.family->tag) << " " << to_string(pc.symmetry.kind) << " defect " << defect << "; ";

        std::ostringstream a, b, err;
        int ca = run_cli({"render", "--format", "json", text}, a, err);
        int cb = run_cli({"render", "--format", "json", text}, b, err);
        if (ca != 0 || cb != 0 || a.str() != b.str() || a.str().empty()) o.fail(std::string(text) + " JSON differs");
    }
    d << "JSON byte-identical across runs";
    if (o.pass) o.detail = d.str();
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, 1, criterion1},
        {2, 1, criterion2},
        {3, 5, criterion3},
        {4, 1, criterion4},
        {5, 10, criterion5},
        {6, 30, criterion6},
        {7, 30, [] { return criteria7and8(false); }},
        {8, 30, [] { return criteria7and8(true); }},
        {9, 5, criterion9},
        {10, 10, criterion10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit_s) o.fail("runtime " + std::to_string(secs) + " s over the limit");
        failed += !o.pass;
        std::printf("%s criterion %d: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, o.detail.c_str(), secs);
    }
    return failed == 0 ? 0 : 1;
}
