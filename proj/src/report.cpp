#include "quasiphase/report.hpp"

#include "quasiphase/errors.hpp"

#include <sstream>

namespace quasiphase {

namespace {

Json class_json(const SingularityClass& c) {
    Json j{{"type", to_string(c.kind)}};
    if (c.stability) j["stability"] = *c.stability < 0 ? "attracting" : "repelling";
    if (!c.note.empty()) j["lemma"] = c.note;
    return j;
}

Json weight_json(const WeightVector& w) { return {{"s1", w.s1}, {"s2", w.s2}, {"d", w.d}}; }

Json strings(const std::vector<std::string>& v) {
    Json j = Json::array();
    for (const auto& s : v) j.push_back(s);
    return j;
}

void text_lines(const Json& j, const std::string& indent, std::ostringstream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = j.is_object() ? it.key() + ":" : "-";
        const Json& v = *it;
        if (v.is_structured() && !v.empty()) {
            out << indent << key << "\n";
            text_lines(v, indent + "  ", out);
        } else if (v.is_string()) {
            out << indent << key << " " << v.get<std::string>() << "\n";
        } else {
            out << indent << key << " " << v.dump() << "\n";
        }
    }
}

} // namespace

Json singularity_json(const LocatedSingularity& s) {
    Json j{{"where", s.where}};
    j.update(class_json(s.cls));
    return j;
}

Json portrait_report(const PortraitClass& pc) {
    Json j;
    j["figure_tag"] = pc.figure_tag;
    j["symmetry"] = to_string(pc.symmetry.kind);
    j["finite_singularities"] = Json::array();
    for (const auto& s : pc.finite_singularities) j["finite_singularities"].push_back(singularity_json(s));
    j["infinite_singularities"] = Json::array();
    for (const auto& s : pc.infinite_singularities) j["infinite_singularities"].push_back(singularity_json(s));
    j["skeleton"] = Json::array();
    for (const auto& c : pc.skeleton) j["skeleton"].push_back({{"curve", c.curve}, {"branches", c.branches}});
    j["provenance"] = Json::array();
    for (const auto& p : pc.provenance) j["provenance"].push_back({{"stage", p.stage}, {"lemma", p.lemma}});

    if (pc.family) {
        Json f{{"tag", to_string(pc.family->tag)}};
        Json params = Json::object();
        for (const auto& [k, v] : pc.family->parameters) params[k] = v.str();
        f["parameters"] = params;
        if (pc.family->sign_variant) f["sign_variant"] = *pc.family->sign_variant;
        if (pc.family->subform) f["subform"] = pc.family->subform;
        f["swapped"] = pc.family->swapped;
        if (pc.family->normal_form) f["normal_form"] = pc.family->normal_form->str();
        j["family"] = f;
    }
    j["weight"] = weight_json(pc.weight);
    if (pc.kind) j["target_kind"] = to_string(*pc.kind);
    if (pc.reduction) {
        j["target"] = pc.reduction->target.str();
        j["rescale"] = pc.reduction->rescale.str();
        j["quadrant"] = to_string(pc.reduction->quadrant);
    }
    if (pc.signs) j["sign_triple"] = {pc.signs->A, pc.signs->B, pc.signs->C};
    if (pc.tangency) j["vertical_tangency"] = to_string(*pc.tangency);
    if (!pc.origin_directions.empty()) {
        j["origin_directions"] = Json::array();
        for (const auto& s : pc.origin_directions) j["origin_directions"].push_back(singularity_json(s));
    }
    j["line_filled"] = pc.line_filled;
    j["notes"] = strings(pc.notes);
    return j;
}

Json weights_report(const PolySys& sys) {
    Json j{{"system", sys.str()}};
    WeightSolution sol = weight_vectors(sys);
    switch (sol.kind) {
    case WeightSolutionKind::None: j["solution"] = "none"; break;
    case WeightSolutionKind::Ray: j["solution"] = "ray"; break;
    case WeightSolutionKind::TwoParameter: j["solution"] = "two-parameter"; break;
    }
    j["vectors"] = Json::array();
    for (const auto& w : sol.vectors) j["vectors"].push_back(weight_json(w));
    if (sol.kind == WeightSolutionKind::TwoParameter) {
        j["basis"] = Json::array();
        for (const auto& b : sol.basis) j["basis"].push_back({b[0].str(), b[1].str(), b[2].str()});
    }
    if (sol.kind == WeightSolutionKind::Ray) {
        WeightVector w = minimal_weight(sys);
        j["minimal"] = weight_json(w);
        j["symmetry"] = w.s1 % 2 == 0 && w.s2 % 2 == 0 ? "none" : to_string(symmetry_class(w).kind);
    }
    j["provenance"] = Json::array({{{"stage", "weight"}, {"lemma", "scaling law on every monomial"}}});
    return j;
}

Json reduction_report(const Reduction& red) {
    Json j{{"system", red.source.str()},
           {"weight", weight_json(red.weight)},
           {"target", red.target.str()},
           {"target_degree", red.target.n},
           {"rescale", red.rescale.str()},
           {"quadrant", to_string(red.quadrant)},
           {"inverse_map", red.inverse_map},
           {"coprime_target", red.coprime_target},
           {"diagnostics", strings(red.diagnostics)}};
    j["target_kind"] = to_string(classify_target(red));
    j["provenance"] =
        Json::array({{{"stage", "reduce"}, {"lemma", "reduction to the associated homogeneous system"}}});
    return j;
}

Json analysis_report(const HomogSys& hs) {
    Json j{{"system", hs.str()}, {"degree", hs.n}};
    j["characteristic_directions"] = Json::array();
    for (const auto& cd : characteristic_directions(hs)) {
        Json d{{"direction", cd.vertical() ? std::string("vertical") : "u = " + cd.slope->str()},
               {"multiplicity", cd.multiplicity}};
        if (!cd.vertical()) d.update(class_json(classify_direction(cd, hs)));
        j["characteristic_directions"].push_back(d);
    }
    j["vertical_tangency"] = to_string(vertical_tangency(hs));
    j["invariant_lines"] = Json::array();
    for (const auto& l : invariant_lines(hs)) j["invariant_lines"].push_back(l.str());
    if (hs.n % 2 == 1) {
        CenterTest ct = global_center_test(hs);
        j["center_test"] = {{"center", ct.center},
                            {"symbolic", ct.symbolic},
                            {"integral", ct.integral},
                            {"error_estimate", ct.error_estimate},
                            {"reason", ct.reason}};
    }
    InfinityReport inf = infinity_report(hs.sys());
    Json i{{"u_chart", inf.u_chart.str("u")}, {"v_chart", inf.v_chart.str("v")}, {"line_filled", inf.line_filled}};
    i["points"] = Json::array();
    for (const auto& p : inf.chart_u) {
        Json e{{"where", "u = " + p.u.str()}};
        e.update(class_json(p.cls));
        i["points"].push_back(e);
    }
    if (inf.chart_v_origin) {
        Json e{{"where", "v = 0"}};
        e.update(class_json(*inf.chart_v_origin));
        i["points"].push_back(e);
    }
    j["infinity"] = i;
    j["provenance"] = Json::array({{{"stage", "blow-up"}, {"lemma", "blow-up characteristic-direction criterion"}},
                                   {{"stage", "infinity"}, {"lemma", "Poincare compactification"}}});
    return j;
}

std::string text_report(const Json& j) {
    std::ostringstream out;
    text_lines(j, "", out);
    return out.str();
}

} // namespace quasiphase
