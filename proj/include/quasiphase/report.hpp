#pragma once

#include "quasiphase/portrait.hpp"

#include <json.hpp>

#include <string>

namespace quasiphase {

using Json = nlohmann::ordered_json;

Json singularity_json(const LocatedSingularity& s);

/// {figure_tag, symmetry, finite_singularities, infinite_singularities,
/// skeleton, provenance} followed by the classification details.
Json portrait_report(const PortraitClass& pc);

/// Weight solutions, minimal vector and symmetry class.
Json weights_report(const PolySys& sys);

Json reduction_report(const Reduction& red);

/// Characteristic directions, tangency, invariant lines, center test and
/// infinity data of a homogeneous system.
Json analysis_report(const HomogSys& hs);

/// Indented "key: value" rendering of a report.
std::string text_report(const Json& j);

} // namespace quasiphase
