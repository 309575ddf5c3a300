#pragma once

#include "quasiphase/portrait.hpp"
#include "quasiphase/report.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace quasiphase {

using Point = std::array<double, 2>;

struct OrbitSample {
    double x = 0;
    double y = 0;
    double t = 0;
};

enum class Termination { SingularityApproach, DiskBoundary, StepLimit, ClosedOrbit };

std::string to_string(Termination t);

struct Orbit {
    std::vector<OrbitSample> samples;
    Termination termination = Termination::StepLimit;
};

struct IntegrateOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    /// Stop this close to a known singular point.
    double singular_radius = 1e-6;
    /// Stop when the projected point leaves this disk radius.
    double disk_radius = 0.999;
    std::size_t budget = 100000;
    /// Stop at the first return to the section through the start point when
    /// the crossing lies within return_tolerance of the start.
    bool stop_on_return = true;
    double return_tolerance = 1e-4;
};

/// Adaptive Dormand-Prince 5(4) trajectory of sys (direction +1) or of -sys
/// (direction -1). Throws DomainError when start is a singular point.
Orbit integrate(const PolySys& sys, Point start, int direction, const IntegrateOptions& opts = {},
                const std::vector<Point>& singularities = {{0.0, 0.0}});

struct DiskPoint {
    double X = 0;
    double Y = 0;
};

/// (x, y) / sqrt(1 + x^2 + y^2).
DiskPoint disk_project(double x, double y);
/// Equator point of the direction (dx, dy).
DiskPoint disk_project_direction(double dx, double dy);
/// Equator point of the slope u0.
DiskPoint disk_project_slope(double u0);

struct RenderData {
    std::vector<Orbit> orbits;
    /// Sampled skeleton branches in the plane.
    std::vector<std::vector<Point>> curves;
    /// Weighted angles of the skeleton branches on the unit circle.
    std::vector<double> branch_angles;
};

/// Render seed from QUASIPHASE_SEED, 0 when unset or malformed.
std::uint64_t default_seed();

/// Skeleton samples, one orbit pair per complementary region (concentric
/// closed orbits when the skeleton is empty), mirrored by the symmetry.
RenderData render_data(const PortraitClass& pc, const PolySys& sys, std::uint64_t seed);

/// JSON {system, portrait, orbits, curves, projection} or an 800x800 SVG.
/// Throws std::invalid_argument for other formats.
std::string emit_portrait(const PortraitClass& pc, const PolySys& sys, const std::string& format,
                          std::uint64_t seed);

} // namespace quasiphase
