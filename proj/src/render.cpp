#include "quasiphase/render.hpp"

#include "quasiphase/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>

namespace quasiphase {

namespace {

namespace ode = boost::numeric::odeint;

constexpr double kPi = std::numbers::pi;

struct NumTerm {
    double c;
    int i;
    int j;
};

std::vector<NumTerm> numeric_terms(const Poly2& p) {
    std::vector<NumTerm> out;
    for (const auto& [m, c] : p.terms()) out.push_back({c.to_double(), m.i, m.j});
    return out;
}

double ipow(double b, int e) {
    double r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

double eval_terms(const std::vector<NumTerm>& ts, double x, double y) {
    double s = 0;
    for (const auto& t : ts) s += t.c * ipow(x, t.i) * ipow(y, t.j);
    return s;
}

double disk_radius_sq(double x, double y) {
    double r2 = x * x + y * y;
    return r2 / (1 + r2);
}

Point mirror(SymmetryKind k, const Point& p) { return apply_symmetry(k, p[0], p[1]); }

/// Point of the weighted circle x^2 + y^2 = 1 scaled by r along the weighted dilation.
Point weighted_point(const WeightVector& w, double r, double theta) {
    return {std::pow(r, static_cast<double>(w.s1)) * std::cos(theta),
            std::pow(r, static_cast<double>(w.s2)) * std::sin(theta)};
}

/// Weighted angle of (x, y): the angle where its dilation orbit meets the unit circle.
double weighted_angle(const WeightVector& w, double x, double y) {
    double lo = -60, hi = 60;
    for (int k = 0; k < 200; ++k) {
        double mid = (lo + hi) / 2;
        double f = x * x * std::exp(-2.0 * w.s1 * mid) + y * y * std::exp(-2.0 * w.s2 * mid) - 1;
        (f > 0 ? lo : hi) = mid;
    }
    double rho = (lo + hi) / 2;
    return std::atan2(y * std::exp(-1.0 * w.s2 * rho), x * std::exp(-1.0 * w.s1 * rho));
}

/// Points at parameter 1 on each branch of a skeleton curve.
std::vector<Point> branch_bases(const SkeletonCurve& c, const WeightVector& w) {
    if (c.line.vertical()) return {{0, 1}, {0, -1}};
    double u0 = c.line.slope->approx();
    if (c.line.slope->is_exact() && c.line.slope->value().is_zero()) return {{1, 0}, {-1, 0}};
    std::vector<Point> out;
    for (double sx : {1.0, -1.0}) {
        double v = u0 * (w.s2 % 2 == 1 ? sx : 1.0);
        double root = std::pow(std::abs(v), 1.0 / static_cast<double>(w.s1));
        if (w.s1 % 2 == 1) {
            out.push_back({sx, v < 0 ? -root : root});
        } else if (v > 0) {
            out.push_back({sx, root});
            out.push_back({sx, -root});
        }
    }
    return out;
}

std::vector<Point> sample_branch(const Point& base, const WeightVector& w, double disk_radius) {
    std::vector<Point> out{{0, 0}};
    for (double rho = -14; rho <= 8; rho += 0.05) {
        double l = std::exp(rho);
        Point p{std::pow(l, static_cast<double>(w.s1)) * base[0], std::pow(l, static_cast<double>(w.s2)) * base[1]};
        out.push_back(p);
        if (disk_radius_sq(p[0], p[1]) >= disk_radius * disk_radius) break;
    }
    return out;
}

bool in_fundamental_domain(SymmetryKind k, double theta) {
    const double eps = 1e-12;
    double s = std::sin(theta), c = std::cos(theta);
    switch (k) {
    case SymmetryKind::ReflectY: return s >= -eps;
    case SymmetryKind::ReflectX: return c >= -eps;
    case SymmetryKind::Point: return s > eps || (std::abs(s) <= eps && c > 0);
    }
    return true;
}

/// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Orbit mirrored(const Orbit& o, SymmetryKind k) {
    Orbit m{{}, o.termination};
    for (const auto& s : o.samples) {
        Point p = mirror(k, {s.x, s.y});
        m.samples.push_back({p[0], p[1], s.t});
    }
    return m;
}

std::vector<OrbitSample> thin(const std::vector<OrbitSample>& s, double spacing) {
    std::vector<OrbitSample> out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!out.empty() && k + 1 < s.size()) {
            DiskPoint a = disk_project(out.back().x, out.back().y), b = disk_project(s[k].x, s[k].y);
            if (std::hypot(a.X - b.X, a.Y - b.Y) < spacing) continue;
        }
        out.push_back(s[k]);
    }
    return out;
}

std::string glyph(SingKind k) {
    switch (k) {
    case SingKind::Saddle: return "S";
    case SingKind::Node: return "N";
    case SingKind::SaddleNode: return "SN";
    case SingKind::Focus: return "F";
    case SingKind::Center: return "C";
    case SingKind::LineAtInfinity: return "L";
    case SingKind::ConstantField:
    case SingKind::NeedsBlowUp:
    case SingKind::Degenerate: return "D";
    }
    return "?";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string svg_xy(const DiskPoint& d) { return fmt(400 + 380 * d.X) + "," + fmt(400 - 380 * d.Y); }

std::string svg_polyline(const std::vector<Point>& pts) {
    std::string s = "<polyline points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) s += ' ';
        s += svg_xy(disk_project(pts[k][0], pts[k][1]));
    }
    return s + "\"/>\n";
}

std::string svg_marker(const DiskPoint& d, const std::string& label) {
    std::string x = fmt(400 + 380 * d.X), y = fmt(400 - 380 * d.Y);
    return "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"5\"/>\n<text x=\"" + fmt(408 + 380 * d.X) + "\" y=\"" +
           fmt(396 - 380 * d.Y) + "\">" + label + "</text>\n";
}

constexpr double kThinSpacing = 2e-3;

} // namespace

std::string to_string(Termination t) {
    switch (t) {
    case Termination::SingularityApproach: return "singularity-approach";
    case Termination::DiskBoundary: return "disk-boundary";
    case Termination::StepLimit: return "step-limit";
    case Termination::ClosedOrbit: return "closed-orbit";
    }
    return "?";
}

Orbit integrate(const PolySys& sys, Point start, int direction, const IntegrateOptions& opts,
                const std::vector<Point>& singularities) {
    using State = std::array<double, 2>;
    auto tp = numeric_terms(sys.p), tq = numeric_terms(sys.q);
    double sgn = direction < 0 ? -1.0 : 1.0;
    auto field = [&](const State& s) -> State {
        return {sgn * eval_terms(tp, s[0], s[1]), sgn * eval_terms(tq, s[0], s[1])};
    };
    auto near_singular = [&](const State& s) {
        for (const auto& q : singularities)
            if (std::hypot(s[0] - q[0], s[1] - q[1]) < opts.singular_radius) return true;
        return false;
    };
    State f0 = field(start);
    if (near_singular(start) || (f0[0] == 0 && f0[1] == 0))
        throw DomainError("orbit start (" + fmt(start[0]) + ", " + fmt(start[1]) + ") is a singular point",
                          "orbit integration");

    Orbit orbit;
    orbit.samples.push_back({start[0], start[1], 0});
    auto rhs = [&](const State& s, State& ds, double) { ds = field(s); };
    auto stepper = ode::make_dense_output(opts.atol, opts.rtol, ode::runge_kutta_dopri5<State>());
    double speed = std::hypot(f0[0], f0[1]);
    stepper.initialize(start, 0.0, 1e-3 / std::max(1.0, speed));

    auto section = [&](const State& s) { return (s[0] - start[0]) * f0[0] + (s[1] - start[1]) * f0[1]; };
    double scale = std::max(1.0, std::hypot(start[0], start[1]));
    double limit = opts.disk_radius * opts.disk_radius;
    for (std::size_t step = 0; step < opts.budget; ++step) {
        auto [t0, t1] = stepper.do_step(rhs);
        State s1 = stepper.current_state();
        if (!std::isfinite(s1[0]) || !std::isfinite(s1[1])) {
            orbit.termination = Termination::DiskBoundary;
            return orbit;
        }
        if (opts.stop_on_return) {
            State s0;
            stepper.calc_state(t0, s0);
            if (section(s0) < 0 && section(s1) >= 0) {
                double lo = t0, hi = t1;
                State m;
                for (int k = 0; k < 100; ++k) {
                    double mid = (lo + hi) / 2;
                    stepper.calc_state(mid, m);
                    (section(m) < 0 ? lo : hi) = mid;
                }
                stepper.calc_state(hi, m);
                if (std::hypot(m[0] - start[0], m[1] - start[1]) < opts.return_tolerance * scale) {
                    orbit.samples.push_back({m[0], m[1], sgn * hi});
                    orbit.termination = Termination::ClosedOrbit;
                    return orbit;
                }
            }
        }
        orbit.samples.push_back({s1[0], s1[1], sgn * t1});
        if (near_singular(s1)) {
            orbit.termination = Termination::SingularityApproach;
            return orbit;
        }
        if (disk_radius_sq(s1[0], s1[1]) >= limit) {
            orbit.termination = Termination::DiskBoundary;
            return orbit;
        }
    }
    orbit.termination = Termination::StepLimit;
    return orbit;
}

DiskPoint disk_project(double x, double y) {
    double n = std::sqrt(1 + x * x + y * y);
    return {x / n, y / n};
}

DiskPoint disk_project_direction(double dx, double dy) {
    double n = std::hypot(dx, dy);
    return {dx / n, dy / n};
}

DiskPoint disk_project_slope(double u0) { return disk_project_direction(1, u0); }

std::uint64_t default_seed() {
    const char* env = std::getenv("QUASIPHASE_SEED");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    return *end ? 0 : v;
}

RenderData render_data(const PortraitClass& pc, const PolySys& sys, std::uint64_t seed) {
    RenderData rd;
    const WeightVector& w = pc.weight;
    SymmetryKind sym = pc.symmetry.kind;
    IntegrateOptions opts;

    for (const auto& c : pc.skeleton)
        for (const auto& b : branch_bases(c, w)) {
            rd.curves.push_back(sample_branch(b, w, opts.disk_radius));
            rd.branch_angles.push_back(weighted_angle(w, b[0], b[1]));
        }
    std::size_t n = rd.curves.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Point> m;
        for (const auto& p : rd.curves[k]) m.push_back(mirror(sym, p));
        rd.curves.push_back(std::move(m));
    }

    std::vector<double> angles = rd.branch_angles;
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(), [](double a, double b) { return b - a < 1e-12; }),
                 angles.end());

    std::mt19937_64 rng(seed);
    std::vector<Point> seeds;
    if (angles.empty()) {
        for (double r : {0.4, 0.7, 1.0, 1.3}) seeds.push_back(weighted_point(w, r * (0.9 + 0.2 * unit(rng)), 0.0));
    } else {
        for (std::size_t k = 0; k < angles.size(); ++k) {
            double a = angles[k], b = k + 1 < angles.size() ? angles[k + 1] : angles[0] + 2 * kPi;
            double mid = std::remainder((a + b) / 2, 2 * kPi);
            double r = 0.75 + 0.5 * unit(rng);
            if (in_fundamental_domain(sym, mid)) seeds.push_back(weighted_point(w, r, mid));
        }
    }

    std::vector<Orbit> base;
    for (const auto& s : seeds) {
        Orbit fwd = integrate(sys, s, 1, opts);
        bool closed = fwd.termination == Termination::ClosedOrbit;
        base.push_back(std::move(fwd));
        if (!closed) base.push_back(integrate(sys, s, -1, opts));
    }
    for (auto& o : base) o.samples = thin(o.samples, kThinSpacing);
    for (const auto& o : base) {
        rd.orbits.push_back(o);
        rd.orbits.push_back(mirrored(o, sym));
    }
    return rd;
}

std::string emit_portrait(const PortraitClass& pc, const PolySys& sys, const std::string& format,
                          std::uint64_t seed) {
    if (format != "json" && format != "svg") throw std::invalid_argument("unsupported render format: " + format);
    RenderData rd = render_data(pc, sys, seed);

    if (format == "json") {
        Json doc;
        doc["system"] = sys.str();
        doc["portrait"] = portrait_report(pc);
        doc["orbits"] = Json::array();
        for (const auto& o : rd.orbits) {
            Json samples = Json::array();
            for (const auto& s : o.samples) samples.push_back({s.x, s.y, s.t});
            doc["orbits"].push_back({{"samples", samples}, {"termination", to_string(o.termination)}});
        }
        doc["curves"] = Json::array();
        for (const auto& c : rd.curves) {
            Json pts = Json::array();
            for (const auto& p : c) pts.push_back({p[0], p[1]});
            doc["curves"].push_back(pts);
        }
        doc["projection"] = "poincare-disk";
        doc["seed"] = seed;
        return doc.dump(1) + "\n";
    }

    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
                    "viewBox=\"0 0 800 800\">\n"
                    "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    s += std::string("<circle cx=\"400\" cy=\"400\" r=\"380\" fill=\"none\" stroke=\"black\" stroke-width=\"") +
         (pc.line_filled ? "4\" stroke-dasharray=\"6,4\"" : "2\"") + "/>\n";
    s += "<g id=\"orbits\" fill=\"none\" stroke=\"#2b5d8a\" stroke-width=\"0.8\">\n";
    for (const auto& o : rd.orbits) {
        std::vector<Point> pts;
        for (const auto& p : o.samples) pts.push_back({p.x, p.y});
        s += svg_polyline(pts);
    }
    s += "</g>\n<g id=\"skeleton\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"1.6\">\n";
    for (const auto& c : rd.curves) s += svg_polyline(c);
    s += "</g>\n<g id=\"singularities\" fill=\"black\" font-family=\"sans-serif\" font-size=\"13\">\n";
    if (!pc.finite_singularities.empty()) {
        std::string label;
        for (const auto& f : pc.finite_singularities) label += (label.empty() ? "" : ",") + glyph(f.cls.kind);
        s += svg_marker({0, 0}, label);
    }
    for (const auto& p : pc.infinite_singularities) {
        DiskPoint d = disk_project_direction(p.position[0], p.position[1]);
        s += svg_marker(d, glyph(p.cls.kind));
        s += svg_marker({-d.X, -d.Y}, glyph(p.cls.kind));
    }
    s += "</g>\n<text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" + pc.figure_tag + "</text>\n";
    s += "</svg>\n";
    return s;
}

} // namespace quasiphase
