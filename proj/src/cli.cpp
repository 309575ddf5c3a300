#include "quasiphase/cli.hpp"

#include "quasiphase/errors.hpp"
#include "quasiphase/parser.hpp"
#include "quasiphase/render.hpp"
#include "quasiphase/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace quasiphase {

namespace {

HomogSys analysis_target(const PolySys& sys) {
    int n = sys.degree();
    if (sys.p.is_homogeneous() && sys.q.is_homogeneous() && sys.p.degree() == n && sys.q.degree() == n)
        return {sys.p, sys.q, n};
    Reduction red = reduce(sys, minimal_weight(sys));
    classify_target(red);
    return red.target;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Phase portraits of quadratic and cubic quasi-homogeneous systems", "quasiphase"};
    std::string command, format, out_path, vars_text = "x,y", text;
    app.add_option("command", command, "weights | reduce | analyze | portrait | render")
        ->required()
        ->check(CLI::IsMember({"weights", "reduce", "analyze", "portrait", "render"}));
    app.add_option("system", text, "\"dx = <poly>; dy = <poly>\"")->required();
    app.add_option("--format", format, "json | text | svg")->check(CLI::IsMember({"json", "text", "svg"}));
    app.add_option("--out", out_path, "write the result to PATH");
    app.add_option("--vars", vars_text, "variable names, e.g. u,v");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 1;
    }

    if (format.empty()) format = "json";
    if (command == "render" ? format == "text" : format == "svg") {
        err << "usage error: format " << format << " is not available for " << command << "\n";
        return 1;
    }
    auto comma = vars_text.find(',');
    if (comma == std::string::npos || vars_text.find(',', comma + 1) != std::string::npos) {
        err << "usage error: --vars takes two comma-separated names\n";
        return 1;
    }
    VarNames vars{vars_text.substr(0, comma), vars_text.substr(comma + 1)};

    std::string result;
    try {
        SystemSource src = parse_system(text, vars);
        const PolySys& sys = src.sys;
        Json report;
        if (command == "weights") {
            report = weights_report(sys);
        } else if (command == "reduce") {
            report = reduction_report(reduce(sys, minimal_weight(sys)));
        } else if (command == "analyze") {
            report = analysis_report(analysis_target(sys));
        } else if (command == "portrait") {
            report = portrait_report(global_portrait(sys));
        } else {
            result = emit_portrait(global_portrait(sys), sys, format, default_seed());
        }
        if (command != "render") {
            if (report.contains("system")) report["system"] = sys.str(vars.first, vars.second);
            result = format == "text" ? text_report(report) : report.dump(2) + "\n";
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << " [" << e.citation() << "]\n";
        return 2;
    }

    if (out_path.empty()) {
        out << result;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "usage error: cannot write " << out_path << "\n";
        return 1;
    }
    f << result;
    return f ? 0 : 1;
}

} // namespace quasiphase
