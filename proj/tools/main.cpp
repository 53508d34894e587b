#include <iostream>

#include "CLI11.hpp"

#include "projhom/report.hpp"
#include "projhom/zoo.hpp"

using namespace projhom;

namespace {

int emit_diagnostic(bool json, const std::string& kind, const std::string& message,
                    int line = -1, int column = -1) {
    if (json) {
        nlohmann::json j;
        j["error"] = message;
        j["kind"] = kind;
        if (line >= 0) {
            j["line"] = line;
            j["column"] = column;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error";
        if (line >= 0)
            std::cerr << " (line " << line << ", col " << column << ")";
        std::cerr << ": " << message << "\n";
    }
    return 2;
}

const char* build_error_kind(AlgebraBuildError::Kind k) {
    switch (k) {
    case AlgebraBuildError::Kind::NonAdmissible:
        return "NonAdmissible";
    case AlgebraBuildError::Kind::NonConfluent:
        return "NonConfluent";
    case AlgebraBuildError::Kind::Infinite:
        return "Infinite";
    }
    return "AlgebraBuildError";
}

const char* parse_error_kind(ParseError::Kind k) {
    switch (k) {
    case ParseError::Kind::Syntax:
        return "ParseError";
    case ParseError::Kind::UnknownField:
        return "UnknownField";
    case ParseError::Kind::DanglingArrowEndpoint:
        return "DanglingArrowEndpoint";
    case ParseError::Kind::NonAdmissible:
        return "NonAdmissible";
    }
    return "ParseError";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological algebra in proj(Lambda) for finite-dimensional quiver algebras"};
    app.require_subcommand(1);

    std::string file;
    std::size_t cutoff = 8;
    std::size_t n = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    bool json = false;
    bool trace = false;
    std::string vertex;

    auto* cmd_gldim =
        app.add_subcommand("gldim", "compare gldim of mod Lambda and mod Lambda^op");
    cmd_gldim->add_option("file", file, "algebra description file")->required();
    auto* gldim_cut = cmd_gldim->add_option("--cutoff", cutoff, "resolution length cutoff");
    cmd_gldim->add_flag("--json", json, "emit a JSON report");

    auto* cmd_check = app.add_subcommand(
        "check-theorem", "construct and verify cokernels on seeded random morphisms");
    cmd_check->add_option("file", file, "algebra description file")->required();
    cmd_check->add_option("--n", n, "degree of the cokernel construction")->required();
    cmd_check->add_option("--trials", trials, "number of seeded trials (default 100)");
    cmd_check->add_option("--seed", seed, "generator seed (default 0)");
    cmd_check->add_flag("--json", json, "emit a JSON report");
    cmd_check->add_flag("--trace", trace, "print the first failing construction trace");

    auto* cmd_resolve =
        app.add_subcommand("resolve", "print minimal projective resolutions of the simples");
    cmd_resolve->add_option("file", file, "algebra description file")->required();
    cmd_resolve->add_option("--vertex", vertex, "resolve only the simple at this vertex");
    auto* resolve_cut = cmd_resolve->add_option("--cutoff", cutoff, "resolution length cutoff");
    cmd_resolve->add_flag("--json", json, "emit a JSON report");

    auto* cmd_demo = app.add_subcommand("demo", "run the built-in algebra zoo end to end");
    cmd_demo->add_option("--trials", trials, "trials per check (default 100)");
    cmd_demo->add_option("--seed", seed, "generator seed (default 0)");
    auto* demo_cut = cmd_demo->add_option("--cutoff", cutoff, "resolution length cutoff");
    cmd_demo->add_flag("--json", json, "emit a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        RunReport report;
        if (app.got_subcommand(cmd_gldim)) {
            AlgebraSpecFile spec = parse_algebra_file(file);
            std::size_t cut = gldim_cut->count() ? cutoff : spec.resolution_cutoff;
            report = run_gldim(realize(spec), cut);
        } else if (app.got_subcommand(cmd_check)) {
            AlgebraSpecFile spec = parse_algebra_file(file);
            if (trials < 1)
                return emit_diagnostic(json, "Usage", "--trials must be at least 1");
            report = run_check_theorem(realize(spec), n, trials, seed, trace);
        } else if (app.got_subcommand(cmd_resolve)) {
            AlgebraSpecFile spec = parse_algebra_file(file);
            AlgebraPtr alg = realize(spec);
            int v = -1;
            if (!vertex.empty()) {
                v = alg->quiver().vertex_index(vertex);
                if (v < 0)
                    return emit_diagnostic(json, "UnknownField",
                                           "unknown vertex '" + vertex + "'");
            }
            std::size_t cut = resolve_cut->count() ? cutoff : spec.resolution_cutoff;
            report = run_resolve(alg, v, cut);
        } else {
            std::size_t cut = demo_cut->count() ? cutoff : 8;
            report = run_demo(trials, seed, cut);
        }
        std::cout << (json ? report.json_text() : report.text);
        return report.passed ? 0 : 1;
    } catch (const ParseError& e) {
        return emit_diagnostic(json, parse_error_kind(e.kind()), e.what(), e.line(),
                               e.column());
    } catch (const AlgebraBuildError& e) {
        return emit_diagnostic(json, build_error_kind(e.kind()), e.what());
    } catch (const TheoremError& e) {
        return emit_diagnostic(json, "TheoremError", e.what());
    } catch (const Error& e) {
        return emit_diagnostic(json, "Error", e.what());
    }
}
