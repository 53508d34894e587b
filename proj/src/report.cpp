#include "projhom/report.hpp"

#include <sstream>

#include "projhom/sampler.hpp"
#include "projhom/zoo.hpp"

namespace projhom {

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["algebra"] = algebra_summary;
    j["command"] = command;
    j["seed"] = seed;
    j["results"] = results;
    j["passed"] = passed;
    return j;
}

std::string RunReport::json_text() const {
    return to_json().dump(2) + "\n";
}

nlohmann::json dim_value_json(const DimValue& v, std::size_t cutoff) {
    nlohmann::json j;
    j["finite"] = v.finite;
    if (v.finite)
        j["value"] = v.value;
    else
        j["cutoff"] = cutoff;
    return j;
}

namespace {

nlohmann::json dim_report_json(const AlgebraPtr& alg, const DimReport& report) {
    nlohmann::json per;
    for (std::size_t v = 0; v < report.per_simple.size(); ++v)
        per[alg->quiver().vertex_label(static_cast<int>(v))] =
            dim_value_json(report.per_simple[v], report.cutoff);
    nlohmann::json j;
    j["gldim"] = dim_value_json(report.gldim, report.cutoff);
    j["per_simple"] = per;
    return j;
}

std::vector<std::string> text_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::string resolution_line(const AlgebraPtr& alg, int vertex, const Resolution& r) {
    std::ostringstream os;
    os << "S(" << alg->quiver().vertex_label(vertex) << "): ";
    if (!r.truncated)
        os << "0 -> ";
    else
        os << "... -> ";
    for (std::size_t i = r.terms.size(); i-- > 0;)
        os << r.terms[i].str() << " -> ";
    os << "S(" << alg->quiver().vertex_label(vertex) << ")";
    if (r.truncated)
        os << "  (truncated at " << r.length() << ")";
    return os.str();
}

} // namespace

RunReport run_gldim(const AlgebraPtr& alg, std::size_t cutoff) {
    RunReport report;
    report.command = "gldim";
    report.algebra_summary = alg->describe();

    GldimComparison cmp = gldim_compare(alg, cutoff);
    report.passed = cmp.equal;
    report.results["cutoff"] = cutoff;
    report.results["lambda"] = dim_report_json(alg, cmp.lambda);
    report.results["opposite"] = dim_report_json(alg->opposite(), cmp.opposite);
    report.results["equal"] = cmp.equal;
    report.results["version"] = kVersion;

    std::ostringstream os;
    os << "gldim mod Λ " << (cmp.lambda.gldim.finite ? "= " : "> ")
       << (cmp.lambda.gldim.finite ? std::to_string(cmp.lambda.gldim.value)
                                   : std::to_string(cutoff))
       << ", gldim mod Λ^op " << (cmp.opposite.gldim.finite ? "= " : "> ")
       << (cmp.opposite.gldim.finite ? std::to_string(cmp.opposite.gldim.value)
                                     : std::to_string(cutoff))
       << ", " << (cmp.equal ? "equal" : "NOT EQUAL");
    if (cmp.equal && !cmp.lambda.gldim.finite)
        os << " at cutoff " << cutoff;
    os << "\n";
    report.text = os.str();
    return report;
}

RunReport run_check_theorem(const AlgebraPtr& alg, std::size_t n, std::size_t trials,
                            std::uint64_t seed, bool want_trace) {
    RunReport report;
    report.command = "check-theorem";
    report.algebra_summary = alg->describe();
    report.seed = seed;
    report.results["n"] = n;
    report.results["trials"] = trials;
    report.results["version"] = kVersion;

    // precondition: the construction needs gldim(mod Lambda) <= n + 1
    std::size_t cutoff = std::max<std::size_t>(8, n + 2);
    DimReport dims = gldim_report(alg, cutoff);
    if (!dims.gldim.finite || dims.gldim.value > n + 1) {
        report.passed = false;
        report.results["error"] = "precondition violated: gldim(mod Lambda) " +
                                  (dims.gldim.finite ? std::to_string(dims.gldim.value)
                                                     : ">" + std::to_string(cutoff)) +
                                  " exceeds n+1 = " + std::to_string(n + 1);
        report.results["passes"] = 0;
        report.results["failures"] = 0;
        report.text = "error: " + report.results["error"].get<std::string>() + "\n";
        return report;
    }

    std::size_t passes = 0;
    nlohmann::json first_failure;
    std::string first_failure_text;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = trial_rng(seed, trial);
        ProjMorphism a0 = sample_morphism(alg, rng);
        bool ok = false;
        std::string trace_text;
        try {
            if (n == 0) {
                ZeroCokernelResult r = construct_0_cokernel(a0);
                bool retraction_found = false;
                if (auto ret = factor_through(r.mono, ProjMorphism::identity(r.mono.source()),
                                              SolveSide::left))
                    retraction_found =
                        compose(*ret, r.mono) == ProjMorphism::identity(r.mono.source());
                ok = r.trace.identities_hold() && is_epi_cat(r.epi) && retraction_found &&
                     compose(r.mono, r.epi) == a0;
                trace_text = r.trace.to_text();
            } else {
                NCokernelResult r = construct_n_cokernel(a0, n);
                ok = r.trace.identities_hold() && verify_n_cokernel(a0, r.chain);
                trace_text = r.trace.to_text();
            }
        } catch (const TheoremError& e) {
            ok = false;
            trace_text = std::string("construction failed: ") + e.what() + "\n" +
                         e.trace_text();
        }
        if (ok) {
            ++passes;
        } else if (first_failure.is_null()) {
            first_failure["trial"] = trial;
            first_failure["trace"] = text_lines(trace_text);
            first_failure_text = trace_text;
        }
    }

    report.passed = passes == trials;
    report.results["passes"] = passes;
    report.results["failures"] = trials - passes;
    report.results["first_failure"] = first_failure;

    std::ostringstream os;
    os << passes << "/" << trials << " constructed "
       << (n == 0 ? "0-cokernels" : std::to_string(n) + "-cokernels") << " verified\n";
    if (!report.passed && want_trace)
        os << "first failing trace:\n" << first_failure_text;
    report.text = os.str();
    return report;
}

RunReport run_resolve(const AlgebraPtr& alg, int vertex, std::size_t cutoff) {
    RunReport report;
    report.command = "resolve";
    report.algebra_summary = alg->describe();
    report.results["cutoff"] = cutoff;
    report.results["version"] = kVersion;

    std::ostringstream os;
    nlohmann::json per;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        if (vertex >= 0 && static_cast<int>(v) != vertex)
            continue;
        Resolution r = minimal_resolution(simple_of(alg, static_cast<int>(v)), cutoff);
        os << resolution_line(alg, static_cast<int>(v), r) << "\n";
        nlohmann::json jr;
        jr["truncated"] = r.truncated;
        jr["length"] = r.length();
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : r.terms)
            terms.push_back(t.str());
        jr["terms"] = terms;
        per[alg->quiver().vertex_label(static_cast<int>(v))] = jr;
    }
    report.results["resolutions"] = per;
    report.passed = true;
    report.text = os.str();
    return report;
}

RunReport run_demo(std::size_t trials, std::uint64_t seed, std::size_t cutoff) {
    RunReport report;
    report.command = "demo";
    report.algebra_summary = "built-in zoo";
    report.seed = seed;
    report.results["version"] = kVersion;

    bool all = true;
    std::ostringstream os;
    nlohmann::json per;
    for (const auto& entry : algebra_zoo()) {
        AlgebraPtr alg = zoo_algebra(entry.name);
        nlohmann::json ja;
        os << "== " << entry.name << " (" << alg->describe() << ")\n";

        RunReport g = run_gldim(alg, cutoff);
        all = all && g.passed;
        ja["gldim"] = g.results;
        os << "  " << g.text.substr(0, g.text.size() - 1) << "\n";

        // theorem checks where the global dimension allows them
        DimReport dims = gldim_report(alg, cutoff);
        nlohmann::json jt = nlohmann::json::array();
        if (dims.gldim.finite) {
            std::vector<std::size_t> ns;
            if (dims.gldim.value == 0)
                ns = {0};
            else if (dims.gldim.value == 1)
                ns = {0, 1};
            else
                ns = {dims.gldim.value - 1, dims.gldim.value};
            for (std::size_t n : ns) {
                RunReport t = run_check_theorem(alg, n, trials, seed, false);
                all = all && t.passed;
                nlohmann::json jn;
                jn["n"] = n;
                jn["passes"] = t.results["passes"];
                jn["trials"] = trials;
                jt.push_back(jn);
                os << "  n = " << n << ": " << t.text.substr(0, t.text.size() - 1) << "\n";
            }
        } else {
            os << "  gldim above cutoff; cokernel constructions not applicable\n";
        }
        ja["theorem"] = jt;
        per[entry.name] = ja;
    }
    report.results["algebras"] = per;
    report.passed = all;
    os << (all ? "demo: all checks passed\n" : "demo: FAILURES\n");
    report.text = os.str();
    return report;
}

} // namespace projhom
