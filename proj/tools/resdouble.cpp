#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "resdouble/generate.hpp"
#include "resdouble/io.hpp"

using namespace resdouble;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kIrrational = 3, kIncomplete = 4 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const IrrationalCenter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIrrational;
    } catch (const CompletenessViolation& e) {
        std::cerr << "error: incomplete data: " << e.what() << "\n";
        return kIncomplete;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const GermError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InvalidDigraph& e) {
        std::cerr << "error: not an Enriques digraph: " << e.what() << "\n";
        return kInput;
    } catch (const BlowupCapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise RESDOUBLE_MAX_BLOWUPS)\n";
        return kInput;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailure;
    }
}

struct ResolveOptions {
    std::string poly, poly_file, digraph, out, dot;
    int pluri_max = 3;
};

int cmd_resolve(const ResolveOptions& o) {
    WeightedDigraph w;
    json echo;
    if (!o.digraph.empty()) {
        const auto j = parse_json_text(read_file(o.digraph));
        w = weighted_from_json(j);
        echo = {{"digraph", j}};
    } else {
        std::string text = o.poly;
        if (!o.poly_file.empty()) {
            text = read_file(o.poly_file);
            while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        }
        w = canonical_resolution_trace(parse_poly(text)).weighted;
        echo = {{"poly", text}};
    }
    const auto report = run_pipeline(w, echo, o.pluri_max);
    for (const auto& msg : report.warnings) std::cerr << "warning: " << msg << "\n";
    write_text(o.out, to_json(report).dump(2) + "\n");
    if (!o.dot.empty()) write_text(o.dot, to_dot(report));
    return kOk;
}

int cmd_check(const std::string& path) {
    const auto j = parse_json_text(read_file(path));
    const auto g = digraph_from_json(j);
    const auto violations = validate_digraph(g);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cout << v.message << "\n";
        return kInput;
    }
    const auto w = weighted_from_json(j);
    const auto diag = check_complete(w);
    for (const auto& s : diag) std::cout << s << "\n";
    if (!diag.empty()) return kIncomplete;
    std::cout << "complete\n";
    return kOk;
}

int cmd_selftest(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    int digraphs = 0, curves = 0, failures = 0;
    auto report = [&](const std::vector<std::string>& bad, const std::string& what) {
        for (const auto& s : bad) std::cout << "FAIL " << s << " :: " << what << "\n";
        failures += !bad.empty();
    };
    while (digraphs < count)
        if (auto w = random_complete_weighted(rng)) {
            ++digraphs;
            report(check_instance(*w), to_json(*w).dump());
        }
    while (curves < count) {
        std::string f;
        if (auto t = random_branch_trace(rng, 12, &f)) {
            ++curves;
            report(check_instance(t->weighted), f);
        }
    }
    std::cout << digraphs << " digraphs, " << curves << " curves, " << failures << " failures\n";
    return failures ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical resolution of double point singularities of double planes"};
    app.require_subcommand(1);

    ResolveOptions ro;
    auto* resolve = app.add_subcommand("resolve", "Resolve a singularity and write the report");
    auto* in_poly = resolve->add_option("--poly", ro.poly, "Local equation of the branch curve, e.g. \"y*(y^2-x^3)\"");
    auto* in_poly_file = resolve->add_option("--poly-file", ro.poly_file, "File holding the local equation");
    auto* in_digraph = resolve->add_option("--digraph", ro.digraph, "Weighted Enriques digraph as JSON");
    in_poly->excludes(in_poly_file)->excludes(in_digraph);
    in_poly_file->excludes(in_digraph);
    resolve->add_option("--out", ro.out, "Report file (default: stdout)");
    resolve->add_option("--dot", ro.dot, "Graphviz output with the digraph and the dual graph");
    resolve->add_option("--pluri-max", ro.pluri_max, "Largest m for pluricanonical data")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();

    std::string check_path;
    auto* check = app.add_subcommand("check", "Validate a weighted digraph and check completeness");
    check->add_option("--digraph", check_path, "Weighted Enriques digraph as JSON")->required();

    int count = 200;
    unsigned seed = 1;
    auto* selftest = app.add_subcommand("selftest", "Check invariants on random instances");
    selftest->group("");
    selftest->add_option("--count", count)->check(CLI::PositiveNumber);
    selftest->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInput;
    }

    if (resolve->parsed()) {
        if (ro.poly.empty() && ro.poly_file.empty() && ro.digraph.empty()) {
            std::cerr << "error: give one of --poly, --poly-file, --digraph\n";
            return kInput;
        }
        return guarded([&] { return cmd_resolve(ro); });
    }
    if (check->parsed()) return guarded([&] { return cmd_check(check_path); });
    return guarded([&] { return cmd_selftest(count, seed); });
}
