#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tk/canonical.hpp"
#include "tk/catalog.hpp"
#include "tk/enumerate.hpp"
#include "tk/search.hpp"
#include "tk/verify.hpp"

using namespace tk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tournament load_tournament(const std::string& spec) {
    if (spec.rfind("t ", 0) == 0) return parse_tournament(spec);
    for (const auto& name : tournament_names())
        if (name == spec) return exception_tournament(name);
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot read tournament '" + spec + "'");
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_tournament(line);
    throw UsageError("no tournament in " + spec);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

bool env_deep() {
    const char* v = std::getenv("TK_DEEP");
    return v && std::string(v) == "1";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tk: oriented paths and cycles in tournaments"};
    app.require_subcommand(1);

    std::string tour, path, cycle, out_file, check = "catalog", report_file;
    int order = 0, origin = 0, jobs = 1, max_order = 0, samples = 100;
    std::uint64_t seed = 0;
    bool count_only = false, extended = false, deep = false, timing = false, guided = false;

    auto* embed = app.add_subcommand("embed", "find a path or cycle embedding");
    embed->add_option("--tournament", tour, "inline 't <n> <bits>', file, or catalog name")->required();
    auto* ep = embed->add_option("--path", path, "path type, e.g. +(1,2)");
    auto* ec = embed->add_option("--cycle", cycle, "cycle type, e.g. (2,1)");
    ep->excludes(ec);
    embed->add_option("--origin", origin, "required origin (1-based)");
    embed->add_flag("--proof-guided", guided, "use the degree-split cycle embedder");

    auto* orig = app.add_subcommand("origins", "origins of a Hamiltonian path type");
    orig->add_option("--tournament", tour)->required();
    orig->add_option("--path", path)->required();

    auto* cnt = app.add_subcommand("count", "number of embeddings of a Hamiltonian path type");
    cnt->add_option("--tournament", tour)->required();
    cnt->add_option("--path", path)->required();

    auto* en = app.add_subcommand("enum", "all tournaments of an order up to isomorphism");
    en->add_option("--order", order)->required()->check(CLI::Range(1, kMaxEnumOrderExtended));
    en->add_flag("--count-only", count_only);
    en->add_flag("--extended", extended, "allow order 9");
    en->add_option("--out", out_file);

    auto* cat = app.add_subcommand("catalog", "export the exception catalog");
    cat->add_option("--out", out_file);
    std::string show;
    cat->add_option("--show", show, "print one named tournament");

    auto* ver = app.add_subcommand("verify", "run an exhaustive check");
    ver->add_option("--check", check)->required();
    ver->add_option("--max-order", max_order)->check(CLI::Range(1, kMaxEnumOrder));
    ver->add_flag("--deep", deep, "order 8 sweeps");
    ver->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    ver->add_option("--report", report_file);
    ver->add_option("--seed", seed);
    ver->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    ver->add_flag("--timing", timing, "include wall time in the report");

    auto* can = app.add_subcommand("canon", "canonical form of a tournament");
    can->add_option("--tournament", tour)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*embed) {
            const Tournament t = load_tournament(tour);
            if (path.empty() == cycle.empty()) throw UsageError("give exactly one of --path or --cycle");
            std::optional<Embedding> w;
            if (!path.empty()) {
                SearchConstraints c;
                if (origin) {
                    if (origin < 1 || origin > t.order()) throw UsageError("--origin out of range");
                    c.required_origin = bit(origin - 1);
                }
                w = find_path_embedding(t, parse_path_type(path), c);
            } else {
                const CycleType c = parse_cycle_type(cycle);
                w = guided && c.order() == t.order() ? proof_guided_cycle_embedding(t, c) : find_cycle_embedding(t, c);
            }
            std::cout << (w ? format_sequence(*w) : "ABSENT") << "\n";
        } else if (*orig) {
            const Tournament t = load_tournament(tour);
            const PathType p = parse_path_type(path);
            if (p.order() != t.order()) throw UsageError("path order must equal tournament order");
            std::cout << format_labels(origins(t, p)) << "\n";
        } else if (*cnt) {
            const Tournament t = load_tournament(tour);
            const PathType p = parse_path_type(path);
            if (p.order() != t.order()) throw UsageError("path order must equal tournament order");
            if (t.order() > 20) throw UsageError("count supports order at most 20");
            std::cout << count_path_embeddings(t, p) << "\n";
        } else if (*en) {
            if (order > kMaxEnumOrder && !extended) throw UsageError("order 9 needs --extended");
            const auto& ts = tournaments_of_order(order, 1, extended);
            if (count_only) {
                std::cout << ts.size() << "\n";
            } else {
                std::ostringstream s;
                for (const auto& t : ts) s << format_tournament(t) << "\n";
                if (out_file.empty()) std::cout << s.str();
                else write_text(out_file, s.str());
            }
        } else if (*cat) {
            if (!show.empty()) {
                std::cout << format_tournament(load_tournament(show)) << "\n";
            } else if (out_file.empty()) {
                std::cout << catalog_json();
            } else {
                write_text(out_file, catalog_json());
            }
        } else if (*ver) {
            VerifyOptions opt;
            opt.max_order = max_order ? max_order : (deep || env_deep() ? 8 : 7);
            opt.jobs = jobs;
            opt.seed = seed;
            opt.samples = samples;
            const auto start = std::chrono::steady_clock::now();
            VerificationReport r = run_check(check, opt);
            if (timing)
                r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (report_file.empty()) std::cout << r.dump();
            else write_text(report_file, r.dump());
            std::cerr << r.check << ": " << (r.pass() ? "pass" : "fail") << " (" << r.instances << " instances, "
                      << r.violations.size() << " violations)\n";
            return r.pass() ? 0 : 1;
        } else if (*can) {
            std::cout << format_tournament(canonical_tournament(load_tournament(tour))) << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
