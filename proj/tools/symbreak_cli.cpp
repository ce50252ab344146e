// Command-line front end: automorphism groups, determining numbers and
// indices, symmetry predicates, closed-form family values, hypercube edge
// constructions and the corpus reproduction runner.
//
// Exit codes: 0 success, 1 failed checks or corpus mismatches, 2 undefined
// determining index, 3 search budget exhausted, 64 usage errors, 65 parse
// errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symbreak/symbreak.hpp"

using json = nlohmann::ordered_json;
using namespace symbreak;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUndefined = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct CommonOptions {
    std::string graph6_text;
    std::string file_path;
    std::vector<std::string> family;
    std::string named;
    std::uint64_t budget = 0;  // 0 = default / env
    int threads = 0;           // reserved; results do not depend on it
    bool quiet = false;
};

void add_input_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--graph6", opts.graph6_text, "graph6-encoded graph");
    cmd->add_option("--file", opts.file_path, "file with one graph6 line");
    cmd->add_option("--family", opts.family,
                    "family name and integer parameters (path, cycle, complete, "
                    "complete_bipartite, star, empty, hypercube, join_nk)")
        ->expected(-1);
    cmd->add_option("--named", opts.named, "fixture name (G1, G2, G3, G4, EnvelopeH, K4MinusE)");
}

void add_run_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--budget", opts.budget, "search node budget (default 10^7, env SYMBREAK_BUDGET)");
    cmd->add_option("--threads", opts.threads, "reserved; output is independent of it");
    cmd->add_flag("--quiet", opts.quiet, "omit witnesses from the output");
}

std::uint64_t effective_budget(const CommonOptions& opts) {
    if (opts.budget > 0) return opts.budget;
    if (const char* env = std::getenv("SYMBREAK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return SearchOptions{}.budget_limit;
}

SearchOptions search_options(const CommonOptions& opts) {
    SearchOptions s;
    s.budget_limit = effective_budget(opts);
    return s;
}

Graph load_graph(const CommonOptions& opts) {
    int sources = int(!opts.graph6_text.empty()) + int(!opts.file_path.empty()) +
                  int(!opts.family.empty()) + int(!opts.named.empty());
    if (sources != 1)
        throw CLI::ValidationError("input", "exactly one of --graph6/--file/--family/--named");

    if (!opts.graph6_text.empty()) return parse_graph6(opts.graph6_text);
    if (!opts.file_path.empty()) {
        std::ifstream in(opts.file_path);
        if (!in) throw ParseError("cannot open file " + opts.file_path, 0);
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return parse_graph6(line);
    }
    ManifestEntry entry;
    entry.name = "cli";
    if (!opts.named.empty()) {
        entry.named = opts.named;
    } else {
        entry.family = opts.family.front();
        for (std::size_t i = 1; i < opts.family.size(); ++i)
            entry.params.push_back(std::stoll(opts.family[i]));
    }
    return manifest_graph(entry);
}

std::string graph_label(const Graph& g) {
    if (!g.name().empty()) return g.name();
    return write_graph6(g);
}

json witness_json(const std::vector<int>& vertices) { return json(vertices); }

json witness_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::vector<Edge> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw CLI::ValidationError("--set", "edges look like 0-1,2-3");
        out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return out;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

// --- subcommand bodies -------------------------------------------------------

int run_aut(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    GeneratorSet gens = automorphisms(g);
    json out{{"schema", 1},
             {"graph", graph_label(g)},
             {"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"aut_order", gens.order}};
    if (!opts.quiet) {
        json generators = json::array();
        for (const Permutation& p : gens.generators) generators.push_back(p.cycle_string());
        out["generators"] = generators;
        json orbits = json::array();
        for (const auto& orbit : vertex_orbits(gens)) orbits.push_back(orbit);
        out["vertex_orbits"] = orbits;
    }
    emit(out);
    return kExitOk;
}

int run_det(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    auto result = determining_number(g, search_options(opts));
    if (result.status == SearchStatus::unknown) {
        emit({{"schema", 1}, {"graph", graph_label(g)}, {"det", nullptr}, {"status", "unknown"}});
        return kExitBudget;
    }
    json out{{"schema", 1},
             {"graph", graph_label(g)},
             {"det", result.value},
             {"certified_minimal", result.certified_minimal}};
    if (!opts.quiet) out["witness"] = witness_json(result.witness);
    emit(out);
    return kExitOk;
}

int run_det_index(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    auto result = determining_index(g, search_options(opts));
    if (result.status == SearchStatus::unknown) {
        emit({{"schema", 1}, {"graph", graph_label(g)}, {"det_prime", nullptr}, {"status", "unknown"}});
        return kExitBudget;
    }
    json out{{"schema", 1},
             {"graph", graph_label(g)},
             {"det_prime", result.value},
             {"certified_minimal", result.certified_minimal}};
    if (!opts.quiet) out["witness"] = witness_json(result.witness);
    emit(out);
    return kExitOk;
}

int run_check_vertex_set(const CommonOptions& opts, const std::string& set_text) {
    Graph g = load_graph(opts);
    auto s = parse_vertex_list(set_text);
    SearchBudget budget;
    budget.limit = effective_budget(opts);
    bool det = is_vertex_determining(g, s, &budget);
    emit({{"schema", 1}, {"graph", graph_label(g)}, {"set", witness_json(s)}, {"determining", det}});
    return kExitOk;
}

int run_check_edge_set(const CommonOptions& opts, const std::string& set_text) {
    Graph g = load_graph(opts);
    auto t = parse_edge_list(set_text);
    SearchBudget budget;
    budget.limit = effective_budget(opts);
    bool det = is_edge_determining(g, t, &budget);
    emit({{"schema", 1}, {"graph", graph_label(g)}, {"set", witness_json(t)}, {"determining", det}});
    return kExitOk;
}

int run_props(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    GeneratorSet gens = automorphisms(g);
    json twins = json::array();
    for (const TwinPair& t : find_twins(g))
        twins.push_back({{"u", t.u},
                         {"v", t.v},
                         {"kind", t.kind == TwinKind::adjacent ? "adjacent" : "nonadjacent"}});
    json out{{"schema", 1},
             {"graph", graph_label(g)},
             {"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"connected", is_connected(g)},
             {"aut_order", gens.order},
             {"vertex_transitive", is_vertex_transitive(g)},
             {"edge_transitive", is_edge_transitive(g)},
             {"arc_transitive", is_arc_transitive(g)},
             {"edge_flip_invariant", is_edge_flip_invariant(g)}};
    if (!opts.quiet) out["twins"] = twins;
    emit(out);
    return kExitOk;
}

int run_bounds(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    auto det = determining_number(g, search_options(opts));
    auto idx = determining_index(g, search_options(opts));
    if (det.status == SearchStatus::unknown || idx.status == SearchStatus::unknown)
        return kExitBudget;
    BoundsReport report = check_bounds(g, search_options(opts));
    json witnesses{{"det", witness_json(det.witness)}, {"det_prime", witness_json(idx.witness)}};
    json out{{"schema", 1},
             {"graph", graph_label(g)},
             {"det", report.det},
             {"det_prime", report.det_prime},
             {"bounds_ok", report.ok},
             {"efi", report.edge_flip_invariant},
             {"notes", report.det_is_one ? "det = 1: index decided by edge-flip invariance"
                                         : "det' <= det <= 2 det'"}};
    if (!opts.quiet) out["witnesses"] = witnesses;
    emit(out);
    return report.ok ? kExitOk : kExitCheckFailed;
}

int run_family(const CommonOptions& opts, const std::vector<std::string>& family_args,
               bool verify) {
    if (family_args.empty()) throw CLI::ValidationError("family", "family name required");
    FamilySpec spec;
    const std::string& kind = family_args[0];
    std::vector<long long> params;
    for (std::size_t i = 1; i < family_args.size(); ++i)
        params.push_back(std::stoll(family_args[i]));

    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("family", kind + " needs " + std::to_string(k) +
                                                     " parameter(s)");
    };
    if (kind == "path") { need(1); spec.kind = FamilyPredictKind::path; spec.n = params[0]; }
    else if (kind == "cycle") { need(1); spec.kind = FamilyPredictKind::cycle; spec.n = params[0]; }
    else if (kind == "star") { need(1); spec.kind = FamilyPredictKind::star; spec.n = params[0]; }
    else if (kind == "complete") { need(1); spec.kind = FamilyPredictKind::complete; spec.n = params[0]; }
    else if (kind == "complete_bipartite") {
        need(2);
        spec.kind = FamilyPredictKind::complete_bipartite;
        spec.n = params[0];
        spec.m = params[1];
    } else if (kind == "hypercube") { need(1); spec.kind = FamilyPredictKind::hypercube; spec.n = params[0]; }
    else if (kind == "join_nk") { need(1); spec.kind = FamilyPredictKind::join_nk; spec.n = params[0]; }
    else throw CLI::ValidationError("family", "unknown family " + kind);

    Prediction p = predict(spec, search_options(opts));
    json out{{"schema", 1}, {"family", kind}, {"params", params}};
    out["det"] = p.det ? json(*p.det) : json(nullptr);
    out["det_prime"] = p.det_prime ? json(*p.det_prime) : json(nullptr);
    out["det_source"] = p.det_source;
    out["det_prime_source"] = p.det_prime_source;

    bool mismatch = false;
    if (verify) {
        Graph g = realize_family(spec);
        auto det = determining_number(g, search_options(opts));
        if (det.status == SearchStatus::unknown) return kExitBudget;
        out["search_det"] = det.value;
        if (p.det && det.value != *p.det) mismatch = true;
        if (p.det_prime) {
            auto idx = determining_index(g, search_options(opts));
            if (idx.status == SearchStatus::unknown) return kExitBudget;
            out["search_det_prime"] = idx.value;
            if (idx.value != *p.det_prime) mismatch = true;
        }
        out["verified"] = !mismatch;
    }
    emit(out);
    return mismatch ? kExitCheckFailed : kExitOk;
}

int run_qn_construct(const CommonOptions& opts, int n) {
    auto c = construct_qn_edge_set(n, search_options(opts));
    json y_rows = json::array();
    for (int r = 0; r < c.y.rows(); ++r) y_rows.push_back(c.y.row_string(r));
    json x_rows = json::array();
    for (int r = 0; r < c.x.rows(); ++r) x_rows.push_back(c.x.row_string(r));
    json out{{"schema", 1},
             {"n", n},
             {"det_prime", qn_det_index(n)},
             {"edge_count", c.edges.size()},
             {"edges", witness_json(c.edges)}};
    if (!opts.quiet) {
        out["y"] = y_rows;
        out["x"] = x_rows;
    }
    emit(out);
    return kExitOk;
}

int run_q4_check(const CommonOptions& opts) {
    auto r = q4_endvertex_check(search_options(opts));
    json out{{"schema", 1},
             {"edge_set", witness_json(r.edge_set)},
             {"edge_set_determining", r.edge_set_determining},
             {"det_prime_q4", r.det_index},
             {"edge_set_minimum", r.edge_set_minimum},
             {"endvertices", witness_json(r.endvertices)},
             {"endvertices_determining", r.endvertices_determining},
             {"det_q4", r.det_number},
             {"endvertex_set_not_minimum", r.endvertex_set_not_minimum},
             {"every_three_subset_fails", r.every_three_subset_fails},
             {"all_passed", r.all_passed()}};
    emit(out);
    return r.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_series(long long max_n) {
    std::cout << series_csv(comparison_series(max_n));
    return kExitOk;
}

int run_corpus(const CommonOptions& opts, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest " + path, 0);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto entries = parse_manifest(buffer.str());

    int mismatches = 0;
    for (const ManifestEntry& entry : entries) {
        Graph g = manifest_graph(entry);
        std::vector<std::string> diffs;
        auto diff = [&](const std::string& field, long long expected, long long got) {
            if (expected != got)
                diffs.push_back(field + " expected " + std::to_string(expected) + " got " +
                                std::to_string(got));
        };
        if (entry.det) diff("det", *entry.det, determining_number(g, search_options(opts)).value);
        if (entry.det_prime)
            diff("det_prime", *entry.det_prime, determining_index(g, search_options(opts)).value);
        if (entry.aut_order)
            diff("aut_order", *entry.aut_order, static_cast<long long>(automorphisms(g).order));
        if (entry.efi) {
            bool got = is_edge_flip_invariant(g);
            if (got != *entry.efi)
                diffs.push_back(std::string("efi expected ") + (*entry.efi ? "true" : "false") +
                                " got " + (got ? "true" : "false"));
        }
        if (diffs.empty()) {
            std::cout << "ok       " << entry.name << "\n";
        } else {
            ++mismatches;
            for (const std::string& d : diffs) {
                std::cout << "MISMATCH " << entry.name << ": " << d;
                if (!entry.source.empty()) std::cout << " [" << entry.source << "]";
                std::cout << "\n";
            }
        }
    }
    std::cout << entries.size() << " entries, " << mismatches << " mismatched\n";
    return mismatches == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determining numbers, determining indices and symmetry predicates"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string set_text;
    std::vector<std::string> family_args;
    bool family_verify = false;
    int construct_n = 0;
    long long series_max = 0;
    std::string corpus_path;

    CLI::App* aut = app.add_subcommand("aut", "automorphism group generators and order");
    add_input_options(aut, opts);
    add_run_options(aut, opts);

    CLI::App* det = app.add_subcommand("det", "determining number with witness");
    add_input_options(det, opts);
    add_run_options(det, opts);

    CLI::App* det_index = app.add_subcommand("det-index", "determining index with witness");
    add_input_options(det_index, opts);
    add_run_options(det_index, opts);

    CLI::App* cvs = app.add_subcommand("check-vertex-set", "test a vertex set for determining");
    add_input_options(cvs, opts);
    add_run_options(cvs, opts);
    cvs->add_option("--set", set_text, "comma-separated vertex ids, e.g. 0,2,4")->required();

    CLI::App* ces = app.add_subcommand("check-edge-set", "test an edge set for determining");
    add_input_options(ces, opts);
    add_run_options(ces, opts);
    ces->add_option("--set", set_text, "comma-separated edges, e.g. 0-1,2-3")->required();

    CLI::App* props = app.add_subcommand("props", "transitivity, flip invariance, twins");
    add_input_options(props, opts);
    add_run_options(props, opts);

    CLI::App* bounds = app.add_subcommand("bounds", "det / det' bound report");
    add_input_options(bounds, opts);
    add_run_options(bounds, opts);

    CLI::App* family = app.add_subcommand("family", "closed-form family values");
    family->add_option("spec", family_args, "family name and parameters, e.g. complete 6")
        ->required()
        ->expected(-1);
    family->add_flag("--verify", family_verify, "cross-check against exhaustive search");
    add_run_options(family, opts);

    CLI::App* qn = app.add_subcommand("qn-construct", "hypercube minimum edge determining set");
    qn->add_option("n", construct_n, "hypercube dimension (>= 3)")->required();
    add_run_options(qn, opts);

    CLI::App* q4 = app.add_subcommand("q4-check", "Q_4 endvertex gap reproduction");
    add_run_options(q4, opts);

    CLI::App* series = app.add_subcommand("series", "excess/threshold comparison series as CSV");
    series->add_option("max_n", series_max, "last n (>= 3)")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "diff computed values against a manifest");
    corpus->add_option("manifest", corpus_path, "TOML manifest path")->required();
    add_run_options(corpus, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (aut->parsed()) return run_aut(opts);
        if (det->parsed()) return run_det(opts);
        if (det_index->parsed()) return run_det_index(opts);
        if (cvs->parsed()) return run_check_vertex_set(opts, set_text);
        if (ces->parsed()) return run_check_edge_set(opts, set_text);
        if (props->parsed()) return run_props(opts);
        if (bounds->parsed()) return run_bounds(opts);
        if (family->parsed()) return run_family(opts, family_args, family_verify);
        if (qn->parsed()) return run_qn_construct(opts, construct_n);
        if (q4->parsed()) return run_q4_check(opts);
        if (series->parsed()) return run_series(series_max);
        if (corpus->parsed()) return run_corpus(opts, corpus_path);
        return kExitUsage;
    } catch (const UndefinedDeterminingIndex& e) {
        std::cerr << "determining index undefined: " << e.what() << "\n";
        return kExitUndefined;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
