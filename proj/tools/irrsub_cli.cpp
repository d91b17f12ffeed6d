#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "irrsub/cubic_solver.hpp"
#include "irrsub/general_solver.hpp"
#include "irrsub/generators.hpp"
#include "irrsub/io.hpp"
#include "irrsub/oracle.hpp"
#include "irrsub/strength.hpp"

using namespace irrsub;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot write " + path);
    out << text;
}

multigraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

int classify_exit(const error& e) {
    switch (e.code) {
        case errc::internal_invariant: return exit_internal;
        default: return exit_usage;
    }
}

struct predicate_spec {
    enum class kind { state0, proper, norm, maxcount } k;
    int64_t value = 0;
};

predicate_spec parse_predicate(const std::string& text) {
    predicate_spec p{predicate_spec::kind::state0, 0};
    if (text == "state0") {
        p.k = predicate_spec::kind::state0;
    } else if (text == "proper") {
        p.k = predicate_spec::kind::proper;
    } else if (text.rfind("norm:", 0) == 0) {
        p.k = predicate_spec::kind::norm;
        p.value = std::stoll(text.substr(5));
    } else if (text.rfind("maxcount:", 0) == 0) {
        p.k = predicate_spec::kind::maxcount;
        p.value = std::stoll(text.substr(9));
    } else {
        fail(errc::invalid_params, "unknown predicate '" + text + "'");
    }
    return p;
}

bool predicate_holds(const predicate_spec& p, const scaled_a& a) {
    switch (p.k) {
        case predicate_spec::kind::state0: return classify(a) == cubic_state::state0;
        case predicate_spec::kind::proper: {
            auto c = classify(a);
            return c == cubic_state::state0 || c == cubic_state::proper;
        }
        case predicate_spec::kind::norm: return inf_norm(a) <= p.value;
        case predicate_spec::kind::maxcount: {
            for (auto x : a.entries)
                if ((x + a.n) / (a.d + 1) > p.value) return false;
            return true;
        }
    }
    return false;
}

int cmd_gen(const std::string& family, int k, int d, int n, int s, int copies, uint64_t seed,
            const std::string& base_path, const std::string& out_path) {
    multigraph g;
    if (family == "k2k") {
        g = make_k2k(k);
    } else if (family == "bipartite") {
        g = make_complete_bipartite(d);
    } else if (family == "cycle") {
        g = make_cycle(n);
    } else if (family == "petersen") {
        g = make_petersen();
    } else if (family == "k4") {
        g = make_k4();
    } else if (family == "random") {
        g = random_regular(n, d, seed);
    } else if (family == "doubled") {
        auto base = load_graph(base_path);
        g = make_doubled(base, s);
    } else if (family == "union") {
        auto base = load_graph(base_path);
        g = make_disjoint_union(base, copies);
    } else {
        fail(errc::invalid_params, "unknown family '" + family + "'");
    }
    spit(out_path, serialize_graph(g));
    std::printf("wrote %s: n=%d m=%d\n", out_path.c_str(), g.vertex_count(), g.edge_count());
    return exit_ok;
}

int cmd_solve(const std::string& algo, const std::string& input, const std::string& init,
              const std::string& output) {
    auto g = load_graph(input);
    std::optional<spanning_subgraph> h;
    if (algo == "cubic") {
        require(g.regularity() == 3, errc::not_cubic, "--algo cubic needs a cubic input");
        auto [sub, st] = solve_cubic(g);
        std::printf("ops_replayed %lld toggles %llu index_updates %llu\n",
                    (long long)st.ops_replayed, (unsigned long long)st.toggles,
                    (unsigned long long)st.index_updates);
        h.emplace(std::move(sub));
    } else if (algo == "general") {
        auto d = g.regularity();
        require(d.has_value(), errc::not_regular, "input must be regular");
        if (*d > 8)
            std::fprintf(stderr, "note: d=%d is beyond the oracle's verification reach\n", *d);
        init_subgraph kind = init_subgraph::empty;
        uint64_t seed = 0;
        if (init == "empty") {
            kind = init_subgraph::empty;
        } else if (init == "full") {
            kind = init_subgraph::full;
        } else if (init.rfind("random:", 0) == 0) {
            kind = init_subgraph::random;
            seed = std::stoull(init.substr(7));
        } else {
            fail(errc::invalid_params, "unknown --init '" + init + "'");
        }
        auto [sub, rep] = solve_general(g, kind, seed);
        std::printf("improvements %lld (type_a %lld, type_b %lld) final_binf %lld\n",
                    (long long)rep.improvement_count, (long long)rep.type_a_count,
                    (long long)rep.type_b_count, (long long)rep.final_b_inf);
        h.emplace(std::move(sub));
    } else {
        fail(errc::invalid_params, "unknown --algo '" + algo + "'");
    }
    std::fputs(degree_report(*h).c_str(), stdout);
    spit(output, serialize_subgraph(*h));
    return exit_ok;
}

int cmd_verify(const std::string& graph_path, const std::string& sub_path,
               const std::string& expect) {
    auto g = load_graph(graph_path);
    spanning_subgraph h(g);
    h.set_members(parse_subgraph(slurp(sub_path), g.edge_count()));
    std::fputs(degree_report(h).c_str(), stdout);
    if (expect.empty()) return exit_ok;
    auto a = a_scaled(h);
    bool ok;
    if (expect == "state0" || expect == "proper") {
        require(h.degree_cap() == 3, errc::not_cubic, "state predicates need a cubic host");
        auto c = classify(a);
        ok = expect == "state0" ? c == cubic_state::state0
                                : (c == cubic_state::state0 || c == cubic_state::proper);
    } else if (expect.rfind("norm:", 0) == 0) {
        ok = inf_norm(a) <= std::stoll(expect.substr(5));
    } else {
        fail(errc::invalid_params, "unknown --expect-state '" + expect + "'");
    }
    std::printf("verify %s\n", ok ? "ok" : "violated");
    return ok ? exit_ok : exit_verification;
}

int cmd_oracle(const std::string& input, const std::string& predicate) {
    auto g = load_graph(input);
    if (predicate.empty()) {
        auto r = oracle_best(g);
        auto d = g.regularity();
        std::printf("best %lld scale %d\n", (long long)r.best_scaled_inf_norm, *d + 1);
        std::printf("witness");
        for (int e : r.witness) std::printf(" %d", e);
        std::printf("\n");
        return exit_ok;
    }
    auto p = parse_predicate(predicate);
    auto w = oracle_state_exists(g, [&](const scaled_a& a) { return predicate_holds(p, a); });
    if (!w) {
        std::printf("witness none\n");
        return exit_verification;
    }
    std::printf("witness");
    for (int e : *w) std::printf(" %d", e);
    std::printf("\n");
    return exit_ok;
}

int cmd_bench(const std::string& algo, const std::string& sizes_text, int seeds,
              const std::string& out_path) {
    require(algo == "cubic", errc::invalid_params, "bench supports --algo cubic");
    std::vector<int> sizes;
    std::stringstream ss(sizes_text);
    for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(std::stoi(tok));
    require(!sizes.empty() && seeds >= 1, errc::invalid_params, "need sizes and seeds");
    std::ostringstream csv;
    csv << "n,seed,seconds,toggles,index_updates\n";
    for (int n : sizes) {
        for (int seed = 0; seed < seeds; ++seed) {
            auto g = random_regular(n, 3, (uint64_t)n * 7919 + seed);
            auto t0 = std::chrono::steady_clock::now();
            auto [h, st] = solve_cubic(g);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            csv << n << ',' << seed << ',' << dt << ',' << st.toggles << ','
                << st.index_updates << '\n';
        }
    }
    if (out_path.empty())
        std::fputs(csv.str().c_str(), stdout);
    else
        spit(out_path, csv.str());
    return exit_ok;
}

int cmd_strength(const std::string& base_path, int s, const std::string& sub_path) {
    auto base = load_graph(base_path);
    auto blow = make_doubled(base, s);
    spanning_subgraph h(blow);
    h.set_members(parse_subgraph(slurp(sub_path), blow.edge_count()));
    auto w = weighting_from_subgraph(base, s, h);
    for (int e = 0; e < (int)w.weights.size(); ++e) std::printf("f %d %d\n", e, w.weights[e]);
    for (int v = 0; v < (int)w.weighted_degrees.size(); ++v)
        std::printf("wdeg %d %lld\n", v, (long long)w.weighted_degrees[v]);
    auto rep = verify_distinct(w);
    std::printf("distinct %s\n", rep.distinct ? "yes" : "no");
    if (!rep.distinct) {
        std::printf("collisions");
        for (int v : rep.duplicates) std::printf(" %d", v);
        std::printf("\n");
    }
    return rep.distinct ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irregular spanning subgraphs of regular multigraphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a named multigraph");
    std::string family, base_path, out_path;
    int k = 3, d = 3, n = 4, s = 2, copies = 2;
    uint64_t seed = 0;
    gen->add_option("--family", family, "k2k|bipartite|cycle|petersen|k4|random|doubled|union")
        ->required();
    gen->add_option("--k", k, "parallel edges for k2k");
    gen->add_option("--d", d, "degree (bipartite, random)");
    gen->add_option("--n", n, "vertices (cycle, random)");
    gen->add_option("--s", s, "copies per edge (doubled)");
    gen->add_option("--copies", copies, "components (union)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--base", base_path, "base graph file (doubled, union)");
    gen->add_option("--out", out_path, "output file")->required();

    auto* solve = app.add_subcommand("solve", "find an irregular spanning subgraph");
    std::string algo, input, init = "empty", output;
    solve->add_option("--algo", algo, "general|cubic")->required();
    solve->add_option("--input", input, "graph file")->required();
    solve->add_option("--init", init, "empty|full|random:SEED (general only)");
    solve->add_option("--output", output, "subgraph file")->required();

    auto* verify = app.add_subcommand("verify", "check a subgraph against a predicate");
    std::string vgraph, vsub, expect;
    verify->add_option("--graph", vgraph)->required();
    verify->add_option("--subgraph", vsub)->required();
    verify->add_option("--expect-state", expect, "state0|proper|norm:<int>");

    auto* oracle = app.add_subcommand("oracle", "exhaustive search over all spanning subgraphs");
    std::string oinput, opredicate;
    oracle->add_option("--input", oinput)->required();
    oracle->add_option("--predicate", opredicate, "state0|proper|norm:<int>|maxcount:<int>");

    auto* bench = app.add_subcommand("bench", "timing and work counters for solve");
    std::string balgo = "cubic", bsizes, bout;
    int bseeds = 3;
    bench->add_option("--algo", balgo, "cubic");
    bench->add_option("--sizes", bsizes, "comma-separated vertex counts")->required();
    bench->add_option("--seeds", bseeds, "seeds per size");
    bench->add_option("--out", bout, "CSV output file (default stdout)");

    auto* strength = app.add_subcommand("strength", "edge weighting from a blow-up subgraph");
    std::string sbase, ssub;
    int sval = 2;
    strength->add_option("--base", sbase)->required();
    strength->add_option("--s", sval)->required();
    strength->add_option("--subgraph", ssub)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, k, d, n, s, copies, seed, base_path, out_path);
        if (solve->parsed()) return cmd_solve(algo, input, init, output);
        if (verify->parsed()) return cmd_verify(vgraph, vsub, expect);
        if (oracle->parsed()) return cmd_oracle(oinput, opredicate);
        if (bench->parsed()) return cmd_bench(balgo, bsizes, bseeds, bout);
        if (strength->parsed()) return cmd_strength(sbase, sval, ssub);
    } catch (const error& e) {
        std::fprintf(stderr, "error %s\n", e.what());
        return classify_exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error unexpected: %s\n", e.what());
        return exit_internal;
    }
    return exit_usage;
}
