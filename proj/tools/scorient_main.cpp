// Command-line front door: orient a graph, verify the result against the
// brute-force oracle, run the structural lemma checks, benchmark, or emit
// generated test graphs.
//
// Exit codes: 0 success (orient/gen/bench), MATCH (verify) or all checks
// passing (lemmas); 1 MISMATCH or failed checks; 2 malformed input;
// 3 infeasible graph; 4 enumeration cap exceeded; 5 broken contract.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "scorient/connectivity.hpp"
#include "scorient/errors.hpp"
#include "scorient/generators.hpp"
#include "scorient/oracle.hpp"
#include "scorient/reversal.hpp"

namespace {

using namespace scorient;

struct CommonIo {
    std::string input_path;
    std::string output_path;
};

std::string read_input(const CommonIo& io) {
    if (io.input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(io.input_path);
    if (!file) throw parse_error("cannot open input file '" + io.input_path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const CommonIo& io, const std::string& text) {
    if (io.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(io.output_path);
    if (!file) throw parse_error("cannot open output file '" + io.output_path + "'");
    file << text;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

ReversalResult run_algorithm(const UndirectedGraph& g, const std::string& algorithm,
                             std::uint64_t seed, bool random_init) {
    if (algorithm == "pr") return path_reversal(g, seed);
    return sc_path_reversal(g, seed, {.random_initial = random_init});
}

int effective_cap(int oracle_cap, bool force) {
    if (oracle_cap > kDefaultEnumerationCap && !force)
        throw cap_error("oracle cap " + std::to_string(oracle_cap) + " exceeds " +
                        std::to_string(kDefaultEnumerationCap) +
                        "; pass --force to override");
    return oracle_cap;
}

int cmd_orient(const CommonIo& io, const std::string& algorithm, std::uint64_t seed,
               bool trace, bool random_init) {
    const UndirectedGraph g = parse_graph(read_input(io));
    const ReversalResult result = run_algorithm(g, algorithm, seed, random_init);
    std::string out = orientation_to_text(result.orientation);
    if (trace) out += trace_to_text(result.trace);
    write_output(io, out);
    return 0;
}

int cmd_verify(const CommonIo& io, const std::string& algorithm, std::uint64_t seed,
               bool random_init, int oracle_cap, bool force) {
    const UndirectedGraph g = parse_graph(read_input(io));
    const int cap = effective_cap(oracle_cap, force);
    if (g.edge_count() > cap)
        throw cap_error("graph has " + std::to_string(g.edge_count()) +
                        " edges, over the oracle cap of " + std::to_string(cap));
    const ReversalResult result = run_algorithm(g, algorithm, seed, random_init);
    const IndegreeSequence got = indegree_sequence(result.orientation);
    const OracleResult expected = oracle_min_lex(g, algorithm != "pr", cap);

    std::ostringstream out;
    out << "algorithm=" << got.to_csv() << '\n'
        << oracle_result_to_text(expected) << '\n';
    const bool match = lex_compare(got, expected.best_sequence) == 0;
    out << (match ? "MATCH" : "MISMATCH") << '\n';
    write_output(io, out.str());
    return match ? 0 : 1;
}

struct LemmaTally {
    long long lemma1_probes = 0;
    long long lemma1_pass = 0;
    long long lemma3_checks = 0;
    long long lemma3_pass = 0;
    long long boundary_checks = 0;
    long long boundary_pass = 0;

    void inspect(const Orientation& o, Rng& rng) {
        const int n = o.graph().vertex_count();
        for (int probe = 0; probe < 3 && n > 0; ++probe) {
            ++lemma1_probes;
            if (check_lemma1(o, sample_simple_path(o, rng))) ++lemma1_pass;
        }
        for (int v = 0; v < n; ++v) {
            ++lemma3_checks;
            if (check_lemma3(o, v)) ++lemma3_pass;
            ++boundary_checks;
            if (check_boundary_identity(o, v)) ++boundary_pass;
        }
    }

    bool all_pass() const {
        return lemma1_pass == lemma1_probes && lemma3_pass == lemma3_checks &&
               boundary_pass == boundary_checks;
    }
};

int cmd_lemmas(const CommonIo& io, std::uint64_t seed, bool random_init,
               const std::string& orientation_path) {
    const UndirectedGraph g = parse_graph(read_input(io));
    Rng rng(seed);
    LemmaTally tally;
    int orientations = 0;

    if (!orientation_path.empty()) {
        const Orientation o = parse_orientation_text(g, read_file(orientation_path));
        if (!is_strongly_connected(o))
            throw contract_error("the supplied orientation is not strongly connected");
        tally.inspect(o, rng);
        orientations = 1;
    } else {
        const ReversalResult result =
            sc_path_reversal(g, seed, {.random_initial = random_init});
        Orientation o = result.trace.initial;
        tally.inspect(o, rng);
        ++orientations;
        for (const TraceStep& step : result.trace.steps) {
            o = reverse_path(o, path_from_vertices(o, step.path_vertices));
            tally.inspect(o, rng);
            ++orientations;
        }
    }

    std::ostringstream out;
    out << "orientations=" << orientations << " lemma1_probes=" << tally.lemma1_probes
        << " lemma1_pass=" << tally.lemma1_pass << " lemma3_checks=" << tally.lemma3_checks
        << " lemma3_pass=" << tally.lemma3_pass
        << " boundary_checks=" << tally.boundary_checks
        << " boundary_pass=" << tally.boundary_pass << '\n'
        << (tally.all_pass() ? "PASS" : "FAIL") << '\n';
    write_output(io, out.str());
    return tally.all_pass() ? 0 : 1;
}

int cmd_bench(const CommonIo& io, const std::string& algorithm, std::uint64_t seed,
              const std::vector<int>& n_list, double edge_factor, int repeats) {
    std::ostringstream out;
    out << "n,m,seed,algorithm,steps,millis,max_indegree,seq_head\n";
    std::uint64_t instance = 0;
    for (const int n : n_list) {
        for (int r = 0; r < repeats; ++r, ++instance) {
            const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
            const int m = static_cast<int>(
                std::min<long long>(max_m, std::max<long long>(n, static_cast<long long>(edge_factor * n))));
            const std::uint64_t instance_seed = seed + instance;
            out << n << ',' << m << ',' << instance_seed << ',' << algorithm << ',';
            try {
                const UndirectedGraph g = generate({.n = n, .m = m, .seed = instance_seed,
                                                    .family = GraphFamily::random_bridgeless});
                const auto start = std::chrono::steady_clock::now();
                const ReversalResult result =
                    run_algorithm(g, algorithm, instance_seed, false);
                const auto stop = std::chrono::steady_clock::now();
                const auto millis =
                    std::chrono::duration_cast<std::chrono::milliseconds>(stop - start);
                const IndegreeSequence seq = indegree_sequence(result.orientation);
                out << result.trace.steps.size() << ',' << millis.count() << ','
                    << (seq.size() ? seq.values().front() : 0) << ',';
                const std::size_t head = std::min<std::size_t>(5, seq.size());
                for (std::size_t i = 0; i < head; ++i) {
                    if (i) out << '|';
                    out << seq.values()[i];
                }
                out << '\n';
            } catch (const error& e) {
                out << "-1,-1,-1,error:" << e.what() << '\n';
            }
        }
    }
    write_output(io, out.str());
    return 0;
}

int cmd_gen(const CommonIo& io, const std::string& family, int n, int m,
            std::uint64_t seed) {
    const UndirectedGraph g =
        generate({.n = n, .m = m, .seed = seed, .family = parse_family(family)});
    write_output(io, to_edge_list_text(g));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly connected orientations with lexicographically minimal indegrees"};
    app.require_subcommand(1);

    CommonIo io;
    std::string algorithm = "scpr";
    std::uint64_t seed = 0;
    bool trace = false;
    bool random_init = false;
    int oracle_cap = kDefaultEnumerationCap;
    bool force = false;
    std::string orientation_path;
    std::vector<int> n_list{50, 100, 200};
    double edge_factor = 3.0;
    int repeats = 1;
    std::string family;
    int gen_n = 0;
    int gen_m = 0;

    const auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", io.input_path, "input file (default: stdin)");
        cmd->add_option("--output", io.output_path, "output file (default: stdout)");
    };
    const auto add_algorithm = [&](CLI::App* cmd) {
        cmd->add_option("--algorithm", algorithm, "pr or scpr")
            ->check(CLI::IsMember({"pr", "scpr"}));
        cmd->add_option("--seed", seed, "seed for every random choice");
        cmd->add_flag("--random-init", random_init,
                      "start scpr from a seeded random strong orientation");
    };

    CLI::App* orient = app.add_subcommand("orient", "orient a graph");
    add_io(orient);
    add_algorithm(orient);
    orient->add_flag("--trace", trace, "append the reversal trace");

    CLI::App* verify = app.add_subcommand("verify", "compare a run against the oracle");
    add_io(verify);
    add_algorithm(verify);
    verify->add_option("--oracle-cap", oracle_cap, "max edges to enumerate");
    verify->add_flag("--force", force, "allow an oracle cap above the default");

    CLI::App* lemmas = app.add_subcommand("lemmas", "run the structural property checks");
    add_io(lemmas);
    add_algorithm(lemmas);
    lemmas->add_option("--orientation", orientation_path,
                       "check this orientation document instead of a fresh run");

    CLI::App* bench = app.add_subcommand("bench", "time runs on generated graphs");
    add_io(bench);
    add_algorithm(bench);
    bench->add_option("--n-list", n_list, "instance sizes");
    bench->add_option("--edge-factor", edge_factor, "target edges per vertex");
    bench->add_option("--repeats", repeats, "instances per size");

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
    add_io(gen);
    gen->add_option("--family", family, "graph family")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count (random_bridgeless only)");
    gen->add_option("--seed", seed, "generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (orient->parsed()) return cmd_orient(io, algorithm, seed, trace, random_init);
        if (verify->parsed())
            return cmd_verify(io, algorithm, seed, random_init, oracle_cap, force);
        if (lemmas->parsed()) return cmd_lemmas(io, seed, random_init, orientation_path);
        if (bench->parsed())
            return cmd_bench(io, algorithm, seed, n_list, edge_factor, repeats);
        if (gen->parsed()) return cmd_gen(io, family, gen_n, gen_m, seed);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
