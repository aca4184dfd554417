// tsep — separation queries on finite directed graphs.
//
// Subcommands: dsep, tsep, split, verify, closure, laws, bench.
// Exit codes: 0 separated / certificate valid / all checks pass,
//             1 connected / no splitting / certificate rejected / law failed,
//             2 usage or input error, 3 oracle disagreement.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tsep/error.hpp"
#include "tsep/lawcheck.hpp"
#include "tsep/oracle.hpp"
#include "tsep/separation.hpp"
#include "tsep/topology.hpp"

namespace {

using namespace tsep;

std::string read_source(const std::string& src) {
    if (src == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(src, std::ios::binary);
    if (!in) throw error("cannot open '" + src + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Edge-list text, or a JSON graph if the first significant byte is '{'.
graph load_graph(const std::string& src) {
    std::string text = read_source(src);
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return graph_from_json(nlohmann::json::parse(text));
        break;
    }
    return parse_edge_list(text);
}

vertex_set labels_to_set(const graph& g, const std::vector<std::string>& labels) {
    vertex_set s(g.size());
    for (const auto& label : labels) s.insert(g.index_of(label));
    return s;
}

nlohmann::json label_array(const graph& g, const vertex_set& s) {
    nlohmann::json arr = nlohmann::json::array();
    s.for_each([&](std::size_t v) { arr.push_back(g.names[v]); });
    return arr;
}

void warn_endpoint_in_w(const graph& g, const vertex_set& w, std::size_t v) {
    if (w.contains(v))
        std::cerr << "warning: endpoint '" << g.names[v]
                  << "' lies in W; the separation equivalence is only guaranteed for "
                     "endpoints outside W\n";
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", ms);
    return buf;
}

template <class F>
double ms_per_op(F&& op) {
    using clock = std::chrono::steady_clock;
    op(); // warm up
    std::size_t reps = 1;
    for (;;) {
        auto t0 = clock::now();
        for (std::size_t i = 0; i < reps; ++i) op();
        double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        if (ms >= 20.0 || reps >= (std::size_t{1} << 22)) return ms / static_cast<double>(reps);
        double target = ms > 0.01 ? 25.0 / ms : 2048.0;
        reps *= static_cast<std::size_t>(std::max(2.0, std::min(4096.0, target)));
    }
}

struct query_options {
    std::string graph_src;
    std::vector<std::string> w_labels;
    std::vector<std::string> pair_labels;
    std::vector<std::string> b_labels;
    std::vector<std::string> c_labels;
    std::vector<std::string> set_labels;
    std::string cert_src;
    std::string format = "text";
    bool oracle = false;
    std::size_t n = 5;
    double p = 0.3;
    std::uint64_t seed = 0;
    std::size_t count = 100;
};

int run_pair_query(const query_options& opt, bool topological) {
    graph g = load_graph(opt.graph_src);
    vertex_set w = labels_to_set(g, opt.w_labels);
    std::size_t b = g.index_of(opt.pair_labels[0]);
    std::size_t c = g.index_of(opt.pair_labels[1]);
    warn_endpoint_in_w(g, w, b);
    warn_endpoint_in_w(g, w, c);

    conditional_relations cr = build_conditional(cond_context{g, w});
    bool sep = topological ? t_separated(cr, b, c) : d_separated(cr, b, c);

    std::optional<bool> classical;
    if (opt.oracle) classical = oracle::pearl_d_separated(g, w, b, c);

    if (opt.format == "json") {
        nlohmann::json j{{"query", topological ? "tsep" : "dsep"},
                         {"b", g.names[b]},
                         {"c", g.names[c]},
                         {"w", label_array(g, w)},
                         {"separated", sep}};
        if (classical) j["oracle"] = *classical ? "separated" : "connected";
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (sep ? "separated" : "connected") << '\n';
        if (classical) std::cout << "oracle: " << (*classical ? "separated" : "connected") << '\n';
    }
    if (classical && *classical != sep) {
        std::cerr << "oracle disagreement: engine says " << (sep ? "separated" : "connected")
                  << ", classical criterion says " << (*classical ? "separated" : "connected")
                  << '\n';
        return 3;
    }
    return sep ? 0 : 1;
}

int run_split(const query_options& opt) {
    graph g = load_graph(opt.graph_src);
    vertex_set w = labels_to_set(g, opt.w_labels);
    vertex_set bs = labels_to_set(g, opt.b_labels);
    vertex_set cs = labels_to_set(g, opt.c_labels);

    auto check_disjoint = [&](const vertex_set& x, const char* xn, const vertex_set& y,
                              const char* yn) {
        vertex_set both = x & y;
        if (!both.empty())
            throw precondition_error(std::string(xn) + " and " + yn +
                                     " must be disjoint; both contain '" +
                                     g.names[both.members().front()] + "'");
    };
    check_disjoint(bs, "--b", cs, "--c");
    check_disjoint(bs, "--b", w, "--w");
    check_disjoint(cs, "--c", w, "--w");

    cond_context ctx{g, w};
    conditional_relations cr = build_conditional(ctx);
    std::optional<split_certificate> cert = find_splitting(cr, bs, cs);

    if (opt.oracle) {
        std::optional<split_certificate> brute = oracle::brute_force_splitting(ctx, bs, cs);
        bool both_ok = cert.has_value() == brute.has_value() &&
                       (!cert || verify_splitting(ctx, bs, cs, *cert)) &&
                       (!brute || verify_splitting(ctx, bs, cs, *brute));
        if (!both_ok) {
            std::cerr << "oracle disagreement: constructive search "
                      << (cert ? "succeeded" : "failed") << ", exhaustive search "
                      << (brute ? "succeeded" : "failed") << '\n';
            return 3;
        }
    }
    if (!cert) {
        std::cout << "none\n";
        return 1;
    }
    std::cout << certificate_to_json(g, *cert).dump() << '\n';
    return 0;
}

int run_verify(const query_options& opt) {
    graph g = load_graph(opt.graph_src);
    vertex_set w = labels_to_set(g, opt.w_labels);
    vertex_set bs = labels_to_set(g, opt.b_labels);
    vertex_set cs = labels_to_set(g, opt.c_labels);
    split_certificate cert =
        certificate_from_json(g, nlohmann::json::parse(read_source(opt.cert_src)));

    bool ok = verify_splitting(cond_context{g, w}, bs, cs, cert);
    if (opt.format == "json")
        std::cout << nlohmann::json{{"valid", ok}}.dump() << '\n';
    else
        std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? 0 : 1;
}

int run_closure(const query_options& opt) {
    graph g = load_graph(opt.graph_src);
    vertex_set w = labels_to_set(g, opt.w_labels);
    vertex_set seed_set = labels_to_set(g, opt.set_labels);

    relation p_w = compose(relation::subdiagonal(w.complement()), parent_relation(g));
    vertex_set closed = saturate_closure(p_w, seed_set);

    if (opt.format == "json") {
        std::cout << label_array(g, closed).dump() << '\n';
        return 0;
    }
    std::cout << '[';
    bool first = true;
    closed.for_each([&](std::size_t v) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << g.names[v];
    });
    std::cout << "]\n";
    return 0;
}

int run_laws(const query_options& opt) {
    std::vector<laws::report> aggregate;
    for (const auto& id : laws::law_ids()) {
        laws::report rep;
        rep.law = id;
        rep.extended = (id == "L8");
        aggregate.push_back(std::move(rep));
    }
    for (std::size_t i = 0; i < opt.count; ++i) {
        std::uint64_t inst_seed = laws::mix_seed(opt.seed, i);
        graph g = laws::random_graph(opt.n, opt.p, inst_seed);
        vertex_set w =
            laws::random_vertex_subset(opt.n, 0.3, laws::mix_seed(inst_seed, 0x77));
        cond_context ctx{std::move(g), std::move(w)};
        for (std::size_t li = 0; li < aggregate.size(); ++li) {
            if (!aggregate[li].holds) continue; // first counterexample is kept
            laws::report rep = laws::check_law(ctx, aggregate[li].law);
            if (!rep.holds) aggregate[li] = std::move(rep);
        }
    }
    bool all_hold = true;
    for (const auto& rep : aggregate) {
        all_hold = all_hold && rep.holds;
        std::cout << laws::report_to_json(rep, opt.seed).dump() << '\n';
    }
    return all_hold ? 0 : 1;
}

// One instance per run: a certificate check against the full all-pairs
// d-separation sweep it replaces.
int run_bench(const query_options& opt) {
    if (opt.n < 2 || opt.n > 4096)
        throw precondition_error("bench needs 2 <= n <= 4096, got n = " +
                                 std::to_string(opt.n));
    if (!(opt.p >= 0.0 && opt.p <= 1.0))
        throw precondition_error("bench needs 0 <= p <= 1, got p = " + std::to_string(opt.p));

    std::mt19937_64 rng(opt.seed);
    auto draw = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    graph g;
    g.edges = relation(opt.n);
    for (std::size_t v = 0; v < opt.n; ++v) g.names.push_back("v" + std::to_string(v));
    for (std::size_t a = 0; a < opt.n; ++a)
        for (std::size_t b = 0; b < opt.n; ++b)
            if (draw() < opt.p) g.edges.insert(a, b);

    // Roles: ~25% of vertices condition, one free vertex on each side queries.
    vertex_set w(opt.n), bs(opt.n), cs(opt.n);
    for (std::size_t v = 0; v < opt.n; ++v)
        if (draw() < 0.25) w.insert(v);
    std::vector<std::size_t> free = w.complement().members();
    if (free.size() < 2) {
        w.erase(free.empty() ? 0 : (free[0] == 0 ? 1 : 0));
        if (free.empty()) w.erase(1);
        free = w.complement().members();
    }
    bs.insert(free.front());
    cs.insert(free.back());

    cond_context ctx{g, w};
    conditional_relations cr = build_conditional(ctx);
    split_certificate cert =
        find_splitting(cr, bs, cs).value_or(split_certificate{w, vertex_set(opt.n)});

    static volatile std::size_t sink = 0;
    double verify_ms =
        ms_per_op([&] { sink = sink + (verify_splitting(ctx, bs, cs, cert) ? 1 : 2); });
    double sweep_ms = ms_per_op([&] {
        conditional_relations fresh = build_conditional(ctx);
        vertex_set outside = ctx.w.complement();
        std::size_t connected = 0;
        outside.for_each([&](std::size_t b) {
            outside.for_each([&](std::size_t c) {
                if (b < c && !d_separated(fresh, b, c)) ++connected;
            });
        });
        sink = sink + connected;
    });

    if (opt.format == "json") {
        std::cout << nlohmann::json{{"n", opt.n},
                                    {"verify_ms", verify_ms},
                                    {"all_pairs_dsep_ms", sweep_ms},
                                    {"ratio", sweep_ms / verify_ms}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "verify_splitting: " << format_ms(verify_ms) << " ms/op\n";
        std::cout << "all_pairs_dsep:   " << format_ms(sweep_ms) << " ms/op\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    query_options opt;
    CLI::App app{"separation queries on finite directed graphs"};
    app.require_subcommand(1);

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("graph", opt.graph_src, "edge-list or JSON graph file ('-' for stdin)")
            ->required();
        cmd->add_option("--w", opt.w_labels, "conditioning vertices")->delimiter(',');
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* dsep = app.add_subcommand("dsep", "extended d-separation of two vertices");
    add_graph_arg(dsep);
    dsep->add_option("--pair", opt.pair_labels, "the two query vertices")
        ->expected(2)
        ->required();
    dsep->add_flag("--oracle", opt.oracle, "cross-check against the classical DAG criterion");

    CLI::App* tsep_cmd = app.add_subcommand("tsep", "topological separation of two vertices");
    add_graph_arg(tsep_cmd);
    tsep_cmd->add_option("--pair", opt.pair_labels, "the two query vertices")
        ->expected(2)
        ->required();
    tsep_cmd->add_flag("--oracle", opt.oracle,
                       "cross-check against the classical DAG criterion");

    CLI::App* split = app.add_subcommand("split", "find a splitting certificate for B vs C");
    add_graph_arg(split);
    split->add_option("--b", opt.b_labels, "left vertex set")->delimiter(',');
    split->add_option("--c", opt.c_labels, "right vertex set")->delimiter(',');
    split->add_flag("--oracle", opt.oracle, "cross-check against exhaustive enumeration");

    CLI::App* verify = app.add_subcommand("verify", "check a splitting certificate");
    add_graph_arg(verify);
    verify->add_option("--b", opt.b_labels, "left vertex set")->delimiter(',');
    verify->add_option("--c", opt.c_labels, "right vertex set")->delimiter(',');
    verify->add_option("--cert", opt.cert_src, "certificate JSON file ('-' for stdin)")
        ->required();

    CLI::App* closure = app.add_subcommand("closure", "conditional topological closure");
    add_graph_arg(closure);
    closure->add_option("--set", opt.set_labels, "seed vertices")->delimiter(',');

    CLI::App* laws_cmd = app.add_subcommand("laws", "run the algebraic law suite");
    laws_cmd->add_option("--n", opt.n, "vertices per random instance");
    laws_cmd->add_option("--p", opt.p, "edge probability");
    laws_cmd->add_option("--count", opt.count, "number of instances");
    laws_cmd->add_option("--seed", opt.seed, "master seed");

    CLI::App* bench = app.add_subcommand("bench", "certificate check vs all-pairs sweep");
    bench->add_option("--n", opt.n, "vertices");
    bench->add_option("--p", opt.p, "edge probability");
    bench->add_option("--seed", opt.seed, "instance seed");
    bench->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(dsep)) return run_pair_query(opt, false);
        if (app.got_subcommand(tsep_cmd)) return run_pair_query(opt, true);
        if (app.got_subcommand(split)) return run_split(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(closure)) return run_closure(opt);
        if (app.got_subcommand(laws_cmd)) return run_laws(opt);
        if (app.got_subcommand(bench)) return run_bench(opt);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tsep::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
