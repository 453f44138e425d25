// sigfix: structural analysis of signed digraphs and Boolean networks.
#include <sigfix/bounds.hpp>
#include <sigfix/falsify.hpp>
#include <sigfix/generate.hpp>
#include <sigfix/io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace sigfix;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fails = 1;
constexpr int exit_error = 2;

struct Options {
    std::string format = "human";
    std::size_t cycle_cap = default_cycle_cap;
    std::size_t max_indegree = ConsistentNetworks::max_indegree_limit;

    bool structured() const { return format == "structured"; }
    Limits limits() const { return Limits{cycle_cap, Limits{}.max_search_vertices}; }
};

void print_witnesses(const char* name, const RuleVerdict& v) {
    for (const auto& w : v.witnesses) {
        std::cout << "# " << name << " " << w.cycle.to_string() << " via " << to_string(w.arc) << "\n";
    }
    if (v.violated_by) std::cout << "# " << name << " fails on " << v.violated_by->to_string() << "\n";
}

int cmd_analyze(const Options& opt, const std::string& path) {
    auto report = analyze(load_graph(path), opt.limits());
    if (opt.structured()) {
        std::cout << to_json(report);
        return exit_ok;
    }
    std::cout << to_key_value(report);
    print_witnesses("thm3", report.thm3);
    print_witnesses("thm4", report.thm4);
    print_witnesses("thm5", report.thm5);
    std::cout << "# tau_tilde_plus set:";
    for (Vertex v : report.tau_tilde_set) std::cout << ' ' << v;
    std::cout << "\n";
    return exit_ok;
}

int cmd_fixed_points(const Options& opt, const std::string& path) {
    auto f = load_network(path);
    auto fps = fixed_points(f);
    if (opt.structured()) {
        json j{{"format", "sigfix-fixed-points"}, {"version", 1}, {"n", f.size()}};
        j["fixed_points"] = json::array();
        for (const auto& x : fps) j["fixed_points"].push_back(x.to_string());
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "# " << fps.size() << " fixed point(s)\n";
    for (const auto& x : fps) std::cout << x.to_string() << "\n";
    return exit_ok;
}

int cmd_attractors(const Options& opt, const std::string& path) {
    auto f = load_network(path);
    auto atts = attractors(f);
    if (opt.structured()) {
        json j{{"format", "sigfix-attractors"}, {"version", 1}, {"n", f.size()}};
        j["attractors"] = json::array();
        for (const auto& a : atts) {
            json states = json::array();
            for (const auto& x : a.states) states.push_back(x.to_string());
            j["attractors"].push_back(states);
        }
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "# " << atts.size() << " attractor(s)\n";
    for (const auto& a : atts) {
        std::cout << (a.is_fixed_point() ? "fixed" : "cyclic") << ":";
        for (const auto& x : a.states) std::cout << ' ' << x.to_string();
        std::cout << "\n";
    }
    return exit_ok;
}

// Graph-only readings of the checks, used when no network is given.
std::optional<bool> graph_condition(const std::string& id, GraphContext& ctx) {
    const auto& g = ctx.graph();
    if (id == "thm2") return !ctx.has_negative_cycle();
    if (id == "thm3") return ctx.rule_holds(Sign::positive);
    if (id == "thm4") return ctx.isolated_by_vertex();
    if (id == "thm5") return ctx.rule_holds(Sign::negative);
    if (id == "thm6") {
        return g.vertex_count() > 0 && is_strongly_connected(g) &&
               ctx.catalog().of_sign(Sign::negative).size() == 1 && !ctx.catalog().of_sign(Sign::positive).empty();
    }
    if (id == "nofp") return no_fixed_point_condition(g, ctx.limits());
    if (id == "twofp") return two_fixed_points_condition(g);
    return std::nullopt;
}

void print_verdict(const Options& opt, const std::string& id, const std::string& verdict) {
    if (opt.structured()) {
        std::cout << json{{"format", "sigfix-check"}, {"version", 1}, {"theorem", id}, {"verdict", verdict}}.dump(2)
                  << "\n";
    } else {
        std::cout << id << " = " << verdict << "\n";
    }
}

int cmd_check(const Options& opt, const std::string& id, const std::vector<std::string>& paths) {
    if (paths.empty() || paths.size() > 2) throw CLI::ValidationError("check", "expects <graph> [<net>]");
    const std::string text = read_file(paths[0]);
    if (detect_format(text) == TextFormat::digraph) {
        const Property& p = find_property(id);
        if (p.domain != Domain::digraph) throw CLI::ValidationError("check", id + " does not take a digraph");
        Digraph d = parse_digraph(text);
        GraphContext ctx(network_graph(d), opt.limits());
        Instance in(ctx, nullptr, &d);
        if (!p.hypothesis(in)) {
            print_verdict(opt, id, "not-applicable");
            return exit_ok;
        }
        bool ok = p.conclusion(in);
        print_verdict(opt, id, ok ? "holds" : "COUNTEREXAMPLE");
        return ok ? exit_ok : exit_fails;
    }
    GraphContext ctx(parse_graph(text), opt.limits());
    if (paths.size() == 1) {
        if (auto c = graph_condition(id, ctx)) {
            print_verdict(opt, id, *c ? "true" : "false");
            return *c ? exit_ok : exit_fails;
        }
        const Property& p = find_property(id);
        if (p.domain != Domain::graph) throw CLI::ValidationError("check", id + " needs a network");
        Instance in(ctx, nullptr);
        if (!p.hypothesis(in)) {
            print_verdict(opt, id, "not-applicable");
            return exit_ok;
        }
        bool ok = p.conclusion(in);
        print_verdict(opt, id, ok ? "holds" : "COUNTEREXAMPLE");
        return ok ? exit_ok : exit_fails;
    }
    const Property& p = find_property(id);
    if (p.domain != Domain::network) throw CLI::ValidationError("check", id + " does not take a network");
    BooleanNetwork f = load_network(paths[1]);
    if (!(interaction_graph(f) == ctx.graph())) {
        throw CLI::ValidationError("check", "the network's interaction graph differs from the given graph");
    }
    Instance in(ctx, &f);
    if (!p.hypothesis(in)) {
        print_verdict(opt, id, "not-applicable");
        return exit_ok;
    }
    bool ok = p.conclusion(in);
    print_verdict(opt, id, ok ? "holds" : "COUNTEREXAMPLE");
    return ok ? exit_ok : exit_fails;
}

json code_json(const CodeBound& b) {
    json j{{"n", b.n}, {"d", b.d.to_string()}, {"gilbert_lower", b.gilbert_lower},
           {"sphere_packing_upper", b.sphere_packing_upper}};
    j["exact"] = b.exact ? json(*b.exact) : json(nullptr);
    return j;
}

CodeBound settle(std::size_t n, Length d) {
    CodeBound b = code_bound(n, d, false);
    if (n <= max_exact_length) b.exact = try_exact_A(n, d, A_upper_node_budget);
    return b;
}

int cmd_bounds(const Options& opt, const std::string& path) {
    auto g = load_graph(path);
    auto r = analyze(g, opt.limits());
    const std::size_t n = g.order();
    if (n == 0 || n > max_bound_length) throw LimitExceeded("bounds: n must lie in 1..63");
    CodeBound plain = settle(n, r.g_plus), refined = settle(n, r.g_tilde_plus);
    if (opt.structured()) {
        json j{{"format", "sigfix-bounds"}, {"version", 1}, {"n", n}, {"tau_plus", r.tau_plus},
               {"tau_tilde_plus", r.tau_tilde_plus}};
        j["A_g_plus"] = code_json(plain);
        j["A_g_tilde_plus"] = code_json(refined);
        j["fp_upper_bound"] = r.fp_upper_bound;
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    auto show = [](const char* name, const CodeBound& b) {
        std::cout << name << " = A(" << b.n << ", " << b.d.to_string() << ") in [" << b.gilbert_lower << ", "
                  << b.sphere_packing_upper << "]";
        if (b.exact) std::cout << ", exactly " << *b.exact;
        std::cout << "\n";
    };
    std::cout << "n = " << n << "\n";
    std::cout << "tau_plus = " << r.tau_plus << "\n";
    std::cout << "tau_tilde_plus = " << r.tau_tilde_plus << "\n";
    show("A_g_plus", plain);
    show("A_g_tilde_plus", refined);
    std::cout << "fp_upper_bound = " << r.fp_upper_bound << "\n";
    return exit_ok;
}

int cmd_kernels(const Options& opt, const std::string& path) {
    auto d = load_digraph(path);
    auto ks = kernels(d);
    bool rich = richardson_condition(d);
    bool gen = generalized_condition(d, opt.limits());
    if (opt.structured()) {
        json j{{"format", "sigfix-kernels"}, {"version", 1}, {"n", d.order()}, {"kernels", ks},
               {"richardson_condition", rich}, {"generalized_condition", gen}};
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "richardson_condition = " << (rich ? "true" : "false") << "\n";
    std::cout << "generalized_condition = " << (gen ? "true" : "false") << "\n";
    std::cout << "# " << ks.size() << " kernel(s)\n";
    for (const auto& k : ks) {
        std::cout << "{";
        for (std::size_t i = 0; i < k.size(); ++i) std::cout << (i ? " " : "") << k[i];
        std::cout << "}\n";
    }
    return exit_ok;
}

Sign parse_sign(const std::string& s) {
    if (s == "+") return Sign::positive;
    if (s == "-") return Sign::negative;
    throw CLI::ValidationError("sign", "must be + or -");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed digraph and Boolean network analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output: human or structured")->check(CLI::IsMember({"human", "structured"}));
    app.add_option("--cycle-cap", opt.cycle_cap, "Maximum number of enumerated cycles")->check(CLI::PositiveNumber);
    app.add_option("--max-indegree", opt.max_indegree, "In-degree limit for consistent networks")
        ->check(CLI::Range(std::size_t{0}, ConsistentNetworks::max_indegree_limit));

    std::string input;
    std::vector<std::string> inputs;

    auto* analyze_cmd = app.add_subcommand("analyze", "Structural parameters and theorem conditions of a graph");
    analyze_cmd->add_option("graph", input, "sdigraph file")->required();

    auto* fp_cmd = app.add_subcommand("fixed-points", "Fixed points of a network");
    fp_cmd->add_option("net", input, "boolnet file")->required();

    auto* att_cmd = app.add_subcommand("attractors", "Attractors of the asynchronous dynamics");
    att_cmd->add_option("net", input, "boolnet file")->required();

    std::string theorem;
    auto* check_cmd = app.add_subcommand("check", "Check one theorem on a graph, or on a graph and network");
    check_cmd->add_option("--theorem", theorem, "Property id")->required();
    check_cmd->add_option("files", inputs, "<graph> [<net>] or <digraph>")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Fixed-point upper bounds of a graph");
    bounds_cmd->add_option("graph", input, "sdigraph file")->required();

    auto* kernels_cmd = app.add_subcommand("kernels", "Kernels of a digraph");
    kernels_cmd->add_option("digraph", input, "digraph file")->required();

    FalsifyConfig fcfg;
    std::string report_path;
    auto* falsify_cmd = app.add_subcommand("falsify", "Search for counterexamples to a property");
    falsify_cmd->add_option("--theorem", theorem, "Property id")->required();
    falsify_cmd->add_option("--trials", fcfg.trials, "Random trials");
    falsify_cmd->add_option("--seed", fcfg.seed, "Master seed");
    falsify_cmd->add_option("--max-n", fcfg.max_n, "Largest vertex count")->check(CLI::PositiveNumber);
    falsify_cmd->add_flag("--exhaustive", fcfg.exhaustive, "Sweep every instance up to --max-n");
    falsify_cmd->add_option("--threads", fcfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    falsify_cmd->add_option("--arc-probability", fcfg.arc_probability, "Arc probability for random graphs")
        ->check(CLI::Range(0.0, 0.5));
    falsify_cmd->add_option("-o,--output", report_path, "Also write the structured report here");

    std::string kind, out_path, sign1 = "+", sign2 = "+";
    std::size_t gen_n = 5, len1 = 2, len2 = 1;
    double p = 0.2, q = 0.5;
    std::uint64_t gen_seed = 1;
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated graph");
    gen_cmd->add_option("kind", kind, "figure1, double-cycle or random")
        ->required()
        ->check(CLI::IsMember({"figure1", "double-cycle", "random"}));
    gen_cmd->add_option("--n", gen_n, "Vertex count (figure1, random)");
    gen_cmd->add_option("--len1", len1, "Length of the first cycle");
    gen_cmd->add_option("--sign1", sign1, "Sign of the first cycle");
    gen_cmd->add_option("--len2", len2, "Length of the second cycle");
    gen_cmd->add_option("--sign2", sign2, "Sign of the second cycle");
    gen_cmd->add_option("--p", p, "Arc probability parameter")->check(CLI::Range(0.0, 0.5));
    gen_cmd->add_option("--q", q, "Fraction of negative arcs")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen_seed, "Seed (random)");
    gen_cmd->add_option("-o,--output", out_path, "Output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(opt, input);
        if (*fp_cmd) return cmd_fixed_points(opt, input);
        if (*att_cmd) return cmd_attractors(opt, input);
        if (*check_cmd) return cmd_check(opt, theorem, inputs);
        if (*bounds_cmd) return cmd_bounds(opt, input);
        if (*kernels_cmd) return cmd_kernels(opt, input);
        if (*falsify_cmd) {
            fcfg.max_indegree = opt.max_indegree;
            fcfg.limits = opt.limits();
            auto report = falsify(theorem, fcfg);
            std::string structured = to_json(report);
            if (!report_path.empty()) write_file(report_path, structured);
            if (opt.structured()) {
                std::cout << structured;
            } else {
                std::cout << "property = " << report.property << "\n"
                          << "mode = " << (report.exhaustive ? "exhaustive" : "random") << "\n"
                          << "trials = " << report.trials << "\n"
                          << "applicable = " << report.applicable << "\n"
                          << "violations = " << report.violations << "\n"
                          << "wall_seconds = " << report.wall_seconds << "\n";
                for (const auto& c : report.counterexamples) {
                    std::cout << "# counterexample at trial " << c.trial << "\n" << c.graph << c.network;
                }
            }
            return report.violations == 0 ? exit_ok : exit_fails;
        }
        if (*gen_cmd) {
            SignedDigraph g;
            if (kind == "figure1") {
                g = figure1(gen_n);
            } else if (kind == "double-cycle") {
                g = double_cycle(len1, parse_sign(sign1), len2, parse_sign(sign2));
            } else {
                g = random_graph(gen_n, p, q, gen_seed);
            }
            std::string text = format_graph(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_file(out_path, text);
            }
            return exit_ok;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
