#include "commands.hpp"

#include "thompson/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace thompson;
using namespace thompson::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in Thompson's group F"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "thompson 1.0");

    Context ctx;
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, jsonl, dot")
        ->check(CLI::IsMember({"text", "jsonl", "dot"}));
    app.add_flag_function("--jsonl", [&](std::int64_t) { format = "jsonl"; }, "Shorthand for --format jsonl");
    app.add_flag_function("--dot", [&](std::int64_t) { format = "dot"; }, "Shorthand for --format dot");
    app.add_option("--seed", ctx.seed, "Seed for randomized suites");
    app.add_option("--max-radius", ctx.caps.max_radius, "Largest ball radius allowed")->check(CLI::PositiveNumber);
    app.add_option("--max-vertices", ctx.caps.max_vertices, "Word graph vertex cap")->check(CLI::PositiveNumber);
    app.add_option("--memory-mb", ctx.caps.memory_mb, "Ball memory budget (default: THOMPSON_MEMORY_MB or 4096)")
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    std::function<int()> action;
    std::string x, y, as = "tree", from = "auto", to = "tree", suite = "oracle", file;
    std::vector<std::string> xs;
    int radius = 8, k = 1, max_len = 12, max_n = 12;
    std::size_t n = 10, budget = 2000000, max_candidates = 0, samples = 200;
    bool stats = false, brute = false;
    double tol = 1e-12;

    auto element_cmd = [&](const char* name, const char* help, int (*fn)(const Context&, const std::string&)) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("input", x, "Word, tree diagram, two-way diagram, '-' for stdin, '@file'")->required();
        s->callback([&, fn] { action = [&, fn] { return fn(ctx, x); }; });
    };
    element_cmd("normalize", "Normal form x0^a0 ... xn^-b0", cmd_normalize);
    element_cmd("antinormal", "Anti-normal form of a positive element", cmd_antinormal);
    element_cmd("length", "Word length over {x0, x1}", cmd_length);
    element_cmd("geodesic", "A minimum-length {x0, x1} word", cmd_geodesic);
    element_cmd("label", "Two-way forest diagram with space labels and weights", cmd_label);
    element_cmd("abelianize", "Image in Z + Z and commutator test", cmd_abelianize);
    element_cmd("wordgraph", "Word graph of a positive element", cmd_wordgraph);

    const std::vector<std::string> reps{"tree", "word", "x0x1", "two-way", "one-way", "pl-unit", "pl-line"};
    auto* mul = app.add_subcommand("multiply", "Product f g ... (f acts first)");
    mul->add_option("inputs", xs)->required()->expected(1, -1);
    mul->add_option("--as", as, "Output representation")->check(CLI::IsMember(reps));
    mul->callback([&] { action = [&] { return cmd_multiply(ctx, xs, as); }; });

    auto* inv = app.add_subcommand("invert", "Inverse element");
    inv->add_option("input", x)->required();
    inv->add_option("--as", as, "Output representation")->check(CLI::IsMember(reps));
    inv->callback([&] { action = [&] { return cmd_invert(ctx, x, as); }; });

    auto* ev = app.add_subcommand("eval", "Evaluate a word");
    ev->add_option("word", x)->required();
    ev->add_option("--as", as, "Output representation")->check(CLI::IsMember(reps));
    ev->callback([&] { action = [&] { return cmd_eval(ctx, x, as); }; });

    auto* conv = app.add_subcommand("convert", "Convert between representations");
    conv->add_option("input", x)->required();
    conv->add_option("--from", from, "Input kind")
        ->check(CLI::IsMember({"auto", "word", "tree", "two-way", "one-way"}));
    conv->add_option("--to", to, "Output representation")->check(CLI::IsMember(reps));
    conv->callback([&] { action = [&] { return cmd_convert(ctx, x, from, to); }; });

    auto* ball = app.add_subcommand("ball", "Ball in the Cayley graph (JSON-lines members with --jsonl)");
    ball->add_option("--radius", radius)->required();
    ball->add_flag("--stats", stats, "Sphere sizes only");
    ball->callback([&] { action = [&] { return cmd_ball(ctx, radius, stats); }; });

    auto* de = app.add_subcommand("deadends", "Dead ends in a ball");
    de->add_option("--radius", radius)->required();
    de->callback([&] { action = [&] { return cmd_deadends(ctx, radius); }; });

    auto* pk = app.add_subcommand("pockets", "k-pockets in a ball");
    pk->add_option("--radius", radius)->required();
    pk->add_option("--k", k)->required();
    pk->callback([&] { action = [&] { return cmd_pockets(ctx, radius, k); }; });

    auto* mac = app.add_subcommand("mac", "Pairs (g, x0^2 g) on a sphere and their in-ball distances");
    mac->add_option("--radius", radius)->required();
    mac->add_option("--max-candidates", max_candidates, "Stop after this many pairs (0: all)");
    mac->callback([&] { action = [&] { return cmd_mac(ctx, radius, max_candidates); }; });

    auto* fc = app.add_subcommand("freecheck", "Distinctness of {x0^-1, x1} words");
    fc->add_option("--maxlen", max_len)->required();
    fc->callback([&] { action = [&] { return cmd_freecheck(ctx, max_len); }; });

    auto* gr = app.add_subcommand("growth", "Positive growth series");
    gr->add_option("--max-n", max_n)->required();
    gr->add_flag("--brute", brute, "Also count positive elements in the Cayley ball");
    gr->callback([&] { action = [&] { return cmd_growth(ctx, max_n, brute); }; });

    auto* iso = app.add_subcommand("iso", "Root p_k of t_k(p) = 1");
    iso->add_option("--k", k)->required();
    iso->add_option("--tol", tol);
    iso->callback([&] { action = [&] { return cmd_iso(ctx, k, tol); }; });

    auto* fo = app.add_subcommand("folner", "Boundary ratio of S_{n,k}");
    fo->add_option("--n", n)->required();
    fo->add_option("--k", k)->required();
    fo->add_option("--direct-budget", budget, "Enumerate directly when |S| is at most this");
    fo->callback([&] { action = [&] { return cmd_folner(ctx, n, k, budget); }; });

    auto* sb = app.add_subcommand("subtree-bound", "2p for a subtree-closed family of trees");
    sb->add_option("--trees", file, "File with one tree per line ('-' for stdin)")->required();
    sb->callback([&] { action = [&] { return cmd_subtree_bound(ctx, file); }; });

    auto* st = app.add_subcommand("strand", "Strand diagrams and the groupoid of fractions");
    st->require_subcommand(1);
    auto* canon = st->add_subcommand("canon", "Reduced fraction of a strand word \"[w:] word\"");
    canon->add_option("word", x)->required();
    canon->callback([&] { action = [&] { return cmd_strand_canon(ctx, x); }; });
    auto* comp = st->add_subcommand("compose", "Compose two strand words");
    comp->add_option("first", x)->required();
    comp->add_option("second", y)->required();
    comp->callback([&] { action = [&] { return cmd_strand_compose(ctx, x, y); }; });
    auto* rend = st->add_subcommand("render", "Render a strand word");
    rend->add_option("word", x)->required();
    rend->callback([&] { action = [&] { return cmd_strand_render(ctx, x); }; });

    auto* ver = app.add_subcommand("verify", "Batch verification suites");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"oracle", "random", "all"}));
    ver->add_option("--radius", radius);
    ver->add_option("--samples", samples);
    ver->callback([&] { action = [&] { return cmd_verify(ctx, suite, radius, samples); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }
    ctx.format = format == "jsonl" ? OutputFormat::JsonLines : format == "dot" ? OutputFormat::Dot : OutputFormat::Text;

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceError;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumericError;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kResourceError;
    }
}
