#include "commands.hpp"

#include "thompson/cayley.hpp"
#include "thompson/classify.hpp"
#include "thompson/errors.hpp"
#include "thompson/folner.hpp"
#include "thompson/forest.hpp"
#include "thompson/growth.hpp"
#include "thompson/metric.hpp"
#include "thompson/pl_map.hpp"
#include "thompson/strand.hpp"
#include "thompson/word_graph.hpp"
#include "thompson/words.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

namespace thompson::cli {

using nlohmann::json;

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot read " + arg.substr(1));
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return arg;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Words contain no '(' or '.', diagrams always do; '*' marks a two-way diagram.
Element parse_element(const std::string& arg, const std::string& from = "auto") {
    std::string text = trim(read_input(arg));
    std::string kind = from;
    if (kind == "auto") {
        if (text.find('*') != std::string::npos)
            kind = "two-way";
        else if (text.find_first_of("(.") != std::string::npos)
            kind = "tree";
        else
            kind = "word";
    }
    if (kind == "word") return eval(parse_word(text));
    if (kind == "tree") return Element(parse_tree_diagram(text));
    if (kind == "two-way") return from_two_way(parse_two_way(text));
    if (kind == "one-way") return from_one_way(parse_one_way(text));
    throw ParseError("unknown input kind \"" + from + "\"");
}

std::string render(const Element& f, const std::string& as) {
    if (as == "tree") return f.diagram().str();
    if (as == "word") return normal_form(f).str();
    if (as == "x0x1") return geodesic_word(f).str();
    if (as == "two-way") return to_two_way(f).str();
    if (as == "one-way") return to_one_way(f).str();
    if (as == "pl-unit") return to_pl_unit(f).str();
    if (as == "pl-line") return to_pl_line(f).str();
    throw ParseError("unknown output representation \"" + as + "\"");
}

std::ostream& out(const Context& c) { return c.out ? *c.out : std::cout; }

bool jsonl(const Context& c) { return c.format == OutputFormat::JsonLines; }

Ball make_ball(const Context& c, int radius) {
    if (radius < 0) throw DomainError("radius must be non-negative");
    if (radius > c.caps.max_radius)
        throw ResourceError("radius " + std::to_string(radius) + " exceeds --max-radius " +
                            std::to_string(c.caps.max_radius));
    return build_ball(radius, c.caps.memory_mb);
}

}  // namespace

int cmd_normalize(const Context& c, const std::string& x) {
    out(c) << normal_form(parse_element(x)).str() << "\n";
    return kOk;
}

int cmd_antinormal(const Context& c, const std::string& x) {
    out(c) << anti_normal_form(parse_element(x)).str() << "\n";
    return kOk;
}

int cmd_length(const Context& c, const std::string& x) {
    Element f = parse_element(x);
    if (jsonl(c)) {
        auto l = label_spaces(f);
        out(c) << json{{"element", f.diagram().str()}, {"length", l.length()}, {"ell0", l.ell0}, {"ell1", l.ell1}}.dump()
               << "\n";
    } else {
        out(c) << length(f) << "\n";
    }
    return kOk;
}

int cmd_geodesic(const Context& c, const std::string& x) {
    out(c) << geodesic_word(parse_element(x)).str() << "\n";
    return kOk;
}

int cmd_label(const Context& c, const std::string& x) {
    out(c) << label_spaces(parse_element(x)).render();
    return kOk;
}

int cmd_multiply(const Context& c, const std::vector<std::string>& xs, const std::string& as) {
    Element acc;
    for (const auto& x : xs) acc = multiply(acc, parse_element(x));
    out(c) << render(acc, as) << "\n";
    return kOk;
}

int cmd_invert(const Context& c, const std::string& x, const std::string& as) {
    out(c) << render(invert(parse_element(x)), as) << "\n";
    return kOk;
}

int cmd_abelianize(const Context& c, const std::string& x) {
    Element f = parse_element(x);
    auto [a, b] = abelianize(f);
    if (jsonl(c))
        out(c) << json{{"phi", {a, b}}, {"commutator", is_commutator_element(f)}}.dump() << "\n";
    else
        out(c) << "(" << a << ", " << b << ")" << (is_commutator_element(f) ? " commutator" : "") << "\n";
    return kOk;
}

int cmd_eval(const Context& c, const std::string& x, const std::string& as) {
    out(c) << render(eval(parse_word(trim(read_input(x)))), as) << "\n";
    return kOk;
}

int cmd_convert(const Context& c, const std::string& x, const std::string& from, const std::string& to) {
    out(c) << render(parse_element(x, from), to) << "\n";
    return kOk;
}

int cmd_ball(const Context& c, int radius, bool stats) {
    Ball b = make_ball(c, radius);
    if (stats || !jsonl(c)) {
        auto& o = out(c);
        if (jsonl(c)) {
            json j{{"radius", radius}, {"size", b.size()}, {"spheres", b.sphere_sizes()}, {"bytes", b.approx_bytes()}};
            o << j.dump() << "\n";
        } else {
            o << "radius " << radius << "  size " << b.size() << "\n";
            for (int r = 0; r <= radius; ++r) o << "  sphere " << r << ": " << b.sphere_sizes()[r] << "\n";
        }
        if (stats) return kOk;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        out(c) << json{{"element", b.element(i).diagram().str()}, {"distance", b.distance(i)}}.dump() << "\n";
    return kOk;
}

int cmd_deadends(const Context& c, int radius) {
    Ball b = make_ball(c, radius);
    std::size_t count = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        Element f = b.element(i);
        if (!is_dead_end(f)) continue;
        ++count;
        if (jsonl(c))
            out(c) << json{{"element", f.diagram().str()}, {"length", b.distance(i)},
                           {"structural", is_dead_end_structural(f)}}
                          .dump()
                   << "\n";
        else
            out(c) << b.distance(i) << "  " << f.diagram().str() << "\n";
    }
    if (!jsonl(c)) out(c) << count << " dead ends in ball(" << radius << ")\n";
    return kOk;
}

int cmd_pockets(const Context& c, int radius, int k) {
    if (k < 1) throw DomainError("pocket depth must be at least 1");
    Ball b = make_ball(c, radius);
    std::size_t count = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        Element f = b.element(i);
        if (!is_dead_end(f)) continue;
        if (k >= 2 && !is_pocket(f, k)) continue;
        ++count;
        if (jsonl(c))
            out(c) << json{{"element", f.diagram().str()}, {"length", b.distance(i)}, {"k", k}}.dump() << "\n";
        else
            out(c) << b.distance(i) << "  " << f.diagram().str() << "\n";
    }
    if (!jsonl(c)) out(c) << count << " " << k << "-pockets in ball(" << radius << ")\n";
    return kOk;
}

int cmd_mac(const Context& c, int radius, std::size_t max_candidates) {
    Ball b = make_ball(c, radius);
    auto pairs = mac_witness_search(b, radius, max_candidates);
    long best = -1;
    for (const auto& p : pairs) {
        best = std::max(best, p.in_ball);
        if (jsonl(c))
            out(c) << json{{"g", b.element(p.g).diagram().str()}, {"h", b.element(p.h).diagram().str()},
                           {"radius", radius}, {"in_ball", p.in_ball}}
                          .dump()
                   << "\n";
    }
    if (!jsonl(c)) {
        out(c) << pairs.size() << " pairs (g, x0^2 g) on sphere " << radius << ", max in-ball distance " << best
               << "\n";
        for (const auto& p : pairs) {
            if (p.in_ball != best) continue;
            out(c) << "witness g = " << geodesic_word(b.element(p.g)).str() << "\n";
            break;
        }
    }
    return kOk;
}

int cmd_freecheck(const Context& c, int max_len) {
    if (max_len < 0) throw DomainError("--maxlen must be non-negative");
    auto r = free_submonoid_check(max_len);
    if (jsonl(c))
        out(c) << json{{"max_len", max_len}, {"words", r.words}, {"distinct", r.distinct}, {"ok", r.ok()}}.dump() << "\n";
    else
        out(c) << r.words << " words, " << r.distinct << " distinct elements\n";
    return r.ok() ? kOk : kVerificationFailure;
}

int cmd_growth(const Context& c, int max_n, bool brute) {
    if (max_n < 0) throw DomainError("--max-n must be non-negative");
    auto s = series_coefficients(max_n);
    std::vector<mpz_class> counted;
    if (brute) counted = count_positive_by_length(make_ball(c, max_n), max_n);
    bool ok = true;
    for (int n = 0; n <= max_n; ++n) {
        const auto& p = s.p[static_cast<std::size_t>(n)];
        if (jsonl(c)) {
            json j{{"n", n}, {"p", p.get_str()}};
            if (brute) j["brute"] = counted[static_cast<std::size_t>(n)].get_str();
            out(c) << j.dump() << "\n";
        } else {
            out(c) << n << " " << p.get_str();
            if (brute) out(c) << " " << counted[static_cast<std::size_t>(n)].get_str();
            out(c) << "\n";
        }
        if (brute && counted[static_cast<std::size_t>(n)] != p) ok = false;
    }
    return ok ? kOk : kVerificationFailure;
}

int cmd_iso(const Context& c, int k, double tol) {
    if (k < 0) throw DomainError("--k must be non-negative");
    if (!(tol > 0)) throw DomainError("--tol must be positive");
    auto r = solve_pk(k, tol);
    if (jsonl(c)) {
        out(c) << json{{"k", k},          {"p", r.value},         {"lo", r.lo.str()},
                       {"hi", r.hi.str()}, {"two_p", 2 * r.value}, {"method", r.method}}
                      .dump()
               << "\n";
    } else {
        out(c) << std::setprecision(15) << "p_" << k << " = " << r.value << "  (2p = " << 2 * r.value << ", "
               << r.method << ")\n";
    }
    return kOk;
}

int cmd_folner(const Context& c, std::size_t n, int k, std::size_t direct_budget) {
    if (k < 0) throw DomainError("--k must be non-negative");
    auto r = folner_ratio(n, k, direct_budget);
    double ratio = r.ratio.get_d();
    double star = mpq_class(r.R_star, r.R).get_d();
    if (jsonl(c)) {
        json j{{"n", n},          {"k", k},           {"R", r.R.get_str()}, {"R_star", r.R_star.get_str()},
               {"ratio", ratio},  {"R_star_over_R", star}, {"direct", r.direct_done}, {"agree", r.agree}};
        out(c) << j.dump() << "\n";
    } else {
        out(c) << std::setprecision(12) << "S_{" << n << "," << k << "}: |S| = " << r.R.get_str()
               << ", R* = " << r.R_star.get_str() << ", |dS|/|S| = " << ratio << ", R*/R = " << star;
        if (r.direct_done) out(c) << (r.agree ? ", direct enumeration agrees" : ", DIRECT ENUMERATION DISAGREES");
        out(c) << "\n";
    }
    return r.agree ? kOk : kVerificationFailure;
}

int cmd_subtree_bound(const Context& c, const std::string& file) {
    std::istringstream in(read_input(file.empty() || file[0] == '@' || file == "-" ? file : "@" + file));
    std::vector<BinaryTree> trees;
    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        trees.push_back(BinaryTree::parse(line));
    }
    auto r = subtree_closed_bound(trees);
    if (jsonl(c))
        out(c) << json{{"trees", trees.size()}, {"p", r.p.value}, {"two_p", r.two_p}, {"above_half", r.above_half}}
                      .dump()
               << "\n";
    else
        out(c) << std::setprecision(12) << trees.size() << " trees, p = " << r.p.value << ", 2p = " << r.two_p
               << (r.above_half ? " > 1/2" : " <= 1/2") << "\n";
    return kOk;
}

int cmd_wordgraph(const Context& c, const std::string& x) {
    WordGraph g = word_graph(parse_element(x), c.caps.max_vertices);
    if (c.format == OutputFormat::Dot) {
        out(c) << g.to_dot();
        return kOk;
    }
    if (jsonl(c)) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            out(c) << json{{"word", g.vertices[i].str()}, {"normal", i == g.normal}, {"anti_normal", i == g.anti_normal}}
                          .dump()
                   << "\n";
        return kOk;
    }
    out(c) << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n"
           << "normal: " << g.vertices[g.normal].str() << "\n"
           << "anti-normal: " << g.vertices[g.anti_normal].str() << "\n";
    return kOk;
}

int cmd_strand_canon(const Context& c, const std::string& w) {
    auto m = canonicalize(parse_generator_word(trim(read_input(w))));
    if (jsonl(c))
        out(c) << json{{"domain", m.domain()}, {"codomain", m.codomain()}, {"p", m.p.str()}, {"q", m.q.str()},
                       {"word", m.word().str()}}
                      .dump()
               << "\n";
    else
        out(c) << m.domain() << " -> " << m.codomain() << "  " << m.str() << "  " << m.word().str() << "\n";
    return kOk;
}

int cmd_strand_compose(const Context& c, const std::string& a, const std::string& b) {
    auto wa = parse_generator_word(trim(read_input(a)));
    auto wb = parse_generator_word(trim(read_input(b)), wa.end_width());
    auto m = groupoid_compose(canonicalize(wa), canonicalize(wb));
    if (!(m == canonicalize(concat(wa, wb)))) throw StructuralError("groupoid composition disagrees with concatenation");
    out(c) << m.domain() << " -> " << m.codomain() << "  " << m.str() << "  " << m.word().str() << "\n";
    return kOk;
}

int cmd_strand_render(const Context& c, const std::string& w) {
    auto g = parse_generator_word(trim(read_input(w)));
    if (c.format == OutputFormat::Dot) {
        out(c) << strand_dot(g);
    } else {
        auto widths = g.widths();
        out(c) << g.str() << "\nwidths:";
        for (auto x : widths) out(c) << " " << x;
        out(c) << "\n";
    }
    return kOk;
}

namespace {

struct Tally {
    std::map<std::string, std::pair<std::size_t, std::size_t>> rows;  // passed, total
    std::vector<std::string> order;

    void add(const std::string& name, bool ok) {
        if (!rows.count(name)) order.push_back(name);
        auto& r = rows[name];
        r.second++;
        if (ok) r.first++;
    }
    bool all_ok() const {
        for (const auto& [_, r] : rows)
            if (r.first != r.second) return false;
        return true;
    }
};

void oracle_suite(const Context& c, int radius, Tally& t) {
    Ball b = make_ball(c, radius);
    for (std::size_t i = 0; i < b.size(); ++i) {
        Element f = b.element(i);
        long l = length(f);
        t.add("length formula = BFS distance", l == b.distance(i));
        t.add("predicted generator effects", predicted_effect(f) == generator_effect(f));
        Word w = geodesic_word(f);
        t.add("geodesic word", static_cast<long>(w.size()) == l && eval(w) == f);
        t.add("left/right-sided width bound", left_sided_bound_check(f));
        if (b.distance(i) < radius)
            t.add("structural dead end = brute force", is_dead_end_structural(f) == is_dead_end_in_ball(b, i));
    }
}

void random_suite(const Context& c, std::size_t samples, Tally& t) {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::size_t> len(0, 24);
    auto sample = [&] { return eval(random_x0x1_word(rng, len(rng))); };
    for (std::size_t s = 0; s < samples; ++s) {
        Element f = sample(), g = sample(), h = sample();
        t.add("associativity", multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        t.add("inverse law", multiply(f, invert(f)).is_identity());
        t.add("tree -> two-way -> tree", from_two_way(to_two_way(f)) == f);
        t.add("tree -> one-way -> tree", from_one_way(to_one_way(f)) == f);
        t.add("pl_line homomorphism", to_pl_line(multiply(f, g)) == compose(to_pl_line(f), to_pl_line(g)));
        t.add("pl_unit homomorphism", to_pl_unit(multiply(f, g)) == compose(to_pl_unit(f), to_pl_unit(g)));
        t.add("normal form evaluates back", eval(normal_form(f)) == f);
        auto a = abelianize(f), b = abelianize(g), ab = abelianize(multiply(f, g));
        t.add("abelianization additive", ab.first == a.first + b.first && ab.second == a.second + b.second);
        Element viaiso = fundamental_group_iso(
            groupoid_compose(fundamental_group_iso_inverse(f), fundamental_group_iso_inverse(g)));
        t.add("groupoid composition = multiply", viaiso == multiply(f, g));
    }
}

}  // namespace

int cmd_verify(const Context& c, const std::string& suite, int radius, std::size_t samples) {
    Tally t;
    if (suite == "oracle" || suite == "all") oracle_suite(c, radius, t);
    if (suite == "random" || suite == "all") random_suite(c, samples, t);
    if (t.order.empty()) throw ParseError("unknown suite \"" + suite + "\" (oracle, random, all)");
    for (const auto& name : t.order) {
        auto [pass, total] = t.rows.at(name);
        if (jsonl(c))
            out(c) << json{{"check", name}, {"passed", pass}, {"total", total}}.dump() << "\n";
        else
            out(c) << (pass == total ? "ok   " : "FAIL ") << name << ": " << pass << "/" << total << "\n";
    }
    return t.all_ok() ? kOk : kVerificationFailure;
}

}  // namespace thompson::cli
