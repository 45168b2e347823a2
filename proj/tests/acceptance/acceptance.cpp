// Acceptance run: one line per criterion. Exit 0 iff the failing criteria are exactly the
// documented expected failures (see kExpectedFailures).

#include "../oracles.hpp"

#include "thompson/cayley.hpp"
#include "thompson/classify.hpp"
#include "thompson/folner.hpp"
#include "thompson/growth.hpp"
#include "thompson/metric.hpp"
#include "thompson/pl_map.hpp"
#include "thompson/strand.hpp"
#include "thompson/word_graph.hpp"
#include "thompson/words.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace thompson;

namespace {

// Criterion 5 asks for dead ends inside the radius-10 ball; the shortest dead ends have
// length 11 (found and verified below), so that sub-check cannot pass.
const std::set<int> kExpectedFailures{5};

std::mt19937_64 rng(12345);

struct Result {
    bool ok = true;
    std::string detail;

    void need(bool cond, const std::string& what) {
        if (!cond) ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (cond ? "" : " [FAILED]");
    }
};

const Ball& big_ball() {
    static const Ball b = build_ball(12);
    return b;
}

Element random_element(std::size_t max_len = 24) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return eval(random_x0x1_word(rng, len(rng)));
}

std::size_t count_index(const Word& w, unsigned idx) {
    return static_cast<std::size_t>(
        std::count_if(w.letters.begin(), w.letters.end(), [&](const Letter& l) { return l.index == idx; }));
}

Result length_oracle() {
    Result r;
    const Ball& b = big_ball();
    std::size_t end = b.sphere_end(10), bad = 0;
    for (std::size_t i = 0; i < end; ++i)
        if (length(b.element(i)) != b.distance(i)) ++bad;
    r.need(bad == 0, std::to_string(end) + " elements of ball(10), " + std::to_string(bad) + " mismatches");
    r.need(end == 88253, "ball(10) size 88253");
    return r;
}

Result worked_normal_form() {
    Result r;
    std::string nf = normal_form(eval(parse_word("x0 x3 x6 x3^-1 x1 x4^-1 x0 x3^-1 x0^-1"))).str();
    r.need(nf == "x0 x1 x6 x4^-1 x2^-1", "normal form \"" + nf + "\"");
    return r;
}

Result worked_lengths() {
    Result r;
    Element f = eval(parse_word("x1 x3^3 x6 x7 x10"));
    std::string anf = anti_normal_form(f).str();
    r.need(anf == "x4 x2 x3 x4 x2 x2 x1", "anti-normal form \"" + anf + "\"");
    r.need(length(f) == 17, "length " + std::to_string(length(f)));
    Element g = eval(parse_word("x4 x5^2 x4 x2 x3 x1^2"));
    auto l = label_spaces(g);
    Word w = geodesic_word(g);
    r.need(l.length() == 18 && l.ell1 == 8, "length " + std::to_string(l.length()) + ", l1 = " + std::to_string(l.ell1));
    r.need(eval(w) == g && count_index(w, 1) == 8 && count_index(w, 0) == 10,
           "geodesic " + w.str() + " (" + std::to_string(count_index(w, 1)) + " x1, " +
               std::to_string(count_index(w, 0)) + " x0)");
    return r;
}

Result growth_series() {
    Result r;
    auto counted = count_positive_by_length(big_ball(), 12);
    auto s = series_coefficients(12);
    bool same = counted == s.p;
    bool rec = true;
    for (std::size_t n = 3; n <= 12; ++n) rec = rec && counted[n] == 2 * counted[n - 1] + counted[n - 2] - counted[n - 3];
    std::string list;
    for (auto& c : counted) list += (list.empty() ? "" : " ") + c.get_str();
    r.need(same, "census " + list + " equals the series");
    r.need(rec, "recurrence for 3 <= n <= 12");
    return r;
}

Result dead_ends() {
    Result r;
    const Ball& b = big_ball();
    // brute force needs every neighbour inside the ball: spheres 0..11
    std::size_t in10 = 0, found = 0, mismatch9 = 0, mismatch11 = 0, pockets3 = 0, escape_bad = 0;
    int shortest = -1;
    for (std::size_t i = 0; i < b.sphere_end(11); ++i) {
        bool brute = is_dead_end_in_ball(b, i);
        Element f = b.element(i);
        bool structural = is_dead_end_structural(f);
        if (brute != structural) (b.distance(i) <= 9 ? mismatch9 : mismatch11)++;
        if (!brute) continue;
        ++found;
        if (b.distance(i) <= 10) ++in10;
        if (shortest < 0 || b.distance(i) < shortest) shortest = b.distance(i);
        if (is_pocket(f, 3)) ++pockets3;
        if (length(escape_word_image(f)) != b.distance(i) + 1) ++escape_bad;
    }
    r.need(in10 > 0, std::to_string(in10) + " dead ends in ball(10) (shortest dead end has length " +
                         std::to_string(shortest) + ", " + std::to_string(found) + " in ball(11))");
    r.need(mismatch9 == 0, "structural = brute force on ball(9)");
    r.need(mismatch11 == 0, "and on ball(11)");
    r.need(pockets3 == 0, "no 3-pockets among " + std::to_string(found) + " dead ends of ball(11)");
    r.need(found > 0 && escape_bad == 0, "escape word x1^-1 x1^-1 x0 adds exactly 1 for every dead end found");
    return r;
}

Result isoperimetric() {
    Result r;
    auto p1 = solve_pk(1);
    double err = std::abs(p1.value - (std::sqrt(5.0) - 1) / 2);
    std::ostringstream e;
    e << "|p_1 - (sqrt5-1)/2| = " << err;
    r.need(err < 1e-12, e.str());
    bool decreasing = true, above = true, twice = true;
    double prev = p1.value;
    for (int k = 1; k <= 20; ++k) {
        auto pk = solve_pk(k);
        if (k > 1 && !(pk.value < prev)) decreasing = false;
        if (!(pk.lo > Dyadic::pow2(-2))) above = false;
        if (!(2 * pk.value > 0.5)) twice = false;
        prev = pk.value;
    }
    std::ostringstream p20;
    p20.precision(10);
    p20 << "p_20 = " << prev;
    r.need(decreasing, "p_k strictly decreasing for k <= 20");
    r.need(above, "every p_k > 1/4 (" + p20.str() + ")");
    r.need(twice, "2 p_k > 1/2");
    std::size_t good = 0;
    for (int i = 0; i < 20; ++i) {
        std::vector<BinaryTree> seeds;
        std::uniform_int_distribution<std::size_t> carets(1, 10);
        std::set<BinaryTree> fam{BinaryTree()};
        std::function<void(const BinaryTree&)> add = [&](const BinaryTree& t) {
            if (!fam.insert(t).second || t.is_leaf()) return;
            add(t.left());
            add(t.right());
        };
        std::function<BinaryTree(std::size_t)> rt = [&](std::size_t c) {
            if (c == 0) return BinaryTree();
            std::size_t l = std::uniform_int_distribution<std::size_t>(0, c - 1)(rng);
            return BinaryTree::caret(rt(l), rt(c - 1 - l));
        };
        for (int j = 0; j < 4; ++j) add(rt(carets(rng)));
        auto sb = subtree_closed_bound(std::vector<BinaryTree>(fam.begin(), fam.end()));
        if (sb.above_half && sb.two_p > 0.5) ++good;
    }
    r.need(good == 20, std::to_string(good) + "/20 subtree-closed families with 2p > 1/2");
    return r;
}

Result folner() {
    Result r;
    std::size_t cases = 0, agree = 0;
    for (int k = 0; k <= 3; ++k)
        for (std::size_t n = 1; n <= 12; ++n) {
            auto c = folner_ratio(n, k);
            if (!c.direct_done) continue;
            ++cases;
            if (c.agree && c.direct_size == c.R && c.direct_exits[3] == c.R_star) ++agree;
        }
    r.need(cases == 48 && agree == cases, std::to_string(agree) + "/" + std::to_string(cases) + " (n, k) agree");
    const std::size_t n = 2000;
    auto c = folner_ratio(n, 1, 0);
    double err = std::abs(mpq_class(c.R_star, c.R).get_d() - solve_pk(1).value);
    std::ostringstream s;
    s << "|R*/R - p_1| = " << err << " at n = " << n;
    r.need(err < 1e-3, s.str());
    return r;
}

Result mac() {
    Result r;
    auto pairs = mac_witness_search(big_ball(), 10);
    std::size_t hits = 0;
    long best = -1;
    std::string witness;
    for (const auto& p : pairs) {
        best = std::max(best, p.in_ball);
        if (p.in_ball == 20 && distance(big_ball().element(p.g), big_ball().element(p.h)) == 2) {
            if (hits++ == 0) witness = geodesic_word(big_ball().element(p.g)).str();
        }
    }
    r.need(hits > 0, std::to_string(pairs.size()) + " pairs (g, x0^2 g) on sphere 10, " + std::to_string(hits) +
                         " with in-ball distance 20, e.g. g = " + witness);
    r.need(best <= 20, "max in-ball distance " + std::to_string(best) + " <= 20");
    return r;
}

Result left_sided() {
    Result r;
    const Ball& b = big_ball();
    std::size_t left = 0, right = 0, bad = 0;
    for (std::size_t i = 0; i < b.sphere_end(10); ++i) {
        Element f = b.element(i);
        auto c = classify(f);
        long l = b.distance(i), w = static_cast<long>(c.width);
        if (c.left_sided) {
            ++left;
            if (l < 2 * w) ++bad;
        }
        if (c.right_sided) {
            ++right;
            if (l < w) ++bad;
        }
    }
    r.need(bad == 0, std::to_string(left) + " left-sided, " + std::to_string(right) + " right-sided, " +
                         std::to_string(bad) + " violations");
    return r;
}

Result free_submonoid() {
    Result r;
    auto c = free_submonoid_check(12);
    r.need(c.words == 8191 && c.distinct == 8191,
           std::to_string(c.words) + " words, " + std::to_string(c.distinct) + " distinct");
    return r;
}

Result word_graphs() {
    Result r;
    std::size_t elements = 0, good = 0;
    for (std::size_t c = 0; c <= 6; ++c) {
        std::vector<BinaryTree> tops;
        testing::all_trees(c, tops);
        for (const auto& t : tops) {
            Element f(t, BinaryTree::right_vine(t.leaves()));
            if (f.caret_count() != c) continue;
            ++elements;
            auto g = word_graph(f);
            std::set<Word> vs(g.vertices.begin(), g.vertices.end());
            bool ok = g.sources() == std::vector<std::size_t>{g.anti_normal} &&
                      g.sinks() == std::vector<std::size_t>{g.normal} && g.vertices[g.normal] == normal_form(f) &&
                      g.vertices[g.anti_normal] == anti_normal_form(f) && vs == testing::linear_extension_words(f);
            if (ok) ++good;
        }
    }
    r.need(good == elements, std::to_string(good) + "/" + std::to_string(elements) +
                                 " positive elements with <= 6 carets: one source, one sink, linear extensions");
    auto g = word_graph(eval(parse_word("x0 x2 x3 x5 x5")));
    r.need(g.vertices.size() == 30, "x0 x2 x3 x5 x5 has " + std::to_string(g.vertices.size()) + " words");
    return r;
}

Result strands() {
    Result r;
    std::size_t agree = 0;
    for (int i = 0; i < 500; ++i) {
        Element f = random_element(), g = random_element();
        auto m = groupoid_compose(fundamental_group_iso_inverse(f), fundamental_group_iso_inverse(g));
        if (fundamental_group_iso(m) == multiply(f, g)) ++agree;
    }
    r.need(agree == 500, std::to_string(agree) + "/500 compositions match multiply");

    std::size_t inputs = 0, confluent = 0;
    for (int i = 0; i < 100; ++i) {
        GeneratorWord w{1 + static_cast<std::size_t>(rng() % 3), {}};
        std::size_t width = w.width;
        for (int j = 0; j < 16; ++j) {
            bool split = width == 1 || rng() % 2;
            if (split)
                w.letters.push_back({static_cast<unsigned>(rng() % width++), 1});
            else
                w.letters.push_back({static_cast<unsigned>(rng() % (--width)), -1});
        }
        auto c = canonicalize(w);
        GroupoidMorphism big = c;
        for (int j = 0; j < 6; ++j) {
            auto e = ForestMorphism::generator(static_cast<std::size_t>(rng() % big.p.codomain()), big.p.codomain());
            big = {forest_compose(big.p, e), forest_compose(big.q, e)};
        }
        bool ok = c.is_reduced();
        for (int j = 0; j < 100 && ok; ++j) ok = reduce_shuffled(big, rng) == c;
        ++inputs;
        if (ok) ++confluent;
    }
    r.need(confluent == inputs, std::to_string(confluent) + "/" + std::to_string(inputs) +
                                    " inputs confluent under 100 shuffled orders");

    std::size_t rel = 0, rel_ok = 0;
    for (std::size_t w = 1; w <= 6; ++w)
        for (std::size_t n = 0; n < w; ++n)
            for (std::size_t k = 0; k < n; ++k) {
                ++rel;
                if (forest_compose(ForestMorphism::generator(n, w), ForestMorphism::generator(k, w + 1)) ==
                    forest_compose(ForestMorphism::generator(k, w), ForestMorphism::generator(n + 1, w + 1)))
                    ++rel_ok;
            }
    r.need(rel_ok == rel, std::to_string(rel_ok) + "/" + std::to_string(rel) + " forest relations for widths <= 6");
    return r;
}

Result semantics() {
    Result r;
    std::size_t agree = 0;
    for (int i = 0; i < 500; ++i) {
        Element f = random_element(), g = random_element();
        if (to_pl_line(multiply(f, g)) == compose(to_pl_line(f), to_pl_line(g))) ++agree;
    }
    r.need(agree == 500, std::to_string(agree) + "/500 products match PL composition");
    PLMap x0 = to_pl_line(Element::generator(0)), x1 = to_pl_line(Element::generator(1));
    std::uniform_int_distribution<long> num(-(8L << 10), 8L << 10);
    std::size_t ok0 = 0, ok1 = 0;
    for (int i = 0; i < 20; ++i) {
        Dyadic t(mpz_class(num(rng)), 10);
        if (x0(t) == t + Dyadic(1)) ++ok0;
        Dyadic expect = t <= Dyadic(0) ? t : t <= Dyadic(1) ? t * Dyadic(2) : t + Dyadic(1);
        if (x1(t) == expect) ++ok1;
    }
    r.need(ok0 == 20 && ok1 == 20,
           "x0 at " + std::to_string(ok0) + "/20 probes, x1 at " + std::to_string(ok1) + "/20 probes");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) rng.seed(std::strtoull(argv[1], nullptr, 10));
    struct Criterion {
        int id;
        const char* name;
        Result (*run)();
    };
    const Criterion criteria[] = {
        {1, "length formula = BFS distance on ball(10)", length_oracle},
        {2, "worked normal form", worked_normal_form},
        {3, "worked anti-normal form and lengths", worked_lengths},
        {4, "positive growth series n <= 12", growth_series},
        {5, "dead ends and pockets", dead_ends},
        {6, "isoperimetric roots p_k", isoperimetric},
        {7, "Folner ratios", folner},
        {8, "minimal almost convexity witness at radius 10", mac},
        {9, "left-/right-sided width bounds on ball(10)", left_sided},
        {10, "free submonoid {x0^-1, x1}", free_submonoid},
        {11, "word graphs", word_graphs},
        {12, "strand groupoid", strands},
        {13, "PL semantics", semantics},
    };
    std::set<int> failed;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Result res = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!res.ok) failed.insert(c.id);
        std::printf("criterion %2d: %s  %s: %s (%.1fs)\n", c.id, res.ok ? "PASS" : "FAIL", c.name, res.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    if (failed == kExpectedFailures) {
        std::printf("failures match the documented expected list {5}\n");
        return 0;
    }
    std::printf("unexpected result: failures differ from the documented expected list {5}\n");
    return 1;
}
