#include "support.hpp"

#include "thompson/errors.hpp"
#include "thompson/forest.hpp"
#include "thompson/strand.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace thompson;
using testing::random_element;
using testing::random_tree;
using testing::rng;

namespace {

ForestMorphism random_forest(std::size_t width, std::size_t max_carets) {
    ForestMorphism f;
    std::uniform_int_distribution<std::size_t> c(0, max_carets);
    for (std::size_t i = 0; i < width; ++i) f.trees.push_back(random_tree(c(rng())));
    return f;
}

// A random strand word of `length` letters from width `w`, never dropping below width 1.
GeneratorWord random_strand_word(std::size_t w, std::size_t length) {
    GeneratorWord g{w, {}};
    for (std::size_t i = 0; i < length; ++i) {
        bool split = w == 1 || rng()() % 2;
        if (split) {
            g.letters.push_back({static_cast<unsigned>(rng()() % w), 1});
            ++w;
        } else {
            g.letters.push_back({static_cast<unsigned>(rng()() % (w - 1)), -1});
            --w;
        }
    }
    return g;
}

// Strand word closing to width 1, with its image under the spanning-tree contraction.
std::pair<GeneratorWord, Element> random_loop(std::size_t length) {
    GeneratorWord g{1, {}};
    std::size_t w = 1;
    Element image;
    for (std::size_t i = 0; i < length || w != 1; ++i) {
        bool split = w == 1 || (i < length && rng()() % 2);
        if (split) {
            unsigned n = static_cast<unsigned>(rng()() % w);
            g.letters.push_back({n, 1});
            if (n + 1 < w) image = multiply(image, Element::generator(n));
            ++w;
        } else {
            unsigned n = static_cast<unsigned>(rng()() % (w - 1));
            g.letters.push_back({n, -1});
            --w;
            if (n + 1 < w) image = multiply(image, Element::generator(n, -1));
        }
    }
    return {g, image};
}

}  // namespace

TEST_SUITE("strand") {
    TEST_CASE("forest category") {
        auto f = random_forest(3, 4);
        CHECK(forest_compose(ForestMorphism::identity(3), f) == f);
        CHECK(forest_compose(f, ForestMorphism::identity(f.codomain())) == f);
        CHECK(forest_compose(ForestMorphism::generator(0, 1), ForestMorphism::generator(0, 2)).str() == "((.,.),.)");
        CHECK_THROWS_AS(forest_compose(f, ForestMorphism::identity(f.codomain() + 1)), StructuralError);
        CHECK_THROWS_AS(ForestMorphism::generator(2, 2), StructuralError);
        for (int i = 0; i < 200; ++i) {
            auto a = random_forest(2, 3);
            auto b = random_forest(a.codomain(), 2);
            auto c = random_forest(b.codomain(), 2);
            CHECK(forest_compose(forest_compose(a, b), c) == forest_compose(a, forest_compose(b, c)));
            CHECK(forest_compose(a, b).codomain() == b.codomain());
        }
    }

    TEST_CASE("forest relations for widths up to 6") {
        for (std::size_t w = 1; w <= 6; ++w)
            for (std::size_t n = 0; n < w; ++n)
                for (std::size_t k = 0; k < n; ++k)
                    CHECK(forest_compose(ForestMorphism::generator(n, w), ForestMorphism::generator(k, w + 1)) ==
                          forest_compose(ForestMorphism::generator(k, w), ForestMorphism::generator(n + 1, w + 1)));
    }

    TEST_CASE("forest normal form") {
        CHECK(forest_normal_form(ForestMorphism::generator(0, 2)).str() == "x0");
        Element f = eval(parse_word("x0 x2 x3 x5 x5"));
        ForestMorphism top{to_one_way(f).top};
        CHECK(forest_normal_form(top).str() == "x0 x2 x3 x5 x5");
        for (int i = 0; i < 500; ++i) {
            auto g = random_forest(std::uniform_int_distribution<std::size_t>(1, 4)(rng()), 4);
            Word w = forest_normal_form(g);
            CHECK(forest_from_word(g.domain(), w) == g);
            for (std::size_t j = 1; j < w.size(); ++j) CHECK(w.letters[j - 1].index <= w.letters[j].index);
        }
    }

    TEST_CASE("forest lcm") {
        auto f = random_forest(3, 4);
        auto [a, b] = forest_lcm(f, f);
        CHECK(a.is_identity());
        CHECK(b.is_identity());
        auto [c, d] = forest_lcm(ForestMorphism::identity(3), f);
        CHECK(c == f);
        CHECK(d.is_identity());
        auto [x, y] = forest_lcm(ForestMorphism::generator(0, 2), ForestMorphism::generator(1, 2));
        auto both = forest_compose(ForestMorphism::generator(0, 2), x);
        CHECK(both == forest_compose(ForestMorphism::generator(1, 2), y));
        CHECK(both.str() == "(.,.) (.,.)");
        for (int i = 0; i < 300; ++i) {
            auto g = random_forest(3, 4), h = random_forest(3, 4);
            auto [p, q] = forest_lcm(g, h);
            auto m = forest_compose(g, p);
            CHECK(m == forest_compose(h, q));
            // least: any common multiple built from a bigger tree factors through it
            ForestMorphism bigger = forest_compose(m, random_forest(m.codomain(), 2));
            for (std::size_t t = 0; t < 3; ++t) CHECK(tree_lcm(m.trees[t], bigger.trees[t]) == bigger.trees[t]);
            for (std::size_t t = 0; t < 3; ++t) CHECK(m.trees[t] == tree_lcm(g.trees[t], h.trees[t]));
        }
    }

    TEST_CASE("cancellative") {
        std::vector<ForestMorphism> small;
        for (std::size_t a = 0; a <= 2; ++a)
            for (std::size_t b = 0; b <= 2; ++b) {
                std::vector<BinaryTree> ta, tb;
                // every pair of trees with a and b carets
                std::function<void(std::size_t, std::vector<BinaryTree>&)> all = [&](std::size_t c, std::vector<BinaryTree>& out) {
                    if (c == 0) {
                        out.push_back(BinaryTree());
                        return;
                    }
                    for (std::size_t l = 0; l < c; ++l) {
                        std::vector<BinaryTree> ls, rs;
                        all(l, ls);
                        all(c - 1 - l, rs);
                        for (auto& x : ls)
                            for (auto& y : rs) out.push_back(BinaryTree::caret(x, y));
                    }
                };
                all(a, ta);
                all(b, tb);
                for (auto& x : ta)
                    for (auto& y : tb) small.push_back(ForestMorphism{{x, y}});
            }
        for (int i = 0; i < 2; ++i) {
            // f : 1 -> 2 or 2 -> 2
            ForestMorphism f = i % 2 ? ForestMorphism::generator(0, 1) : ForestMorphism::identity(2);
            std::map<std::string, std::size_t> left;
            for (std::size_t j = 0; j < small.size(); ++j) {
                auto [it, fresh] = left.emplace(forest_compose(f, small[j]).str(), j);
                CHECK((fresh || small[it->second] == small[j]));
            }
            std::map<std::string, std::size_t> right;
            for (std::size_t j = 0; j < small.size(); ++j) {
                auto g = ForestMorphism::identity(small[j].codomain());
                g.trees[0] = BinaryTree::parse("(.,(.,.))");
                auto [it, fresh] = right.emplace(forest_compose(small[j], g).str(), j);
                CHECK((fresh || small[it->second] == small[j]));
            }
        }
    }

    TEST_CASE("strand words") {
        auto g = parse_generator_word("2: x1 x0^-1");
        CHECK(g.widths() == std::vector<std::size_t>{2, 3, 2});
        CHECK(g.str() == "2: x1 x0^-1");
        CHECK(parse_generator_word("x0").width == 1);
        CHECK_THROWS_AS(parse_generator_word("1: x1"), StructuralError);
        CHECK_THROWS_AS(parse_generator_word("1: x0^-1"), StructuralError);
        CHECK_THROWS_AS(parse_generator_word("a: x0"), ParseError);
        CHECK(canonicalize(parse_generator_word("1: x0 x0^-1")) == GroupoidMorphism::identity(1));
        CHECK(canonicalize(parse_generator_word("2: x0^-1 x0")) == GroupoidMorphism::identity(2));
        CHECK(canonicalize(parse_generator_word("3: x1^-1 x1")) == GroupoidMorphism::identity(3));
    }

    TEST_CASE("canonical fractions are reduced and confluent") {
        for (int i = 0; i < 50; ++i) {
            auto w = random_strand_word(std::uniform_int_distribution<std::size_t>(1, 3)(rng()), 20);
            auto c = canonicalize(w);
            CHECK(c.is_reduced());
            CHECK(c.domain() == w.width);
            CHECK(c.codomain() == w.end_width());
            // re-expand with random common carets, then reduce in 100 shuffled orders
            GroupoidMorphism big = c;
            for (int j = 0; j < 5; ++j) {
                auto e = ForestMorphism::generator(
                    static_cast<std::size_t>(rng()() % big.p.codomain()), big.p.codomain());
                big = {forest_compose(big.p, e), forest_compose(big.q, e)};
            }
            for (int j = 0; j < 100; ++j) CHECK(reduce_shuffled(big, rng()) == c);
            CHECK(reduce(big) == c);
        }
    }

    TEST_CASE("relation moves keep the canonical fraction") {
        for (int i = 0; i < 100; ++i) {
            auto w = random_strand_word(std::uniform_int_distribution<std::size_t>(1, 4)(rng()), 10);
            auto c = canonicalize(w);
            for (const auto& v : strand_moves(w)) {
                CHECK(v.width == w.width);
                CHECK(canonicalize(v) == c);
            }
        }
    }

    TEST_CASE("canonical word") {
        for (int i = 0; i < 100; ++i) {
            auto w = random_strand_word(2, 12);
            auto c = canonicalize(w);
            GeneratorWord v{w.width, c.word().letters};
            CHECK(canonicalize(v) == c);
        }
    }

    TEST_CASE("composition") {
        for (int i = 0; i < 200; ++i) {
            auto a = random_strand_word(std::uniform_int_distribution<std::size_t>(1, 3)(rng()), 8);
            auto b = random_strand_word(a.end_width(), 8);
            auto ca = canonicalize(a), cb = canonicalize(b);
            CHECK(groupoid_compose(ca, cb) == canonicalize(concat(a, b)));
            CHECK(groupoid_compose(ca, groupoid_inverse(ca)) == GroupoidMorphism::identity(ca.domain()));
            CHECK(groupoid_compose(GroupoidMorphism::identity(ca.domain()), ca) == ca);
            auto c = random_strand_word(b.end_width(), 6);
            auto cc = canonicalize(c);
            CHECK(groupoid_compose(groupoid_compose(ca, cb), cc) == groupoid_compose(ca, groupoid_compose(cb, cc)));
        }
        CHECK_THROWS_AS(groupoid_compose(GroupoidMorphism::identity(1), GroupoidMorphism::identity(2)), StructuralError);
    }

    TEST_CASE("fundamental group") {
        CHECK(fundamental_group_iso(GroupoidMorphism::identity(1)).is_identity());
        for (int i = 0; i < 500; ++i) {
            Element f = random_element(), g = random_element();
            auto mf = fundamental_group_iso_inverse(f), mg = fundamental_group_iso_inverse(g);
            CHECK(fundamental_group_iso(mf) == f);
            CHECK(fundamental_group_iso(groupoid_compose(mf, mg)) == multiply(f, g));
        }
        CHECK_THROWS_AS(fundamental_group_iso(GroupoidMorphism::identity(2)), DomainError);
    }

    TEST_CASE("spanning tree contraction") {
        for (std::size_t w = 1; w <= 8; ++w)
            for (std::size_t n = 0; n < w; ++n) {
                Element expect = n + 1 < w ? eval(parse_word("x" + std::to_string(n))) : Element();
                CHECK(spanning_tree_loop(n, w) == expect);
            }
        for (int i = 0; i < 300; ++i) {
            auto [g, image] = random_loop(14);
            CHECK(fundamental_group_iso(canonicalize(g)) == image);
        }
    }

    TEST_CASE("dot") {
        auto dot = strand_dot(parse_generator_word("1: x0 x1 x1^-1"));
        CHECK(dot.rfind("digraph", 0) == 0);
        CHECK(dot.find("shape=triangle") != std::string::npos);
        CHECK(dot.find("shape=invtriangle") != std::string::npos);
        CHECK(dot.find("out1") != std::string::npos);
        CHECK(dot.find("out2") == std::string::npos);
    }
}
