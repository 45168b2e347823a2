#pragma once

#include "thompson/element.hpp"
#include "thompson/tree.hpp"
#include "thompson/words.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace thompson {

// Morphism i -> j in the category of binary forests: i trees with j leaves in total.
struct ForestMorphism {
    std::vector<BinaryTree> trees;

    std::size_t domain() const { return trees.size(); }
    std::size_t codomain() const;
    bool is_identity() const;
    bool operator==(const ForestMorphism&) const = default;
    std::string str() const;

    static ForestMorphism identity(std::size_t width);
    // x_n^(w): w trees, tree n a single caret. Needs n < w.
    static ForestMorphism generator(std::size_t n, std::size_t width);
};

// f first, then g: the trees of g hang from the leaves of f.
ForestMorphism forest_compose(const ForestMorphism& f, const ForestMorphism& g);
// Positive word read left to right from the given width.
ForestMorphism forest_from_word(std::size_t width, const Word& w);
// x0^a0 x1^a1 ... with a_n the carets whose leftmost leaf is n.
Word forest_normal_form(const ForestMorphism& f);
// Least (a, b) with forest_compose(f, a) == forest_compose(g, b), tree by tree.
std::pair<ForestMorphism, ForestMorphism> forest_lcm(const ForestMorphism& f, const ForestMorphism& g);

// Fraction p q^-1 : i -> j with p : i -> w and q : j -> w.
struct GroupoidMorphism {
    ForestMorphism p;
    ForestMorphism q;

    std::size_t domain() const { return p.domain(); }
    std::size_t codomain() const { return q.domain(); }
    bool is_reduced() const;
    bool operator==(const GroupoidMorphism&) const = default;
    std::string str() const;  // "p | q"
    // forest_normal_form(p) followed by the inverse of forest_normal_form(q).
    Word word() const;

    static GroupoidMorphism identity(std::size_t width);
};

GroupoidMorphism groupoid_inverse(const GroupoidMorphism& m);

// Leaf positions i where leaves i, i+1 hang from one caret in both p and q.
std::vector<std::size_t> opposing_pairs(const GroupoidMorphism& m);
GroupoidMorphism cancel_pair(const GroupoidMorphism& m, std::size_t leaf);
GroupoidMorphism reduce(const GroupoidMorphism& m);
// Reduction with cancellations picked in random order (for confluence tests).
GroupoidMorphism reduce_shuffled(const GroupoidMorphism& m, std::mt19937_64& rng);

// Signed generators x_n^(w) with their widths: x_n is a split w -> w+1, x_n^-1 a merge w+1 -> w.
struct GeneratorWord {
    std::size_t width = 1;  // starting width
    std::vector<Letter> letters;

    // Widths before each letter plus the final width; throws StructuralError if a letter does not fit.
    std::vector<std::size_t> widths() const;
    std::size_t end_width() const { return widths().back(); }
    std::string str() const;
};

// "[w:] word", e.g. "2: x0 x1^-1"; the width defaults to `default_width`.
GeneratorWord parse_generator_word(const std::string& text, std::size_t default_width = 1);

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b);

// Reduced fraction of a strand word.
GroupoidMorphism canonicalize(const GeneratorWord& w);
// Relation and reduction moves that keep every width valid.
std::vector<GeneratorWord> strand_moves(const GeneratorWord& w);

GroupoidMorphism groupoid_compose(const GroupoidMorphism& m1, const GroupoidMorphism& m2);

// A reduced 1 -> 1 fraction is a reduced tree diagram (top p, bottom q).
Element fundamental_group_iso(const GroupoidMorphism& m);
GroupoidMorphism fundamental_group_iso_inverse(const Element& f);
// x_n^(w) closed into a loop at width 1 with the spanning tree x_0^(1), x_1^(2), ...
Element spanning_tree_loop(std::size_t n, std::size_t width);

// DOT digraph: split nodes are triangles, merge nodes inverted triangles.
std::string strand_dot(const GeneratorWord& w);

}  // namespace thompson
