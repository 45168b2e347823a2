#include "thompson/strand.hpp"

#include "thompson/errors.hpp"
#include "thompson/forest.hpp"

#include <algorithm>
#include <cctype>

namespace thompson {

std::size_t ForestMorphism::codomain() const { return forest_leaves(trees); }

bool ForestMorphism::is_identity() const {
    return std::all_of(trees.begin(), trees.end(), [](const BinaryTree& t) { return t.is_leaf(); });
}

std::string ForestMorphism::str() const { return forest_str(trees); }

ForestMorphism ForestMorphism::identity(std::size_t width) {
    if (width == 0) throw DomainError("forest width must be positive");
    return {std::vector<BinaryTree>(width)};
}

ForestMorphism ForestMorphism::generator(std::size_t n, std::size_t width) {
    if (n >= width) throw StructuralError("x" + std::to_string(n) + " needs width > " + std::to_string(n));
    ForestMorphism f = identity(width);
    f.trees[n] = BinaryTree::caret(BinaryTree(), BinaryTree());
    return f;
}

ForestMorphism forest_compose(const ForestMorphism& f, const ForestMorphism& g) {
    if (f.codomain() != g.domain())
        throw StructuralError("cannot compose forests: codomain " + std::to_string(f.codomain()) + " vs domain " +
                              std::to_string(g.domain()));
    ForestMorphism out;
    std::size_t next = 0;
    for (const auto& t : f.trees) {
        std::vector<BinaryTree> subs(g.trees.begin() + static_cast<long>(next),
                                     g.trees.begin() + static_cast<long>(next + t.leaves()));
        next += t.leaves();
        out.trees.push_back(t.substitute_leaves(subs));
    }
    return out;
}

ForestMorphism forest_from_word(std::size_t width, const Word& w) {
    ForestMorphism f = ForestMorphism::identity(width);
    for (const auto& l : w.letters) {
        if (l.sign < 0) throw DomainError("forest words are positive");
        f = forest_compose(f, ForestMorphism::generator(l.index, f.codomain()));
    }
    return f;
}

Word forest_normal_form(const ForestMorphism& f) {
    Word w;
    std::size_t leaf = 0;
    for (const auto& t : f.trees) {
        auto counts = t.carets_above_leaves();
        for (std::size_t i = 0; i < counts.size(); ++i)
            for (int c = 0; c < counts[i]; ++c) w.letters.push_back({static_cast<unsigned>(leaf + i), 1});
        leaf += counts.size();
    }
    return w;
}

std::pair<ForestMorphism, ForestMorphism> forest_lcm(const ForestMorphism& f, const ForestMorphism& g) {
    if (f.domain() != g.domain()) throw StructuralError("forest lcm needs equal domains");
    ForestMorphism a, b;
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        BinaryTree m = tree_lcm(f.trees[i], g.trees[i]);
        for (auto& t : f.trees[i].hanging_subtrees(m)) a.trees.push_back(std::move(t));
        for (auto& t : g.trees[i].hanging_subtrees(m)) b.trees.push_back(std::move(t));
    }
    return {a, b};
}

GroupoidMorphism GroupoidMorphism::identity(std::size_t width) {
    return {ForestMorphism::identity(width), ForestMorphism::identity(width)};
}

std::string GroupoidMorphism::str() const { return p.str() + " | " + q.str(); }

Word GroupoidMorphism::word() const { return concat(forest_normal_form(p), inverse(forest_normal_form(q))); }

GroupoidMorphism groupoid_inverse(const GroupoidMorphism& m) { return {m.q, m.p}; }

namespace {

// Leaf i such that leaves i, i+1 are the two children of one caret, over the whole forest.
std::vector<bool> exposed_pairs(const ForestMorphism& f) {
    std::vector<bool> out;
    for (const auto& t : f.trees) {
        for (std::size_t i = 0; i < t.leaves(); ++i) out.push_back(i + 1 < t.leaves() && t.has_exposed_caret_at(i));
    }
    return out;
}

ForestMorphism remove_pair(const ForestMorphism& f, std::size_t leaf) {
    ForestMorphism out = f;
    std::size_t start = 0;
    for (auto& t : out.trees) {
        if (leaf < start + t.leaves()) {
            t = t.remove_exposed_caret_at(leaf - start);
            return out;
        }
        start += t.leaves();
    }
    throw StructuralError("leaf index out of range");
}

}  // namespace

std::vector<std::size_t> opposing_pairs(const GroupoidMorphism& m) {
    auto a = exposed_pairs(m.p), b = exposed_pairs(m.q);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] && b[i]) out.push_back(i);
    return out;
}

bool GroupoidMorphism::is_reduced() const { return opposing_pairs(*this).empty(); }

GroupoidMorphism cancel_pair(const GroupoidMorphism& m, std::size_t leaf) {
    return {remove_pair(m.p, leaf), remove_pair(m.q, leaf)};
}

GroupoidMorphism reduce(const GroupoidMorphism& m) {
    if (m.p.codomain() != m.q.codomain()) throw StructuralError("fraction forests have different leaf counts");
    GroupoidMorphism r = m;
    for (auto pairs = opposing_pairs(r); !pairs.empty(); pairs = opposing_pairs(r)) r = cancel_pair(r, pairs.back());
    return r;
}

GroupoidMorphism reduce_shuffled(const GroupoidMorphism& m, std::mt19937_64& rng) {
    GroupoidMorphism r = m;
    for (auto pairs = opposing_pairs(r); !pairs.empty(); pairs = opposing_pairs(r)) {
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        r = cancel_pair(r, pairs[pick(rng)]);
    }
    return r;
}

std::vector<std::size_t> GeneratorWord::widths() const {
    if (width == 0) throw StructuralError("strand word width must be positive");
    std::vector<std::size_t> out{width};
    std::size_t w = width;
    for (const auto& l : letters) {
        if (l.sign > 0) {
            if (l.index >= w) throw StructuralError("x" + std::to_string(l.index) + " does not fit width " + std::to_string(w));
            ++w;
        } else {
            if (w < 2 || l.index + 1 >= w)
                throw StructuralError("x" + std::to_string(l.index) + "^-1 does not fit width " + std::to_string(w));
            --w;
        }
        out.push_back(w);
    }
    return out;
}

std::string GeneratorWord::str() const {
    Word w{letters, Word::Alphabet::Infinite};
    return std::to_string(width) + ": " + w.str();
}

GeneratorWord parse_generator_word(const std::string& text, std::size_t default_width) {
    GeneratorWord g;
    g.width = default_width;
    std::string body = text;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }), head.end());
        if (head.empty() || !std::all_of(head.begin(), head.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            head.size() > 6)
            throw ParseError("strand word width must be a positive integer: \"" + text + "\"");
        g.width = std::stoul(head);
        body = text.substr(colon + 1);
    }
    g.letters = parse_word(body).letters;
    g.widths();
    return g;
}

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b) {
    if (a.end_width() != b.width) throw StructuralError("strand words do not chain: widths differ");
    GeneratorWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

namespace {

// (p q^-1) followed by one generator of the current codomain width.
GroupoidMorphism step(const GroupoidMorphism& m, const Letter& l) {
    std::size_t w = m.codomain();
    if (l.sign > 0) {
        auto [a, b] = forest_lcm(m.q, ForestMorphism::generator(l.index, w));
        return {forest_compose(m.p, a), b};
    }
    return {m.p, forest_compose(ForestMorphism::generator(l.index, w - 1), m.q)};
}

}  // namespace

GroupoidMorphism canonicalize(const GeneratorWord& w) {
    w.widths();
    GroupoidMorphism m = GroupoidMorphism::identity(w.width);
    for (const auto& l : w.letters) m = reduce(step(m, l));
    return m;
}

std::vector<GeneratorWord> strand_moves(const GeneratorWord& w) {
    std::vector<GeneratorWord> out;
    for (auto& mv : rewrite_moves(Word{w.letters, Word::Alphabet::Infinite})) {
        GeneratorWord cand{w.width, mv.result.letters};
        try {
            cand.widths();
        } catch (const StructuralError&) {
            continue;
        }
        out.push_back(std::move(cand));
    }
    return out;
}

GroupoidMorphism groupoid_compose(const GroupoidMorphism& m1, const GroupoidMorphism& m2) {
    if (m1.codomain() != m2.domain()) throw StructuralError("groupoid morphisms do not chain");
    auto [a, b] = forest_lcm(m1.q, m2.p);
    return reduce(GroupoidMorphism{forest_compose(m1.p, a), forest_compose(m2.q, b)});
}

Element fundamental_group_iso(const GroupoidMorphism& m) {
    if (m.domain() != 1 || m.codomain() != 1) throw DomainError("fundamental group morphisms go from 1 to 1");
    return Element(m.p.trees[0], m.q.trees[0]);
}

GroupoidMorphism fundamental_group_iso_inverse(const Element& f) {
    return {ForestMorphism{{f.top()}}, ForestMorphism{{f.bottom()}}};
}

Element spanning_tree_loop(std::size_t n, std::size_t width) {
    if (n >= width) throw StructuralError("x" + std::to_string(n) + " needs width > " + std::to_string(n));
    GroupoidMorphism into{ForestMorphism{{BinaryTree::right_vine(width)}}, ForestMorphism::identity(width)};
    GroupoidMorphism gen{ForestMorphism::generator(n, width), ForestMorphism::identity(width + 1)};
    GroupoidMorphism back{ForestMorphism::identity(width + 1), ForestMorphism{{BinaryTree::right_vine(width + 1)}}};
    return fundamental_group_iso(groupoid_compose(groupoid_compose(into, gen), back));
}

std::string strand_dot(const GeneratorWord& w) {
    w.widths();
    std::string s = "digraph strands {\n  rankdir=TB;\n";
    std::vector<std::string> ends;
    for (std::size_t i = 0; i < w.width; ++i) {
        ends.push_back("in" + std::to_string(i));
        s += "  " + ends.back() + " [shape=point];\n";
    }
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        const Letter& l = w.letters[k];
        std::string node = (l.sign > 0 ? "split" : "merge") + std::to_string(k);
        s += "  " + node + " [shape=" + (l.sign > 0 ? "triangle" : "invtriangle") + ", label=\"x" +
             std::to_string(l.index) + (l.sign > 0 ? "" : "^-1") + "\"];\n";
        if (l.sign > 0) {
            s += "  " + ends[l.index] + " -> " + node + ";\n";
            ends[l.index] = node;
            ends.insert(ends.begin() + l.index + 1, node);
        } else {
            s += "  " + ends[l.index] + " -> " + node + ";\n";
            s += "  " + ends[l.index + 1] + " -> " + node + ";\n";
            ends[l.index] = node;
            ends.erase(ends.begin() + l.index + 1);
        }
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
        s += "  out" + std::to_string(i) + " [shape=point];\n";
        s += "  " + ends[i] + " -> out" + std::to_string(i) + ";\n";
    }
    s += "}\n";
    return s;
}

}  // namespace thompson
