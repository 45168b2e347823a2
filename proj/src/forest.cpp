#include "thompson/forest.hpp"

#include "thompson/errors.hpp"

#include <algorithm>
#include <cctype>

namespace thompson {

namespace {

BinaryTree slice(const std::string& code, std::size_t from, std::size_t to) {
    return BinaryTree::from_code(code.substr(from, to - from));
}

// Splits a tree with carets at the root and at the root's right child into the trees
// hanging off its left and right stalks. Returns the forest; `pointer` is the index of
// the first tree hanging off the right stalk.
std::vector<BinaryTree> strip_outer_layer(const BinaryTree& t, std::size_t& pointer) {
    const std::string& c = t.code();
    std::vector<BinaryTree> left, right;
    std::size_t pos = 1;
    while (c[pos] == '1') {
        std::size_t e = subtree_end(c, pos + 1);
        left.push_back(slice(c, e, subtree_end(c, e)));
        ++pos;
    }
    pos = subtree_end(c, 1);
    while (c[pos] == '1') {
        std::size_t e = subtree_end(c, pos + 1);
        right.push_back(slice(c, pos + 1, e));
        pos = e;
    }
    std::reverse(left.begin(), left.end());
    pointer = left.size();
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

std::vector<BinaryTree> strip_right_stalk(const BinaryTree& t) {
    const std::string& c = t.code();
    std::vector<BinaryTree> out;
    std::size_t pos = 0;
    while (c[pos] == '1') {
        std::size_t e = subtree_end(c, pos + 1);
        out.push_back(slice(c, pos + 1, e));
        pos = e;
    }
    return out;
}

BinaryTree add_outer_layer(const std::vector<BinaryTree>& forest, std::size_t pointer) {
    BinaryTree left;
    for (std::size_t j = 0; j < pointer; ++j) left = BinaryTree::caret(left, forest[j]);
    BinaryTree right;
    for (std::size_t j = forest.size(); j-- > pointer;) right = BinaryTree::caret(forest[j], right);
    return BinaryTree::caret(left, right);
}

BinaryTree add_right_stalk(const std::vector<BinaryTree>& forest) {
    BinaryTree acc;
    for (std::size_t j = forest.size(); j-- > 0;) acc = BinaryTree::caret(forest[j], acc);
    return acc;
}

void pad_to(std::vector<BinaryTree>& forest, std::size_t leaves) {
    for (std::size_t n = forest_leaves(forest); n < leaves; ++n) forest.emplace_back();
}

void strip_trailing(OneWayForestDiagram& d) {
    while (!d.top.empty() && !d.bottom.empty() && d.top.back().is_leaf() && d.bottom.back().is_leaf()) {
        d.top.pop_back();
        d.bottom.pop_back();
    }
}

std::vector<std::size_t> starts_of(const std::vector<BinaryTree>& forest) {
    std::vector<std::size_t> s;
    s.reserve(forest.size() + 1);
    std::size_t col = 0;
    for (const auto& t : forest) {
        s.push_back(col);
        col += t.leaves();
    }
    s.push_back(col);
    return s;
}

void check_pointer(const std::vector<BinaryTree>& forest, std::size_t p, const char* which) {
    if (p >= forest.size())
        throw StructuralError(std::string(which) + " pointer does not point at a tree");
}

}  // namespace

std::size_t forest_leaves(const std::vector<BinaryTree>& forest) {
    std::size_t n = 0;
    for (const auto& t : forest) n += t.leaves();
    return n;
}

std::size_t TwoWayForestDiagram::leaf_count() const { return forest_leaves(top); }

std::size_t TwoWayForestDiagram::caret_count() const {
    std::size_t n = 0;
    for (const auto& t : top) n += t.carets();
    for (const auto& t : bottom) n += t.carets();
    return n;
}

std::vector<std::size_t> TwoWayForestDiagram::top_starts() const { return starts_of(top); }
std::vector<std::size_t> TwoWayForestDiagram::bottom_starts() const { return starts_of(bottom); }

TwoWayForestDiagram TwoWayForestDiagram::trimmed() const {
    auto ts = top_starts(), bs = bottom_starts();
    std::size_t lo = std::min(ts[top_pointer], bs[bottom_pointer]);
    std::size_t hi = std::max(ts[top_pointer + 1], bs[bottom_pointer + 1]);
    for (std::size_t j = 0; j < top.size(); ++j)
        if (!top[j].is_leaf()) lo = std::min(lo, ts[j]), hi = std::max(hi, ts[j + 1]);
    for (std::size_t j = 0; j < bottom.size(); ++j)
        if (!bottom[j].is_leaf()) lo = std::min(lo, bs[j]), hi = std::max(hi, bs[j + 1]);
    TwoWayForestDiagram out;
    for (std::size_t j = 0; j < top.size(); ++j) {
        if (ts[j] < lo || ts[j + 1] > hi) continue;
        if (j == top_pointer) out.top_pointer = out.top.size();
        out.top.push_back(top[j]);
    }
    for (std::size_t j = 0; j < bottom.size(); ++j) {
        if (bs[j] < lo || bs[j + 1] > hi) continue;
        if (j == bottom_pointer) out.bottom_pointer = out.bottom.size();
        out.bottom.push_back(bottom[j]);
    }
    return out;
}

std::string forest_str(const std::vector<BinaryTree>& forest, long pointer) {
    if (forest.empty()) return ".";
    std::string s;
    for (std::size_t j = 0; j < forest.size(); ++j) {
        if (j) s.push_back(' ');
        if (static_cast<long>(j) == pointer) s.push_back('*');
        s += forest[j].str();
    }
    return s;
}

std::string TwoWayForestDiagram::str() const {
    return forest_str(top, static_cast<long>(top_pointer)) + "\n" +
           forest_str(bottom, static_cast<long>(bottom_pointer));
}

std::string OneWayForestDiagram::str() const { return forest_str(top) + "\n" + forest_str(bottom); }

std::vector<BinaryTree> parse_forest(const std::string& text, long* pointer) {
    std::vector<BinaryTree> out;
    if (pointer) *pointer = -1;
    std::size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    skip();
    while (p < text.size()) {
        if (text[p] == '*') {
            if (!pointer) throw ParseError("pointer '*' not allowed in this forest");
            if (*pointer >= 0) throw ParseError("forest has more than one pointer");
            *pointer = static_cast<long>(out.size());
            ++p;
            skip();
        }
        std::size_t start = p;
        if (p < text.size() && text[p] == '.') {
            ++p;
        } else if (p < text.size() && text[p] == '(') {
            int depth = 0;
            for (; p < text.size(); ++p) {
                if (text[p] == '(') ++depth;
                if (text[p] == ')' && --depth == 0) {
                    ++p;
                    break;
                }
            }
            if (depth != 0) throw ParseError("unbalanced parentheses in forest \"" + text + "\"");
        } else {
            throw ParseError("unexpected character in forest \"" + text + "\"");
        }
        out.push_back(BinaryTree::parse(std::string_view(text).substr(start, p - start)));
        skip();
    }
    if (out.empty()) throw ParseError("empty forest");
    return out;
}

namespace {

std::pair<std::string, std::string> split_two(const std::string& text) {
    auto sep = text.find('\n');
    if (sep == std::string::npos) sep = text.find('|');
    if (sep == std::string::npos) throw ParseError("forest diagram needs two forests separated by a newline or '|'");
    return {text.substr(0, sep), text.substr(sep + 1)};
}

}  // namespace

TwoWayForestDiagram parse_two_way(const std::string& text) {
    auto [a, b] = split_two(text);
    long tp = -1, bp = -1;
    TwoWayForestDiagram d;
    d.top = parse_forest(a, &tp);
    d.bottom = parse_forest(b, &bp);
    if (tp < 0 || bp < 0) throw ParseError("each forest of a two-way diagram needs a '*' pointer");
    d.top_pointer = static_cast<std::size_t>(tp);
    d.bottom_pointer = static_cast<std::size_t>(bp);
    if (d.leaf_count() != forest_leaves(d.bottom))
        throw StructuralError("top and bottom forests have different leaf counts");
    return d;
}

OneWayForestDiagram parse_one_way(const std::string& text) {
    auto [a, b] = split_two(text);
    OneWayForestDiagram d{parse_forest(a, nullptr), parse_forest(b, nullptr)};
    std::size_t n = std::max(forest_leaves(d.top), forest_leaves(d.bottom));
    pad_to(d.top, n);
    pad_to(d.bottom, n);
    strip_trailing(d);
    return d;
}

TwoWayForestDiagram to_two_way(const Element& f) {
    TreeDiagram d = f.diagram();
    // The pointed tree hangs off the root's right child; make sure that child is a caret.
    while (d.top.is_leaf() || d.top.right().is_leaf() || d.bottom.right().is_leaf())
        d = expand_at(d, d.top.leaves() - 1);
    TwoWayForestDiagram out;
    out.top = strip_outer_layer(d.top, out.top_pointer);
    out.bottom = strip_outer_layer(d.bottom, out.bottom_pointer);
    return out.trimmed();
}

Element from_two_way(const TwoWayForestDiagram& d) {
    check_pointer(d.top, d.top_pointer, "top");
    check_pointer(d.bottom, d.bottom_pointer, "bottom");
    if (d.leaf_count() != forest_leaves(d.bottom))
        throw StructuralError("top and bottom forests have different leaf counts");
    return Element(add_outer_layer(d.top, d.top_pointer), add_outer_layer(d.bottom, d.bottom_pointer));
}

OneWayForestDiagram to_one_way(const Element& f) {
    OneWayForestDiagram d{strip_right_stalk(f.top()), strip_right_stalk(f.bottom())};
    strip_trailing(d);
    return d;
}

Element from_one_way(const OneWayForestDiagram& d) {
    std::vector<BinaryTree> top = d.top, bottom = d.bottom;
    std::size_t n = std::max(forest_leaves(top), forest_leaves(bottom));
    pad_to(top, n);
    pad_to(bottom, n);
    return Element(add_right_stalk(top), add_right_stalk(bottom));
}

TwoWayForestDiagram one_way_to_two_way(const OneWayForestDiagram& d) {
    std::vector<BinaryTree> top = d.top, bottom = d.bottom;
    std::size_t n = std::max(forest_leaves(top), forest_leaves(bottom));
    pad_to(top, n);
    pad_to(bottom, n);
    while (top.size() < 2 || bottom.size() < 2) {
        top.emplace_back();
        bottom.emplace_back();
    }
    auto convert = [](const std::vector<BinaryTree>& forest, std::size_t& pointer) {
        // One-way tree 0 loses its left stalk; one-way tree 1 becomes the pointed tree.
        const std::string& c = forest[0].code();
        std::vector<BinaryTree> out;
        std::size_t pos = 0;
        while (c[pos] == '1') {
            std::size_t e = subtree_end(c, pos + 1);
            out.push_back(slice(c, e, subtree_end(c, e)));
            ++pos;
        }
        std::reverse(out.begin(), out.end());
        pointer = out.size();
        out.insert(out.end(), forest.begin() + 1, forest.end());
        return out;
    };
    TwoWayForestDiagram out;
    out.top = convert(top, out.top_pointer);
    out.bottom = convert(bottom, out.bottom_pointer);
    return out.trimmed();
}

OneWayForestDiagram two_way_to_one_way(const TwoWayForestDiagram& d) {
    check_pointer(d.top, d.top_pointer, "top");
    check_pointer(d.bottom, d.bottom_pointer, "bottom");
    auto convert = [](const std::vector<BinaryTree>& forest, std::size_t pointer) {
        BinaryTree first;
        for (std::size_t j = 0; j < pointer; ++j) first = BinaryTree::caret(first, forest[j]);
        std::vector<BinaryTree> out{first};
        out.insert(out.end(), forest.begin() + static_cast<long>(pointer), forest.end());
        return out;
    };
    OneWayForestDiagram out{convert(d.top, d.top_pointer), convert(d.bottom, d.bottom_pointer)};
    strip_trailing(out);
    return out;
}

}  // namespace thompson
