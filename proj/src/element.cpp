#include "thompson/element.hpp"

#include "thompson/errors.hpp"

#include <functional>

namespace thompson {

namespace {

// Leaf indices i such that leaves i, i+1 form an exposed caret.
std::vector<bool> exposed_carets(const std::string& code, std::size_t leaves) {
    std::vector<bool> ex(leaves, false);
    std::size_t leaf = 0;
    for (std::size_t p = 0; p < code.size(); ++p) {
        if (code[p] != '0') continue;
        if (p > 0 && code[p - 1] == '1' && p + 1 < code.size() && code[p + 1] == '0') ex[leaf] = true;
        ++leaf;
    }
    return ex;
}

std::vector<std::size_t> leaf_positions(const std::string& code) {
    std::vector<std::size_t> pos;
    for (std::size_t p = 0; p < code.size(); ++p)
        if (code[p] == '0') pos.push_back(p);
    return pos;
}

}  // namespace

bool TreeDiagram::is_reduced() const {
    std::size_t n = top.leaves();
    if (bottom.leaves() != n) return false;
    auto a = exposed_carets(top.code(), n);
    auto b = exposed_carets(bottom.code(), n);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

std::string TreeDiagram::str() const { return top.str() + " | " + bottom.str(); }

TreeDiagram reduce(const TreeDiagram& d) {
    std::size_t n = d.top.leaves();
    if (d.bottom.leaves() != n)
        throw StructuralError("tree diagram has " + std::to_string(n) + " top leaves but " +
                              std::to_string(d.bottom.leaves()) + " bottom leaves");
    std::string t = d.top.code(), b = d.bottom.code();
    while (true) {
        auto et = exposed_carets(t, n);
        auto eb = exposed_carets(b, n);
        auto pt = leaf_positions(t);
        auto pb = leaf_positions(b);
        bool any = false;
        // Opposing pairs never overlap, so cancel all of them right to left in one sweep.
        for (std::size_t i = n; i-- > 0;) {
            if (et[i] && eb[i]) {
                t.replace(pt[i] - 1, 3, "0");
                b.replace(pb[i] - 1, 3, "0");
                --n;
                any = true;
            }
        }
        if (!any) break;
    }
    return TreeDiagram{BinaryTree::from_code(std::move(t)), BinaryTree::from_code(std::move(b))};
}

TreeDiagram expand_at(const TreeDiagram& d, std::size_t i) {
    return TreeDiagram{d.top.attach_caret_at(i), d.bottom.attach_caret_at(i)};
}

Element Element::generator(unsigned n, int sign) {
    BinaryTree top = BinaryTree::right_vine(n + 2).attach_caret_at(n);
    BinaryTree bottom = BinaryTree::right_vine(n + 3);
    if (sign < 0) std::swap(top, bottom);
    return Element(top, bottom);
}

std::string Element::key() const {
    const std::string& a = d_.top.code();
    const std::string& b = d_.bottom.code();
    std::size_t bits = a.size() + b.size();
    std::string out((bits + 7) / 8, '\0');
    std::size_t k = 0;
    auto put = [&](char c) {
        if (c == '1') out[k >> 3] = static_cast<char>(out[k >> 3] | (0x80 >> (k & 7)));
        ++k;
    };
    for (char c : a) put(c);
    for (char c : b) put(c);
    return out;
}

Element Element::from_key(const std::string& key) {
    std::size_t k = 0;
    std::size_t total = key.size() * 8;
    auto take = [&]() {
        std::string code;
        long need = 1;
        while (need > 0) {
            if (k >= total) throw StructuralError("truncated element key");
            bool one = (static_cast<unsigned char>(key[k >> 3]) >> (7 - (k & 7))) & 1;
            ++k;
            code.push_back(one ? '1' : '0');
            need += one ? 1 : -1;
        }
        return BinaryTree::from_code(std::move(code));
    };
    BinaryTree top = take();
    BinaryTree bottom = take();
    return Element(TreeDiagram{std::move(top), std::move(bottom)}, Trusted{});
}

std::size_t Element::hash() const {
    std::size_t h = std::hash<std::string>()(d_.top.code());
    return h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::string>()(d_.bottom.code());
}

Element multiply(const Element& f, const Element& g) {
    BinaryTree middle = tree_lcm(f.bottom(), g.top());
    BinaryTree top = f.top().substitute_leaves(f.bottom().hanging_subtrees(middle));
    BinaryTree bottom = g.bottom().substitute_leaves(g.top().hanging_subtrees(middle));
    return Element(top, bottom);
}

Element invert(const Element& f) { return Element(f.bottom(), f.top()); }

Element power(const Element& f, long n) {
    Element base = n < 0 ? invert(f) : f;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Element acc;
    while (e) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

TreeDiagram parse_tree_diagram(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) bar = text.find('\n');
    if (bar == std::string::npos) throw ParseError("tree diagram needs 'top | bottom'");
    TreeDiagram d{BinaryTree::parse(text.substr(0, bar)), BinaryTree::parse(text.substr(bar + 1))};
    if (d.top.leaves() != d.bottom.leaves())
        throw StructuralError("tree diagram has mismatched leaf counts");
    return d;
}

}  // namespace thompson
