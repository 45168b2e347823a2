#pragma once

#include "thompson/tree.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace thompson {

// top is the domain tree, bottom the range tree.
struct TreeDiagram {
    BinaryTree top;
    BinaryTree bottom;

    bool operator==(const TreeDiagram&) const = default;
    bool is_reduced() const;
    std::string str() const;  // "top | bottom"
};

TreeDiagram reduce(const TreeDiagram& d);

// Adds a caret under leaf i of both trees (the inverse of cancelling an opposing pair).
TreeDiagram expand_at(const TreeDiagram& d, std::size_t i);

// An element of F held as its reduced tree diagram. Equality and hashing are structural.
class Element {
public:
    Element() = default;  // identity
    explicit Element(const TreeDiagram& d) : d_(reduce(d)) {}
    Element(const BinaryTree& top, const BinaryTree& bottom) : Element(TreeDiagram{top, bottom}) {}

    static Element identity() { return Element(); }
    // x_n and its inverse, built directly from the diagram: top is a right vine with a
    // caret hung on leaf n, bottom the right vine with n+3 leaves.
    static Element generator(unsigned n, int sign = 1);

    const TreeDiagram& diagram() const { return d_; }
    const BinaryTree& top() const { return d_.top; }
    const BinaryTree& bottom() const { return d_.bottom; }
    bool is_identity() const { return d_.top.is_leaf(); }
    std::size_t caret_count() const { return d_.top.carets(); }

    // Compact byte key: preorder bits of top then bottom.
    std::string key() const;
    static Element from_key(const std::string& key);

    bool operator==(const Element& o) const { return d_ == o.d_; }
    bool operator!=(const Element& o) const { return !(d_ == o.d_); }

    std::size_t hash() const;

private:
    struct Trusted {};
    Element(TreeDiagram d, Trusted) : d_(std::move(d)) {}

    TreeDiagram d_{};
};

struct ElementHash {
    std::size_t operator()(const Element& e) const { return e.hash(); }
};

// Convention: fg means f first, then g, so multiply(f, g)(t) = g(f(t)).
Element multiply(const Element& f, const Element& g);
Element invert(const Element& f);
Element power(const Element& f, long n);

TreeDiagram parse_tree_diagram(const std::string& text);

}  // namespace thompson
