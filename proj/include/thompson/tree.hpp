#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// Finite binary tree stored as its preorder code: '1' for a caret, '0' for a leaf.
// The i-th '0' in the code is the i-th leaf from the left.
class BinaryTree {
public:
    BinaryTree() : code_("0") {}

    static BinaryTree leaf() { return BinaryTree(); }
    static BinaryTree caret(const BinaryTree& l, const BinaryTree& r);
    static BinaryTree from_code(std::string code);  // validates
    static BinaryTree right_vine(std::size_t leaves);
    static BinaryTree left_vine(std::size_t leaves);
    static BinaryTree parse(std::string_view text);

    const std::string& code() const { return code_; }
    bool is_leaf() const { return code_.size() == 1; }
    std::size_t leaves() const { return (code_.size() + 1) / 2; }
    std::size_t carets() const { return code_.size() / 2; }
    std::size_t width() const { return carets(); }
    std::size_t height() const;

    BinaryTree left() const;
    BinaryTree right() const;

    // Depth of each leaf, left to right.
    std::vector<int> leaf_depths() const;

    // Leaves i and i+1 are the two children of one caret.
    bool has_exposed_caret_at(std::size_t i) const;
    BinaryTree remove_exposed_caret_at(std::size_t i) const;
    BinaryTree attach_caret_at(std::size_t i) const;

    // Replace leaf i by subs[i]; subs.size() must equal leaves().
    BinaryTree substitute_leaves(const std::vector<BinaryTree>& subs) const;

    // For a tree `bigger` containing this one as a rooted subtree, the subtree of
    // `bigger` hanging below each leaf of this tree.
    std::vector<BinaryTree> hanging_subtrees(const BinaryTree& bigger) const;

    // Number of carets whose leftmost leaf is leaf i, for each i.
    std::vector<int> carets_above_leaves() const;

    // Leaf i is the left child of its parent caret.
    std::vector<bool> left_child_leaves() const;

    std::string str() const;

    bool operator==(const BinaryTree& o) const { return code_ == o.code_; }
    bool operator<(const BinaryTree& o) const { return code_ < o.code_; }

private:
    explicit BinaryTree(std::string code) : code_(std::move(code)) {}
    std::string code_;
};

// Smallest tree containing both as rooted subtrees.
BinaryTree tree_lcm(const BinaryTree& a, const BinaryTree& b);

// Index one past the subtree whose code starts at `pos`.
std::size_t subtree_end(std::string_view code, std::size_t pos);

struct BinaryTreeHash {
    std::size_t operator()(const BinaryTree& t) const { return std::hash<std::string>()(t.code()); }
};

}  // namespace thompson
