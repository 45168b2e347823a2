#include "thompson/tree.hpp"

#include "thompson/errors.hpp"

#include <algorithm>
#include <cctype>

namespace thompson {

namespace {

std::size_t leaf_position(const std::string& code, std::size_t i) {
    std::size_t seen = 0;
    for (std::size_t p = 0; p < code.size(); ++p) {
        if (code[p] == '0') {
            if (seen == i) return p;
            ++seen;
        }
    }
    throw DomainError("leaf index " + std::to_string(i) + " out of range");
}

std::size_t lcm_rec(const std::string& a, std::size_t& i, const std::string& b, std::size_t& j,
                    std::string& out) {
    if (a[i] == '0') {
        std::size_t e = subtree_end(b, j);
        out.append(b, j, e - j);
        ++i;
        j = e;
        return 0;
    }
    if (b[j] == '0') {
        std::size_t e = subtree_end(a, i);
        out.append(a, i, e - i);
        i = e;
        ++j;
        return 0;
    }
    out.push_back('1');
    ++i;
    ++j;
    lcm_rec(a, i, b, j, out);
    lcm_rec(a, i, b, j, out);
    return 0;
}

void print_rec(const std::string& code, std::size_t& p, std::string& out) {
    if (code[p++] == '0') {
        out.push_back('.');
        return;
    }
    out.push_back('(');
    print_rec(code, p, out);
    out.push_back(',');
    print_rec(code, p, out);
    out.push_back(')');
}

struct TreeParser {
    std::string_view s;
    std::size_t p = 0;

    void skip() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    void expect(char c) {
        skip();
        if (p >= s.size() || s[p] != c)
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(p) +
                             " in tree \"" + std::string(s) + "\"");
        ++p;
    }
    void tree(std::string& out) {
        skip();
        if (p >= s.size()) throw ParseError("unexpected end of tree \"" + std::string(s) + "\"");
        if (s[p] == '.') {
            ++p;
            out.push_back('0');
            return;
        }
        expect('(');
        out.push_back('1');
        tree(out);
        expect(',');
        tree(out);
        expect(')');
    }
};

}  // namespace

std::size_t subtree_end(std::string_view code, std::size_t pos) {
    long need = 1;
    while (need > 0) {
        if (pos >= code.size()) throw StructuralError("truncated tree code");
        need += code[pos++] == '1' ? 1 : -1;
    }
    return pos;
}

BinaryTree BinaryTree::caret(const BinaryTree& l, const BinaryTree& r) {
    std::string c;
    c.reserve(l.code_.size() + r.code_.size() + 1);
    c.push_back('1');
    c += l.code_;
    c += r.code_;
    return BinaryTree(std::move(c));
}

BinaryTree BinaryTree::from_code(std::string code) {
    if (code.empty() || code.find_first_not_of("01") != std::string::npos ||
        subtree_end(code, 0) != code.size())
        throw StructuralError("invalid tree code \"" + code + "\"");
    return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::right_vine(std::size_t leaves) {
    if (leaves == 0) throw DomainError("a tree has at least one leaf");
    std::string c;
    for (std::size_t i = 1; i < leaves; ++i) c += "10";
    c.push_back('0');
    return BinaryTree(std::move(c));
}

BinaryTree BinaryTree::left_vine(std::size_t leaves) {
    if (leaves == 0) throw DomainError("a tree has at least one leaf");
    return BinaryTree(std::string(leaves - 1, '1') + std::string(leaves, '0'));
}

BinaryTree BinaryTree::parse(std::string_view text) {
    TreeParser tp{text};
    std::string code;
    tp.tree(code);
    tp.skip();
    if (tp.p != text.size()) throw ParseError("trailing characters in tree \"" + std::string(text) + "\"");
    return BinaryTree(std::move(code));
}

std::size_t BinaryTree::height() const {
    std::size_t h = 0;
    for (int d : leaf_depths()) h = std::max<std::size_t>(h, static_cast<std::size_t>(d));
    return h;
}

BinaryTree BinaryTree::left() const {
    if (is_leaf()) throw DomainError("leaf has no children");
    return BinaryTree(code_.substr(1, subtree_end(code_, 1) - 1));
}

BinaryTree BinaryTree::right() const {
    if (is_leaf()) throw DomainError("leaf has no children");
    return BinaryTree(code_.substr(subtree_end(code_, 1)));
}

std::vector<int> BinaryTree::leaf_depths() const {
    std::vector<int> depths;
    depths.reserve(leaves());
    std::vector<int> pending;
    int d = 0;
    for (char c : code_) {
        if (c == '1') {
            pending.push_back(d + 1);
            ++d;
        } else {
            depths.push_back(d);
            if (!pending.empty()) {
                d = pending.back();
                pending.pop_back();
            }
        }
    }
    return depths;
}

bool BinaryTree::has_exposed_caret_at(std::size_t i) const {
    if (i + 1 >= leaves()) return false;
    std::size_t p = leaf_position(code_, i);
    return p > 0 && code_[p - 1] == '1' && code_[p + 1] == '0';
}

BinaryTree BinaryTree::remove_exposed_caret_at(std::size_t i) const {
    if (!has_exposed_caret_at(i)) throw DomainError("no exposed caret at leaf " + std::to_string(i));
    std::size_t p = leaf_position(code_, i);
    std::string c = code_;
    c.replace(p - 1, 3, "0");
    return BinaryTree(std::move(c));
}

BinaryTree BinaryTree::attach_caret_at(std::size_t i) const {
    std::size_t p = leaf_position(code_, i);
    std::string c = code_;
    c.replace(p, 1, "100");
    return BinaryTree(std::move(c));
}

BinaryTree BinaryTree::substitute_leaves(const std::vector<BinaryTree>& subs) const {
    if (subs.size() != leaves()) throw StructuralError("substitution size does not match leaf count");
    std::string c;
    std::size_t k = 0;
    for (char ch : code_) {
        if (ch == '1')
            c.push_back('1');
        else
            c += subs[k++].code_;
    }
    return BinaryTree(std::move(c));
}

std::vector<BinaryTree> BinaryTree::hanging_subtrees(const BinaryTree& bigger) const {
    std::vector<BinaryTree> out;
    out.reserve(leaves());
    const std::string& b = bigger.code_;
    std::size_t j = 0;
    for (char ch : code_) {
        if (j >= b.size()) throw DomainError("tree is not a rooted subtree of the given tree");
        if (ch == '1') {
            if (b[j] != '1') throw DomainError("tree is not a rooted subtree of the given tree");
            ++j;
        } else {
            std::size_t e = subtree_end(b, j);
            out.push_back(BinaryTree(b.substr(j, e - j)));
            j = e;
        }
    }
    return out;
}

std::vector<int> BinaryTree::carets_above_leaves() const {
    std::vector<int> counts(leaves(), 0);
    std::size_t leaf = 0;
    for (char ch : code_) {
        if (ch == '1')
            ++counts[leaf];
        else
            ++leaf;
    }
    return counts;
}

std::vector<bool> BinaryTree::left_child_leaves() const {
    std::vector<bool> out;
    out.reserve(leaves());
    for (std::size_t p = 0; p < code_.size(); ++p)
        if (code_[p] == '0') out.push_back(p > 0 && code_[p - 1] == '1');
    return out;
}

std::string BinaryTree::str() const {
    std::string out;
    std::size_t p = 0;
    print_rec(code_, p, out);
    return out;
}

BinaryTree tree_lcm(const BinaryTree& a, const BinaryTree& b) {
    std::string out;
    std::size_t i = 0, j = 0;
    lcm_rec(a.code(), i, b.code(), j, out);
    return BinaryTree::from_code(std::move(out));
}

}  // namespace thompson
