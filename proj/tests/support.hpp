#pragma once

#include "thompson/element.hpp"
#include "thompson/tree.hpp"
#include "thompson/words.hpp"

#include <random>

namespace testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20240607);
    return r;
}

inline thompson::Element random_element(std::size_t max_len = 20) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return thompson::eval(thompson::random_x0x1_word(rng(), len(rng())));
}

inline thompson::BinaryTree random_tree(std::size_t carets) {
    if (carets == 0) return thompson::BinaryTree();
    std::uniform_int_distribution<std::size_t> split(0, carets - 1);
    std::size_t l = split(rng());
    return thompson::BinaryTree::caret(random_tree(l), random_tree(carets - 1 - l));
}

}  // namespace testing
