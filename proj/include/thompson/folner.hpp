#pragma once

#include "thompson/tree.hpp"

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <vector>

namespace thompson {

// A positive element of S_{n,k}: a binary forest with n spaces (n + 1 leaves, trailing trivial
// trees included) and a pointer at one of its trees.
struct PointedForest {
    std::vector<BinaryTree> trees;
    std::size_t pointer = 0;
};

// Whether s f leaves S_{n,k}, for s in x0, x0^-1, x1, x1^-1 (kGenerators order), decided on
// the pointed forest alone.
std::array<bool, 4> folner_exits(const PointedForest& f, int k);

// Applies s to the pointed forest; only meaningful when the move stays inside S_{n,k}.
PointedForest folner_step(const PointedForest& f, std::size_t generator);

// Every pointed forest with `leaves` leaves and tree heights <= k.
std::vector<PointedForest> enumerate_pointed_forests(std::size_t leaves, int k);

struct FolnerCounts {
    std::size_t n = 0;      // spaces
    std::size_t leaves = 0; // n + 1
    int k = 0;
    std::vector<mpz_class> forests;  // f_0 .. f_leaves
    mpz_class R;                     // pointed forests
    mpz_class R_star;                // ... whose current tree is trivial
    mpq_class ratio;                 // |dS| / |S| = 2 (f_leaves + R*) / R

    bool direct_done = false;        // direct enumeration ran (within budget)
    mpz_class direct_size;
    std::array<mpz_class, 4> direct_exits;
    mpq_class direct_ratio;
    bool agree = true;               // both paths equal whenever direct_done
};

// |dS_{n,k}| / |S_{n,k}| by convolution counting, and by direct enumeration when R fits in
// `direct_budget` pointed forests.
FolnerCounts folner_ratio(std::size_t n, int k, std::size_t direct_budget = 2000000);

}  // namespace thompson
