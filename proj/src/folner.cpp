#include "thompson/folner.hpp"

#include "thompson/errors.hpp"

namespace thompson {

std::array<bool, 4> folner_exits(const PointedForest& f, int k) {
    const std::size_t p = f.pointer;
    const bool last = p + 1 == f.trees.size();
    std::array<bool, 4> out{};
    out[0] = last;
    out[1] = p == 0;
    out[2] = last || static_cast<int>(std::max(f.trees[p].height(), f.trees[p + 1].height())) + 1 > k;
    out[3] = f.trees[p].is_leaf();
    return out;
}

PointedForest folner_step(const PointedForest& f, std::size_t generator) {
    PointedForest g = f;
    const std::size_t p = f.pointer;
    switch (generator) {
        case 0: ++g.pointer; break;
        case 1: --g.pointer; break;
        case 2:
            g.trees[p] = BinaryTree::caret(f.trees[p], f.trees[p + 1]);
            g.trees.erase(g.trees.begin() + static_cast<long>(p) + 1);
            break;
        default:
            g.trees[p] = f.trees[p].left();
            g.trees.insert(g.trees.begin() + static_cast<long>(p) + 1, f.trees[p].right());
            break;
    }
    return g;
}

namespace {

// All trees of height <= k, bucketed by leaf count.
std::vector<std::vector<BinaryTree>> trees_by_leaves(std::size_t max_leaves, int k) {
    // After round h, cur[l] holds the trees with l leaves and height <= h.
    std::vector<std::vector<BinaryTree>> cur(max_leaves + 1);
    if (max_leaves >= 1) cur[1].push_back(BinaryTree::leaf());
    for (int h = 1; h <= k; ++h) {
        std::vector<std::vector<BinaryTree>> next(max_leaves + 1);
        if (max_leaves >= 1) next[1].push_back(BinaryTree::leaf());
        for (std::size_t a = 1; a <= max_leaves; ++a)
            for (std::size_t b = 1; a + b <= max_leaves; ++b)
                for (const auto& l : cur[a])
                    for (const auto& r : cur[b]) next[a + b].push_back(BinaryTree::caret(l, r));
        cur = std::move(next);
    }
    return cur;
}

void forests_rec(std::size_t remaining, const std::vector<std::vector<BinaryTree>>& trees,
                 std::vector<BinaryTree>& acc, std::vector<PointedForest>& out) {
    if (remaining == 0) {
        for (std::size_t p = 0; p < acc.size(); ++p) out.push_back({acc, p});
        return;
    }
    for (std::size_t l = 1; l <= remaining; ++l)
        for (const auto& t : trees[l]) {
            acc.push_back(t);
            forests_rec(remaining - l, trees, acc, out);
            acc.pop_back();
        }
}

}  // namespace

std::vector<PointedForest> enumerate_pointed_forests(std::size_t leaves, int k) {
    if (leaves == 0) throw DomainError("a pointed forest needs at least one leaf");
    auto trees = trees_by_leaves(leaves, k);
    std::vector<PointedForest> out;
    std::vector<BinaryTree> acc;
    forests_rec(leaves, trees, acc, out);
    return out;
}

FolnerCounts folner_ratio(std::size_t n, int k, std::size_t direct_budget) {
    if (n < 1) throw DomainError("folner ratio needs n >= 1");
    if (k < 0) throw DomainError("folner ratio needs k >= 0");
    FolnerCounts c;
    c.n = n;
    c.leaves = n + 1;
    c.k = k;
    const std::size_t N = c.leaves;

    // t_{l,k} for l <= N, by dynamic programming on height (avoids the degree-2^k polynomial).
    std::vector<mpz_class> t(N + 1, 0);
    t[1] = 1;
    for (int h = 1; h <= k; ++h) {
        std::vector<mpz_class> next(N + 1, 0);
        next[1] = 1;
        for (std::size_t a = 1; a <= N; ++a) {
            if (t[a] == 0) continue;
            for (std::size_t b = 1; a + b <= N; ++b) next[a + b] += t[a] * t[b];
        }
        t = std::move(next);
    }
    c.forests.assign(N + 1, 0);
    c.forests[0] = 1;
    for (std::size_t m = 1; m <= N; ++m)
        for (std::size_t l = 1; l <= m; ++l) c.forests[m] += t[l] * c.forests[m - l];
    for (std::size_t j = 0; j < N; ++j) {
        c.R += c.forests[j] * c.forests[N - j];
        c.R_star += c.forests[j] * c.forests[N - 1 - j];
    }
    c.ratio = mpq_class(2 * (c.forests[N] + c.R_star), c.R);
    c.ratio.canonicalize();

    if (c.R <= direct_budget) {
        c.direct_done = true;
        for (auto& e : c.direct_exits) e = 0;
        for (const auto& f : enumerate_pointed_forests(N, k)) {
            ++c.direct_size;
            auto ex = folner_exits(f, k);
            for (std::size_t s = 0; s < 4; ++s)
                if (ex[s]) ++c.direct_exits[s];
        }
        mpz_class total = c.direct_exits[0] + c.direct_exits[1] + c.direct_exits[2] + c.direct_exits[3];
        c.direct_ratio = mpq_class(total, c.direct_size);
        c.direct_ratio.canonicalize();
        c.agree = c.direct_size == c.R && c.direct_exits[1] == c.forests[N] && c.direct_exits[3] == c.R_star &&
                  c.direct_ratio == c.ratio;
    }
    return c;
}

}  // namespace thompson
