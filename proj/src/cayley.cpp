#include "thompson/cayley.hpp"

#include "thompson/errors.hpp"
#include "thompson/metric.hpp"
#include "thompson/words.hpp"

#include <cstdlib>
#include <deque>
#include <unordered_set>

namespace thompson {

std::size_t default_memory_budget_mb() {
    if (const char* v = std::getenv("THOMPSON_MEMORY_MB")) {
        char* end = nullptr;
        unsigned long mb = std::strtoul(v, &end, 10);
        if (end != v && *end == '\0' && mb > 0) return mb;
        throw ParseError(std::string("THOMPSON_MEMORY_MB must be a positive integer, got \"") + v + "\"");
    }
    return 4096;
}

std::optional<std::size_t> Ball::find(const Element& f) const {
    auto it = index_.find(f.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::string sizes_str(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto n : v) s += (s.empty() ? "" : ",") + std::to_string(n);
    return s;
}

}  // namespace

Ball build_ball(int radius, std::size_t memory_budget_mb) {
    if (radius < 0) throw DomainError("ball radius must be non-negative");
    if (radius > 250) throw ResourceError("ball radius too large");
    if (memory_budget_mb == 0) memory_budget_mb = default_memory_budget_mb();
    const std::size_t budget = memory_budget_mb << 20;
    // Rough per-member cost: hash node, key, neighbour row, distance, key pointer.
    constexpr std::size_t overhead = 96;

    Ball b;
    b.radius_ = radius;
    auto add = [&](const Element& f, int d) -> std::uint32_t {
        auto [it, fresh] = b.index_.emplace(f.key(), static_cast<std::uint32_t>(b.dist_.size()));
        if (!fresh) return it->second;
        b.keys_.push_back(&it->first);
        b.dist_.push_back(static_cast<std::uint8_t>(d));
        b.nbr_.push_back({-1, -1, -1, -1});
        b.bytes_ += overhead + it->first.capacity();
        if (b.bytes_ > budget)
            throw ResourceError("ball exceeds memory budget of " + std::to_string(memory_budget_mb) +
                                " MiB at radius " + std::to_string(d) + "; complete sphere sizes " +
                                sizes_str(b.sphere_sizes_) + ", " + std::to_string(b.dist_.size()) + " members");
        return it->second;
    };

    add(Element(), 0);
    b.sphere_start_ = {0, 1};
    b.sphere_sizes_ = {1};
    for (int r = 0; r <= radius; ++r) {
        std::size_t lo = b.sphere_start_[static_cast<std::size_t>(r)];
        std::size_t hi = b.sphere_start_[static_cast<std::size_t>(r) + 1];
        for (std::size_t i = lo; i < hi; ++i) {
            Element f = b.element(i);
            for (std::size_t s = 0; s < 4; ++s) {
                Element g = apply_generator(kGenerators[s], f);
                if (r < radius) {
                    b.nbr_[i][s] = static_cast<std::int32_t>(add(g, r + 1));
                } else {
                    auto it = b.index_.find(g.key());
                    if (it != b.index_.end()) b.nbr_[i][s] = static_cast<std::int32_t>(it->second);
                }
            }
        }
        if (r < radius) {
            b.sphere_start_.push_back(b.dist_.size());
            b.sphere_sizes_.push_back(b.dist_.size() - hi);
        }
    }
    return b;
}

long distance(const Element& g, const Element& h) { return length(multiply(g, invert(h))); }

bool is_dead_end(const Element& f) {
    for (int e : generator_effect(f))
        if (e > 0) return false;
    return true;
}

bool is_dead_end_in_ball(const Ball& ball, std::size_t i) {
    for (auto n : ball.neighbors(i))
        if (n < 0 || ball.distance(static_cast<std::size_t>(n)) >= ball.distance(i)) return false;
    return true;
}

bool is_dead_end_structural(const Element& f) {
    const LabelPair LL{SpaceLabel::L, SpaceLabel::L}, RR{SpaceLabel::R, SpaceLabel::R};
    LabeledDiagram ld = label_spaces(f);
    if (ld.current_tree_trivial()) return false;
    auto left = ld.left_space(), right = ld.right_space();
    if (!left || *left != LL || !right || *right != RR) return false;
    auto after = label_spaces(apply_generator(kGenerators[3], f)).right_space();
    return !(after && *after == RR);
}

bool is_pocket(const Element& f, int k) {
    if (k < 2) throw DomainError("pocket depth needs k >= 2");
    long base = length(f);
    std::unordered_set<std::string> seen{f.key()};
    std::vector<Element> layer{f};
    for (int step = 0; step < k; ++step) {
        std::vector<Element> next;
        for (const auto& g : layer)
            for (const auto& s : kGenerators) {
                Element h = apply_generator(s, g);
                if (!seen.insert(h.key()).second) continue;
                if (length(h) > base) return false;
                next.push_back(std::move(h));
            }
        layer = std::move(next);
    }
    return true;
}

Element escape_word_image(const Element& f) {
    return apply_generator(kGenerators[3], apply_generator(kGenerators[3], apply_generator(kGenerators[0], f)));
}

std::optional<long> in_ball_distance(const Ball& ball, std::size_t a, std::size_t b, int radius) {
    if (ball.distance(a) > radius || ball.distance(b) > radius) throw DomainError("endpoints must lie in the ball");
    if (a == b) return 0;
    std::unordered_map<std::size_t, long> dist{{a, 0}};
    std::deque<std::size_t> queue{a};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        long du = dist[u];
        for (auto n : ball.neighbors(u)) {
            if (n < 0 || ball.distance(static_cast<std::size_t>(n)) > radius) continue;
            std::size_t v = static_cast<std::size_t>(n);
            if (!dist.emplace(v, du + 1).second) continue;
            if (v == b) return du + 1;
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

std::optional<long> in_ball_distance(const Ball& ball, const Element& g, const Element& h, int radius) {
    auto a = ball.find(g), b = ball.find(h);
    if (!a || !b) throw DomainError("endpoints must lie in the ball");
    return in_ball_distance(ball, *a, *b, radius);
}

std::vector<MacPair> mac_witness_search(const Ball& ball, int radius, std::size_t max_candidates) {
    if (radius > ball.radius()) throw DomainError("search radius exceeds the ball radius");
    std::vector<MacPair> out;
    for (std::size_t i = ball.sphere_begin(radius); i < ball.sphere_end(radius); ++i) {
        auto x0g = ball.neighbors(i)[0];
        if (x0g >= 0 && ball.distance(static_cast<std::size_t>(x0g)) <= radius) continue;
        Element h = apply_generator(kGenerators[0], apply_generator(kGenerators[0], ball.element(i)));
        auto j = ball.find(h);
        if (!j || ball.distance(*j) != radius) continue;
        auto d = in_ball_distance(ball, i, *j, radius);
        out.push_back({i, *j, d ? *d : -1});
        if (max_candidates && out.size() >= max_candidates) break;
    }
    return out;
}

long mac_saturation_audit(const Ball& ball, int radius) {
    long worst = 0;
    for (std::size_t i = 0; i < ball.sphere_end(radius); ++i) {
        std::unordered_set<std::size_t> two;
        for (auto n : ball.neighbors(i)) {
            if (n < 0) continue;
            for (auto m : ball.neighbors(static_cast<std::size_t>(n)))
                if (m >= 0 && static_cast<std::size_t>(m) > i && ball.distance(static_cast<std::size_t>(m)) <= radius)
                    two.insert(static_cast<std::size_t>(m));
        }
        for (auto j : two) {
            auto d = in_ball_distance(ball, i, j, radius);
            if (!d) return -1;
            worst = std::max(worst, *d);
        }
    }
    return worst;
}

FreeCheckResult free_submonoid_check(int max_len) {
    if (max_len < 0) throw DomainError("max length must be non-negative");
    if (max_len > 24) throw ResourceError("free submonoid check is limited to length 24");
    FreeCheckResult r;
    std::unordered_set<std::string> seen;
    const std::array<Letter, 2> letters{{{0, -1}, {1, 1}}};
    std::vector<Element> layer{Element()};
    seen.insert(Element().key());
    r.words = 1;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Element> next;
        for (const auto& f : layer)
            for (const auto& s : letters) {
                // The word s w, one letter longer on the left.
                next.push_back(apply_generator(s, f));
                seen.insert(next.back().key());
                ++r.words;
            }
        layer = std::move(next);
    }
    r.distinct = seen.size();
    return r;
}

}  // namespace thompson
