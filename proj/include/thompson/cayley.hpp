#pragma once

#include "thompson/element.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace thompson {

// Ball in the left Cayley graph of F for {x0, x1} (edges f -- s f). Members are stored in
// BFS order, so each sphere is a contiguous index range.
class Ball {
public:
    int radius() const { return radius_; }
    std::size_t size() const { return dist_.size(); }
    const std::vector<std::size_t>& sphere_sizes() const { return sphere_sizes_; }
    // Index range [first, last) of the sphere of radius r.
    std::size_t sphere_begin(int r) const { return sphere_start_[static_cast<std::size_t>(r)]; }
    std::size_t sphere_end(int r) const { return sphere_start_[static_cast<std::size_t>(r) + 1]; }

    int distance(std::size_t i) const { return dist_[i]; }
    Element element(std::size_t i) const { return Element::from_key(*keys_[i]); }
    std::optional<std::size_t> find(const Element& f) const;
    // Neighbour indices for x0, x0^-1, x1, x1^-1 (see kGenerators); -1 if outside the ball.
    const std::array<std::int32_t, 4>& neighbors(std::size_t i) const { return nbr_[i]; }

    std::size_t approx_bytes() const { return bytes_; }

private:
    friend Ball build_ball(int radius, std::size_t memory_budget_mb);
    int radius_ = 0;
    std::vector<std::uint8_t> dist_;
    std::vector<std::array<std::int32_t, 4>> nbr_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<const std::string*> keys_;
    std::vector<std::size_t> sphere_sizes_;
    std::vector<std::size_t> sphere_start_;
    std::size_t bytes_ = 0;
};

// Memory budget in MiB from THOMPSON_MEMORY_MB (default 4096).
std::size_t default_memory_budget_mb();

// Throws ResourceError (with the sphere sizes reached so far) when the budget runs out.
Ball build_ball(int radius, std::size_t memory_budget_mb = 0);

// d(g, h) = length(g h^-1).
long distance(const Element& g, const Element& h);

// All four neighbours strictly shorter, using the length formula.
bool is_dead_end(const Element& f);
// All four neighbours inside the ball and strictly closer to the identity.
bool is_dead_end_in_ball(const Ball& ball, std::size_t i);
// Current tree nontrivial, left space <L,L>, right space <R,R>, and the right space of
// x1^-1 f not <R,R>.
bool is_dead_end_structural(const Element& f);

// length(s_1 ... s_k f) <= length(f) for every s_i in {x0^+-1, x1^+-1, 1}. Needs k >= 2.
bool is_pocket(const Element& f, int k);
// x1^-1 x1^-1 x0 f, the word that climbs out of a dead end.
Element escape_word_image(const Element& f);

// Shortest path between members a and b through members at distance <= radius; empty if none.
std::optional<long> in_ball_distance(const Ball& ball, std::size_t a, std::size_t b, int radius);
std::optional<long> in_ball_distance(const Ball& ball, const Element& g, const Element& h, int radius);

struct MacPair {
    std::size_t g;      // ball index of g, on the sphere of the search radius
    std::size_t h;      // ball index of x0^2 g
    long in_ball = -1;  // shortest path inside the ball, -1 if disconnected
};

// Pairs (g, x0^2 g) with both on the sphere of radius `radius` and x0 g outside it, with their
// in-ball distance. The ball must have radius >= `radius`. Every in-ball distance is at most
// 2 radius, because geodesics to the identity stay inside the ball.
std::vector<MacPair> mac_witness_search(const Ball& ball, int radius, std::size_t max_candidates = 0);

// All distance-2 pairs of the ball's sphere `radius` checked for in-ball distance <= 2 radius.
// Quadratic-ish; intended for small radii only. Returns the largest in-ball distance seen.
long mac_saturation_audit(const Ball& ball, int radius);

struct FreeCheckResult {
    std::size_t words = 0;
    std::size_t distinct = 0;
    bool ok() const { return words == distinct; }
};
// Evaluates every word of length <= max_len in {x0^-1, x1}.
FreeCheckResult free_submonoid_check(int max_len);

}  // namespace thompson
