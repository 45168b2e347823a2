#pragma once

#include "thompson/dyadic.hpp"
#include "thompson/element.hpp"

#include <string>
#include <vector>

namespace thompson {

// Piecewise-linear homeomorphism given by its breakpoints. Between consecutive breakpoints
// the map is linear. For the half-line and the line, the map is a translation t + right_offset
// beyond the last breakpoint; on the line also t + left_offset before the first one.
// A line map with no breakpoints is the translation by left_offset (== right_offset).
struct PLMap {
    enum class Domain { Unit, HalfLine, Line };

    Domain domain = Domain::Unit;
    std::vector<Dyadic> xs;
    std::vector<Dyadic> ys;
    long left_offset = 0;
    long right_offset = 0;

    static PLMap identity(Domain d);

    Dyadic operator()(const Dyadic& t) const;
    // log2 of the slope on each segment between breakpoints; throws if a slope is not a power of 2.
    std::vector<long> slope_exponents() const;
    // Increasing, continuous, power-of-2 slopes, endpoints fixed as the domain requires.
    bool is_valid() const;
    // Drops breakpoints where the slope does not change.
    PLMap simplified() const;

    bool operator==(const PLMap& o) const;
    std::string str() const;
};

// f first, then g: compose(f, g)(t) = g(f(t)).
PLMap compose(const PLMap& f, const PLMap& g);
PLMap inverse(const PLMap& f);

PLMap to_pl_unit(const Element& f);
PLMap to_pl_half_line(const Element& f);
PLMap to_pl_line(const Element& f);

// Fixed homeomorphism R -> (0, 1): [n, n+1] -> [1 - 2^-(n+1), 1 - 2^-(n+2)] for n >= 0 and
// [-n-1, -n] -> [2^-(n+2), 2^-(n+1)]. to_pl_line(f) = psi_inv . to_pl_unit(f) . psi.
Dyadic psi(const Dyadic& t);
Dyadic psi_inv(const Dyadic& u);

}  // namespace thompson
