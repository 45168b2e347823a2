#pragma once

#include "thompson/element.hpp"

#include <cstddef>
#include <utility>

namespace thompson {

// (log2 f'(0), log2 f'(1)) on the unit interval.
std::pair<long, long> abelianize(const Element& f);
bool is_commutator_element(const Element& f);

struct Classification {
    bool positive = false;           // bottom tree is a right vine
    bool right_sided = false;        // both two-way pointers at the left end of the support
    bool strongly_positive = false;  // positive and right-sided
    bool left_sided = false;         // both two-way pointers at the right end of the support
    std::size_t width = 0;           // spaces in the two-way support
    std::size_t caret_count = 0;     // carets of the reduced tree diagram
};

Classification classify(const Element& f);

}  // namespace thompson
