#pragma once

#include "thompson/element.hpp"
#include "thompson/tree.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace thompson {

// Forest diagram for the action on [0, inf): tree i of a forest sits over [i, i+1].
// Trailing trivial trees are implicit; the canonical form has no trailing column
// where both forests are trivial.
struct OneWayForestDiagram {
    std::vector<BinaryTree> top;
    std::vector<BinaryTree> bottom;

    bool operator==(const OneWayForestDiagram&) const = default;
    std::string str() const;
};

// Forest diagram for the action on the real line. The pointed tree of each forest sits
// over [0, 1]; leaf columns are shared between the two forests.
struct TwoWayForestDiagram {
    std::vector<BinaryTree> top;
    std::size_t top_pointer = 0;
    std::vector<BinaryTree> bottom;
    std::size_t bottom_pointer = 0;

    bool operator==(const TwoWayForestDiagram&) const = default;

    std::size_t leaf_count() const;
    std::size_t caret_count() const;
    std::size_t width() const { return leaf_count() - 1; }

    // First leaf column of each tree, plus a final entry equal to leaf_count().
    std::vector<std::size_t> top_starts() const;
    std::vector<std::size_t> bottom_starts() const;

    // Drops columns outside the support; trees there must be trivial.
    TwoWayForestDiagram trimmed() const;

    std::string str() const;  // "top forest\nbottom forest"
};

// Forest helpers shared by the two-way and one-way views.
std::size_t forest_leaves(const std::vector<BinaryTree>& forest);
std::string forest_str(const std::vector<BinaryTree>& forest, long pointer = -1);
// Returns the trees; `pointer` receives the index of the tree marked '*' (or -1).
std::vector<BinaryTree> parse_forest(const std::string& text, long* pointer);

// Conversions. The reduced tree diagram is the hub; every *_to_element reduces.
TwoWayForestDiagram to_two_way(const Element& f);
Element from_two_way(const TwoWayForestDiagram& d);
OneWayForestDiagram to_one_way(const Element& f);
Element from_one_way(const OneWayForestDiagram& d);

// Direct structural conversions between the forest views.
TwoWayForestDiagram one_way_to_two_way(const OneWayForestDiagram& d);
OneWayForestDiagram two_way_to_one_way(const TwoWayForestDiagram& d);

TwoWayForestDiagram parse_two_way(const std::string& text);
OneWayForestDiagram parse_one_way(const std::string& text);

}  // namespace thompson
