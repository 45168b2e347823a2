#pragma once

#include "thompson/element.hpp"
#include "thompson/forest.hpp"
#include "thompson/words.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace thompson {

enum class SpaceLabel { L, N, R, I };
char label_char(SpaceLabel s);

struct LabelPair {
    SpaceLabel top;
    SpaceLabel bottom;
    bool operator==(const LabelPair&) const = default;
};

// Weight of a space from its (top, bottom) labels.
int space_weight(SpaceLabel top, SpaceLabel bottom);

struct LabeledDiagram {
    TwoWayForestDiagram diagram;
    std::vector<LabelPair> labels;  // one per gap of the support
    std::vector<int> weights;
    long ell0 = 0;  // sum of weights
    long ell1 = 0;  // carets

    long length() const { return ell0 + ell1; }
    // Spaces just left / right of the current (top-pointed) tree; empty at the support edge.
    std::optional<LabelPair> left_space() const;
    std::optional<LabelPair> right_space() const;
    bool current_tree_trivial() const { return diagram.top[diagram.top_pointer].is_leaf(); }
    std::string render() const;
};

LabeledDiagram label_spaces(const Element& f);
LabeledDiagram label_spaces(const TwoWayForestDiagram& canonical);

long length(const Element& f);
// 2 n(f) + c(f); throws DomainError unless f is strongly positive.
long length_strongly_positive(const Element& f);

// Order used for generator-indexed arrays throughout: x0, x0^-1, x1, x1^-1.
inline constexpr std::array<Letter, 4> kGenerators{{{0, 1}, {0, -1}, {1, 1}, {1, -1}}};
std::string generator_name(std::size_t i);

// Sign of length(s f) - length(f) for each generator, by recomputing the length.
std::array<int, 4> generator_effect(const Element& f);
// The same signs predicted from labels and supports alone.
std::array<int, 4> predicted_effect(const Element& f);
// Left-multiplying by x1 deletes a bottom caret.
bool x1_cancels_bottom_caret(const TwoWayForestDiagram& d);

// Minimum-length {x0,x1} word; every x1 builds a top caret and every x1^-1 a bottom caret.
Word geodesic_word(const Element& f);

// length >= 2 width for left-sided f, length >= width otherwise.
bool left_sided_bound_check(const Element& f);

}  // namespace thompson
