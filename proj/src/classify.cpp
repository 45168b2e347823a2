#include "thompson/classify.hpp"

#include "thompson/forest.hpp"

namespace thompson {

std::pair<long, long> abelianize(const Element& f) {
    auto top = f.top().leaf_depths();
    auto bottom = f.bottom().leaf_depths();
    return {top.front() - bottom.front(), top.back() - bottom.back()};
}

bool is_commutator_element(const Element& f) { return abelianize(f) == std::pair<long, long>{0, 0}; }

Classification classify(const Element& f) {
    Classification c;
    c.positive = f.bottom() == BinaryTree::right_vine(f.bottom().leaves());
    TwoWayForestDiagram d = to_two_way(f);
    c.right_sided = d.top_pointer == 0 && d.bottom_pointer == 0;
    c.left_sided = d.top_pointer + 1 == d.top.size() && d.bottom_pointer + 1 == d.bottom.size();
    c.strongly_positive = c.positive && c.right_sided;
    c.width = d.width();
    c.caret_count = f.caret_count();
    return c;
}

}  // namespace thompson
