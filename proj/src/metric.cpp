#include "thompson/metric.hpp"

#include "thompson/classify.hpp"
#include "thompson/errors.hpp"

#include <cstdio>

namespace thompson {

char label_char(SpaceLabel s) {
    switch (s) {
        case SpaceLabel::L: return 'L';
        case SpaceLabel::N: return 'N';
        case SpaceLabel::R: return 'R';
        case SpaceLabel::I: return 'I';
    }
    return '?';
}

int space_weight(SpaceLabel top, SpaceLabel bottom) {
    static constexpr int table[4][4] = {{2, 1, 1, 1}, {1, 2, 2, 2}, {1, 2, 2, 0}, {1, 2, 0, 0}};
    return table[static_cast<int>(top)][static_cast<int>(bottom)];
}

namespace {

std::vector<SpaceLabel> label_forest(const std::vector<BinaryTree>& forest, std::size_t pointer) {
    std::vector<bool> tree_start, left_child;
    std::size_t pointer_start = 0, col = 0;
    for (std::size_t j = 0; j < forest.size(); ++j) {
        if (j == pointer) pointer_start = col;
        auto lc = forest[j].left_child_leaves();
        for (std::size_t i = 0; i < lc.size(); ++i) {
            tree_start.push_back(i == 0);
            left_child.push_back(lc[i]);
        }
        col += lc.size();
    }
    std::vector<SpaceLabel> out;
    for (std::size_t g = 0; g + 1 < col; ++g) {
        bool exterior = tree_start[g + 1];
        if (exterior && g + 1 <= pointer_start)
            out.push_back(SpaceLabel::L);
        else if (left_child[g + 1])
            out.push_back(SpaceLabel::N);
        else
            out.push_back(exterior ? SpaceLabel::R : SpaceLabel::I);
    }
    return out;
}

}  // namespace

LabeledDiagram label_spaces(const TwoWayForestDiagram& d) {
    LabeledDiagram out;
    out.diagram = d;
    auto top = label_forest(d.top, d.top_pointer);
    auto bottom = label_forest(d.bottom, d.bottom_pointer);
    for (std::size_t g = 0; g < top.size(); ++g) {
        out.labels.push_back({top[g], bottom[g]});
        out.weights.push_back(space_weight(top[g], bottom[g]));
        out.ell0 += out.weights.back();
    }
    out.ell1 = static_cast<long>(d.caret_count());
    return out;
}

LabeledDiagram label_spaces(const Element& f) { return label_spaces(to_two_way(f)); }

std::optional<LabelPair> LabeledDiagram::left_space() const {
    auto starts = diagram.top_starts();
    std::size_t s = starts[diagram.top_pointer];
    if (s == 0) return std::nullopt;
    return labels[s - 1];
}

std::optional<LabelPair> LabeledDiagram::right_space() const {
    auto starts = diagram.top_starts();
    std::size_t e = starts[diagram.top_pointer + 1];
    if (e >= diagram.leaf_count()) return std::nullopt;
    return labels[e - 1];
}

std::string LabeledDiagram::render() const {
    std::string s = "top:    " + forest_str(diagram.top, static_cast<long>(diagram.top_pointer)) + "\n";
    s += "bottom: " + forest_str(diagram.bottom, static_cast<long>(diagram.bottom_pointer)) + "\n";
    s += "gap  top  bottom  weight\n";
    char buf[64];
    for (std::size_t g = 0; g < labels.size(); ++g) {
        std::snprintf(buf, sizeof buf, "%3zu  %3c  %6c  %6d\n", g, label_char(labels[g].top),
                      label_char(labels[g].bottom), weights[g]);
        s += buf;
    }
    s += "l0 = " + std::to_string(ell0) + ", l1 = " + std::to_string(ell1) + ", length = " + std::to_string(length()) +
         "\n";
    return s;
}

long length(const Element& f) { return label_spaces(f).length(); }

long length_strongly_positive(const Element& f) {
    if (!classify(f).strongly_positive) throw DomainError("element is not strongly positive");
    TwoWayForestDiagram d = to_two_way(f);
    long n = 0;
    std::size_t col = 0;
    std::vector<bool> left_child;
    std::vector<bool> start;
    for (const auto& t : d.top) {
        auto lc = t.left_child_leaves();
        for (std::size_t i = 0; i < lc.size(); ++i) {
            start.push_back(i == 0);
            left_child.push_back(lc[i]);
        }
        col += lc.size();
    }
    for (std::size_t g = 0; g + 1 < col; ++g)
        if (start[g + 1] || left_child[g + 1]) ++n;
    return 2 * n + static_cast<long>(d.caret_count());
}

std::string generator_name(std::size_t i) {
    static const char* names[] = {"x0", "x0^-1", "x1", "x1^-1"};
    return names[i];
}

std::array<int, 4> generator_effect(const Element& f) {
    long base = length(f);
    std::array<int, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        long d = length(apply_generator(kGenerators[i], f)) - base;
        if (d != 1 && d != -1)
            throw StructuralError("length changed by " + std::to_string(d) + " under " + generator_name(i));
        out[i] = static_cast<int>(d);
    }
    return out;
}

bool x1_cancels_bottom_caret(const TwoWayForestDiagram& d) {
    std::size_t p = d.top_pointer;
    if (p + 1 >= d.top.size() || !d.top[p].is_leaf() || !d.top[p + 1].is_leaf()) return false;
    std::size_t col = d.top_starts()[p];
    auto bs = d.bottom_starts();
    for (std::size_t j = 0; j < d.bottom.size(); ++j)
        if (bs[j] <= col && col + 1 < bs[j + 1]) return d.bottom[j].has_exposed_caret_at(col - bs[j]);
    return false;
}

std::array<int, 4> predicted_effect(const Element& f) {
    const LabelPair RR{SpaceLabel::R, SpaceLabel::R};
    LabeledDiagram ld = label_spaces(f);
    const auto& d = ld.diagram;
    std::size_t support = d.leaf_count();
    auto left = ld.left_space(), right = ld.right_space();
    std::array<int, 4> out{};

    std::size_t after_x0 = act_two_way(kGenerators[0], d).trimmed().leaf_count();
    bool x0_up = after_x0 > support ||
                 (right && right->bottom == SpaceLabel::L && after_x0 >= support) ||
                 (right && *right == LabelPair{SpaceLabel::R, SpaceLabel::I});
    out[0] = x0_up ? 1 : -1;

    std::size_t after_x0inv = act_two_way(kGenerators[1], d).trimmed().leaf_count();
    bool x0inv_down = after_x0inv < support || (left && *left == LabelPair{SpaceLabel::L, SpaceLabel::L}) ||
                      (left && *left == LabelPair{SpaceLabel::L, SpaceLabel::I} && ld.current_tree_trivial());
    out[1] = x0inv_down ? -1 : 1;

    if (x1_cancels_bottom_caret(d))
        out[2] = -1;
    else
        out[2] = right && *right == RR ? -1 : 1;

    if (ld.current_tree_trivial()) {
        out[3] = 1;
    } else {
        auto after = label_spaces(apply_generator(kGenerators[3], f)).right_space();
        out[3] = after && *after == RR ? 1 : -1;
    }
    return out;
}

Word geodesic_word(const Element& f) {
    Word w;
    w.alphabet = Word::Alphabet::X0X1;
    Element g = f;
    long len = length(g);
    while (!g.is_identity()) {
        TwoWayForestDiagram d = to_two_way(g);
        int pick = -1;
        Element next;
        if (x1_cancels_bottom_caret(d)) {
            pick = 2;
            next = apply_generator(kGenerators[2], g);
        } else {
            std::vector<int> order;
            if (!d.top[d.top_pointer].is_leaf()) order.push_back(3);
            order.push_back(0);
            order.push_back(1);
            for (int i : order) {
                Element cand = apply_generator(kGenerators[static_cast<std::size_t>(i)], g);
                if (length(cand) < len) {
                    pick = i;
                    next = cand;
                    break;
                }
            }
        }
        if (pick < 0) throw StructuralError("no generator decreases the length of " + g.diagram().str());
        w.letters.push_back(kGenerators[static_cast<std::size_t>(pick)].inverse());
        g = next;
        --len;
    }
    return w;
}

bool left_sided_bound_check(const Element& f) {
    Classification c = classify(f);
    long ell = length(f);
    long w = static_cast<long>(c.width);
    return c.left_sided ? ell >= 2 * w : ell >= w;
}

}  // namespace thompson
