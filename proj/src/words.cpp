#include "thompson/words.hpp"

#include "thompson/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace thompson {

bool Word::is_positive() const {
    return std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return l.sign > 0; });
}

std::string Word::str() const {
    if (letters.empty()) return "1";
    std::string s;
    auto emit = [&](const Letter& l, long power) {
        if (!s.empty()) s.push_back(' ');
        s += "x" + std::to_string(l.index);
        if (power != 1) s += "^" + std::to_string(power);
    };
    if (alphabet == Alphabet::Infinite) {
        for (const auto& l : letters) emit(l, l.sign);
        return s;
    }
    for (std::size_t i = 0; i < letters.size();) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        emit(letters[i], letters[i].sign * static_cast<long>(j - i));
        i = j;
    }
    return s;
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w.letters) h = (h ^ (2 * l.index + (l.sign < 0))) * 1099511628211ull;
    return h;
}

Word parse_word(const std::string& text, Word::Alphabet alphabet) {
    Word w;
    w.alphabet = alphabet;
    std::size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    auto number = [&](bool allow_sign) {
        skip();
        std::size_t start = p;
        if (allow_sign && p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == digits) throw ParseError("expected a number at position " + std::to_string(start) + " in \"" + text + "\"");
        if (p - digits > 9) throw ParseError("number too large in \"" + text + "\"");
        return std::stol(text.substr(start, p - start));
    };
    skip();
    std::size_t last = text.find_last_not_of(" \t\r\n");
    if (last != std::string::npos && last == p && text[p] == '1') return w;
    while (p < text.size()) {
        if (text[p] != 'x') throw ParseError("expected 'x' at position " + std::to_string(p) + " in \"" + text + "\"");
        ++p;
        long idx = number(false);
        long e = 1;
        skip();
        if (p < text.size() && text[p] == '^') {
            ++p;
            e = number(true);
        }
        if (alphabet == Word::Alphabet::X0X1 && idx > 1)
            throw ParseError("letter x" + std::to_string(idx) + " is not in {x0, x1}");
        if (e > 1000000 || e < -1000000) throw ParseError("exponent too large in \"" + text + "\"");
        Letter l{static_cast<unsigned>(idx), e < 0 ? -1 : 1};
        for (long k = 0; k < std::labs(e); ++k) w.letters.push_back(l);
        skip();
    }
    return w;
}

Word inverse(const Word& w) {
    Word out;
    out.alphabet = w.alphabet;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    if (b.alphabet == Word::Alphabet::Infinite) out.alphabet = Word::Alphabet::Infinite;
    return out;
}

namespace {

void pad_right(std::vector<BinaryTree>& top, std::vector<BinaryTree>& bottom) {
    top.emplace_back();
    bottom.emplace_back();
}

void merge_at(std::vector<BinaryTree>& forest, std::size_t c) {
    forest[c] = BinaryTree::caret(forest[c], forest[c + 1]);
    forest.erase(forest.begin() + static_cast<long>(c) + 1);
}

// Undo a merge at top tree c: split it, or if it is trivial, hang a caret below the
// matching bottom leaf and give the new leaf its own trivial top tree.
void unmerge_at(std::vector<BinaryTree>& top, std::vector<BinaryTree>& bottom, std::size_t c) {
    if (!top[c].is_leaf()) {
        BinaryTree l = top[c].left(), r = top[c].right();
        top[c] = l;
        top.insert(top.begin() + static_cast<long>(c) + 1, r);
        return;
    }
    std::size_t col = 0;
    for (std::size_t j = 0; j < c; ++j) col += top[j].leaves();
    std::size_t start = 0, j = 0;
    while (start + bottom[j].leaves() <= col) start += bottom[j++].leaves();
    bottom[j] = bottom[j].attach_caret_at(col - start);
    top.insert(top.begin() + static_cast<long>(c) + 1, BinaryTree());
}

}  // namespace

TwoWayForestDiagram act_two_way(const Letter& s, TwoWayForestDiagram d) {
    if (s.index == 0) {
        if (s.sign > 0) {
            if (d.top_pointer + 1 == d.top.size()) pad_right(d.top, d.bottom);
            ++d.top_pointer;
        } else if (d.top_pointer == 0) {
            d.top.insert(d.top.begin(), BinaryTree());
            d.bottom.insert(d.bottom.begin(), BinaryTree());
            ++d.bottom_pointer;
        } else {
            --d.top_pointer;
        }
        return d;
    }
    std::size_t c = d.top_pointer + s.index - 1;
    if (s.sign > 0) {
        while (d.top.size() < c + 2) pad_right(d.top, d.bottom);
        merge_at(d.top, c);
    } else {
        while (d.top.size() < c + 1) pad_right(d.top, d.bottom);
        unmerge_at(d.top, d.bottom, c);
    }
    return d;
}

OneWayForestDiagram act_one_way(const Letter& s, OneWayForestDiagram d) {
    std::size_t n = std::max(forest_leaves(d.top), forest_leaves(d.bottom));
    while (forest_leaves(d.top) < n) d.top.emplace_back();
    while (forest_leaves(d.bottom) < n) d.bottom.emplace_back();
    std::size_t c = s.index;
    if (s.sign > 0) {
        while (d.top.size() < c + 2) pad_right(d.top, d.bottom);
        merge_at(d.top, c);
    } else {
        while (d.top.size() < c + 1) pad_right(d.top, d.bottom);
        unmerge_at(d.top, d.bottom, c);
    }
    return d;
}

Element apply_generator(const Letter& s, const Element& f) {
    return from_two_way(act_two_way(s, to_two_way(f)));
}

Element apply_generator_one_way(const Letter& s, const Element& f) {
    return from_one_way(act_one_way(s, to_one_way(f)));
}

Element eval(const Word& w) {
    Element f;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = apply_generator(*it, f);
    return f;
}

Word lower_to_x0x1(const Word& w) {
    Word out;
    out.alphabet = Word::Alphabet::X0X1;
    auto x0_power = [&](long k) {
        Letter step{0, k < 0 ? -1 : 1};
        for (long i = 0; i < std::labs(k); ++i) {
            if (!out.letters.empty() && out.letters.back() == step.inverse())
                out.letters.pop_back();
            else
                out.letters.push_back(step);
        }
    };
    for (const auto& l : w.letters) {
        if (l.index == 0) {
            x0_power(l.sign);
            continue;
        }
        long n = l.index;
        x0_power(1 - n);
        out.letters.push_back({1, l.sign});
        x0_power(n - 1);
    }
    return out;
}

std::size_t lowered_length_formula(const Word& w) {
    long prev = 1, total = 0;
    for (const auto& l : w.letters) {
        if (l.sign < 0 || l.index == 0) throw DomainError("length formula needs letters x_n with n >= 1");
        total += std::labs(prev - static_cast<long>(l.index));
        prev = l.index;
    }
    total += std::labs(prev - 1);
    return static_cast<std::size_t>(total) + w.letters.size();
}

namespace {

std::vector<std::size_t> carets_by_leftmost_leaf(const std::vector<BinaryTree>& forest) {
    std::vector<std::size_t> out;
    for (const auto& t : forest)
        for (int c : t.carets_above_leaves()) out.push_back(static_cast<std::size_t>(c));
    return out;
}

struct CaretSpan {
    std::size_t left_start, right_start;
};

std::pair<std::size_t, std::size_t> postorder(const std::string& code, std::size_t pos, std::size_t leaf,
                                              std::vector<CaretSpan>& out) {
    if (code[pos] == '0') return {pos + 1, 1};
    auto [e1, n1] = postorder(code, pos + 1, leaf, out);
    auto [e2, n2] = postorder(code, e1, leaf + n1, out);
    out.push_back({leaf, leaf + n1});
    return {e2, n1 + n2};
}

}  // namespace

Word normal_form(const Element& f) {
    OneWayForestDiagram d = to_one_way(f);
    auto a = carets_by_leftmost_leaf(d.top);
    auto b = carets_by_leftmost_leaf(d.bottom);
    Word w;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i]; ++k) w.letters.push_back({static_cast<unsigned>(i), 1});
    for (std::size_t i = b.size(); i-- > 0;)
        for (std::size_t k = 0; k < b[i]; ++k) w.letters.push_back({static_cast<unsigned>(i), -1});
    return w;
}

Word anti_normal_form(const Element& f) {
    if (f.bottom() != BinaryTree::right_vine(f.bottom().leaves()))
        throw DomainError("anti-normal form needs a positive element");
    OneWayForestDiagram d = to_one_way(f);
    std::vector<CaretSpan> order;
    std::size_t leaf = 0;
    for (const auto& t : d.top) {
        postorder(t.code(), 0, leaf, order);
        leaf += t.leaves();
    }
    std::vector<std::size_t> roots(leaf + 1);
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = i;
    std::vector<Letter> built;
    for (const auto& c : order) {
        auto it = std::lower_bound(roots.begin(), roots.end(), c.left_start);
        built.push_back({static_cast<unsigned>(it - roots.begin()), 1});
        roots.erase(it + 1);
    }
    Word w;
    w.letters.assign(built.rbegin(), built.rend());
    return w;
}

std::string move_name(MoveType t) {
    switch (t) {
        case MoveType::F1: return "F1";
        case MoveType::F2: return "F2";
        case MoveType::F3: return "F3";
        case MoveType::F4: return "F4";
        case MoveType::I1: return "I1";
        case MoveType::I2: return "I2";
        case MoveType::I3: return "I3";
        case MoveType::I4: return "I4";
        case MoveType::FreeCancel: return "cancel";
    }
    return "?";
}

std::vector<Move> rewrite_moves(const Word& w) {
    std::vector<Move> out;
    auto emit = [&](std::size_t i, MoveType t, std::vector<Letter> repl) {
        Word r;
        r.alphabet = Word::Alphabet::Infinite;
        r.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(i));
        r.letters.insert(r.letters.end(), repl.begin(), repl.end());
        r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<long>(i) + 2, w.letters.end());
        out.push_back({i, t, std::move(r)});
    };
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        const Letter a = w.letters[i], b = w.letters[i + 1];
        const unsigned p = a.index, q = b.index;
        if (a.sign < 0 && b.sign > 0 && q < p) emit(i, MoveType::F1, {{q, 1}, {p + 1, -1}});
        if (a.sign < 0 && b.sign > 0 && p < q) emit(i, MoveType::F2, {{q + 1, 1}, {p, -1}});
        if (a.sign > 0 && b.sign > 0 && q < p) emit(i, MoveType::F3, {{q, 1}, {p + 1, 1}});
        if (a.sign < 0 && b.sign < 0 && p < q) emit(i, MoveType::F4, {{q + 1, -1}, {p, -1}});
        if (a.sign > 0 && b.sign < 0 && q > p + 1) emit(i, MoveType::I1, {{q - 1, -1}, {p, 1}});
        if (a.sign > 0 && b.sign < 0 && p > q + 1) emit(i, MoveType::I2, {{q, -1}, {p - 1, 1}});
        if (a.sign > 0 && b.sign > 0 && q > p + 1) emit(i, MoveType::I3, {{q - 1, 1}, {p, 1}});
        if (a.sign < 0 && b.sign < 0 && p > q + 1) emit(i, MoveType::I4, {{q, -1}, {p - 1, -1}});
        if (a == b.inverse()) emit(i, MoveType::FreeCancel, {});
    }
    return out;
}

CaretOrder caret_order_check(const Word& w, const Element& f) {
    if (!w.is_positive()) throw DomainError("caret order check needs a positive word");
    if (eval(w) != f) throw DomainError("word does not evaluate to the given element");
    CaretOrder r{true, true};
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        long left = w.letters[i].index, right = w.letters[i + 1].index;
        if (left > right) r.is_normal = false;
        if (left < right - 1) r.is_anti_normal = false;
    }
    return r;
}

Word random_x0x1_word(std::mt19937_64& rng, std::size_t length) {
    Word w{{}, Word::Alphabet::X0X1};
    std::uniform_int_distribution<int> pick(0, 3);
    while (w.letters.size() < length) {
        int r = pick(rng);
        Letter l{static_cast<unsigned>(r / 2), r % 2 ? -1 : 1};
        if (!w.letters.empty() && w.letters.back() == l.inverse()) continue;
        w.letters.push_back(l);
    }
    return w;
}

}  // namespace thompson
