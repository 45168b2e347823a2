#pragma once

#include "thompson/element.hpp"
#include "thompson/forest.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace thompson {

struct Letter {
    unsigned index = 0;
    int sign = 1;  // +1 or -1

    Letter inverse() const { return {index, -sign}; }
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

struct Word {
    enum class Alphabet { Infinite, X0X1 };

    std::vector<Letter> letters;
    Alphabet alphabet = Alphabet::Infinite;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool is_positive() const;
    // Same letters; the alphabet flag only affects printing.
    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }
    // "1" for the empty word. {x0,x1} words group runs ("x0^-5 x1"); others print each letter.
    std::string str() const;
};

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

// Tokens "x" NAT ["^" INT], separated by whitespace or juxtaposed. "" and "1" give the empty word.
Word parse_word(const std::string& text, Word::Alphabet alphabet = Word::Alphabet::Infinite);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// multiply(eval(s), f), computed on the two-way forest diagram.
Element apply_generator(const Letter& s, const Element& f);
// The same product computed on the one-way forest diagram.
Element apply_generator_one_way(const Letter& s, const Element& f);
// Unreduced diagram-level actions (the forests may need trimming or reduction afterwards).
TwoWayForestDiagram act_two_way(const Letter& s, TwoWayForestDiagram d);
OneWayForestDiagram act_one_way(const Letter& s, OneWayForestDiagram d);

// Folds apply_generator from the rightmost letter.
Element eval(const Word& w);

// x_n -> x0^(1-n) x1 x0^(n-1), with adjacent x0 powers merged.
Word lower_to_x0x1(const Word& w);
// |1 - i_n| + ... + |i_1 - 1| + n for a positive word x_{i_n} ... x_{i_1} with every i_k >= 1.
std::size_t lowered_length_formula(const Word& w);

// x0^a0 ... xn^an xn^-bn ... x0^-b0.
Word normal_form(const Element& f);
// Carets of the positive element built left to right. Throws DomainError if f is not positive.
Word anti_normal_form(const Element& f);

enum class MoveType { F1, F2, F3, F4, I1, I2, I3, I4, FreeCancel };
std::string move_name(MoveType t);

struct Move {
    std::size_t position;  // index of the left letter of the rewritten pair
    MoveType type;
    Word result;
};

// Forward moves (k < n):  F1 xn^-1 xk -> xk x(n+1)^-1   F2 xk^-1 xn -> x(n+1) xk^-1
//                         F3 xn xk -> xk x(n+1)          F4 xk^-1 xn^-1 -> x(n+1)^-1 xk^-1
// Inverse moves need m > k + 1 and undo the forward ones; FreeCancel deletes s s^-1.
std::vector<Move> rewrite_moves(const Word& w);

struct CaretOrder {
    bool is_normal = false;
    bool is_anti_normal = false;
};
// w must be a positive word with eval(w) == f; throws DomainError otherwise.
CaretOrder caret_order_check(const Word& w, const Element& f);

// Uniform letters from {x0, x0^-1, x1, x1^-1}, no free cancellation.
Word random_x0x1_word(std::mt19937_64& rng, std::size_t length);

}  // namespace thompson
