#pragma once

#include "thompson/cayley.hpp"
#include "thompson/dyadic.hpp"
#include "thompson/tree.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace thompson {

// Polynomial with arbitrary-precision integer coefficients; coeffs[i] multiplies x^i.
struct IntegerPolynomial {
    std::vector<mpz_class> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }  // -1 for zero
    void trim();
    Dyadic operator()(const Dyadic& x) const;  // exact Horner
    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    IntegerPolynomial squared() const;
    bool operator==(const IntegerPolynomial&) const = default;
    std::string str() const;
};

// Positive elements of each length 0..max_n, read off a ball of radius >= max_n.
std::vector<mpz_class> count_positive_by_length(const Ball& ball, int max_n);

struct SeriesCoefficients {
    std::vector<mpz_class> p;                                   // p_0 .. p_maxN
    std::vector<long> numerator{1, 0, -1};                      // 1 - x^2
    std::vector<long> denominator{1, -2, -1, 1};                // 1 - 2x - x^2 + x^3
};
SeriesCoefficients series_coefficients(int max_n);

// t_k: t_{-1} = 0, t_k = t_{k-1}^2 + x. Coefficient of x^l counts trees with l leaves and
// height <= k. Exact; degree 2^k, so only small k are practical (the cap is 16).
IntegerPolynomial height_polynomial(int k);

struct RootBracket {
    Dyadic lo, hi;  // the root lies in [lo, hi]
    double value = 0;
    std::string method;
};

// Root p_k of t_k(p) = 1 in [0, 1], bracketed to width <= tol by bisection. For k <= 8 each
// probe evaluates t_k exactly by Horner; beyond that it runs t -> t^2 + c from 0 for k+1 steps
// in outward-rounded dyadic interval arithmetic.
RootBracket solve_pk(int k, double tol = 1e-12);

struct SubtreeBound {
    IntegerPolynomial a;  // sum of x^leaves over the family
    RootBracket p;        // root of a(p) = 1
    double two_p = 0;
    bool above_half = false;
};
// Needs a finite family containing the trivial tree and closed under taking subtrees.
SubtreeBound subtree_closed_bound(const std::vector<BinaryTree>& trees, double tol = 1e-12);

}  // namespace thompson
