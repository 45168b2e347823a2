#include "thompson/growth.hpp"

#include "thompson/errors.hpp"

#include <cmath>
#include <functional>
#include <set>

namespace thompson {

void IntegerPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Dyadic IntegerPolynomial::operator()(const Dyadic& x) const {
    Dyadic acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Dyadic(*it);
    return acc;
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    IntegerPolynomial r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    r.trim();
    return r;
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    IntegerPolynomial r;
    if (coeffs.empty() || o.coeffs.empty()) return r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
    r.trim();
    return r;
}

// Kronecker substitution: pack the non-negative coefficients into one integer, square it with
// GMP, and unpack. Schoolbook squaring is hopeless once the degree reaches the thousands.
IntegerPolynomial IntegerPolynomial::squared() const {
    IntegerPolynomial r;
    if (coeffs.empty()) return r;
    std::size_t maxbits = 0;
    for (const auto& c : coeffs) {
        if (c < 0) return *this * *this;
        maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    std::size_t slot = 2 * maxbits + static_cast<std::size_t>(std::log2(static_cast<double>(coeffs.size()))) + 2;
    mpz_class packed = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        mpz_mul_2exp(packed.get_mpz_t(), packed.get_mpz_t(), slot);
        packed += *it;
    }
    packed *= packed;
    r.coeffs.resize(2 * coeffs.size() - 1);
    for (auto& c : r.coeffs) {
        mpz_fdiv_r_2exp(c.get_mpz_t(), packed.get_mpz_t(), slot);
        mpz_fdiv_q_2exp(packed.get_mpz_t(), packed.get_mpz_t(), slot);
    }
    r.trim();
    return r;
}

std::string IntegerPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class a = neg ? mpz_class(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (a != 1 || i == 0) s += a.get_str();
        if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

std::vector<mpz_class> count_positive_by_length(const Ball& ball, int max_n) {
    if (max_n > ball.radius()) throw DomainError("census length exceeds the ball radius");
    std::vector<mpz_class> out(static_cast<std::size_t>(max_n) + 1, 0);
    for (std::size_t i = 0; i < ball.sphere_end(max_n); ++i) {
        Element f = ball.element(i);
        if (f.bottom() == BinaryTree::right_vine(f.bottom().leaves())) ++out[static_cast<std::size_t>(ball.distance(i))];
    }
    return out;
}

SeriesCoefficients series_coefficients(int max_n) {
    if (max_n < 0) throw DomainError("max_n must be non-negative");
    SeriesCoefficients s;
    // Long division of the numerator by the denominator (constant term 1).
    for (int n = 0; n <= max_n; ++n) {
        mpz_class v = n < static_cast<int>(s.numerator.size()) ? s.numerator[static_cast<std::size_t>(n)] : 0;
        for (std::size_t j = 1; j < s.denominator.size() && static_cast<int>(j) <= n; ++j)
            v -= s.denominator[j] * s.p[static_cast<std::size_t>(n) - j];
        s.p.push_back(v);
    }
    return s;
}

IntegerPolynomial height_polynomial(int k) {
    if (k < -1) throw DomainError("height polynomial needs k >= -1");
    if (k > 16) throw ResourceError("t_k has degree 2^k; exact coefficients are limited to k <= 16");
    IntegerPolynomial t;
    for (int i = 0; i <= k; ++i) {
        t = t.squared();
        if (t.coeffs.size() < 2) t.coeffs.resize(2, 0);
        t.coeffs[1] += 1;
    }
    return t;
}

namespace {

unsigned long bits_for_tol(double tol) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    unsigned long m = 0;
    while (std::ldexp(1.0, -static_cast<int>(m)) > tol) ++m;
    return m;
}

// Sign of (value at c) - 1: +1, -1, or 0 when undecided at this precision.
using Probe = std::function<int(const Dyadic&)>;

RootBracket bisect(const Probe& probe, unsigned long bits, const std::string& method) {
    Dyadic lo(0), hi(1);
    if (probe(hi) < 0) throw NumericError("no root in [0, 1]");
    while (hi - lo > Dyadic::pow2(-static_cast<long>(bits))) {
        Dyadic mid = (lo + hi).scaled(-1);
        int s = probe(mid);
        if (s == 0) return {mid, mid, mid.to_double(), method};
        if (s > 0)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi, ((lo + hi).scaled(-1)).to_double(), method};
}

int compare_one(const Dyadic& v) {
    if (v > Dyadic(1)) return 1;
    if (v < Dyadic(1)) return -1;
    return 0;
}

}  // namespace

RootBracket solve_pk(int k, double tol) {
    if (k < 0) throw DomainError("p_k needs k >= 0");
    unsigned long bits = bits_for_tol(tol) + 2;
    if (k <= 8) {
        IntegerPolynomial t = height_polynomial(k);
        return bisect([&](const Dyadic& c) { return compare_one(t(c)); }, bits, "horner");
    }
    auto probe = [k](const Dyadic& c) {
        for (unsigned long prec = 128; prec <= 8192; prec *= 2) {
            Dyadic lo(0), hi(0);
            bool above = false, hi_past_one = false;
            for (int step = 0; step <= k; ++step) {
                lo = (lo * lo + c).floor_to(prec);
                // The orbit increases, so once a bound passes 1 it never comes back.
                if (lo > Dyadic(1)) {
                    above = true;
                    break;
                }
                if (!hi_past_one) {
                    hi = (hi * hi + c).ceil_to(prec);
                    hi_past_one = hi > Dyadic(1);
                }
            }
            if (above) return 1;
            if (!hi_past_one && hi < Dyadic(1)) return -1;
            if (lo == Dyadic(1) && hi == Dyadic(1)) return 0;
        }
        throw NumericError("quadratic iteration undecided at 8192 bits of precision");
    };
    return bisect(probe, bits, "interval-iteration");
}

SubtreeBound subtree_closed_bound(const std::vector<BinaryTree>& trees, double tol) {
    std::set<BinaryTree> family(trees.begin(), trees.end());
    if (!family.count(BinaryTree::leaf())) throw DomainError("family must contain the trivial tree");
    for (const auto& t : family) {
        if (t.is_leaf()) continue;
        if (!family.count(t.left()) || !family.count(t.right()))
            throw DomainError("family is not closed under taking subtrees: missing a child of " + t.str());
    }
    SubtreeBound out;
    for (const auto& t : family) {
        std::size_t l = t.leaves();
        if (out.a.coeffs.size() <= l) out.a.coeffs.resize(l + 1, 0);
        out.a.coeffs[l] += 1;
    }
    out.p = bisect([&](const Dyadic& c) { return compare_one(out.a(c)); }, bits_for_tol(tol) + 2, "horner");
    out.two_p = 2 * out.p.value;
    out.above_half = out.p.lo.scaled(1) > Dyadic::pow2(-1);
    return out;
}

}  // namespace thompson
