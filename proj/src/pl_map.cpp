#include "thompson/pl_map.hpp"

#include "thompson/errors.hpp"
#include "thompson/forest.hpp"

#include <algorithm>
#include <set>

namespace thompson {

namespace {

// Exponent k with b == a * 2^k, for positive dyadics a, b.
long ratio_log2(const Dyadic& a, const Dyadic& b) {
    mpq_class q = b.to_mpq() / a.to_mpq();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n <= 0) throw NumericError("non-increasing PL segment");
    if (d == 1 && mpz_popcount(n.get_mpz_t()) == 1) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
    if (n == 1 && mpz_popcount(d.get_mpz_t()) == 1) return -static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
    throw NumericError("PL slope is not a power of 2");
}

// Breakpoints of the subdivision given by a tree placed over [start, start + 1].
void subdivision(const BinaryTree& t, const Dyadic& start, std::vector<Dyadic>& out) {
    Dyadic x = start;
    for (int d : t.leaf_depths()) {
        out.push_back(x);
        x += Dyadic::pow2(-d);
    }
}

std::vector<Dyadic> forest_points(const std::vector<BinaryTree>& forest, long first) {
    std::vector<Dyadic> out;
    long col = first;
    for (const auto& t : forest) subdivision(t, Dyadic(col++), out);
    out.emplace_back(col);
    return out;
}

}  // namespace

PLMap PLMap::identity(Domain d) {
    PLMap m;
    m.domain = d;
    if (d == Domain::Unit) m.xs = m.ys = {Dyadic(0), Dyadic(1)};
    if (d == Domain::HalfLine) m.xs = m.ys = {Dyadic(0)};
    return m;
}

Dyadic PLMap::operator()(const Dyadic& t) const {
    if (domain != Domain::Line && t < Dyadic(0)) throw DomainError("point outside the domain: " + t.str());
    if (domain == Domain::Unit && t > Dyadic(1)) throw DomainError("point outside the domain: " + t.str());
    if (xs.empty()) return t + Dyadic(left_offset);
    if (t <= xs.front()) return t == xs.front() ? ys.front() : t + Dyadic(left_offset);
    if (t >= xs.back()) return t + Dyadic(right_offset);
    auto it = std::upper_bound(xs.begin(), xs.end(), t);
    std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    long k = ratio_log2(xs[i + 1] - xs[i], ys[i + 1] - ys[i]);
    return ys[i] + (t - xs[i]).scaled(k);
}

std::vector<long> PLMap::slope_exponents() const {
    std::vector<long> out;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) out.push_back(ratio_log2(xs[i + 1] - xs[i], ys[i + 1] - ys[i]));
    return out;
}

bool PLMap::is_valid() const {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]) || !(ys[i] < ys[i + 1])) return false;
    try {
        slope_exponents();
    } catch (const NumericError&) {
        return false;
    }
    switch (domain) {
        case Domain::Unit:
            return xs.size() >= 2 && xs.front() == Dyadic(0) && ys.front() == Dyadic(0) && xs.back() == Dyadic(1) &&
                   ys.back() == Dyadic(1);
        case Domain::HalfLine:
            return !xs.empty() && xs.front() == Dyadic(0) && ys.front() == Dyadic(0) &&
                   ys.back() == xs.back() + Dyadic(right_offset);
        case Domain::Line:
            if (xs.empty()) return left_offset == right_offset;
            return ys.front() == xs.front() + Dyadic(left_offset) && ys.back() == xs.back() + Dyadic(right_offset);
    }
    return false;
}

PLMap PLMap::simplified() const {
    PLMap out = *this;
    out.xs.clear();
    out.ys.clear();
    auto slopes = slope_exponents();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool keep;
        if (i == 0) {
            keep = domain != Domain::Line || slopes.empty() || slopes.front() != 0;
        } else if (i + 1 == xs.size()) {
            keep = domain == Domain::Unit || slopes.back() != 0;
        } else {
            keep = slopes[i - 1] != slopes[i];
        }
        if (keep) {
            out.xs.push_back(xs[i]);
            out.ys.push_back(ys[i]);
        }
    }
    if (out.domain == Domain::Line && out.xs.empty()) out.right_offset = out.left_offset = left_offset;
    return out;
}

bool PLMap::operator==(const PLMap& o) const {
    PLMap a = simplified(), b = o.simplified();
    if (a.domain != b.domain || a.xs != b.xs || a.ys != b.ys) return false;
    if (a.domain == Domain::Unit) return true;
    if (a.domain == Domain::HalfLine) return a.right_offset == b.right_offset;
    return a.left_offset == b.left_offset && a.right_offset == b.right_offset;
}

std::string PLMap::str() const {
    std::string s;
    if (domain == Domain::Line) s += "t" + std::string(left_offset < 0 ? "" : "+") + std::to_string(left_offset) + " ";
    for (std::size_t i = 0; i < xs.size(); ++i) s += "(" + xs[i].str() + "," + ys[i].str() + ") ";
    if (domain != Domain::Unit) s += "t" + std::string(right_offset < 0 ? "" : "+") + std::to_string(right_offset);
    else if (!s.empty()) s.pop_back();
    return s;
}

PLMap compose(const PLMap& f, const PLMap& g) {
    if (f.domain != g.domain) throw DomainError("cannot compose PL maps on different domains");
    PLMap finv = inverse(f);
    std::set<Dyadic> pts(f.xs.begin(), f.xs.end());
    for (const auto& y : g.xs) {
        if (f.domain != PLMap::Domain::Line && y < Dyadic(0)) continue;
        pts.insert(finv(y));
    }
    PLMap out;
    out.domain = f.domain;
    out.left_offset = f.left_offset + g.left_offset;
    out.right_offset = f.right_offset + g.right_offset;
    for (const auto& x : pts) {
        out.xs.push_back(x);
        out.ys.push_back(g(f(x)));
    }
    return out.simplified();
}

PLMap inverse(const PLMap& f) {
    PLMap out = f;
    std::swap(out.xs, out.ys);
    out.left_offset = -f.left_offset;
    out.right_offset = -f.right_offset;
    return out;
}

PLMap to_pl_unit(const Element& f) {
    PLMap m;
    m.domain = PLMap::Domain::Unit;
    subdivision(f.top(), Dyadic(0), m.xs);
    subdivision(f.bottom(), Dyadic(0), m.ys);
    m.xs.emplace_back(1);
    m.ys.emplace_back(1);
    return m.simplified();
}

PLMap to_pl_half_line(const Element& f) {
    OneWayForestDiagram d = to_one_way(f);
    PLMap m;
    m.domain = PLMap::Domain::HalfLine;
    std::size_t n = std::max(forest_leaves(d.top), forest_leaves(d.bottom));
    while (forest_leaves(d.top) < n) d.top.emplace_back();
    while (forest_leaves(d.bottom) < n) d.bottom.emplace_back();
    m.xs = forest_points(d.top, 0);
    m.ys = forest_points(d.bottom, 0);
    m.right_offset = static_cast<long>(d.bottom.size()) - static_cast<long>(d.top.size());
    return m.simplified();
}

PLMap to_pl_line(const Element& f) {
    TwoWayForestDiagram d = to_two_way(f);
    PLMap m;
    m.domain = PLMap::Domain::Line;
    long tp = static_cast<long>(d.top_pointer), bp = static_cast<long>(d.bottom_pointer);
    m.xs = forest_points(d.top, -tp);
    m.ys = forest_points(d.bottom, -bp);
    m.left_offset = tp - bp;
    m.right_offset = (static_cast<long>(d.bottom.size()) - bp) - (static_cast<long>(d.top.size()) - tp);
    return m.simplified();
}

Dyadic psi(const Dyadic& t) {
    mpz_class k = t.floor();
    if (!k.fits_slong_p()) throw NumericError("psi argument out of range");
    long n = k.get_si();
    Dyadic frac = t - Dyadic(n);
    if (n >= 0) return Dyadic(1) - Dyadic::pow2(-n - 1) + frac.scaled(-n - 2);
    return Dyadic::pow2(n - 1) + frac.scaled(n - 1);
}

Dyadic psi_inv(const Dyadic& u) {
    if (u <= Dyadic(0) || u >= Dyadic(1)) throw DomainError("psi_inv needs a point of (0, 1)");
    if (u >= Dyadic::pow2(-1)) {
        Dyadic rest = Dyadic(1) - u;
        long n = 0;
        while (rest <= Dyadic::pow2(-n - 2)) ++n;
        return Dyadic(n) + (u - (Dyadic(1) - Dyadic::pow2(-n - 1))).scaled(n + 2);
    }
    long k = -1;
    while (u < Dyadic::pow2(k - 1)) --k;
    return Dyadic(k) + (u - Dyadic::pow2(k - 1)).scaled(1 - k);
}

}  // namespace thompson
