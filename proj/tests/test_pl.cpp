#include "support.hpp"

#include "thompson/pl_map.hpp"

#include <doctest.h>

#include <map>

using namespace thompson;
using testing::random_element;
using testing::rng;

namespace {

std::vector<Dyadic> probes(const Dyadic& lo, const Dyadic& hi, int count) {
    std::vector<Dyadic> out;
    std::uniform_int_distribution<long> num(0, 1 << 12);
    for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * Dyadic(mpz_class(num(rng())), 12));
    return out;
}

Dyadic x1_line(const Dyadic& t) {
    if (t <= Dyadic(0)) return t;
    if (t <= Dyadic(1)) return t * Dyadic(2);
    return t + Dyadic(1);
}

}  // namespace

TEST_SUITE("pl") {
    TEST_CASE("generators on the line") {
        PLMap x0 = to_pl_line(Element::generator(0)), x1 = to_pl_line(Element::generator(1));
        CHECK(x0(Dyadic(0)) == Dyadic(1));
        CHECK(x0(Dyadic(-5)) == Dyadic(-4));
        CHECK(x1(Dyadic::parse("1/2")) == Dyadic(1));
        CHECK(x1(Dyadic(-3)) == Dyadic(-3));
        CHECK(x1(Dyadic(2)) == Dyadic(3));
        for (const auto& t : probes(Dyadic(-8), Dyadic(8), 20)) {
            CHECK(x0(t) == t + Dyadic(1));
            CHECK(x1(t) == x1_line(t));
        }
        CHECK(to_pl_line(Element())(Dyadic::parse("-7/16")) == Dyadic::parse("-7/16"));
    }

    TEST_CASE("x0 on the unit interval") {
        PLMap u = to_pl_unit(Element::generator(0));
        CHECK(u(Dyadic(0)) == Dyadic(0));
        CHECK(u(Dyadic(1)) == Dyadic(1));
        // leaves [0,1/4] [1/4,1/2] [1/2,1] onto [0,1/2] [1/2,3/4] [3/4,1]
        CHECK(u(Dyadic::parse("1/4")) == Dyadic::parse("1/2"));
        CHECK(u(Dyadic::parse("1/2")) == Dyadic::parse("3/4"));
        CHECK(u(Dyadic::parse("1/8")) == Dyadic::parse("1/4"));
    }

    TEST_CASE("psi conjugates the unit and line models") {
        for (const auto& t : probes(Dyadic(-6), Dyadic(6), 40)) {
            CHECK(psi_inv(psi(t)) == t);
            CHECK(psi(t) > Dyadic(0));
            CHECK(psi(t) < Dyadic(1));
        }
        CHECK(psi(Dyadic(0)) == Dyadic::parse("1/2"));
        CHECK(psi(Dyadic(1)) == Dyadic::parse("3/4"));
        CHECK(psi(Dyadic(-1)) == Dyadic::parse("1/4"));
        for (int i = 0; i < 100; ++i) {
            Element f = random_element();
            PLMap u = to_pl_unit(f), l = to_pl_line(f);
            for (const auto& t : probes(Dyadic(-5), Dyadic(5), 5)) CHECK(psi_inv(u(psi(t))) == l(t));
        }
    }

    TEST_CASE("homomorphism") {
        for (int i = 0; i < 500; ++i) {
            Element f = random_element(), g = random_element();
            Element fg = multiply(f, g);
            CHECK(to_pl_line(fg) == compose(to_pl_line(f), to_pl_line(g)));
            CHECK(to_pl_unit(fg) == compose(to_pl_unit(f), to_pl_unit(g)));
            CHECK(to_pl_half_line(fg) == compose(to_pl_half_line(f), to_pl_half_line(g)));
            // pointwise, with compose meaning f first
            for (const auto& t : probes(Dyadic(-4), Dyadic(4), 3)) CHECK(to_pl_line(fg)(t) == to_pl_line(g)(to_pl_line(f)(t)));
        }
    }

    TEST_CASE("inverse map") {
        for (int i = 0; i < 200; ++i) {
            Element f = random_element();
            CHECK(inverse(to_pl_line(f)) == to_pl_line(invert(f)));
            CHECK(compose(to_pl_unit(f), to_pl_unit(invert(f))) == PLMap::identity(PLMap::Domain::Unit));
        }
    }

    TEST_CASE("dyadic breakpoints and power of two slopes") {
        for (int i = 0; i < 300; ++i) {
            Element f = random_element();
            for (const PLMap& m : {to_pl_unit(f), to_pl_half_line(f), to_pl_line(f)}) {
                CHECK(m.is_valid());
                CHECK_NOTHROW(m.slope_exponents());
            }
        }
    }

    TEST_CASE("injective on samples") {
        std::map<std::string, std::string> seen;  // map -> element
        for (int i = 0; i < 400; ++i) {
            Element f = random_element(10);
            auto [it, fresh] = seen.emplace(to_pl_line(f).simplified().str(), f.key());
            CHECK(it->second == f.key());
            (void)fresh;
        }
    }
}
