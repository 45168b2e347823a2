#include "thompson/dyadic.hpp"

#include "thompson/errors.hpp"

#include <cmath>
#include <functional>

namespace thompson {

namespace {

mpz_class shl(const mpz_class& v, unsigned long k) {
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
    return r;
}

}  // namespace

Dyadic::Dyadic(const mpz_class& num, unsigned long exponent) : num_(num), exp_(exponent) {
    canonicalize();
}

void Dyadic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
    unsigned long s = tz < exp_ ? tz : exp_;
    if (s > 0) {
        mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), s);
        exp_ -= s;
    }
}

Dyadic Dyadic::pow2(long k) {
    if (k >= 0) return Dyadic(shl(mpz_class(1), static_cast<unsigned long>(k)));
    return Dyadic(mpz_class(1), static_cast<unsigned long>(-k));
}

Dyadic Dyadic::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Dyadic(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        std::string den = s.substr(slash + 1);
        if (den.rfind("2^", 0) == 0) {
            long e = std::stol(den.substr(2));
            if (e < 0) throw ParseError("negative exponent in dyadic: " + s);
            return Dyadic(num, static_cast<unsigned long>(e));
        }
        mpz_class d(den);
        if (d <= 0 || mpz_popcount(d.get_mpz_t()) != 1)
            throw ParseError("denominator is not a power of two: " + s);
        return Dyadic(num, mpz_scan1(d.get_mpz_t(), 0));
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed dyadic rational: " + s);
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (exp_ == o.exp_) return Dyadic(num_ + o.num_, exp_);
    if (exp_ > o.exp_) return Dyadic(num_ + shl(o.num_, exp_ - o.exp_), exp_);
    return Dyadic(shl(num_, o.exp_ - exp_) + o.num_, o.exp_);
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }

Dyadic Dyadic::scaled(long k) const {
    if (k < 0) return Dyadic(num_, exp_ + static_cast<unsigned long>(-k));
    auto uk = static_cast<unsigned long>(k);
    if (exp_ >= uk) return Dyadic(num_, exp_ - uk);
    return Dyadic(shl(num_, uk - exp_), 0);
}

Dyadic Dyadic::floor_to(unsigned long bits) const {
    if (exp_ <= bits) return *this;
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), num_.get_mpz_t(), exp_ - bits);
    return Dyadic(q, bits);
}

Dyadic Dyadic::ceil_to(unsigned long bits) const {
    if (exp_ <= bits) return *this;
    mpz_class q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), num_.get_mpz_t(), exp_ - bits);
    return Dyadic(q, bits);
}

mpz_class Dyadic::floor() const {
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), num_.get_mpz_t(), exp_);
    return q;
}

long Dyadic::log2_exact(bool& ok) const {
    ok = false;
    if (num_ <= 0) return 0;
    if (exp_ > 0) {
        if (num_ != 1) return 0;
        ok = true;
        return -static_cast<long>(exp_);
    }
    if (mpz_popcount(num_.get_mpz_t()) != 1) return 0;
    ok = true;
    return static_cast<long>(mpz_scan1(num_.get_mpz_t(), 0));
}

double Dyadic::to_double() const {
    long e2 = 0;
    double d = mpz_get_d_2exp(&e2, num_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(e2 - static_cast<long>(exp_)));
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q(num_, shl(mpz_class(1), exp_));
    q.canonicalize();
    return q;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.get_str();
    return num_.get_str() + "/" + shl(mpz_class(1), exp_).get_str();
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    int c;
    if (exp_ == o.exp_)
        c = cmp(num_, o.num_);
    else if (exp_ > o.exp_)
        c = cmp(num_, shl(o.num_, exp_ - o.exp_));
    else
        c = cmp(shl(num_, o.exp_ - exp_), o.num_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t Dyadic::hash() const {
    std::size_t h = std::hash<unsigned long>()(exp_);
    std::size_t limbs = mpz_size(num_.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i)
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(num_.get_mpz_t(), i));
    return h ^ static_cast<std::size_t>(sgn(num_) + 1);
}

}  // namespace thompson
