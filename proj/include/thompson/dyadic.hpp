#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace thompson {

// Exact value numerator / 2^exponent, kept canonical (exponent 0 or numerator odd).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : num_(v) {}
    explicit Dyadic(const mpz_class& v) : num_(v) {}
    Dyadic(const mpz_class& num, unsigned long exponent);

    static Dyadic pow2(long k);          // 2^k, k may be negative
    static Dyadic parse(const std::string& s);  // "a", "a/2^e" or "a/b" with b a power of 2

    const mpz_class& numerator() const { return num_; }
    unsigned long exponent() const { return exp_; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator-() const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

    // Multiply by 2^k.
    Dyadic scaled(long k) const;

    // Round to a multiple of 2^-bits, towards -inf / +inf.
    Dyadic floor_to(unsigned long bits) const;
    Dyadic ceil_to(unsigned long bits) const;

    mpz_class floor() const;
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return sgn(num_); }

    // Returns k if this == 2^k, otherwise false via `ok`.
    long log2_exact(bool& ok) const;

    double to_double() const;
    mpq_class to_mpq() const;
    std::string str() const;

    bool operator==(const Dyadic& o) const { return exp_ == o.exp_ && num_ == o.num_; }
    std::strong_ordering operator<=>(const Dyadic& o) const;

    std::size_t hash() const;

private:
    void canonicalize();

    mpz_class num_ = 0;
    unsigned long exp_ = 0;
};

}  // namespace thompson
