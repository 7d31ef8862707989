#ifndef SYLV_RATIONAL_HPP
#define SYLV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

#include "sylv/errors.hpp"

namespace sylv {

using Int = mpz_class;

/// Exact rational scalar. Always held in lowest terms with a positive
/// denominator; zero is 0/1. Every operation is exact, there is no
/// rounding anywhere in the library.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    /// Accepts "p" or "p/q" with decimal digits and an optional leading
    /// sign on p. Throws ParseError on anything else (including q <= 0).
    static Rat parse(const std::string& text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "p" when the value is an integer, "p/q" otherwise.
    std::string str() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// base^e with the 0^0 = 1 convention.
Rat pow(const Rat& base, unsigned long e);

/// Bits needed for |n|; 0 for n = 0.
std::size_t bit_length(const Int& n);

/// Larger of the numerator/denominator bit lengths.
std::size_t bit_length(const Rat& r);

/// Exact integer parse (no '/'). Throws ParseError.
Int parse_int(const std::string& text);

}  // namespace sylv

#endif
