#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace farey {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

std::string to_string(const Int& value);
Int parse_int(std::string_view text);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const Int& value) : value_(value) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return value_.get_num(); }
    Int den() const { return value_.get_den(); }
    const mpz_class& num_ref() const { return value_.get_num(); }
    const mpz_class& den_ref() const { return value_.get_den(); }

    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rat operator-() const { return from_raw(-value_); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    static Rat from_raw(mpq_class q);

private:
    mpq_class value_;
};

/// Renders as "p/q"; integers render as "n/1".
std::string to_string(const Rat& r);
std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Accepts "p/q" or "n", with optional sign and surrounding whitespace.
/// Non-reduced input is normalized.  Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

Rat midpoint(const Rat& a, const Rat& b);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);
Rat abs(const Rat& a);

/// Largest integer <= r.
Int floor(const Rat& r);

/// Inverse of a modulo m in [0, m); throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

}  // namespace farey
