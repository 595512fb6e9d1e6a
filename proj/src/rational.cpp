#include "farey/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace farey {

std::string to_string(const Int& value) { return value.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Int parse_int(std::string_view text) {
    text = trim(text);
    if (!is_integer_literal(text))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return Int(std::string(text), 10);
}

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.value_ == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rat Rat::from_raw(mpq_class q) {
    Rat r;
    r.value_ = std::move(q);
    r.value_.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    return r.num_ref().get_str() + "/" + r.den_ref().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << to_string(r); }

Rat parse_rat(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    std::string_view den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    Int den = parse_int(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
}

Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

Int floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.num_ref().get_mpz_t(), r.den_ref().get_mpz_t());
    return q;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int result;
    if (m <= 0 || mpz_invert(result.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("no modular inverse of " + a.get_str() + " mod " + m.get_str());
    return result;
}

}  // namespace farey
