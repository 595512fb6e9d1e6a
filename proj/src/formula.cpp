#include "farey/formula.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <utility>

namespace farey {

namespace {

constexpr std::uint64_t kMaxLength = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kMaxLength - b ? kMaxLength : a + b;
}

// Printing beyond this many characters is refused rather than attempted.
constexpr std::uint64_t kMaxPrintable = std::uint64_t{1} << 31;

}  // namespace

Formula Formula::zero() {
    static const Formula z(std::make_shared<const Node>(Node{Kind::Zero, 1, {}, {}}));
    return z;
}

Formula Formula::gen() {
    static const Formula x(std::make_shared<const Node>(Node{Kind::Gen, 1, {}, {}}));
    return x;
}

Formula Formula::star(Formula child) {
    std::uint64_t len = saturating_add(child.length(), 1);
    return Formula(std::make_shared<const Node>(Node{Kind::Star, len, std::move(child), {}}));
}

Formula Formula::plus(Formula left, Formula right) {
    std::uint64_t len = saturating_add(saturating_add(left.length(), right.length()), 3);
    return Formula(
        std::make_shared<const Node>(Node{Kind::Plus, len, std::move(left), std::move(right)}));
}

const Formula& Formula::child() const {
    if (kind() != Kind::Star) throw std::logic_error("child() on a non-star formula");
    return node_->a;
}

const Formula& Formula::left() const {
    if (kind() != Kind::Plus) throw std::logic_error("left() on a non-sum formula");
    return node_->a;
}

const Formula& Formula::right() const {
    if (kind() != Kind::Plus) throw std::logic_error("right() on a non-sum formula");
    return node_->b;
}

namespace {

bool equal_impl(const Formula& a, const Formula& b, std::set<std::pair<const void*, const void*>>& seen) {
    if (a.id() == b.id()) return true;
    if (a.kind() != b.kind() || a.length() != b.length()) return false;
    switch (a.kind()) {
    case Formula::Kind::Zero:
    case Formula::Kind::Gen:
        return true;
    default:
        break;
    }
    auto key = std::make_pair(a.id(), b.id());
    if (seen.count(key)) return true;
    bool eq = a.kind() == Formula::Kind::Star
                  ? equal_impl(a.child(), b.child(), seen)
                  : equal_impl(a.left(), b.left(), seen) && equal_impl(a.right(), b.right(), seen);
    if (eq) seen.insert(key);
    return eq;
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
    std::set<std::pair<const void*, const void*>> seen;
    return equal_impl(a, b, seen);
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

// "⊕" in UTF-8.
constexpr std::string_view kOplusUtf8 = "\xE2\x8A\x95";

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse_all() {
        skip_ws();
        if (at_end()) throw ParseError("empty input", pos_);
        Formula f = parse_formula();
        skip_ws();
        if (!at_end()) {
            if (peek() == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError(std::string("unexpected '") + peek() + "' after formula", pos_);
        }
        return f;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Formula parse_formula() {
        Formula f = parse_primary();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            f = Formula::star(std::move(f));
        }
        return f;
    }

    Formula parse_primary() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input, expected a formula", pos_);
        char c = peek();
        if (c == 'X') {
            ++pos_;
            return Formula::gen();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number_prefixed();
        if (c == '(') return parse_binary();
        if (c == ')') throw ParseError("unbalanced ')'", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Formula parse_number_prefixed() {
        std::size_t start = pos_;
        std::uint64_t n = 0;
        bool overflow = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (n > (kMaxLength - digit) / 10) overflow = true;
            n = n * 10 + digit;
            ++pos_;
        }
        std::size_t digits_end = pos_;
        skip_ws();
        if (!at_end() && peek() == '.') {
            if (overflow) throw ParseError("multiplier too large", start);
            if (n == 0) throw ParseError("multiplier must be positive", start);
            ++pos_;
            Formula body = parse_formula();
            return scalar_multiple(n, body);
        }
        if (digits_end - start == 1 && text_[start] == '0') return Formula::zero();
        throw ParseError("a number must be followed by '.'", start);
    }

    Formula parse_binary() {
        std::size_t open = pos_;
        ++pos_;
        Formula lhs = parse_formula();
        skip_ws();
        if (at_end()) throw ParseError("unbalanced '(': expected an operator", open);
        char op = 0;
        if (peek() == '+' || peek() == '|' || peek() == '&') {
            op = peek();
            ++pos_;
        } else if (text_.substr(pos_, kOplusUtf8.size()) == kOplusUtf8) {
            op = '+';
            pos_ += kOplusUtf8.size();
        } else if (peek() == ')') {
            throw ParseError("expected an operator before ')'", pos_);
        } else {
            throw ParseError(std::string("expected '+', '|' or '&', found '") + peek() + "'", pos_);
        }
        Formula rhs = parse_formula();
        skip_ws();
        if (at_end()) throw ParseError("unbalanced '(': missing ')'", open);
        if (peek() != ')') throw ParseError(std::string("expected ')', found '") + peek() + "'", pos_);
        ++pos_;
        switch (op) {
        case '|': return join(lhs, rhs);
        case '&': return meet(lhs, rhs);
        default: return Formula::plus(std::move(lhs), std::move(rhs));
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print_impl(const Formula& f, const PrintOptions& options, std::string& out) {
    switch (f.kind()) {
    case Formula::Kind::Zero: out += '0'; break;
    case Formula::Kind::Gen: out += 'X'; break;
    case Formula::Kind::Star:
        print_impl(f.child(), options, out);
        out += '*';
        break;
    case Formula::Kind::Plus:
        out += '(';
        print_impl(f.left(), options, out);
        if (options.unicode_plus)
            out += kOplusUtf8;
        else
            out += '+';
        print_impl(f.right(), options, out);
        out += ')';
        break;
    }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f, PrintOptions options) {
    if (f.length() > kMaxPrintable)
        throw std::length_error("formula too long to print (" + std::to_string(f.length()) + " symbols)");
    std::string out;
    out.reserve(f.length() + (options.unicode_plus ? 2 * f.length() / 3 : 0));
    print_impl(f, options, out);
    return out;
}

Formula scalar_multiple(std::uint64_t n, const Formula& f) {
    if (n == 0) throw std::invalid_argument("scalar_multiple: n must be positive");
    Formula acc = f;
    for (std::uint64_t i = 1; i < n; ++i) acc = Formula::plus(std::move(acc), f);
    return acc;
}

Formula join(const Formula& a, const Formula& b) {
    return Formula::plus(Formula::star(Formula::plus(Formula::star(a), b)), b);
}

Formula meet(const Formula& a, const Formula& b) {
    return Formula::star(join(Formula::star(a), Formula::star(b)));
}

Formula odot(const Formula& a, const Formula& b) {
    return Formula::star(Formula::plus(Formula::star(a), Formula::star(b)));
}

Formula ominus(const Formula& a, const Formula& b) {
    return Formula::star(Formula::plus(Formula::star(a), b));
}

Formula distance(const Formula& phi, const Formula& psi) {
    return Formula::plus(ominus(phi, psi), ominus(psi, phi));
}

}  // namespace farey
