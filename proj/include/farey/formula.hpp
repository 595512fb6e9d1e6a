#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

/// Formulas over the involutive-monoid language {0, X, *, ⊕}.
///
/// Formulas are immutable and share structure: a subformula used twice is
/// stored once, so synthesized formulas (joins, scalar multiples) stay small
/// in memory even when their printed form is long.
class Formula {
public:
    enum class Kind : std::uint8_t { Zero, Gen, Star, Plus };

    static Formula zero();
    static Formula gen();
    static Formula star(Formula child);
    static Formula plus(Formula left, Formula right);

    Kind kind() const;
    bool is_zero() const { return kind() == Kind::Zero; }
    bool is_gen() const { return kind() == Kind::Gen; }

    /// Operand of a Star node.
    const Formula& child() const;
    /// Operands of a Plus node.
    const Formula& left() const;
    const Formula& right() const;

    /// Number of characters of the canonical core string, parentheses
    /// included.  Saturates at UINT64_MAX.
    std::uint64_t length() const;

    /// Identity of the shared node; equal ids imply equal formulas.
    const void* id() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    Formula() = default;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::uint64_t length;
    Formula a;
    Formula b;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline std::uint64_t Formula::length() const { return node_->length; }

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a core or sugared formula.  Accepts '+' or '⊕' for the sum,
/// "(a|b)" for join, "(a&b)" for meet and "k.a" for k-fold sums; sugar is
/// expanded before the tree is built.  Whitespace between tokens is ignored.
Formula parse(std::string_view text);

struct PrintOptions {
    bool unicode_plus = false;  // emit "⊕" instead of "+"
};

std::string print(const Formula& f, PrintOptions options = {});

inline std::uint64_t length(const Formula& f) { return f.length(); }

/// n-fold sum f ⊕ ... ⊕ f, associated to the left.  Throws
/// std::invalid_argument for n = 0.
Formula scalar_multiple(std::uint64_t n, const Formula& f);

/// (a* ⊕ b)* ⊕ b, the pointwise max.
Formula join(const Formula& a, const Formula& b);
/// (a* | b*)*, the pointwise min.
Formula meet(const Formula& a, const Formula& b);
/// (a* ⊕ b*)*, truncated product.
Formula odot(const Formula& a, const Formula& b);
/// (a* ⊕ b)*, truncated difference max(0, a - b).
Formula ominus(const Formula& a, const Formula& b);

/// ((φ* ⊕ ψ)* ⊕ (ψ* ⊕ φ)*), whose function is |f_φ - f_ψ|.
Formula distance(const Formula& phi, const Formula& psi);

}  // namespace farey
