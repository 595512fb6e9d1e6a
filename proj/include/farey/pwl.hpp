#pragma once

#include "farey/formula.hpp"
#include "farey/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace farey {

enum class Side : std::uint8_t { Left, Right };

/// The affine function x -> slope * x + intercept with integer coefficients.
struct LinearPiece {
    Int slope;
    Int intercept;

    Rat at(const Rat& x) const;
    friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

/// Continuous piecewise-linear map [0,1] -> [0,1] whose pieces have integer
/// coefficients (a one-variable McNaughton function).
///
/// The representation is canonical: breakpoints 0 = x_0 < ... < x_k = 1,
/// piece i lives on [x_i, x_{i+1}], and adjacent pieces always differ.  Two
/// functions are equal iff their representations are identical.
class PwlFunction {
public:
    static PwlFunction constant(long value);
    static PwlFunction identity();

    /// Validates continuity, domain and range, then canonicalizes.
    /// Throws std::invalid_argument on malformed data.
    static PwlFunction from_pieces(std::vector<Rat> breakpoints, std::vector<LinearPiece> pieces);

    const std::vector<Rat>& breakpoints() const { return breakpoints_; }
    const std::vector<LinearPiece>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    /// Index of the piece valid at x; at a breakpoint the piece to its right
    /// is returned, except at x = 1.
    std::size_t piece_index(const Rat& x) const;

    friend bool operator==(const PwlFunction&, const PwlFunction&) = default;

private:
    friend class PwlBuilder;
    PwlFunction() = default;
    std::vector<Rat> breakpoints_;
    std::vector<LinearPiece> pieces_;
};

/// Pointwise operations.  All results are canonical.
PwlFunction star(const PwlFunction& p);
PwlFunction oplus(const PwlFunction& p, const PwlFunction& q);
PwlFunction pointwise_max(const PwlFunction& p, const PwlFunction& q);
PwlFunction pointwise_min(const PwlFunction& p, const PwlFunction& q);
/// |p - q|, by merging breakpoints and subtracting piecewise.
PwlFunction pointwise_abs_difference(const PwlFunction& p, const PwlFunction& q);
/// p <= q everywhere on [0,1].
bool pointwise_leq(const PwlFunction& p, const PwlFunction& q);

/// McNaughton function of a formula, by structural induction.  Shared
/// subformulas are compiled once.
PwlFunction semantics(const Formula& f);

/// Throws std::domain_error when r is outside [0,1].
Rat eval(const PwlFunction& p, const Rat& r);

/// f(r) by structural induction on the formula, without building a
/// PwlFunction.  Throws std::domain_error when r is outside [0,1].
Rat eval_formula(const Formula& f, const Rat& r);

/// Slope of the piece immediately to the given side of z.
/// Left at 0 and Right at 1 are rejected with std::domain_error.
Int one_sided_slope(const PwlFunction& p, const Rat& z, Side side);

/// One-sided derivative computed on the formula: stars negate, and a sum
/// with component values v_a, v_b and slope sum s has slope s when
/// v_a + v_b < 1, 0 when v_a + v_b > 1, and min(0, s) (right) or max(0, s)
/// (left) when v_a + v_b = 1.
Int slope_by_induction(const Formula& f, const Rat& z, Side side);

/// Value and one-sided slope together.
struct ValueSlope {
    Rat value;
    Int slope;
};
ValueSlope value_and_slope(const Formula& f, const Rat& z, Side side);

struct Distance {
    Formula formula;
    PwlFunction function;
};
/// The distance formula of (φ, ψ) together with its McNaughton function.
Distance abs_diff(const Formula& phi, const Formula& psi);

/// True iff one linear piece covers [lo, hi].  Requires 0 <= lo < hi <= 1.
bool is_linear_on(const PwlFunction& p, const Rat& lo, const Rat& hi);

/// Text form: {"pieces":[{"x_lo":"0/1","x_hi":"1/2","m":"2","n":"0"},...]}
std::string to_json(const PwlFunction& p);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
PwlFunction pwl_from_json(std::string_view text);

/// A formula flattened into evaluation order, with shared nodes compiled once.
/// Evaluating at c/d keeps every intermediate value as k/d with 0 <= k <= d,
/// which holds for any McNaughton function.
class FormulaProgram {
public:
    explicit FormulaProgram(const Formula& f);

    /// Numerator k of f(c/d) = k/d.  Requires 0 <= c <= d, d >= 1.
    std::int64_t eval_scaled(std::int64_t c, std::int64_t d) const;
    /// Same, reusing a caller-owned buffer across calls.
    std::int64_t eval_scaled(std::int64_t c, std::int64_t d, std::vector<std::int64_t>& scratch) const;
    Int eval_scaled(const Int& c, const Int& d) const;

    std::size_t size() const { return ops_.size(); }

    struct Op {
        Formula::Kind kind;
        std::uint32_t a;
        std::uint32_t b;
    };
    const std::vector<Op>& ops() const { return ops_; }

private:
    std::vector<Op> ops_;
};

}  // namespace farey
