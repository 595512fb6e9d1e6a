#include "farey/pwl.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace farey {

Rat LinearPiece::at(const Rat& x) const { return Rat(slope) * x + Rat(intercept); }

// Assembles canonical functions from already-valid pieces.
class PwlBuilder {
public:
    explicit PwlBuilder(std::size_t reserve = 0) {
        out_.breakpoints_.reserve(reserve + 1);
        out_.pieces_.reserve(reserve);
        out_.breakpoints_.emplace_back(0);
    }

    // Appends `piece` on [current end, hi]; merges with the previous piece
    // when collinear.
    void push(const Rat& hi, LinearPiece piece) {
        if (!(out_.breakpoints_.back() < hi)) return;
        if (!out_.pieces_.empty() && out_.pieces_.back() == piece) {
            out_.breakpoints_.back() = hi;
            return;
        }
        out_.pieces_.push_back(std::move(piece));
        out_.breakpoints_.push_back(hi);
    }

    PwlFunction finish() && { return std::move(out_); }

private:
    PwlFunction out_;
};

PwlFunction PwlFunction::constant(long value) {
    if (value != 0 && value != 1) throw std::invalid_argument("McNaughton constants are 0 and 1");
    PwlBuilder b(1);
    b.push(Rat(1), LinearPiece{Int(0), Int(value)});
    return std::move(b).finish();
}

PwlFunction PwlFunction::identity() {
    PwlBuilder b(1);
    b.push(Rat(1), LinearPiece{Int(1), Int(0)});
    return std::move(b).finish();
}

PwlFunction PwlFunction::from_pieces(std::vector<Rat> breakpoints, std::vector<LinearPiece> pieces) {
    if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
        throw std::invalid_argument("need k+1 breakpoints for k pieces, k >= 1");
    if (breakpoints.front() != Rat(0) || breakpoints.back() != Rat(1))
        throw std::invalid_argument("breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly ascending");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Rat lo = pieces[i].at(breakpoints[i]);
        Rat hi = pieces[i].at(breakpoints[i + 1]);
        for (const Rat& v : {lo, hi})
            if (v < Rat(0) || Rat(1) < v)
                throw std::invalid_argument("value outside [0,1] at a breakpoint");
        if (i + 1 < pieces.size() && pieces[i + 1].at(breakpoints[i + 1]) != hi)
            throw std::invalid_argument("pieces disagree at breakpoint " + to_string(breakpoints[i + 1]));
    }
    PwlBuilder b(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) b.push(breakpoints[i + 1], std::move(pieces[i]));
    return std::move(b).finish();
}

std::size_t PwlFunction::piece_index(const Rat& x) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) return 0;
    return std::min(idx - 1, pieces_.size() - 1);
}

namespace {

void require_unit_interval(const Rat& r, const char* what) {
    if (r < Rat(0) || Rat(1) < r)
        throw std::domain_error(std::string(what) + ": point " + to_string(r) + " outside [0,1]");
}

LinearPiece add(const LinearPiece& a, const LinearPiece& b) {
    return {a.slope + b.slope, a.intercept + b.intercept};
}

LinearPiece sub(const LinearPiece& a, const LinearPiece& b) {
    return {a.slope - b.slope, a.intercept - b.intercept};
}

// Root of a nonconstant line.
Rat root(const LinearPiece& line) { return Rat(-line.intercept, line.slope); }

// Pointwise binary operation.  On every segment of the merged breakpoint set
// the result is `pick(L1, L2, sign)` where sign is that of `switching(L1, L2)`
// on the sub-segment; segments are split where the switching line vanishes.
template <typename Switch, typename Pick>
PwlFunction combine(const PwlFunction& p, const PwlFunction& q, Switch switching, Pick pick) {
    const auto& xp = p.breakpoints();
    const auto& xq = q.breakpoints();
    PwlBuilder out(p.piece_count() + q.piece_count());
    std::size_t i = 0, j = 0;
    Rat lo(0);
    while (i < p.piece_count() && j < q.piece_count()) {
        const Rat& hi = std::min(xp[i + 1], xq[j + 1]);
        const LinearPiece& l1 = p.pieces()[i];
        const LinearPiece& l2 = q.pieces()[j];
        LinearPiece d = switching(l1, l2);
        int s_lo = d.at(lo).sign();
        int s_hi = d.at(hi).sign();
        if (s_lo * s_hi < 0) {
            Rat cross = root(d);
            out.push(cross, pick(l1, l2, s_lo));
            out.push(hi, pick(l1, l2, s_hi));
        } else {
            int s = s_lo != 0 ? s_lo : s_hi;
            out.push(hi, pick(l1, l2, s));
        }
        lo = hi;
        if (xp[i + 1] == hi) ++i;
        if (xq[j + 1] == hi) ++j;
    }
    return std::move(out).finish();
}

}  // namespace

PwlFunction star(const PwlFunction& p) {
    PwlBuilder out(p.piece_count());
    for (std::size_t i = 0; i < p.piece_count(); ++i) {
        const auto& piece = p.pieces()[i];
        out.push(p.breakpoints()[i + 1], LinearPiece{-piece.slope, 1 - piece.intercept});
    }
    return std::move(out).finish();
}

PwlFunction oplus(const PwlFunction& p, const PwlFunction& q) {
    return combine(
        p, q,
        [](const LinearPiece& a, const LinearPiece& b) {
            LinearPiece s = add(a, b);
            s.intercept -= 1;
            return s;
        },
        [](const LinearPiece& a, const LinearPiece& b, int sign) {
            return sign > 0 ? LinearPiece{Int(0), Int(1)} : add(a, b);
        });
}

PwlFunction pointwise_max(const PwlFunction& p, const PwlFunction& q) {
    return combine(p, q, sub, [](const LinearPiece& a, const LinearPiece& b, int sign) {
        return sign >= 0 ? a : b;
    });
}

PwlFunction pointwise_min(const PwlFunction& p, const PwlFunction& q) {
    return combine(p, q, sub, [](const LinearPiece& a, const LinearPiece& b, int sign) {
        return sign >= 0 ? b : a;
    });
}

PwlFunction pointwise_abs_difference(const PwlFunction& p, const PwlFunction& q) {
    return combine(p, q, sub, [](const LinearPiece& a, const LinearPiece& b, int sign) {
        return sign >= 0 ? sub(a, b) : sub(b, a);
    });
}

bool pointwise_leq(const PwlFunction& p, const PwlFunction& q) {
    std::vector<Rat> xs;
    std::merge(p.breakpoints().begin(), p.breakpoints().end(), q.breakpoints().begin(),
               q.breakpoints().end(), std::back_inserter(xs));
    return std::all_of(xs.begin(), xs.end(), [&](const Rat& x) { return !(eval(q, x) < eval(p, x)); });
}

FormulaProgram::FormulaProgram(const Formula& f) {
    // Iterative post-order with node sharing.
    std::unordered_map<const void*, std::uint32_t> index;
    struct Frame {
        const Formula* node;
        bool expanded;
    };
    std::vector<Frame> stack{{&f, false}};
    while (!stack.empty()) {
        Frame frame = stack.back();
        stack.pop_back();
        const Formula& n = *frame.node;
        if (index.count(n.id())) continue;
        switch (n.kind()) {
        case Formula::Kind::Zero:
        case Formula::Kind::Gen:
            index.emplace(n.id(), static_cast<std::uint32_t>(ops_.size()));
            ops_.push_back({n.kind(), 0, 0});
            break;
        case Formula::Kind::Star:
            if (!frame.expanded) {
                stack.push_back({&n, true});
                stack.push_back({&n.child(), false});
            } else {
                index.emplace(n.id(), static_cast<std::uint32_t>(ops_.size()));
                ops_.push_back({n.kind(), index.at(n.child().id()), 0});
            }
            break;
        case Formula::Kind::Plus:
            if (!frame.expanded) {
                stack.push_back({&n, true});
                stack.push_back({&n.right(), false});
                stack.push_back({&n.left(), false});
            } else {
                index.emplace(n.id(), static_cast<std::uint32_t>(ops_.size()));
                ops_.push_back({n.kind(), index.at(n.left().id()), index.at(n.right().id())});
            }
            break;
        }
    }
}

std::int64_t FormulaProgram::eval_scaled(std::int64_t c, std::int64_t d,
                                         std::vector<std::int64_t>& v) const {
    v.resize(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        switch (op.kind) {
        case Formula::Kind::Zero: v[i] = 0; break;
        case Formula::Kind::Gen: v[i] = c; break;
        case Formula::Kind::Star: v[i] = d - v[op.a]; break;
        case Formula::Kind::Plus: v[i] = std::min(d, v[op.a] + v[op.b]); break;
        }
    }
    return v.back();
}

std::int64_t FormulaProgram::eval_scaled(std::int64_t c, std::int64_t d) const {
    std::vector<std::int64_t> v;
    return eval_scaled(c, d, v);
}

Int FormulaProgram::eval_scaled(const Int& c, const Int& d) const {
    std::vector<Int> v(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        switch (op.kind) {
        case Formula::Kind::Zero: v[i] = 0; break;
        case Formula::Kind::Gen: v[i] = c; break;
        case Formula::Kind::Star: v[i] = d - v[op.a]; break;
        case Formula::Kind::Plus:
            v[i] = v[op.a] + v[op.b];
            if (v[i] > d) v[i] = d;
            break;
        }
    }
    return v.back();
}

PwlFunction semantics(const Formula& f) {
    FormulaProgram program(f);
    std::vector<PwlFunction> v;
    v.reserve(program.size());
    for (const auto& op : program.ops()) {
        switch (op.kind) {
        case Formula::Kind::Zero: v.push_back(PwlFunction::constant(0)); break;
        case Formula::Kind::Gen: v.push_back(PwlFunction::identity()); break;
        case Formula::Kind::Star: v.push_back(star(v[op.a])); break;
        case Formula::Kind::Plus: v.push_back(oplus(v[op.a], v[op.b])); break;
        }
    }
    return std::move(v.back());
}

Rat eval(const PwlFunction& p, const Rat& r) {
    require_unit_interval(r, "eval");
    return p.pieces()[p.piece_index(r)].at(r);
}

Rat eval_formula(const Formula& f, const Rat& r) {
    require_unit_interval(r, "eval_formula");
    FormulaProgram program(f);
    if (r.den_ref().fits_slong_p()) {
        long d = r.den_ref().get_si();
        return Rat(Int(program.eval_scaled(r.num_ref().get_si(), d)), Int(d));
    }
    return Rat(program.eval_scaled(r.num(), r.den()), r.den());
}

namespace {

void require_side(const Rat& z, Side side, const char* what) {
    require_unit_interval(z, what);
    if (side == Side::Left && z == Rat(0))
        throw std::domain_error(std::string(what) + ": no left derivative at 0");
    if (side == Side::Right && z == Rat(1))
        throw std::domain_error(std::string(what) + ": no right derivative at 1");
}

}  // namespace

Int one_sided_slope(const PwlFunction& p, const Rat& z, Side side) {
    require_side(z, side, "one_sided_slope");
    const auto& xs = p.breakpoints();
    std::size_t idx;
    if (side == Side::Right) {
        idx = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), z) - xs.begin()) - 1;
    } else {
        idx = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), z) - xs.begin()) - 1;
    }
    return p.pieces()[idx].slope;
}

ValueSlope value_and_slope(const Formula& f, const Rat& z, Side side) {
    require_side(z, side, "slope_by_induction");
    FormulaProgram program(f);
    const Int c = z.num();
    const Int d = z.den();
    std::vector<Int> value(program.size());
    std::vector<Int> slope(program.size());
    for (std::size_t i = 0; i < program.size(); ++i) {
        const auto& op = program.ops()[i];
        switch (op.kind) {
        case Formula::Kind::Zero:
            value[i] = 0;
            slope[i] = 0;
            break;
        case Formula::Kind::Gen:
            value[i] = c;
            slope[i] = 1;
            break;
        case Formula::Kind::Star:
            value[i] = d - value[op.a];
            slope[i] = -slope[op.a];
            break;
        case Formula::Kind::Plus: {
            Int v = value[op.a] + value[op.b];
            Int s = slope[op.a] + slope[op.b];
            int where = cmp(v, d);
            if (where < 0) {
                value[i] = std::move(v);
                slope[i] = std::move(s);
            } else if (where > 0) {
                value[i] = d;
                slope[i] = 0;
            } else {
                value[i] = d;
                if (side == Side::Right)
                    slope[i] = s < 0 ? s : Int(0);
                else
                    slope[i] = s > 0 ? s : Int(0);
            }
            break;
        }
        }
    }
    return {Rat(value.back(), d), slope.back()};
}

Int slope_by_induction(const Formula& f, const Rat& z, Side side) {
    return value_and_slope(f, z, side).slope;
}

Distance abs_diff(const Formula& phi, const Formula& psi) {
    Formula delta = distance(phi, psi);
    PwlFunction h = semantics(delta);
    return {std::move(delta), std::move(h)};
}

bool is_linear_on(const PwlFunction& p, const Rat& lo, const Rat& hi) {
    if (lo < Rat(0) || Rat(1) < hi || !(lo < hi))
        throw std::invalid_argument("is_linear_on needs 0 <= lo < hi <= 1");
    std::size_t idx = p.piece_index(lo);
    return !(p.breakpoints()[idx + 1] < hi);
}

std::string to_json(const PwlFunction& p) {
    nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.piece_count(); ++i) {
        nlohmann::ordered_json piece;
        piece["x_lo"] = to_string(p.breakpoints()[i]);
        piece["x_hi"] = to_string(p.breakpoints()[i + 1]);
        piece["m"] = to_string(p.pieces()[i].slope);
        piece["n"] = to_string(p.pieces()[i].intercept);
        pieces.push_back(std::move(piece));
    }
    nlohmann::ordered_json doc;
    doc["pieces"] = std::move(pieces);
    return doc.dump();
}

PwlFunction pwl_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed PWL json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array() || doc["pieces"].empty())
        throw std::invalid_argument("PWL json needs a nonempty \"pieces\" array");
    auto field = [](const nlohmann::json& piece, const char* key) -> std::string {
        if (!piece.is_object() || !piece.contains(key) || !piece[key].is_string())
            throw std::invalid_argument(std::string("PWL piece missing string field \"") + key + "\"");
        return piece[key].get<std::string>();
    };
    std::vector<Rat> xs;
    std::vector<LinearPiece> pieces;
    for (const auto& piece : doc["pieces"]) {
        Rat lo = parse_rat(field(piece, "x_lo"));
        Rat hi = parse_rat(field(piece, "x_hi"));
        if (xs.empty())
            xs.push_back(lo);
        else if (xs.back() != lo)
            throw std::invalid_argument("PWL pieces are not contiguous at " + to_string(lo));
        xs.push_back(hi);
        pieces.push_back({parse_int(field(piece, "m")), parse_int(field(piece, "n"))});
    }
    return PwlFunction::from_pieces(std::move(xs), std::move(pieces));
}

}  // namespace farey
