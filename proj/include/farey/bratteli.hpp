#pragma once

#include "farey/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace farey {

/// ν(m) = 1 + 2^(m-1).
std::uint64_t nu(unsigned m);

/// The 0/1 matrix A_m with ν(m+1) rows and ν(m) columns.
struct FareyMatrix {
    unsigned m = 0;
    std::vector<std::vector<int>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
    /// Rows as "1 0\n1 1\n0 1\n".
    std::string to_text() const;
};

FareyMatrix farey_matrix(unsigned m);

/// u_t = A_{t-1} ⋯ A_1 u_1 with u_1 = (1, 1); length ν(t).
std::vector<std::uint64_t> dimension_vector(unsigned t);

struct BratteliVertex {
    std::uint64_t label = 0;
    Rat fraction;  // the Farey fraction the vertex stands for
};

struct BratteliEdge {
    unsigned depth = 0;  // depth of the target vertex
    std::size_t source = 0;
    std::size_t target = 0;
};

struct BratteliDiagram {
    std::vector<std::vector<BratteliVertex>> levels;
    std::vector<BratteliEdge> edges;
};

/// Levels 0..depth; level d has 2^d + 1 vertices ordered by fraction.
/// depth is capped at 24.
BratteliDiagram build_diagram(unsigned depth);

/// Vertices are named v_<depth>_<index>, index from 0.
std::string to_dot(const BratteliDiagram& diagram);
std::string to_json(const BratteliDiagram& diagram);

}  // namespace farey
