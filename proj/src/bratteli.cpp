#include "farey/bratteli.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace farey {

namespace {

constexpr unsigned kMaxDepth = 24;

}  // namespace

std::uint64_t nu(unsigned m) {
    if (m == 0 || m > 62) throw std::invalid_argument("nu(m) needs 1 <= m <= 62");
    return 1 + (std::uint64_t{1} << (m - 1));
}

std::string FareyMatrix::to_text() const {
    std::string out;
    for (const auto& row : entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += static_cast<char>('0' + row[j]);
        }
        out += '\n';
    }
    return out;
}

FareyMatrix farey_matrix(unsigned m) {
    if (m == 0) throw std::invalid_argument("farey_matrix: m must be >= 1");
    if (m > kMaxDepth) throw std::invalid_argument("farey_matrix: m too large");
    const std::size_t cols = nu(m);
    const std::size_t rows = nu(m + 1);
    FareyMatrix a{m, std::vector<std::vector<int>>(rows, std::vector<int>(cols, 0))};
    // 1-based: row 2j-1 copies column j, row 2j is the mediant of j and j+1.
    for (std::size_t j = 1; j < cols; ++j) {
        a.entries[2 * j - 2][j - 1] = 1;
        a.entries[2 * j - 1][j - 1] = 1;
        a.entries[2 * j - 1][j] = 1;
    }
    a.entries[rows - 1][cols - 1] = 1;
    return a;
}

std::vector<std::uint64_t> dimension_vector(unsigned t) {
    if (t == 0) throw std::invalid_argument("dimension_vector: t must be >= 1");
    std::vector<std::uint64_t> u{1, 1};
    for (unsigned m = 1; m < t; ++m) {
        FareyMatrix a = farey_matrix(m);
        std::vector<std::uint64_t> next(a.rows(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a.entries[i][j]) next[i] += u[j];
        u = std::move(next);
    }
    return u;
}

BratteliDiagram build_diagram(unsigned depth) {
    if (depth > kMaxDepth) throw std::invalid_argument("build_diagram: depth must be <= 24");
    BratteliDiagram g;
    g.levels.push_back({{1, Rat(0)}, {1, Rat(1)}});
    for (unsigned d = 1; d <= depth; ++d) {
        const auto& prev = g.levels.back();
        std::vector<BratteliVertex> level;
        level.reserve(2 * prev.size() - 1);
        auto connect = [&](std::size_t source) {
            g.edges.push_back({d, source, level.size() - 1});
            level.back().label += prev[source].label;
        };
        for (std::size_t j = 0; j < prev.size(); ++j) {
            level.push_back({0, prev[j].fraction});
            connect(j);
            if (j + 1 == prev.size()) break;
            const Rat& a = prev[j].fraction;
            const Rat& b = prev[j + 1].fraction;
            level.push_back({0, Rat(a.num() + b.num(), a.den() + b.den())});
            connect(j);
            connect(j + 1);
        }
        g.levels.push_back(std::move(level));
    }
    return g;
}

std::string to_dot(const BratteliDiagram& diagram) {
    std::ostringstream out;
    out << "digraph farey {\n  rankdir=TB;\n";
    for (std::size_t d = 0; d < diagram.levels.size(); ++d) {
        out << "  { rank=same;";
        for (std::size_t j = 0; j < diagram.levels[d].size(); ++j) out << " v_" << d << '_' << j << ';';
        out << " }\n";
        for (std::size_t j = 0; j < diagram.levels[d].size(); ++j) {
            const auto& v = diagram.levels[d][j];
            out << "  v_" << d << '_' << j << " [label=\"" << v.label << "\", fraction=\"" << to_string(v.fraction)
                << "\"];\n";
        }
    }
    for (const auto& e : diagram.edges)
        out << "  v_" << e.depth - 1 << '_' << e.source << " -> v_" << e.depth << '_' << e.target << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const BratteliDiagram& diagram) {
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const auto& level : diagram.levels) {
        nlohmann::ordered_json vs = nlohmann::ordered_json::array();
        for (const auto& v : level) vs.push_back({{"label", v.label}, {"fraction", to_string(v.fraction)}});
        levels.push_back(std::move(vs));
    }
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : diagram.edges)
        edges.push_back({{"depth", e.depth}, {"source", e.source}, {"target", e.target}});
    nlohmann::ordered_json doc;
    doc["levels"] = std::move(levels);
    doc["edges"] = std::move(edges);
    return doc.dump();
}

}  // namespace farey
