#pragma once

#include <cstdint>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

// Symmetric {0,+-1} matrix with zero diagonal; entry (i,j) is -1 exactly
// when i and j are adjacent in the underlying graph (S = J - I - 2A).
class SeidelMatrix {
  public:
    SeidelMatrix() = default;
    explicit SeidelMatrix(Graph underlying) : g_(std::move(underlying)) {}

    // Validates symmetry, zero diagonal and +-1 off-diagonal entries.
    static SeidelMatrix from_entries(const std::vector<std::vector<int>>& m);

    int order() const { return g_.order(); }
    const Graph& underlying_graph() const { return g_; }
    int entry(int i, int j) const { return i == j ? 0 : (g_.edge(i, j) ? -1 : 1); }

    // Conjugation by the +-1 diagonal with -1 exactly on the mask bits;
    // equivalently, graph switching across the cut.
    SeidelMatrix switched(std::uint64_t mask) const;

    // The unique all-even-degree graph in the switching class (order odd).
    Graph euler_representative() const;

    bool operator==(const SeidelMatrix& o) const { return g_ == o.g_; }

  private:
    Graph g_;
};

inline SeidelMatrix seidel_from_graph(const Graph& g) { return SeidelMatrix(g); }
inline Graph underlying_graph(const SeidelMatrix& s) { return s.underlying_graph(); }

// Switching applied directly to a graph.
Graph switch_graph(const Graph& g, std::uint64_t mask);

}  // namespace seidel
