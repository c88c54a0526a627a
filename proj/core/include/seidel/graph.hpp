#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace seidel {

// Simple loop-free graph on up to 64 vertices, adjacency kept as bit rows.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    bool edge(int i, int j) const;
    void set_edge(int i, int j, bool present);
    void toggle_edge(int i, int j);
    int degree(int i) const;
    long edge_count() const;
    std::uint64_t row_bits(int i) const { return adj_[i]; }

    std::vector<std::pair<int, int>> edges() const;
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // One "u v" pair per line, 0-indexed.
    std::string edge_list_text() const;
    static Graph from_edge_list_text(int n, const std::string& text);
    // Upper-triangle adjacency bits (i < j), row-major, as '0'/'1' chars.
    std::string adjacency_bits() const;
    static Graph from_adjacency_bits(int n, const std::string& bits);

    static Graph empty_graph(int n) { return Graph(n); }
    static Graph complete(int n);

  private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    void check_pair(int i, int j) const;
};

}  // namespace seidel
