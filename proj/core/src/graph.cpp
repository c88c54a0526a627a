#include "seidel/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace seidel {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64) throw std::invalid_argument("Graph: order must be in [0, 64]");
}

void Graph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("Graph: vertex out of range");
    if (i == j) throw std::invalid_argument("Graph: loops not allowed");
}

bool Graph::edge(int i, int j) const {
    check_pair(i, j);
    return (adj_[i] >> j) & 1u;
}

void Graph::set_edge(int i, int j, bool present) {
    check_pair(i, j);
    std::uint64_t bi = std::uint64_t(1) << j, bj = std::uint64_t(1) << i;
    if (present) {
        adj_[i] |= bi;
        adj_[j] |= bj;
    } else {
        adj_[i] &= ~bi;
        adj_[j] &= ~bj;
    }
}

void Graph::toggle_edge(int i, int j) {
    check_pair(i, j);
    adj_[i] ^= std::uint64_t(1) << j;
    adj_[j] ^= std::uint64_t(1) << i;
}

int Graph::degree(int i) const { return std::popcount(adj_[i]); }

long Graph::edge_count() const {
    long total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((adj_[i] >> j) & 1u) out.emplace_back(i, j);
    return out;
}

std::string Graph::edge_list_text() const {
    std::ostringstream os;
    for (auto [u, v] : edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph Graph::from_edge_list_text(int n, const std::string& text) {
    Graph g(n);
    std::istringstream is(text);
    int u, v;
    while (is >> u >> v) g.set_edge(u, v, true);
    return g;
}

std::string Graph::adjacency_bits() const {
    std::string out;
    out.reserve(n_ * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) out.push_back(((adj_[i] >> j) & 1u) ? '1' : '0');
    return out;
}

Graph Graph::from_adjacency_bits(int n, const std::string& bits) {
    Graph g(n);
    size_t expect = static_cast<size_t>(n) * (n - 1) / 2;
    if (bits.size() != expect)
        throw std::invalid_argument("Graph::from_adjacency_bits: wrong length");
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            char c = bits[idx++];
            if (c != '0' && c != '1')
                throw std::invalid_argument("Graph::from_adjacency_bits: bad character");
            if (c == '1') g.set_edge(i, j, true);
        }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set_edge(i, j, true);
    return g;
}

}  // namespace seidel
