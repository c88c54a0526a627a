#include "seidel/seidel_matrix.hpp"

#include <stdexcept>

namespace seidel {

SeidelMatrix SeidelMatrix::from_entries(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument("SeidelMatrix: matrix not square");
        if (m[i][i] != 0) throw std::invalid_argument("SeidelMatrix: diagonal entry nonzero");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] != 1 && m[i][j] != -1)
                throw std::invalid_argument("SeidelMatrix: off-diagonal entry not +-1");
            if (m[i][j] != m[j][i]) throw std::invalid_argument("SeidelMatrix: not symmetric");
            if (i < j && m[i][j] == -1) g.set_edge(i, j, true);
        }
    }
    return SeidelMatrix(std::move(g));
}

Graph switch_graph(const Graph& g, std::uint64_t mask) {
    const int n = g.order();
    Graph out = g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool in_i = (mask >> i) & 1u, in_j = (mask >> j) & 1u;
            if (in_i != in_j) out.toggle_edge(i, j);
        }
    return out;
}

SeidelMatrix SeidelMatrix::switched(std::uint64_t mask) const {
    return SeidelMatrix(switch_graph(g_, mask));
}

Graph SeidelMatrix::euler_representative() const {
    const int n = order();
    if (n % 2 == 0)
        throw std::invalid_argument("euler_representative: order must be odd");

    // Switching on the set U changes deg(v) parity by u_v + |U| (order odd),
    // so the degree-parity system is (I + J) u = deg over GF(2).  Solve by
    // elimination on bit rows; the kernel must be {0, all-ones}, i.e. the
    // solution is unique up to complementation.
    // I + J over GF(2) has zero diagonal and ones elsewhere.
    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::vector<std::uint64_t> mat(n);
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) {
        mat[i] = full ^ (std::uint64_t(1) << i);
        b[i] = g_.degree(i) & 1;
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if ((mat[r] >> col) & 1u) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(mat[rank], mat[sel]);
        std::swap(b[rank], b[sel]);
        for (int r = 0; r < n; ++r) {
            if (r != rank && ((mat[r] >> col) & 1u)) {
                mat[r] ^= mat[rank];
                b[r] ^= b[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (b[r]) throw std::logic_error("euler_representative: degree-parity system inconsistent");
    if (rank != n - 1)
        throw std::logic_error("euler_representative: solution not unique up to complement");

    std::uint64_t u = 0;
    for (int r = 0; r < rank; ++r)
        if (b[r]) u |= std::uint64_t(1) << pivot_col[r];

    Graph result = switch_graph(g_, u);
    for (int i = 0; i < n; ++i)
        if (result.degree(i) % 2 != 0)
            throw std::logic_error("euler_representative: switched graph not Euler");
    return result;
}

}  // namespace seidel
