#include "seidel/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace seidel {

SquareIntMatrix adjacency_matrix(const Graph& g) {
    SquareIntMatrix m(g.order());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

SquareIntMatrix seidel_entries(const SeidelMatrix& s) {
    SquareIntMatrix m(s.order());
    for (int i = 0; i < s.order(); ++i)
        for (int j = 0; j < s.order(); ++j) m.at(i, j) = s.entry(i, j);
    return m;
}

SquareIntMatrix j_minus_2a(const Graph& g) {
    const int n = g.order();
    SquareIntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (i != j && g.edge(i, j)) ? -1 : 1;
    // diagonal of J - 2A is 1 (A has zero diagonal); off-diagonal 1 - 2a_ij.
    return m;
}

SquareIntMatrix principal_submatrix(const SquareIntMatrix& m, int deleted) {
    if (deleted < 0 || deleted >= m.n) throw std::out_of_range("principal_submatrix");
    SquareIntMatrix out(m.n - 1);
    for (int i = 0, r = 0; i < m.n; ++i) {
        if (i == deleted) continue;
        for (int j = 0, c = 0; j < m.n; ++j) {
            if (j == deleted) continue;
            out.at(r, c) = m.at(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

namespace {

// Berkowitz: returns the coefficients of det(xI - M) in descending order.
template <typename T>
std::vector<T> berkowitz(const std::vector<T>& m, int n) {
    std::vector<T> c{T(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<T> t(static_cast<size_t>(k) + 1);
        t[0] = T(1);
        t[1] = T(0) - m[static_cast<size_t>(k - 1) * n + (k - 1)];
        if (k >= 2) {
            const int sz = k - 1;
            std::vector<T> v(sz), w(sz);
            for (int i = 0; i < sz; ++i) v[i] = m[static_cast<size_t>(i) * n + (k - 1)];
            for (int j = 2; j <= k; ++j) {
                T dot = T(0);
                for (int i = 0; i < sz; ++i) dot += m[static_cast<size_t>(k - 1) * n + i] * v[i];
                t[j] = T(0) - dot;
                if (j < k) {
                    for (int r = 0; r < sz; ++r) {
                        T acc = T(0);
                        for (int col = 0; col < sz; ++col)
                            acc += m[static_cast<size_t>(r) * n + col] * v[col];
                        w[r] = acc;
                    }
                    std::swap(v, w);
                }
            }
        }
        std::vector<T> nc(static_cast<size_t>(k) + 1, T(0));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= std::min(i, k - 1); ++j) nc[i] += t[i - j] * c[j];
        c = std::move(nc);
    }
    return c;
}

}  // namespace

IntPoly char_poly(const SquareIntMatrix& m) {
    if (m.n == 0) return IntPoly::constant(1);
    std::vector<Int> desc = berkowitz<Int>(m.a, m.n);
    std::vector<Int> asc(desc.rbegin(), desc.rend());
    return IntPoly(std::move(asc));
}

ResiduePoly char_poly_mod2e(const std::vector<std::uint64_t>& flat, int n, unsigned e) {
    if (e < 1 || e > 62) throw std::invalid_argument("char_poly_mod2e: exponent out of range");
    std::vector<std::uint64_t> desc = berkowitz<std::uint64_t>(flat, n);
    const std::uint64_t mask = (std::uint64_t(1) << e) - 1;
    ResiduePoly r;
    r.e = e;
    r.residues.resize(desc.size());
    for (size_t i = 0; i < desc.size(); ++i) r.residues[i] = desc[desc.size() - 1 - i] & mask;
    return r;
}

std::vector<std::uint64_t> seidel_flat_u64(const SeidelMatrix& s) {
    const int n = s.order();
    std::vector<std::uint64_t> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<size_t>(i) * n + j] = static_cast<std::uint64_t>(
                static_cast<std::int64_t>(s.entry(i, j)));
    return flat;
}

}  // namespace seidel
