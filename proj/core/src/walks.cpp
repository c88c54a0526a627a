#include "seidel/walks.hpp"

#include <numeric>
#include <stdexcept>

namespace seidel {

WalkStats walk_stats(const Graph& g, int N) {
    if (N < 1) throw std::invalid_argument("walk_stats: N must be >= 1");
    const int n = g.order();
    SquareIntMatrix a = adjacency_matrix(g);
    SquareIntMatrix p(n);
    for (int i = 0; i < n; ++i) p.at(i, i) = 1;

    WalkStats ws;
    ws.traces.resize(N + 1);
    ws.bilinear.resize(N + 1);
    for (int d = 0; d <= N; ++d) {
        Int tr = 0, bl = 0;
        for (int i = 0; i < n; ++i) {
            tr += p.at(i, i);
            for (int j = 0; j < n; ++j) bl += p.at(i, j);
        }
        ws.traces[d] = tr;
        ws.bilinear[d] = bl;
        if (d == N) break;
        SquareIntMatrix q(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (sgn(p.at(i, k)) == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (a.at(k, j) == 1) q.at(i, j) += p.at(i, k);
            }
        p = std::move(q);
    }
    return ws;
}

namespace {

long mod_pos(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

void walk_dfs(const Graph& g, std::vector<int>& walk, int pos, int N, const DihedralElement& el,
              long& count) {
    if (pos == N) {
        if (!g.edge(walk[N - 1], walk[0])) return;
        for (int i = 0; i < N; ++i) {
            int image = el.reflection ? static_cast<int>(mod_pos(el.k - 1 - i, N))
                                      : static_cast<int>(mod_pos(i + el.k, N));
            if (walk[i] != walk[image]) return;
        }
        ++count;
        return;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (pos > 0 && !g.edge(walk[pos - 1], v)) continue;
        walk[pos] = v;
        walk_dfs(g, walk, pos + 1, N, el, count);
    }
}

}  // namespace

long dihedral_fix_oracle(const Graph& g, int N, const DihedralElement& el) {
    if (N < 3) throw std::invalid_argument("dihedral_fix_oracle: N must be >= 3");
    double size = 1;
    for (int i = 0; i < N; ++i) size *= g.order();
    if (size > 1e7) throw std::invalid_argument("dihedral_fix_oracle: size guard exceeded");
    std::vector<int> walk(N);
    long count = 0;
    walk_dfs(g, walk, 0, N, el, count);
    return count;
}

Int dihedral_fix_formula(const WalkStats& ws, int N, const DihedralElement& el) {
    if (!el.reflection) {
        int d = static_cast<int>(std::gcd(static_cast<long>(mod_pos(el.k, N)), static_cast<long>(N)));
        if (d == 0) d = N;
        return ws.traces[d];
    }
    if (mod_pos(el.k, 2) == 0) return 0;
    if (N % 2 != 0) return 0;
    return ws.bilinear[N / 2];
}

}  // namespace seidel
