#include <queue>
#include <stdexcept>
#include <vector>

#include "parityfactor/factor.hpp"

namespace pf {

namespace {

// Blossom-contraction maximum matching. Augmenting paths are searched from
// free vertices in ascending order; odd cycles are contracted on the fly by
// rebasing vertices onto the cycle's base vertex.
struct MatchingSearch {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    int lowest_common_base(int a, int b) const {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int stop, int child) {
        while (base[v] != stop) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool try_augment(int root) {
        used.assign(n, 0);
        parent.assign(n, -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Even-depth vertex reached: contract the odd cycle.
                    const int stop = lowest_common_base(v, to);
                    in_blossom.assign(n, 0);
                    mark_path(v, stop, to);
                    mark_path(to, stop, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = stop;
                        if (!used[i]) {
                            used[i] = 1;
                            queue.push(i);
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        // Free vertex: flip the alternating path back to root.
                        int u = to;
                        while (u != -1) {
                            const int pv = parent[u];
                            const int next = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = next;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    queue.push(match[to]);
                }
            }
        }
        return false;
    }
};

}  // namespace

std::vector<std::pair<int, int>> max_matching(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("max_matching: graph must be simple");
    MatchingSearch search;
    search.n = g.vertex_count();
    search.adj.resize(search.n);
    for (int v = 0; v < search.n; ++v)
        for (const auto& [w, mult] : g.neighbors(v)) search.adj[v].push_back(w);
    search.match.assign(search.n, -1);
    search.base.resize(search.n);

    for (int v = 0; v < search.n; ++v) {
        if (search.match[v] != -1) continue;
        for (int w : search.adj[v]) {
            if (search.match[w] == -1) {
                search.match[v] = w;
                search.match[w] = v;
                break;
            }
        }
    }
    for (int v = 0; v < search.n; ++v)
        if (search.match[v] == -1) search.try_augment(v);

    std::vector<std::pair<int, int>> result;
    for (int v = 0; v < search.n; ++v)
        if (search.match[v] > v) result.emplace_back(v, search.match[v]);
    return result;
}

}  // namespace pf
