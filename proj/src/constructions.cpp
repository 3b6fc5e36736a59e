#include "parityfactor/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pf {

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::domain_error("complete_bipartite: sides must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::domain_error("cycle: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph disjoint_copies(int count, const Graph& g) {
    if (count < 1) throw std::domain_error("disjoint_copies: count must be positive");
    const int n = g.vertex_count();
    Graph out(count * n);
    for (int i = 0; i < count; ++i) {
        const int base = i * n;
        for (const auto& [u, v, mult] : g.edge_list()) out.add_edge(base + u, base + v, mult);
        for (int v = 0; v < n; ++v)
            if (g.loop_count(v) > 0) out.add_loop(base + v, g.loop_count(v));
    }
    return out;
}

Graph complement(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("complement: graph must be simple");
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.edge_multiplicity(u, v) == 0) out.add_edge(u, v);
    return out;
}

Graph sequential_join(const std::vector<Graph>& parts) {
    if (parts.size() < 2) throw std::domain_error("sequential_join: need at least two parts");
    int total = 0;
    for (const Graph& p : parts) {
        if (p.vertex_count() == 0) throw std::domain_error("sequential_join: parts must be non-empty");
        total += p.vertex_count();
    }
    Graph out(total);
    int base = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        const Graph& p = parts[i];
        for (const auto& [u, v, mult] : p.edge_list()) out.add_edge(base + u, base + v, mult);
        for (int v = 0; v < p.vertex_count(); ++v)
            if (p.loop_count(v) > 0) out.add_loop(base + v, p.loop_count(v));
        if (i + 1 < parts.size()) {
            const int next_base = base + p.vertex_count();
            for (int u = 0; u < p.vertex_count(); ++u)
                for (int v = 0; v < parts[i + 1].vertex_count(); ++v)
                    out.add_edge(base + u, next_base + v);
        }
        base += p.vertex_count();
    }
    return out;
}

Graph extremal_graph(int r, int eta) {
    if (eta < 1 || r <= eta)
        throw std::domain_error("extremal_graph: requires 1 <= eta < r");
    if (r % 2 == 0 || eta % 2 == 0) {
        const int m = eta / 2;
        if (m == 0) return complete(r + 1);
        return sequential_join({complement(disjoint_copies(m, complete(2))), complete(r + 1 - 2 * m)});
    }
    if (eta >= 3) {
        const int k = (r + 2 - eta) / 2;
        return sequential_join({complement(cycle(eta)), complement(disjoint_copies(k, complete(2)))});
    }
    // r odd, eta == 1
    const int k = (r - 1) / 2;
    return sequential_join({complete(1), complement(disjoint_copies(k, complete(2))), complete(2)});
}

Graph splice(const Graph& host, int u, const Graph& replacement, int a) {
    if (!host.is_simple() || !replacement.is_simple())
        throw std::invalid_argument("splice: both graphs must be simple");
    const int nh = host.vertex_count();
    const int nr = replacement.vertex_count();
    if (u < 0 || u >= nh) throw std::out_of_range("splice: vertex id out of range");
    if (nr == 0) throw std::domain_error("splice: replacement must be non-empty");
    if (replacement.max_degree() != a)
        throw std::invalid_argument("splice: target degree " + std::to_string(a) +
                                    " does not equal the replacement's maximum degree " +
                                    std::to_string(replacement.max_degree()));
    long long b = 0;
    for (int v = 0; v < nr; ++v) b += a - replacement.degree(v);
    const int du = host.degree(u);
    if (du != b && du != b + 1)
        throw std::invalid_argument("splice: degree of the replaced vertex is " + std::to_string(du) +
                                    ", needs total deficiency " + std::to_string(b) + " or " +
                                    std::to_string(b + 1));

    Graph out(nh - 1 + nr);
    auto remap = [u](int v) { return v < u ? v : v - 1; };
    for (const auto& [x, y, mult] : host.edge_list())
        if (x != u && y != u) out.add_edge(remap(x), remap(y), mult);
    const int offset = nh - 1;
    for (const auto& [x, y, mult] : replacement.edge_list()) out.add_edge(offset + x, offset + y, mult);

    // Fill order for the deficiency slots.
    std::vector<int> slots;
    for (int round = 1;; ++round) {
        bool any = false;
        for (int v = 0; v < nr; ++v) {
            if (a - replacement.degree(v) >= round) {
                slots.push_back(v);
                any = true;
            }
        }
        if (!any) break;
    }

    std::vector<int> ws;
    for (const auto& [w, mult] : host.neighbors(u)) ws.push_back(w);  // ascending, mult == 1
    for (size_t i = 0; i < ws.size(); ++i) {
        const int target = i < slots.size() ? slots[i] : 0;
        out.add_edge(remap(ws[i]), offset + target);
    }
    return out;
}

FamilyInstance tight_family(int r, int h, int l) {
    if (!(h >= 1 && r > h && l >= r))
        throw std::domain_error("tight_family: requires l >= r > h >= 1");
    const Graph unit = extremal_graph(r, h);
    const int nu = unit.vertex_count();

    Graph g = complete_bipartite(h, l);
    for (int i = 0; i < l; ++i) g = splice(g, h, unit, r);

    FamilyInstance fam;
    fam.graph = std::move(g);
    fam.U = VertexSet::range(h);
    fam.copies.reserve(l);
    for (int i = 0; i < l; ++i) {
        std::vector<int> ids(nu);
        for (int v = 0; v < nu; ++v) ids[v] = h + i * nu + v;
        fam.copies.emplace_back(std::move(ids));
    }
    fam.r = r;
    fam.h = h;
    fam.l = l;
    return fam;
}

std::vector<SharpParams> sharp_parameter_families(int k) {
    if (k < 3) throw std::domain_error("sharp_parameter_families: requires k >= 3");
    std::vector<SharpParams> out = {
        {4 * k, 2, 2 * k - 1},
        {6 * k + 2, 2 * k, 3},
        {6 * k - 1, 3, 2 * k - 1},
        {6 * k - 1, 2 * k - 1, 3},
    };
    for (const SharpParams& p : out) {
        const bool ok = p.r > p.h && p.h >= 2 && p.b >= 1 && p.b % 2 == 1 &&
                        (p.r - p.h) % 2 == 0 && p.b * p.h == p.r - 2 &&
                        std::max(p.b, p.h) < p.r;
        if (!ok) throw std::logic_error("sharp_parameter_families: internal parameter check failed");
    }
    return out;
}

}  // namespace pf
