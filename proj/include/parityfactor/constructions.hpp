#pragma once

#include <vector>

#include "parityfactor/graph.hpp"

namespace pf {

// Basic builders. All vertex numbering is block-by-block in argument order.
Graph empty_graph(int n);
Graph complete(int n);
// Sides of sizes a and b; side-A vertices are 0..a-1 (each of degree b).
Graph complete_bipartite(int a, int b);
Graph cycle(int n);  // n >= 3
// `count` disjoint copies of g, copy i occupying ids [i*|V(g)|, (i+1)*|V(g)|).
Graph disjoint_copies(int count, const Graph& g);
Graph complement(const Graph& g);  // simple graphs only
// Union of the parts plus all edges between *consecutive* parts only.
Graph sequential_join(const std::vector<Graph>& parts);

// Extremal graph attaining the spectral threshold rho(r, eta) as its largest
// adjacency eigenvalue (1 <= eta < r). Shapes by parity:
//   r or eta even:   co(m*K2) v K_{r+1-2m} with m = floor(eta/2)  (K_{r+1} if m = 0)
//   both odd, eta>=3: co(C_eta) v co(((r+2-eta)/2)*K2)
//   r odd, eta == 1:  K1 v co(((r-1)/2)*K2) v K2
// where co() is complement and v is the sequential join.
Graph extremal_graph(int r, int eta);

// Replace vertex u of `host` by `replacement` (max degree a): u is deleted and
// each former edge uw is re-attached from w to a replacement vertex so that all
// replacement vertices reach degree a, except possibly one that reaches a+1.
// Requires deg_host(u) in {b, b+1} where b = sum over replacement of (a - deg).
// Deterministic re-attachment: neighbors w ascending; deficiency slots filled
// breadth-first (each deficient vertex gets its first slot before any gets a
// second), ascending by id within a round; in the degree-(b+1) case the final
// extra edge goes to the lowest-id replacement vertex.
// Result numbering: host vertices except u keep their relative order (ids above
// u shift down by one), replacement vertices are appended.
Graph splice(const Graph& host, int u, const Graph& replacement, int a);

// Tightness family built from K_{h,l}: the extremal graph for (r, h) is spliced
// into each degree-h vertex. U is the surviving degree-l side (ids 0..h-1);
// copies[i] lists the vertices of the i-th spliced copy (contiguous, ascending
// in order of the replaced vertex).
struct FamilyInstance {
    Graph graph;
    VertexSet U;
    std::vector<VertexSet> copies;
    int r = 0, h = 0, l = 0;
};

// Requires l >= r > h >= 1.
FamilyInstance tight_family(int r, int h, int l);

// Parameter triples (r, h, b) for which tight_family(r, h, r) is an r-regular,
// h-edge-connected graph whose r-th eigenvalue equals rho(r, h) and which has
// no parity factor with g = 1, f = b (b odd). Each triple satisfies: r > h >= 2,
// b odd, r = h (mod 2), b*h = r - 2, and max(b, h) < r.
struct SharpParams {
    int r = 0, h = 0, b = 0;
};

// The four one-parameter families instantiated at k (k >= 3):
// (4k, 2, 2k-1), (6k+2, 2k, 3), (6k-1, 3, 2k-1), (6k-1, 2k-1, 3).
std::vector<SharpParams> sharp_parameter_families(int k);

}  // namespace pf
