#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "parityfactor/graph.hpp"

namespace pf {

// Raised when a requested reduction/search is impossible for the instance
// (e.g. a degree target exceeding the available degree).
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Per-vertex degree window [g(v), f(v)] with g(v) == f(v) (mod 2).
// A parity factor is a spanning subgraph H with g(v) <= deg_H(v) <= f(v) and
// deg_H(v) == f(v) (mod 2) for every v; loops add 2 to the degree.
struct DegreeConstraint {
    std::vector<int> g;
    std::vector<int> f;

    static DegreeConstraint uniform(int n, int g_value, int f_value);
    // Throws std::invalid_argument unless sizes match the graph and
    // 0 <= g(v) <= f(v) with g(v) == f(v) (mod 2) for every vertex.
    void validate(const Graph& graph) const;
    long long f_total() const;
};

enum class Verdict { exists, not_exists, unknown };

// Witness pair for non-existence: disjoint S, T with negative deficiency
//   deg_G(T) - g(T) + f(S) - |[S,T]| - q(S,T) < 0.
struct Violation {
    VertexSet S;
    VertexSet T;
    long long deficiency = 0;
};

// Multiset of edges keyed by (u, v) with u <= v; a (v, v) key is a loop.
// Values are multiplicities (>= 1 for present entries).
using EdgeMultiset = std::map<std::pair<int, int>, int>;

struct FactorCertificate {
    Verdict verdict = Verdict::unknown;
    std::optional<EdgeMultiset> factor;    // present when verdict == exists and one was built
    std::optional<Violation> violation;    // present when verdict == not_exists and one was found
};

// Number of components C of G - removed with f(V(C)) + |[T, V(C)]| odd.
// Requires T to be a subset of removed.
long long q_count(const Graph& g, const std::vector<int>& f, const VertexSet& T,
                  const VertexSet& removed);

// deg_G(T) - g(T) + f(S) - |[S,T]| - q(S,T) for disjoint S, T.
long long deficiency(const Graph& g, const DegreeConstraint& c, const VertexSet& S,
                     const VertexSet& T);

// Exhaustive decision over all disjoint pairs (S, T): reports exists iff every
// pair has non-negative deficiency, otherwise returns the most negative pair
// (ties by smallest |S| + |T|, then lexicographic S, then T). Refuses graphs
// with more than `limit` vertices.
FactorCertificate decide_bruteforce(const Graph& g, const DegreeConstraint& c, int limit = 15);

// Adds (f(v) - g(v)) / 2 loops at every vertex; a parity factor of g exists
// iff the returned graph has an exact factor with the returned degree targets
// (== f). Returns {augmented graph, degree targets}.
std::pair<Graph, std::vector<int>> attach_parity_loops(const Graph& g, const DegreeConstraint& c);

// Degree-target-to-perfect-matching reduction. Vertex v becomes deg(v) edge
// stubs plus deg(v) - f(v) slack nodes joined to all of v's stubs; every edge
// copy becomes one stub-stub edge (a loop uses two stubs of the same vertex).
// The input graph has a spanning subgraph with deg exactly f(v) at every v iff
// the gadget has a perfect matching; the subgraph's edges are those whose
// stub-stub edge is matched.
struct FactorGadget {
    Graph graph;  // simple
    // gadget stub-stub edge (a < b) -> original edge key (u <= v; loops (v, v))
    std::map<std::pair<int, int>, std::pair<int, int>> edge_origin;
};

// Throws InfeasibleError if f(v) > deg(v) or f(v) < 0 for some v.
FactorGadget gadget_reduce(const Graph& g, const std::vector<int>& f);

// Maximum matching in a simple graph (blossom algorithm, O(V^3)), returned as
// vertex pairs. Deterministic for a fixed input.
std::vector<std::pair<int, int>> max_matching(const Graph& g);

// Polynomial decision + construction: parity loops, then the matching gadget.
// On non-existence a violation witness is attached when the graph is small
// enough for decide_bruteforce (vertex count <= bruteforce_limit).
FactorCertificate find_parity_factor(const Graph& g, const DegreeConstraint& c,
                                     int bruteforce_limit = 15);

// True iff `factor` is a sub-multiset of g's edges whose degrees meet c.
// Throws std::invalid_argument for malformed input (unknown ids, keys with
// u > v, multiplicities above the graph's).
bool verify_factor(const Graph& g, const DegreeConstraint& c, const EdgeMultiset& factor);

}  // namespace pf
