#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace pf {

// Error thrown by parse_graph / constraint parsing; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Immutable-ish sorted set of vertex ids. Duplicates are collapsed on construction.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    // {0, 1, ..., n-1}
    static VertexSet range(int n);

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    // Lexicographic on the sorted id lists; used for deterministic tie-breaking.
    bool operator<(const VertexSet& other) const { return ids_ < other.ids_; }

private:
    std::vector<int> ids_;
};

// Undirected multigraph with loops. Vertices are 0..n-1. Parallel edges are stored
// as multiplicities; a loop at v contributes 2 to degree(v).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }

    void add_edge(int u, int v, int multiplicity = 1);
    void add_loop(int v, int count = 1);

    int edge_multiplicity(int u, int v) const;
    int loop_count(int v) const;

    // Non-loop neighbors of v with multiplicities, ascending by id.
    const std::map<int, int>& neighbors(int v) const;

    // Loop-aware degree: sum of incident edge multiplicities plus 2 per loop.
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;

    long long edge_total() const { return edge_total_; }  // counts multiplicities
    long long loop_total() const { return loop_total_; }
    int distinct_edge_count() const { return distinct_edges_; }

    bool is_simple() const;  // no loops, all multiplicities 1

    // (u, v, multiplicity) with u < v, ascending by (u, v).
    std::vector<std::tuple<int, int, int>> edge_list() const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v, const char* what) const;

    int n_ = 0;
    std::vector<std::map<int, int>> adj_;  // neighbor -> multiplicity
    std::vector<int> loops_;
    std::vector<int> degree_;
    long long edge_total_ = 0;
    long long loop_total_ = 0;
    int distinct_edges_ = 0;
};

// Sum of loop-aware degrees over s.
long long degree_sum(const Graph& g, const VertexSet& s);

// Number of edges (with multiplicity) between the disjoint sets s and t.
// Throws std::invalid_argument if the sets overlap or contain invalid ids.
long long cut_size(const Graph& g, const VertexSet& s, const VertexSet& t);

// Connected components of g with `removed` deleted, each component sorted,
// components ordered by their smallest vertex id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = VertexSet());

// Global edge connectivity (Stoer-Wagner over edge multiplicities; loops ignored).
// Returns 0 for disconnected graphs. Requires at least 2 vertices.
int edge_connectivity(const Graph& g);

// Text format:
//   p <n> <m>          header; m = number of `e` lines
//   e <u> <v> [mult]   non-loop edge (default multiplicity 1)
//   l <v> <count>      loops at v
//   # ...              comment (also allowed at end of line)
// Repeated e/l lines accumulate. Errors carry the offending line number.
Graph parse_graph(const std::string& text);

// Canonical serialization: header, then edges ascending by (u, v) with the
// multiplicity printed only when > 1, then loops ascending by vertex id.
// parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

}  // namespace pf
