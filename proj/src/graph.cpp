#include "parityfactor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace pf {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
    std::vector<int> ids(static_cast<size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(static_cast<size_t>(n));
    loops_.assign(static_cast<size_t>(n), 0);
    degree_.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(what) + " id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v, int multiplicity) {
    check_vertex(u, "vertex");
    check_vertex(v, "vertex");
    if (u == v) throw std::invalid_argument("use add_loop for loops");
    if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
    int& fwd = adj_[static_cast<size_t>(u)][v];
    if (fwd == 0) ++distinct_edges_;
    fwd += multiplicity;
    adj_[static_cast<size_t>(v)][u] += multiplicity;
    degree_[static_cast<size_t>(u)] += multiplicity;
    degree_[static_cast<size_t>(v)] += multiplicity;
    edge_total_ += multiplicity;
}

void Graph::add_loop(int v, int count) {
    check_vertex(v, "vertex");
    if (count < 0) throw std::invalid_argument("loop count must be non-negative");
    loops_[static_cast<size_t>(v)] += count;
    degree_[static_cast<size_t>(v)] += 2 * count;
    loop_total_ += count;
}

int Graph::edge_multiplicity(int u, int v) const {
    check_vertex(u, "vertex");
    check_vertex(v, "vertex");
    if (u == v) return 0;
    auto it = adj_[static_cast<size_t>(u)].find(v);
    return it == adj_[static_cast<size_t>(u)].end() ? 0 : it->second;
}

int Graph::loop_count(int v) const {
    check_vertex(v, "vertex");
    return loops_[static_cast<size_t>(v)];
}

const std::map<int, int>& Graph::neighbors(int v) const {
    check_vertex(v, "vertex");
    return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v, "vertex");
    return degree_[static_cast<size_t>(v)];
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree of an empty graph");
    return *std::min_element(degree_.begin(), degree_.end());
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::invalid_argument("max_degree of an empty graph");
    return *std::max_element(degree_.begin(), degree_.end());
}

bool Graph::is_simple() const {
    if (loop_total_ != 0) return false;
    return edge_total_ == distinct_edges_;
}

std::vector<std::tuple<int, int, int>> Graph::edge_list() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(static_cast<size_t>(distinct_edges_));
    for (int u = 0; u < n_; ++u)
        for (const auto& [v, m] : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v, m);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_ && loops_ == other.loops_;
}

long long degree_sum(const Graph& g, const VertexSet& s) {
    long long total = 0;
    for (int v : s) total += g.degree(v);
    return total;
}

long long cut_size(const Graph& g, const VertexSet& s, const VertexSet& t) {
    for (int v : s)
        if (t.contains(v))
            throw std::invalid_argument("cut_size requires disjoint sets; both contain " +
                                        std::to_string(v));
    long long total = 0;
    // Iterate the smaller side for balance; each S-T edge is seen exactly once.
    const VertexSet& a = s.size() <= t.size() ? s : t;
    const VertexSet& b = s.size() <= t.size() ? t : s;
    for (int v : a)
        for (const auto& [w, m] : g.neighbors(v))
            if (b.contains(w)) total += m;
    return total;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    for (int v : removed)
        if (v < 0 || v >= n)
            throw std::invalid_argument("removed vertex id " + std::to_string(v) +
                                        " out of range");
    std::vector<char> skip(static_cast<size_t>(n), 0);
    for (int v : removed) skip[static_cast<size_t>(v)] = 1;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<VertexSet> result;
    for (int start = 0; start < n; ++start) {
        if (skip[static_cast<size_t>(start)] || seen[static_cast<size_t>(start)]) continue;
        std::vector<int> comp;
        std::queue<int> work;
        work.push(start);
        seen[static_cast<size_t>(start)] = 1;
        while (!work.empty()) {
            int v = work.front();
            work.pop();
            comp.push_back(v);
            for (const auto& [w, m] : g.neighbors(v)) {
                (void)m;
                if (!skip[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    work.push(w);
                }
            }
        }
        result.emplace_back(VertexSet(std::move(comp)));
    }
    return result;
}

int edge_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("edge_connectivity requires at least 2 vertices");
    if (components(g).size() > 1) return 0;

    // Stoer-Wagner minimum cut on the multiplicity-weighted graph; loops are irrelevant.
    std::vector<std::vector<long long>> w(static_cast<size_t>(n),
                                          std::vector<long long>(static_cast<size_t>(n), 0));
    for (const auto& [u, v, m] : g.edge_list()) {
        w[static_cast<size_t>(u)][static_cast<size_t>(v)] = m;
        w[static_cast<size_t>(v)][static_cast<size_t>(u)] = m;
    }
    std::vector<int> vertices(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vertices[static_cast<size_t>(i)] = i;

    long long best = std::numeric_limits<long long>::max();
    while (vertices.size() > 1) {
        std::vector<long long> weight(vertices.size(), 0);
        std::vector<char> added(vertices.size(), 0);
        int prev = -1, last = -1;
        for (size_t step = 0; step < vertices.size(); ++step) {
            int pick = -1;
            for (size_t i = 0; i < vertices.size(); ++i)
                if (!added[i] && (pick == -1 || weight[i] > weight[static_cast<size_t>(pick)]))
                    pick = static_cast<int>(i);
            added[static_cast<size_t>(pick)] = 1;
            prev = last;
            last = pick;
            for (size_t i = 0; i < vertices.size(); ++i)
                if (!added[i])
                    weight[i] += w[static_cast<size_t>(vertices[static_cast<size_t>(pick)])]
                                  [static_cast<size_t>(vertices[i])];
        }
        best = std::min(best, weight[static_cast<size_t>(last)]);
        // merge `last` into `prev`
        int a = vertices[static_cast<size_t>(prev)], b = vertices[static_cast<size_t>(last)];
        for (size_t i = 0; i < vertices.size(); ++i) {
            int c = vertices[i];
            w[static_cast<size_t>(a)][static_cast<size_t>(c)] +=
                w[static_cast<size_t>(b)][static_cast<size_t>(c)];
            w[static_cast<size_t>(c)][static_cast<size_t>(a)] =
                w[static_cast<size_t>(a)][static_cast<size_t>(c)];
        }
        vertices.erase(vertices.begin() + last);
    }
    return static_cast<int>(best);
}

namespace {

// Strips comments, splits into whitespace tokens. Returns false for blank lines.
bool tokenize_line(const std::string& line, std::vector<std::string>& tokens) {
    std::string body = line;
    if (auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
    tokens.clear();
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return !tokens.empty();
}

long long parse_int(const std::string& tok, int line, const char* what) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" +
                                   tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" +
                                   tok + "'");
    return value;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> tokens;
    bool have_header = false;
    Graph g;
    long long declared_edges = 0, edge_lines = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!tokenize_line(line, tokens)) continue;
        const std::string& kind = tokens[0];
        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tokens.size() != 3) throw ParseError(lineno, "header must be 'p <n> <m>'");
            long long n = parse_int(tokens[1], lineno, "vertex count");
            long long m = parse_int(tokens[2], lineno, "edge count");
            if (n < 0) throw ParseError(lineno, "vertex count must be non-negative");
            if (m < 0) throw ParseError(lineno, "edge count must be non-negative");
            if (n > 10'000'000) throw ParseError(lineno, "vertex count out of supported range");
            g = Graph(static_cast<int>(n));
            declared_edges = m;
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) throw ParseError(lineno, "edge line before 'p' header");
            if (tokens.size() != 3 && tokens.size() != 4)
                throw ParseError(lineno, "edge line must be 'e <u> <v> [mult]'");
            long long u = parse_int(tokens[1], lineno, "endpoint");
            long long v = parse_int(tokens[2], lineno, "endpoint");
            long long mult = tokens.size() == 4 ? parse_int(tokens[3], lineno, "multiplicity") : 1;
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
                throw ParseError(lineno, "endpoint out of range [0, " +
                                             std::to_string(g.vertex_count()) + ")");
            if (u == v) throw ParseError(lineno, "loops must use 'l' lines, not 'e'");
            if (mult < 1) throw ParseError(lineno, "multiplicity must be positive");
            g.add_edge(static_cast<int>(u), static_cast<int>(v), static_cast<int>(mult));
            ++edge_lines;
        } else if (kind == "l") {
            if (!have_header) throw ParseError(lineno, "loop line before 'p' header");
            if (tokens.size() != 3) throw ParseError(lineno, "loop line must be 'l <v> <count>'");
            long long v = parse_int(tokens[1], lineno, "vertex");
            long long count = parse_int(tokens[2], lineno, "loop count");
            if (v < 0 || v >= g.vertex_count())
                throw ParseError(lineno, "vertex out of range [0, " +
                                             std::to_string(g.vertex_count()) + ")");
            if (count < 0) throw ParseError(lineno, "loop count must be non-negative");
            g.add_loop(static_cast<int>(v), static_cast<int>(count));
        } else {
            throw ParseError(lineno, "unknown directive '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p <n> <m>' header");
    if (edge_lines != declared_edges)
        throw ParseError(lineno, "header declares " + std::to_string(declared_edges) +
                                     " edge lines but found " + std::to_string(edge_lines));
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.distinct_edge_count() << '\n';
    for (const auto& [u, v, m] : g.edge_list()) {
        out << "e " << u << ' ' << v;
        if (m > 1) out << ' ' << m;
        out << '\n';
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (int c = g.loop_count(v); c > 0) out << "l " << v << ' ' << c << '\n';
    return out.str();
}

}  // namespace pf
