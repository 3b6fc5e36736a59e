#pragma once

#include <cstdint>
#include <vector>

#include "parityfactor/factor.hpp"
#include "parityfactor/graph.hpp"

// Shared helpers for the test binaries: a portable deterministic RNG, an
// exhaustive catalogue of small graphs up to isomorphism, random instance
// generators, and small independent oracles to check the library against.
namespace testutil {

// splitmix64; used instead of <random> distributions so that sequences are
// identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi] inclusive (hi >= lo).
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return real() < p; }

  private:
    uint64_t state_;
};

// Simple graphs on up to 8 vertices encoded as edge bitmasks with the
// n-independent triangular index bit(i, j) = j*(j-1)/2 + i for i < j.
namespace small_graphs {

int pair_bit(int i, int j);
uint32_t to_mask(const pf::Graph& g);            // simple, n <= 8
pf::Graph to_graph(int n, uint32_t mask);
// Minimum relabeled mask over all degree-preserving permutations; a complete
// isomorphism invariant.
uint32_t canonical(int n, uint32_t mask);
// All graphs on n vertices up to isomorphism (canonical masks, sorted).
const std::vector<uint32_t>& all(int n);         // n <= 8
std::vector<uint32_t> connected(int n);

}  // namespace small_graphs

// Isomorphism test for simple graphs on <= 8 vertices.
bool isomorphic_small(const pf::Graph& a, const pf::Graph& b);

pf::Graph petersen();

// Connected simple graph: a random spanning tree plus each extra pair with
// probability extra_p.
pf::Graph random_connected_graph(Rng& rng, int n, double extra_p);
// As above but with every degree even (odd vertices paired up and toggled;
// falls back to a cycle if that keeps disconnecting the graph).
pf::Graph random_even_connected_graph(Rng& rng, int n, double extra_p);
// Multigraph with loops; each pair gets multiplicity 0..max_mult, each vertex
// 0..max_loops loops. May be disconnected.
pf::Graph random_multigraph(Rng& rng, int n, int max_mult, int max_loops);

struct ConstraintOptions {
    bool f_le_degree = true;   // cap f(v) at deg(v) (else deg(v) + 2)
    bool even_sum = true;      // retry until the f-sum is even
    bool force_f_even = false; // make every f(v) even
};
pf::DegreeConstraint random_constraint(Rng& rng, const pf::Graph& g,
                                       const ConstraintOptions& opts = {});

// Independent existence oracle: enumerates sub-multisets of the edge multiset
// (loops included) with degree/window pruning. Exponential; small inputs only.
bool subset_oracle_has_factor(const pf::Graph& g, const pf::DegreeConstraint& c);

// Maximum matching size by exhaustive recursion over the edge list.
int brute_max_matching_size(const pf::Graph& g);

}  // namespace testutil
