#pragma once

#include <vector>

#include "parityfactor/graph.hpp"

namespace pf {

// Eigenvalues in descending order, plus solver diagnostics: number of Jacobi
// sweeps performed and the final off-diagonal Frobenius norm.
struct SpectrumResult {
    std::vector<double> eigenvalues;
    int iterations = 0;
    double residual = 0.0;

    // 1-based access: lambda(1) is the largest eigenvalue.
    double lambda(int k) const;
};

// Cyclic Jacobi eigensolver for a dense symmetric matrix. Converges when the
// off-diagonal Frobenius norm drops to 1e-12 * n, capped at 100 sweeps.
SpectrumResult symmetric_eigenvalues(std::vector<std::vector<double>> a);

// Adjacency spectrum of a simple graph (throws for multigraphs/loops).
SpectrumResult adjacency_spectrum(const Graph& g);

// Quotient of g by a partition of V(G): entry (i,j) is the average number of
// edges from a vertex of block i into block j (diagonal: average within-block
// degree). `equitable` is true when every vertex of block i has the same number
// of neighbors in block j, for all i, j.
struct QuotientData {
    std::vector<VertexSet> partition;
    std::vector<std::vector<double>> matrix;
    bool equitable = false;
};

// Requires g simple and `partition` a disjoint cover of V(G) with non-empty blocks.
QuotientData quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition);

// All eigenvalues of the quotient matrix, descending. Quotient matrices satisfy
// b_ij * |W_i| = b_ji * |W_j|, so they are diagonally similar to a symmetric
// matrix; the similarity is applied and the Jacobi solver reused.
std::vector<double> quotient_eigenvalues(const QuotientData& q);

enum class RhoCase { even_case, odd_odd_case, cubic_case };

// Spectral threshold rho(r, eta) for 1 <= eta < r: the largest adjacency
// eigenvalue of the extremal graph with minimum degree r and deficiency
// parameter eta (see constructions.hpp). Three regimes:
//   - r or eta even:            (r - 2 + sqrt((r+2)^2 - 8*floor(eta/2))) / 2
//   - r, eta both odd, eta >= 3: (r - 3 + sqrt((r+3)^2 - 4*eta)) / 2
//   - r odd, eta == 1:           largest real root of x^3 - (r-2)x^2 - 2rx + r - 1
struct RhoThreshold {
    int r = 0;
    int eta = 0;
    double value = 0.0;
    RhoCase case_tag = RhoCase::even_case;
};

RhoThreshold rho(int r, int eta);

// Largest real root of x^3 - (r-2)x^2 - 2rx + r - 1 for odd r >= 3, found by
// bisection on [r-1, r] (the polynomial is negative at r-1 and positive at r)
// to an interval width of 1e-12.
double largest_cubic_root(int r);

// Cauchy interlacing check: with outer eigenvalues l_1 >= ... >= l_n and inner
// m_1 >= ... >= m_k (k < n), verifies l_i >= m_i >= l_{n-k+i} up to `tol`.
bool check_interlacing(const std::vector<double>& outer, const std::vector<double>& inner,
                       double tol = 1e-9);

}  // namespace pf
