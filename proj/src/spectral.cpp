#include "parityfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace pf {

double SpectrumResult::lambda(int k) const {
    if (k < 1 || k > static_cast<int>(eigenvalues.size()))
        throw std::invalid_argument("eigenvalue index " + std::to_string(k) +
                                    " out of range [1, " +
                                    std::to_string(eigenvalues.size()) + "]");
    return eigenvalues[static_cast<size_t>(k - 1)];
}

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
    const size_t n = a.size();
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) sum += a[i][j] * a[i][j];
    return std::sqrt(2.0 * sum);
}

}  // namespace

SpectrumResult symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::fabs(a[i][j] - a[j][i]) > 1e-9)
                throw std::invalid_argument("matrix must be symmetric");

    SpectrumResult result;
    const double tol = 1e-12 * static_cast<double>(std::max<size_t>(n, 1));
    double off = off_diagonal_norm(a);
    int sweeps = 0;
    while (off > tol && sweeps < 100) {
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                // Rotation angle chosen to zero a[p][q]; the stable formulation
                // avoids cancellation when the diagonal gap is large.
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
            }
        }
        ++sweeps;
        off = off_diagonal_norm(a);
    }
    result.iterations = sweeps;
    result.residual = off;
    result.eigenvalues.resize(n);
    for (size_t i = 0; i < n; ++i) result.eigenvalues[i] = a[i][i];
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), std::greater<double>());
    return result;
}

SpectrumResult adjacency_spectrum(const Graph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("adjacency_spectrum requires a simple graph");
    const int n = g.vertex_count();
    std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (const auto& [u, v, m] : g.edge_list()) {
        (void)m;
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1.0;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1.0;
    }
    return symmetric_eigenvalues(std::move(a));
}

QuotientData quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition) {
    if (!g.is_simple()) throw std::invalid_argument("quotient_matrix requires a simple graph");
    const int n = g.vertex_count();
    std::vector<int> block(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty())
            throw std::invalid_argument("partition block " + std::to_string(i) + " is empty");
        for (int v : partition[i]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition vertex " + std::to_string(v) +
                                            " out of range");
            if (block[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("partition blocks overlap at vertex " +
                                            std::to_string(v));
            block[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (block[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("partition does not cover vertex " + std::to_string(v));

    const size_t m = partition.size();
    QuotientData q;
    q.partition = partition;
    q.matrix.assign(m, std::vector<double>(m, 0.0));
    q.equitable = true;

    // counts[j] = number of neighbors of the current vertex inside block j
    std::vector<long long> totals(m, 0);
    for (size_t i = 0; i < m; ++i) {
        std::fill(totals.begin(), totals.end(), 0);
        std::vector<long long> reference(m, -1);
        for (int v : partition[i]) {
            std::vector<long long> counts(m, 0);
            for (const auto& [w, mult] : g.neighbors(v)) {
                (void)mult;
                ++counts[static_cast<size_t>(block[static_cast<size_t>(w)])];
            }
            for (size_t j = 0; j < m; ++j) {
                totals[j] += counts[j];
                if (reference[j] == -1)
                    reference[j] = counts[j];
                else if (reference[j] != counts[j])
                    q.equitable = false;
            }
        }
        const double size_i = static_cast<double>(partition[i].size());
        for (size_t j = 0; j < m; ++j)
            q.matrix[i][j] = static_cast<double>(totals[j]) / size_i;
    }
    return q;
}

std::vector<double> quotient_eigenvalues(const QuotientData& q) {
    const size_t m = q.matrix.size();
    // The scaled matrix s_ij = b_ij * sqrt(|W_i| / |W_j|) is symmetric because
    // b_ij |W_i| = b_ji |W_j| (both count the edges between the two blocks).
    std::vector<double> root(m, 1.0);
    for (size_t i = 0; i < m; ++i)
        root[i] = std::sqrt(static_cast<double>(q.partition[i].size()));
    std::vector<std::vector<double>> s(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) s[i][j] = q.matrix[i][j] * root[i] / root[j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            if (std::fabs(s[i][j] - s[j][i]) > 1e-9)
                throw std::logic_error("quotient matrix is not balanced");
            s[i][j] = s[j][i] = 0.5 * (s[i][j] + s[j][i]);
        }
    return symmetric_eigenvalues(std::move(s)).eigenvalues;
}

RhoThreshold rho(int r, int eta) {
    if (eta < 1 || r <= eta)
        throw std::domain_error("rho(r, eta) requires r > eta >= 1, got r=" +
                                std::to_string(r) + " eta=" + std::to_string(eta));
    RhoThreshold out;
    out.r = r;
    out.eta = eta;
    if (r % 2 == 0 || eta % 2 == 0) {
        const double inner = static_cast<double>(r + 2) * (r + 2) - 8.0 * (eta / 2);
        out.value = 0.5 * (r - 2 + std::sqrt(inner));
        out.case_tag = RhoCase::even_case;
    } else if (eta >= 3) {
        const double inner = static_cast<double>(r + 3) * (r + 3) - 4.0 * eta;
        out.value = 0.5 * (r - 3 + std::sqrt(inner));
        out.case_tag = RhoCase::odd_odd_case;
    } else {
        out.value = largest_cubic_root(r);
        out.case_tag = RhoCase::cubic_case;
    }
    return out;
}

double largest_cubic_root(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::domain_error("largest_cubic_root requires odd r >= 3, got " +
                                std::to_string(r));
    const auto p = [r](double x) {
        return ((x - (r - 2)) * x - 2.0 * r) * x + (r - 1);
    };
    double lo = r - 1.0, hi = static_cast<double>(r);
    // p(r-1) = r - r^2 < 0 and p(r) = r - 1 > 0, and the local minimum of p sits
    // left of r-1, so the unique root in (r-1, r) is the largest real root.
    if (!(p(lo) < 0.0 && p(hi) > 0.0))
        throw std::logic_error("cubic root bracket invalid");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool check_interlacing(const std::vector<double>& outer, const std::vector<double>& inner,
                       double tol) {
    const size_t n = outer.size(), k = inner.size();
    if (k >= n)
        throw std::invalid_argument("inner spectrum must be strictly shorter than outer");
    const auto descending = [tol](const std::vector<double>& xs) {
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            if (xs[i] < xs[i + 1] - tol) return false;
        return true;
    };
    if (!descending(outer) || !descending(inner))
        throw std::invalid_argument("spectra must be sorted in descending order");
    for (size_t i = 0; i < k; ++i) {
        if (outer[i] < inner[i] - tol) return false;
        if (inner[i] < outer[n - k + i] - tol) return false;
    }
    return true;
}

}  // namespace pf
