#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parityfactor/constructions.hpp"
#include "parityfactor/factor.hpp"
#include "parityfactor/graph.hpp"

namespace pf {

// Largest interval of theta with g(v) <= theta * deg(v) <= f(v) for every
// vertex, intersected with [0, 1]. Throws if no theta in (0, 1) qualifies.
struct ThetaInterval {
    double lo = 0.0;
    double hi = 1.0;
};
ThetaInterval theta_feasible_interval(const Graph& g, const DegreeConstraint& c);

enum class BranchVerdict { guaranteed, boundary, not_guaranteed };

// Which sufficient test fired inside a branch: a connectivity comparison
// (h against a reciprocal bound) or an eigenvalue comparison.
enum class BranchTest { none, connectivity, eigenvalue };

struct BranchRecord {
    char branch = '?';          // 'a'..'e'
    bool applicable = false;    // the branch's parity side condition holds
    BranchTest test = BranchTest::none;
    std::optional<int> eigen_index;    // k of the lambda_k compared (eigenvalue test)
    std::optional<double> threshold;   // spectral threshold compared against
    std::optional<double> measured;    // lambda_k of the graph, when computed
    BranchVerdict verdict = BranchVerdict::not_guaranteed;
    std::string note;
};

struct TheoremReport {
    int n = 0;
    int min_degree = 0;
    int h = 0;       // edge-connectivity used (given or computed)
    int h_even = 0;  // the even one of {h, h+1}
    int h_odd = 0;   // the odd one of {h, h+1}
    double theta = 0.0;
    double theta_star = 0.0;  // min(theta, 1 - theta)
    bool sum_f_even = true;
    std::vector<BranchRecord> branches;  // 'a'..'e' in order
    BranchVerdict overall = BranchVerdict::not_guaranteed;
};

// Evaluates the five sufficient conditions for a parity factor on a simple
// connected graph at the given theta. `h` defaults to the edge-connectivity;
// a supplied h must satisfy 1 <= h <= edge-connectivity. Throws
// std::invalid_argument naming the violated hypothesis (non-simple,
// disconnected, bad parity, odd f-sum, theta outside (0,1) or infeasible).
TheoremReport evaluate_conditions(const Graph& g, const DegreeConstraint& c, double theta,
                                  std::optional<int> h = std::nullopt);

struct BestTheta {
    double theta = 0.0;
    TheoremReport report;
    std::vector<double> probed;  // candidate thetas that were evaluated, in order
};

// Probes the feasible theta interval (endpoints, midpoint, every value where
// some ceiling in the conditions changes, and midpoints between those) and
// returns the first theta whose report is `guaranteed`; otherwise the probe
// maximizing theta* = min(theta, 1 - theta).
BestTheta best_theta(const Graph& g, const DegreeConstraint& c);

struct TightnessCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Machine-checked sharpness evidence for the family built by tight_family:
// minimum degree r, edge-connectivity exactly h, the (h+1)-th through l-th
// eigenvalues all equal to the spectral threshold rho(r, h), and an explicit
// negative-deficiency witness (S = U, T = empty) for the canonical constraint
// that has no parity factor.
struct TightnessReport {
    int r = 0, h = 0, l = 0;
    int b = 0;                            // largest odd b with b*h < l
    long long certificate_deficiency = 0; // b*h - l
    FamilyInstance family;
    std::vector<TightnessCheck> checks;
    bool all_pass = false;
    std::string note;
};

TightnessReport verify_tightness(int r, int h, int l);

}  // namespace pf
