#include "parityfactor/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parityfactor/spectral.hpp"

namespace pf {

namespace {

constexpr double kTol = 1e-9;

// Ceiling with a small backward tolerance so values representing an integer
// exactly (up to rounding error) do not jump to the next one.
double ceil_tolerant(double x) { return std::ceil(x - kTol); }

void check_shared_hypotheses(const Graph& g, const DegreeConstraint& c) {
    c.validate(g);
    if (!g.is_simple())
        throw std::invalid_argument("hypothesis violated: the graph must be simple");
    if (components(g).size() != 1)
        throw std::invalid_argument("hypothesis violated: the graph must be non-empty and connected");
    if (c.f_total() % 2 != 0)
        throw std::invalid_argument("hypothesis violated: the sum of f over all vertices must be even");
}

struct EvalInputs {
    int kappa = 0;           // edge-connectivity (0 for a single vertex)
    SpectrumResult spectrum;
};

EvalInputs compute_inputs(const Graph& g) {
    EvalInputs in;
    in.kappa = g.vertex_count() >= 2 ? edge_connectivity(g) : 0;
    in.spectrum = adjacency_spectrum(g);
    return in;
}

// Shared shape of branches (a), (c), (d), (e): pass if h_used >= inv_bound,
// otherwise compare an eigenvalue against rho(delta, ceil(inv_bound) - 1).
BranchRecord eval_bound_branch(char name, bool applicable, const std::string& skip_note,
                               int h_used, double inv_bound, int n, int delta,
                               const SpectrumResult& spectrum) {
    BranchRecord rec;
    rec.branch = name;
    rec.applicable = applicable;
    if (!applicable) {
        rec.note = skip_note;
        return rec;
    }
    if (static_cast<double>(h_used) >= inv_bound - kTol) {
        rec.test = BranchTest::connectivity;
        rec.verdict = BranchVerdict::guaranteed;
        rec.note = "edge-connectivity bound holds: " + std::to_string(h_used) + " >= " +
                   std::to_string(inv_bound);
        return rec;
    }
    if (inv_bound > static_cast<double>(delta) + kTol) {
        rec.note = "reciprocal bound " + std::to_string(inv_bound) +
                   " exceeds the minimum degree " + std::to_string(delta);
        return rec;
    }
    const int eta = static_cast<int>(ceil_tolerant(inv_bound)) - 1;
    if (eta < 1 || eta >= delta) {
        rec.note = "no usable spectral threshold (eta = " + std::to_string(eta) + ")";
        return rec;
    }
    const int k =
        static_cast<int>(ceil_tolerant(2.0 / (1.0 - static_cast<double>(h_used) / inv_bound)));
    rec.test = BranchTest::eigenvalue;
    rec.eigen_index = k;
    rec.threshold = rho(delta, eta).value;
    if (k > n) {
        rec.note = "needs eigenvalue " + std::to_string(k) + " but the graph has only " +
                   std::to_string(n) + " vertices";
        return rec;
    }
    const double lam = spectrum.lambda(k);
    rec.measured = lam;
    if (lam < *rec.threshold - kTol) {
        rec.verdict = BranchVerdict::guaranteed;
        rec.note = "eigenvalue below the spectral threshold";
    } else if (std::abs(lam - *rec.threshold) <= kTol) {
        rec.verdict = BranchVerdict::boundary;
        rec.note = "eigenvalue equals the spectral threshold within tolerance";
    } else {
        rec.note = "eigenvalue at or above the spectral threshold";
    }
    return rec;
}

TheoremReport evaluate_core(const Graph& g, const DegreeConstraint& c, double theta,
                            std::optional<int> h_given, const EvalInputs& in) {
    const int n = g.vertex_count();
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("hypothesis violated: theta must lie strictly between 0 and 1");
    for (int v = 0; v < n; ++v) {
        const double dv = g.degree(v);
        if (c.g[v] > theta * dv + kTol || theta * dv > c.f[v] + kTol)
            throw std::invalid_argument(
                "hypothesis violated: g(v) <= theta*deg(v) <= f(v) fails at vertex " +
                std::to_string(v));
    }
    int h = in.kappa;
    if (h_given) {
        if (*h_given < 1)
            throw std::invalid_argument("hypothesis violated: h must be at least 1");
        if (*h_given > in.kappa)
            throw std::invalid_argument("hypothesis violated: the graph is not " +
                                        std::to_string(*h_given) +
                                        "-edge-connected (edge-connectivity is " +
                                        std::to_string(in.kappa) + ")");
        h = *h_given;
    }

    TheoremReport rep;
    rep.n = n;
    rep.min_degree = g.min_degree();
    rep.h = h;
    rep.h_even = h % 2 == 0 ? h : h + 1;
    rep.h_odd = h % 2 == 1 ? h : h + 1;
    rep.theta = theta;
    rep.theta_star = std::min(theta, 1.0 - theta);
    rep.sum_f_even = true;  // enforced by the shared hypotheses

    bool all_deg_even = true, all_f_even = true, same_parity = true;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) % 2 != 0) all_deg_even = false;
        if (c.f[v] % 2 != 0) all_f_even = false;
        if (g.degree(v) % 2 != c.f[v] % 2) same_parity = false;
    }

    const int delta = rep.min_degree;
    const double inv_star = 1.0 / rep.theta_star;

    rep.branches.push_back(eval_bound_branch('a', true, "", h, inv_star, n, delta, in.spectrum));

    BranchRecord b;
    b.branch = 'b';
    b.applicable = all_deg_even && all_f_even;
    if (b.applicable) {
        b.verdict = BranchVerdict::guaranteed;
        b.note = "every degree and every f(v) is even";
    } else {
        b.note = "needs every degree and every f(v) even";
    }
    rep.branches.push_back(std::move(b));

    rep.branches.push_back(eval_bound_branch('c', all_deg_even, "needs every degree even",
                                             rep.h_even, inv_star, n, delta, in.spectrum));
    rep.branches.push_back(eval_bound_branch('d', all_f_even, "needs every f(v) even", rep.h_odd,
                                             1.0 / (1.0 - theta), n, delta, in.spectrum));
    rep.branches.push_back(eval_bound_branch('e', same_parity,
                                             "needs deg(v) and f(v) of equal parity everywhere",
                                             rep.h_odd, 1.0 / theta, n, delta, in.spectrum));

    rep.overall = BranchVerdict::not_guaranteed;
    for (const BranchRecord& r : rep.branches)
        if (r.verdict == BranchVerdict::guaranteed) rep.overall = BranchVerdict::guaranteed;
    if (rep.overall != BranchVerdict::guaranteed)
        for (const BranchRecord& r : rep.branches)
            if (r.verdict == BranchVerdict::boundary) rep.overall = BranchVerdict::boundary;
    return rep;
}

}  // namespace

ThetaInterval theta_feasible_interval(const Graph& g, const DegreeConstraint& c) {
    c.validate(g);
    const int n = g.vertex_count();
    double lo = 0.0, hi = 1.0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 0) {
            if (c.g[v] > 0)
                throw std::invalid_argument("no feasible theta: vertex " + std::to_string(v) +
                                            " has degree 0 but g > 0");
            continue;
        }
        lo = std::max(lo, static_cast<double>(c.g[v]) / d);
        hi = std::min(hi, static_cast<double>(c.f[v]) / d);
    }
    if (lo > hi + kTol || hi <= kTol || lo >= 1.0 - kTol)
        throw std::invalid_argument("no feasible theta in (0, 1) for these constraints");
    return {lo, std::min(hi, 1.0)};
}

TheoremReport evaluate_conditions(const Graph& g, const DegreeConstraint& c, double theta,
                                  std::optional<int> h) {
    check_shared_hypotheses(g, c);
    return evaluate_core(g, c, theta, h, compute_inputs(g));
}

BestTheta best_theta(const Graph& g, const DegreeConstraint& c) {
    check_shared_hypotheses(g, c);
    const ThetaInterval iv = theta_feasible_interval(g, c);
    const EvalInputs inputs = compute_inputs(g);
    const int n = g.vertex_count();

    const double lo = std::max(iv.lo, 1e-9);
    const double hi = std::min(iv.hi, 1.0 - 1e-9);

    std::vector<double> cand;
    auto push = [&](double t) {
        t = std::clamp(t, lo, hi);
        if (!(t > 0.0 && t < 1.0)) return;
        for (double x : cand)
            if (std::abs(x - t) <= 1e-12) return;
        cand.push_back(t);
    };
    push(lo);
    push(hi);
    push(0.5);

    const int h = inputs.kappa;
    const int h_even = h % 2 == 0 ? h : h + 1;
    const int h_odd = h % 2 == 1 ? h : h + 1;
    const int max_index = std::min(2 * n + 4, 512);

    std::vector<double> breakpoints;
    for (int m = 2; m <= max_index; ++m) {
        breakpoints.push_back(1.0 / m);
        breakpoints.push_back(1.0 - 1.0 / m);
    }
    for (const int hu : {h, h_even, h_odd}) {
        if (hu <= 0) continue;
        for (int m = 3; m <= max_index; ++m) {
            const double t = static_cast<double>(m - 2) / (static_cast<double>(m) * hu);
            breakpoints.push_back(t);
            breakpoints.push_back(1.0 - t);
        }
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    for (double t : breakpoints) push(t);
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        push(0.5 * (breakpoints[i] + breakpoints[i + 1]));

    BestTheta out;
    bool have_fallback = false;
    double fallback_key = -1.0;
    bool fallback_boundary = false;
    for (double theta : cand) {
        TheoremReport rep = evaluate_core(g, c, theta, std::nullopt, inputs);
        out.probed.push_back(theta);
        if (rep.overall == BranchVerdict::guaranteed) {
            out.theta = theta;
            out.report = std::move(rep);
            return out;
        }
        const bool is_boundary = rep.overall == BranchVerdict::boundary;
        const double key = rep.theta_star;
        if (!have_fallback || (is_boundary && !fallback_boundary) ||
            (is_boundary == fallback_boundary && key > fallback_key + 1e-15)) {
            have_fallback = true;
            fallback_key = key;
            fallback_boundary = is_boundary;
            out.theta = theta;
            out.report = std::move(rep);
        }
    }
    if (!have_fallback) throw std::logic_error("best_theta: no candidate theta was evaluable");
    return out;
}

TightnessReport verify_tightness(int r, int h, int l) {
    TightnessReport rep;
    rep.r = r;
    rep.h = h;
    rep.l = l;
    rep.family = tight_family(r, h, l);  // validates l >= r > h >= 1
    const Graph& F = rep.family.graph;
    const int n = F.vertex_count();

    int b = (l - 1) / h;
    if (b % 2 == 0) --b;
    rep.b = b;

    {
        TightnessCheck chk;
        chk.name = "minimum degree";
        const int dmin = F.min_degree();
        chk.pass = dmin == r;
        chk.detail = "minimum degree " + std::to_string(dmin) + " (expected " + std::to_string(r) + ")";
        rep.checks.push_back(std::move(chk));
    }
    {
        TightnessCheck chk;
        chk.name = "edge connectivity";
        const int kappa = edge_connectivity(F);
        chk.pass = kappa == h;
        chk.detail =
            "edge-connectivity " + std::to_string(kappa) + " (expected " + std::to_string(h) + ")";
        rep.checks.push_back(std::move(chk));
    }
    {
        TightnessCheck chk;
        chk.name = "eigenvalue plateau";
        const double target = rho(r, h).value;
        const SpectrumResult spec = adjacency_spectrum(F);
        double worst = 0.0;
        for (int k = h + 1; k <= l; ++k)
            worst = std::max(worst, std::abs(spec.lambda(k) - target));
        chk.pass = worst <= 1e-8;
        chk.detail = "lambda_" + std::to_string(h + 1) + "..lambda_" + std::to_string(l) +
                     " vs rho = " + std::to_string(target) + ", max deviation " +
                     std::to_string(worst);
        rep.checks.push_back(std::move(chk));
    }
    {
        TightnessCheck chk;
        chk.name = "no-factor certificate";
        DegreeConstraint c;
        c.f.assign(n, 1);
        for (int v : rep.family.U) c.f[v] = b;
        const bool even_unit = rep.family.copies.front().size() % 2 == 0;
        if (even_unit)
            for (const VertexSet& copy : rep.family.copies) c.f[copy.ids().front()] = 2;
        c.g = c.f;
        const VertexSet empty_set{std::vector<int>{}};
        const long long expected = static_cast<long long>(b) * h - l;
        const long long def = deficiency(F, c, rep.family.U, empty_set);
        const long long q = q_count(F, c.f, empty_set, rep.family.U);
        rep.certificate_deficiency = def;
        chk.pass = def == expected && def < 0 && q == l;
        chk.detail = "S = U, T = {}: deficiency " + std::to_string(def) + " (expected " +
                     std::to_string(expected) + "), q = " + std::to_string(q) + " of " +
                     std::to_string(l) + " components";
        rep.checks.push_back(std::move(chk));
    }

    rep.all_pass = true;
    for (const TightnessCheck& chk : rep.checks) rep.all_pass = rep.all_pass && chk.pass;
    rep.note = l >= 2 * h * (h + 1)
                   ? "l >= 2h(h+1): inside the range where the eigenvalue bound is sharp"
                   : "l < 2h(h+1): sharpness of the eigenvalue bound is only claimed for l >= 2h(h+1)";
    return rep;
}

}  // namespace pf
