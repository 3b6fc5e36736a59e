#include <doctest.h>

#include <cmath>
#include <vector>

#include "parityfactor/constructions.hpp"
#include "parityfactor/graph.hpp"
#include "parityfactor/spectral.hpp"
#include "testutil.hpp"

using pf::Graph;
using pf::VertexSet;

namespace {

// Horner evaluation of x^3 - (r-2)x^2 - 2rx + (r-1).
double cubic_at(int r, double x) {
    return ((x - (r - 2)) * x - 2.0 * r) * x + (r - 1);
}

std::vector<std::vector<double>> random_symmetric(testutil::Rng& rng, int n) {
    std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double x = rng.real() * 4.0 - 2.0;
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
            a[static_cast<size_t>(j)][static_cast<size_t>(i)] = x;
        }
    return a;
}

}  // namespace

TEST_CASE("Jacobi solves small closed-form matrices") {
    auto res = pf::symmetric_eigenvalues({{2, 1}, {1, 2}});
    REQUIRE(res.eigenvalues.size() == 2);
    CHECK(res.lambda(1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(res.lambda(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.residual <= 1e-10);

    auto one = pf::symmetric_eigenvalues({{7.5}});
    CHECK(one.lambda(1) == doctest::Approx(7.5));
    auto zero = pf::symmetric_eigenvalues({});
    CHECK(zero.eigenvalues.empty());
}

TEST_CASE("Jacobi preserves trace and Frobenius norm") {
    testutil::Rng rng(0x5EED);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform(1, 12);
        auto a = random_symmetric(rng, n);
        double trace = 0.0, frob2 = 0.0;
        for (int i = 0; i < n; ++i) {
            trace += a[static_cast<size_t>(i)][static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j)
                frob2 += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        auto res = pf::symmetric_eigenvalues(a);
        REQUIRE(res.eigenvalues.size() == static_cast<size_t>(n));
        double sum = 0.0, sum2 = 0.0;
        for (size_t i = 0; i + 1 < res.eigenvalues.size(); ++i)
            CHECK(res.eigenvalues[i] >= res.eigenvalues[i + 1] - 1e-12);
        for (double ev : res.eigenvalues) {
            sum += ev;
            sum2 += ev * ev;
        }
        CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
        CHECK(sum2 == doctest::Approx(frob2).epsilon(1e-9));
    }
}

TEST_CASE("adjacency spectra of named graphs") {
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    auto sp3 = pf::adjacency_spectrum(p3);
    CHECK(sp3.lambda(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(sp3.lambda(2) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(sp3.lambda(3) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));

    auto sk4 = pf::adjacency_spectrum(pf::complete(4));
    CHECK(sk4.lambda(1) == doctest::Approx(3.0).epsilon(1e-10));
    for (int k = 2; k <= 4; ++k) CHECK(sk4.lambda(k) == doctest::Approx(-1.0).epsilon(1e-10));

    auto sc4 = pf::adjacency_spectrum(pf::cycle(4));
    CHECK(sc4.lambda(1) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sc4.lambda(2) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(sc4.lambda(3) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(sc4.lambda(4) == doctest::Approx(-2.0).epsilon(1e-10));

    auto spet = pf::adjacency_spectrum(testutil::petersen());
    CHECK(spet.lambda(1) == doctest::Approx(3.0).epsilon(1e-10));
    for (int k = 2; k <= 6; ++k) CHECK(spet.lambda(k) == doctest::Approx(1.0).epsilon(1e-10));
    for (int k = 7; k <= 10; ++k) CHECK(spet.lambda(k) == doctest::Approx(-2.0).epsilon(1e-10));

    Graph multi(2);
    multi.add_edge(0, 1, 2);
    CHECK_THROWS_AS(pf::adjacency_spectrum(multi), std::invalid_argument);
    Graph loopy(1);
    loopy.add_loop(0);
    CHECK_THROWS_AS(pf::adjacency_spectrum(loopy), std::invalid_argument);
}

TEST_CASE("rho matches the closed forms and tags its case") {
    CHECK(pf::rho(4, 2).value == doctest::Approx(1.0 + std::sqrt(7.0)).epsilon(1e-14));
    CHECK(pf::rho(4, 2).case_tag == pf::RhoCase::even_case);
    CHECK(pf::rho(4, 3).value == doctest::Approx(1.0 + std::sqrt(7.0)).epsilon(1e-14));
    CHECK(pf::rho(5, 3).value == doctest::Approx(1.0 + std::sqrt(13.0)).epsilon(1e-14));
    CHECK(pf::rho(5, 3).case_tag == pf::RhoCase::odd_odd_case);
    CHECK(pf::rho(6, 3).value == doctest::Approx(5.741657386773941).epsilon(1e-14));
    CHECK(pf::rho(6, 4).value == doctest::Approx(5.464101615137754).epsilon(1e-14));
    CHECK(pf::rho(5, 4).value == doctest::Approx((3.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-14));
    CHECK(pf::rho(3, 1).case_tag == pf::RhoCase::cubic_case);
    CHECK(pf::rho(3, 1).value == doctest::Approx(2.855772506635989).epsilon(1e-11));
    // eta = 1 with even floor(eta/2) = 0 collapses the even case to r:
    CHECK(pf::rho(4, 1).value == doctest::Approx(4.0).epsilon(1e-14));

    CHECK_THROWS_AS(pf::rho(4, 0), std::domain_error);
    CHECK_THROWS_AS(pf::rho(4, 4), std::domain_error);
    CHECK_THROWS_AS(pf::rho(4, 5), std::domain_error);
    CHECK_THROWS_AS(pf::rho(0, 1), std::domain_error);
}

TEST_CASE("largest_cubic_root satisfies its polynomial") {
    const std::vector<std::pair<int, double>> frozen = {
        {3, 2.855772506635989},  {5, 4.880899120401374}, {7, 6.902355221426848},
        {9, 8.917833620741494},  {11, 10.929231883812676},
    };
    for (const auto& [r, mu] : frozen) {
        const double root = pf::largest_cubic_root(r);
        CHECK(std::abs(root - mu) <= 1e-11);
        CHECK(std::abs(cubic_at(r, root)) <= 1e-10);
        CHECK(root > r - 1);
        CHECK(root < r);
    }
    CHECK_THROWS_AS(pf::largest_cubic_root(4), std::domain_error);
    CHECK_THROWS_AS(pf::largest_cubic_root(1), std::domain_error);
}

TEST_CASE("quotient matrices of the extremal graphs are equitable") {
    // H(4, 2) = co(K2) v K3: blocks {the 3 clique vertices}? Numbering is
    // co(K2) first (ids 0, 1), then K3 (ids 2, 3, 4).
    Graph h42 = pf::extremal_graph(4, 2);
    std::vector<VertexSet> part = {VertexSet(std::vector<int>{2, 3, 4}),
                                   VertexSet(std::vector<int>{0, 1})};
    auto q = pf::quotient_matrix(h42, part);
    REQUIRE(q.equitable);
    CHECK(q.matrix[0][0] == doctest::Approx(2.0));
    CHECK(q.matrix[0][1] == doctest::Approx(2.0));
    CHECK(q.matrix[1][0] == doctest::Approx(3.0));
    CHECK(q.matrix[1][1] == doctest::Approx(0.0));
    auto evs = pf::quotient_eigenvalues(q);
    REQUIRE(evs.size() == 2);
    CHECK(evs[0] == doctest::Approx(1.0 + std::sqrt(7.0)).epsilon(1e-12));
    CHECK(evs[1] == doctest::Approx(1.0 - std::sqrt(7.0)).epsilon(1e-12));
    CHECK(evs[0] == doctest::Approx(pf::adjacency_spectrum(h42).lambda(1)).epsilon(1e-10));

    // H(5, 1) = K1 v co(2*K2) v K2: ids 0 | 1..4 | 5, 6.
    Graph h51 = pf::extremal_graph(5, 1);
    std::vector<VertexSet> part3 = {VertexSet(std::vector<int>{0}),
                                    VertexSet(std::vector<int>{1, 2, 3, 4}),
                                    VertexSet(std::vector<int>{5, 6})};
    auto q3 = pf::quotient_matrix(h51, part3);
    REQUIRE(q3.equitable);
    CHECK(q3.matrix[0][0] == doctest::Approx(0.0));
    CHECK(q3.matrix[0][1] == doctest::Approx(4.0));
    CHECK(q3.matrix[0][2] == doctest::Approx(0.0));
    CHECK(q3.matrix[1][0] == doctest::Approx(1.0));
    CHECK(q3.matrix[1][1] == doctest::Approx(2.0));
    CHECK(q3.matrix[1][2] == doctest::Approx(2.0));
    CHECK(q3.matrix[2][0] == doctest::Approx(0.0));
    CHECK(q3.matrix[2][1] == doctest::Approx(4.0));
    CHECK(q3.matrix[2][2] == doctest::Approx(1.0));
    auto evs3 = pf::quotient_eigenvalues(q3);
    CHECK(evs3.front() == doctest::Approx(pf::largest_cubic_root(5)).epsilon(1e-11));
}

TEST_CASE("non-equitable quotients still average correctly") {
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    auto q = pf::quotient_matrix(
        p4, {VertexSet(std::vector<int>{0, 1}), VertexSet(std::vector<int>{2, 3})});
    CHECK(!q.equitable);
    CHECK(q.matrix[0][0] == doctest::Approx(1.0));
    CHECK(q.matrix[0][1] == doctest::Approx(0.5));
    CHECK(q.matrix[1][0] == doctest::Approx(0.5));
    CHECK(q.matrix[1][1] == doctest::Approx(1.0));

    // Star K_{1,3}: {leaves}, {center} is equitable with matrix [[0,1],[3,0]].
    Graph star = pf::complete_bipartite(1, 3);
    auto qs = pf::quotient_matrix(
        star, {VertexSet(std::vector<int>{1, 2, 3}), VertexSet(std::vector<int>{0})});
    REQUIRE(qs.equitable);
    CHECK(qs.matrix[0][0] == doctest::Approx(0.0));
    CHECK(qs.matrix[0][1] == doctest::Approx(1.0));
    CHECK(qs.matrix[1][0] == doctest::Approx(3.0));
    auto evq = pf::quotient_eigenvalues(qs);
    CHECK(evq[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(evq[1] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));

    // Partition validation.
    CHECK_THROWS_AS(pf::quotient_matrix(p4, {VertexSet(std::vector<int>{0, 1}),
                                             VertexSet(std::vector<int>{1, 2, 3})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pf::quotient_matrix(p4, {VertexSet(std::vector<int>{0, 1})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pf::quotient_matrix(p4, {VertexSet(std::vector<int>{0, 1, 2, 3}), VertexSet()}),
                    std::invalid_argument);
}

TEST_CASE("check_interlacing accepts true interlacings and rejects others") {
    // C6 and an induced P4 inside it.
    Graph c6 = pf::cycle(6);
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    auto outer = pf::adjacency_spectrum(c6).eigenvalues;
    auto inner = pf::adjacency_spectrum(p4).eigenvalues;
    CHECK(pf::check_interlacing(outer, inner));

    // A shifted copy of the inner values violates the upper bound.
    auto bad = inner;
    for (double& x : bad) x += 3.0;
    CHECK(!pf::check_interlacing(outer, bad));

    CHECK_THROWS_AS(pf::check_interlacing(inner, outer), std::invalid_argument);  // k >= n
    CHECK_THROWS_AS(pf::check_interlacing({1.0, 2.0, 0.0}, {1.5}), std::invalid_argument);
}
