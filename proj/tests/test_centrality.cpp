#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "distcent/centrality.hpp"
#include "distcent/error.hpp"
#include "distcent/rng.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace distcent;
using namespace testgraphs;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK_MESSAGE(std::abs(got[i] - want[i]) <= tol, "node ", i, ": ", got[i], " vs ", want[i]);
    }
}

const double kLog2 = std::log10(2.0);
const double kLog4 = std::log10(4.0);

}  // namespace

TEST_CASE("d1 examples") {
    check_close(d1(make(2, {{0, 1, 1.0}}), 1.0).scores, {0.0, 0.0}, 1e-15);
    check_close(d1(path3(), 1.0).scores, {0.0, 2 * kLog2, 0.0}, 1e-14);
    check_close(d1(star(4), 1.0).scores, {4 * kLog4, 0.0, 0.0, 0.0, 0.0}, 1e-14);
    CHECK_THROWS_AS(d1(Graph::from_edges(1, {}), 1.0), InvalidArgument);
    CHECK_THROWS_AS(d1(path3(), 0.0), InvalidArgument);
    CHECK_THROWS_AS(d1(path3(), -1.0), InvalidArgument);
}

TEST_CASE("d2 examples") {
    check_close(d2(star(4), 2.0).scores, {4 * kLog4, -kLog4, -kLog4, -kLog4, -kLog4}, 1e-14);
    check_close(d2(triangle(), 1.0).scores, {0.0, 0.0, 0.0}, 1e-15);
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        CHECK(d2(star(4), a).scores == d1(star(4), a).scores);
    }
}

TEST_CASE("d3 examples") {
    check_close(d3(make(2, {{0, 1, 1.0}}), 1.0).scores, {0.0, 0.0}, 1e-15);
    check_close(d3(path3(), 1.0).scores, {0.0, 2 * kLog2, 0.0}, 1e-14);
    check_close(d3(make(2, {{0, 1, 4.0}}), 2.0).scores, {4 * kLog4, 4 * kLog4}, 1e-14);
    CHECK_THROWS_AS(d3(Graph::from_edges(3, {}), 1.0), InvalidArgument);
}

TEST_CASE("d4 examples") {
    check_close(d4(make(2, {{0, 1, 3.0}}), 1.0).scores, {3.0, 3.0}, 1e-14);
    check_close(d4(star(4, 2.0), 1.0).scores, {8.0, 0.5, 0.5, 0.5, 0.5}, 1e-14);
    // Unweighted: every factor w = 1, so D4 reduces to sum 1/g_j = D5 at alpha 1.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = oracle::random_graph(seed, 25, 0.2, false);
        const auto reference = oracle::d5(oracle::dense(g), 1.0);
        for (double a : {0.5, 2.0, 3.0}) check_close(d4(g, a).scores, reference, 1e-12);
    }
}

TEST_CASE("d5 examples") {
    check_close(d5(path3(), 1.0).scores, {0.5, 2.0, 0.5}, 1e-15);
    check_close(d5(star(4), 1.0).scores, {4.0, 0.25, 0.25, 0.25, 0.25}, 1e-15);
    for (double a : {0.5, 1.0, 1.7, 3.0}) {
        const double expect = 2.0 / std::pow(2.0, a);
        check_close(d5(triangle(), a).scores, {expect, expect, expect}, 1e-15);
    }
    CHECK(d5(Graph::from_edges(1, {}), 1.0).scores == std::vector<double>{0.0});
    CHECK_THROWS_AS(d5(Graph{}, 1.0), InvalidArgument);
}

TEST_CASE("isolates score exactly zero") {
    const auto g = make(5, {{0, 1, 2.0}, {1, 2, 3.0}});
    for (double a : {0.5, 1.0, 3.0}) {
        for (const auto& s : {d1(g, a), d2(g, a), d3(g, a), d4(g, a), d5(g, a), gamma_centrality(g, -a)}) {
            CHECK(s.scores[3] == 0.0);
            CHECK(s.scores[4] == 0.0);
        }
    }
    CHECK(beta_centrality(g, 0.1).scores[3] == 0.0);
}

TEST_CASE("gamma examples") {
    const auto s = star(4);
    CHECK(gamma_centrality(s, 0.0).scores == s.strengths());
    check_close(gamma_centrality(path3(), -1.0).scores, {0.5, 2.0, 0.5}, 1e-15);
    check_close(gamma_centrality(s, 1.0).scores, {4.0, 4.0, 4.0, 4.0, 4.0}, 1e-15);
    // Gamma powers strength, not degree.
    const auto w = make(3, {{0, 1, 2.0}, {1, 2, 3.0}});
    check_close(gamma_centrality(w, -1.0).scores, {2.0 / 5.0, 2.0 / 2.0 + 3.0 / 3.0, 3.0 / 5.0}, 1e-15);
}

TEST_CASE("beta examples") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = oracle::random_graph(seed, 20, 0.3, true, true);
        CHECK(beta_centrality(g, 0.0).scores == g.strengths());
    }
    CHECK(beta_centrality(Graph::from_edges(4, {}), 0.7).scores == std::vector<double>(4, 0.0));
    check_close(beta_centrality(triangle(), 0.25).scores, {4.0, 4.0, 4.0}, 1e-13);
    CHECK(beta_centrality(triangle(), 0.25).metric == MetricSpec{MetricKind::Beta, 0.25});
}

TEST_CASE("beta errors") {
    // lambda1(K3) = 2
    CHECK_THROWS_AS(beta_centrality(triangle(), 0.5), InvalidArgument);
    CHECK_THROWS_AS(beta_centrality(triangle(), -0.6), InvalidArgument);
    CHECK_NOTHROW(beta_centrality(triangle(), 0.49));
    BetaOptions small_cap;
    small_cap.max_dense_nodes = 2;
    CHECK_THROWS_AS(beta_centrality(triangle(), 0.1, small_cap), InvalidArgument);
    // The max-strength bound is not tight for a star (max strength 4, lambda1 2).
    CHECK_NOTHROW(beta_centrality(star(4), 0.45));
    BetaOptions given;
    given.lambda1 = 2.0;
    CHECK(beta_centrality(star(4), 0.45, given).scores == beta_centrality(star(4), 0.45).scores);
}

TEST_CASE("dominant eigenvalue") {
    for (std::size_t n = 2; n <= 8; ++n) {
        CHECK(dominant_eigenvalue(complete(n)) == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-9));
    }
    CHECK(dominant_eigenvalue(make(2, {{0, 1, 1.0}})) == doctest::Approx(1.0).epsilon(1e-12));
    // Bipartite: the iterate oscillates but the norm estimate converges.
    CHECK(dominant_eigenvalue(star(4)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(dominant_eigenvalue(path3()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK_THROWS_AS(dominant_eigenvalue(Graph::from_edges(3, {})), InvalidArgument);

    EigenOptions tight;
    tight.max_iterations = 2;
    CHECK_THROWS_AS(dominant_eigenvalue(oracle::random_graph(3, 40, 0.2, true, true), tight), NotConverged);
}

TEST_CASE("dominant eigenvalue matches a dense symmetric eigensolver") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_graph(seed, 10 + seed, 0.2, seed % 2 == 1, true);
        if (g.edge_count() == 0) continue;
        const auto a = oracle::dense(g);
        Eigen::MatrixXd m(a.size(), a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
        const double expect = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff();
        CHECK(dominant_eigenvalue(g) == doctest::Approx(expect).epsilon(1e-7));
    }
}

TEST_CASE("harmonize") {
    auto h = harmonize(std::log(2.0), 3.0);
    CHECK(h.beta == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(h.beta) < 1e-15);
    CHECK(h.gamma == -std::log(2.0));
    h = harmonize(1.0, 2.0);
    CHECK(h.gamma == -1.0);
    CHECK(h.beta == doctest::Approx(-0.13212055882855767).epsilon(1e-14));
    CHECK(harmonize(3.0, 1.0).beta == doctest::Approx(-0.9004258632642721).epsilon(1e-14));
    for (double a = 0.01; a < 20.0; a *= 1.3) {
        CHECK(std::abs(harmonize(a, 5.0).beta) * 5.0 < 1.0);
    }
    CHECK_THROWS_AS(harmonize(1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(harmonize(0.0, 1.0), InvalidArgument);
}

TEST_CASE("compute dispatch") {
    const auto tri = triangle();
    CHECK(compute(tri, {MetricKind::Degree, 0.0}).scores == std::vector<double>{2, 2, 2});
    CHECK(compute(tri, {MetricKind::Strength, 0.0}).scores == std::vector<double>{2, 2, 2});
    check_close(compute(tri, {MetricKind::D5, 1.0}).scores, {1, 1, 1}, 1e-15);
    CHECK(compute(tri, {MetricKind::Beta, 0.0}).scores == std::vector<double>{2, 2, 2});
    const auto s = compute(tri, {MetricKind::D3, 1.5});
    CHECK(s.metric == MetricSpec{MetricKind::D3, 1.5});
    CHECK(s.graph_fingerprint == tri.fingerprint());
    for (auto k : {MetricKind::D1, MetricKind::D2, MetricKind::D3, MetricKind::D4, MetricKind::D5, MetricKind::Beta,
                   MetricKind::Gamma, MetricKind::Degree, MetricKind::Strength}) {
        CHECK(parse_metric(metric_name(k)) == k);
    }
    CHECK_THROWS_AS(parse_metric("d6"), InvalidArgument);
}

TEST_CASE("D5 equals Gamma(-alpha) on unweighted graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = oracle::random_graph(seed, 60, 0.08, false);
        for (double a : {0.5, 1.0, 2.0, 3.0}) {
            CHECK(d5(g, a).scores == gamma_centrality(g, -a).scores);
        }
    }
}

TEST_CASE("D1 equals D2 on unweighted graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = oracle::random_graph(seed, 60, 0.08, false);
        for (double a : {0.5, 1.0, 2.0, 3.0}) CHECK(d1(g, a).scores == d2(g, a).scores);
    }
}

TEST_CASE("oracle equivalence of D1-D5 and Gamma") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = oracle::random_graph(seed, 2 + seed % 49, 0.25, true, seed % 3 == 0);
        if (g.edge_count() == 0) continue;
        const auto a = oracle::dense(g);
        for (double alpha : {0.5, 1.0, 2.5}) {
            check_close(d1(g, alpha).scores, oracle::d1(a, alpha), 1e-9);
            check_close(d2(g, alpha).scores, oracle::d2(a, alpha), 1e-9);
            check_close(d3(g, alpha).scores, oracle::d3(a, alpha), 1e-9);
            check_close(d4(g, alpha).scores, oracle::d4(a, alpha), 1e-9);
            check_close(d5(g, alpha).scores, oracle::d5(a, alpha), 1e-9);
            check_close(gamma_centrality(g, -alpha).scores, oracle::gamma(a, -alpha), 1e-9);
        }
    }
}

TEST_CASE("beta matches a truncated Neumann series") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = oracle::random_graph(seed, 5 + seed, 0.3, true, true);
        if (g.edge_count() == 0) continue;
        const double lambda1 = dominant_eigenvalue(g);
        for (double ratio : {-0.5, -0.2, 0.3, 0.5}) {
            const double b = ratio / lambda1;
            const auto ref = oracle::beta_neumann(oracle::dense(g), b);
            check_close(beta_centrality(g, b).scores, ref, 1e-9);
        }
    }
}

TEST_CASE("D1 is affine in alpha") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = oracle::random_graph(seed, 40, 0.15, true, true);
        const double ln10 = std::log(10.0);
        std::vector<double> slope(g.node_count(), 0.0);
        for (Node i = 0; i < g.node_count(); ++i) {
            const auto nbrs = g.neighbors(i);
            const auto ws = g.weights(i);
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                slope[i] -= ws[k] * std::log(static_cast<double>(g.degree(nbrs[k]))) / ln10;
            }
        }
        for (double a : {0.6, 1.0, 2.5}) {
            for (double h : {0.1, 1.0}) {
                const auto lo = d1(g, a).scores;
                const auto hi = d1(g, a + h).scores;
                for (Node i = 0; i < g.node_count(); ++i) {
                    CHECK(std::abs((hi[i] - lo[i]) / h - slope[i]) <= 1e-8);
                }
            }
        }
    }
}

TEST_CASE("higher-degree neighbors contribute strictly less to D1") {
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 3 + rng.uniform_below(5000);
        const std::size_t gk = 2 + rng.uniform_below(n - 2);  // 2 <= gk <= n - 1
        const std::size_t gm = 1 + rng.uniform_below(gk - 1);  // 1 <= gm < gk
        const double alpha = 0.05 + 4.95 * rng.uniform_real();
        CHECK(distinctiveness_log_term(n, gk, alpha) < distinctiveness_log_term(n, gm, alpha));
    }
}

TEST_CASE("scores are permutation equivariant") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto g = oracle::random_graph(seed, 30, 0.2, true, true);
        if (g.edge_count() == 0) continue;
        std::vector<Node> perm(g.node_count());
        std::iota(perm.begin(), perm.end(), Node{0});
        Rng rng(seed + 1000);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
        auto edges = g.edges();
        for (auto& e : edges) {
            e.u = perm[e.u];
            e.v = perm[e.v];
        }
        const auto h = Graph::from_edges(g.node_count(), edges);
        const double lambda1 = dominant_eigenvalue(g);
        for (const MetricSpec spec : {MetricSpec{MetricKind::D1, 1.3}, MetricSpec{MetricKind::D2, 0.7},
                                      MetricSpec{MetricKind::D3, 2.0}, MetricSpec{MetricKind::D4, 1.0},
                                      MetricSpec{MetricKind::D5, 2.2}, MetricSpec{MetricKind::Gamma, -1.5},
                                      MetricSpec{MetricKind::Beta, 0.4 / lambda1}}) {
            const auto a = compute(g, spec).scores;
            const auto b = compute(h, spec).scores;
            for (Node i = 0; i < g.node_count(); ++i) {
                CHECK(std::abs(a[i] - b[perm[i]]) <= 1e-9 * std::max(1.0, std::abs(a[i])));
            }
        }
    }
}
