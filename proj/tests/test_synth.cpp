#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graphgeom/diffusion.hpp"
#include "graphgeom/errors.hpp"
#include "graphgeom/experiment.hpp"
#include "graphgeom/metrics.hpp"
#include "graphgeom/synth.hpp"

using namespace graphgeom;

TEST_CASE("identity table gives a perfectly homophilous graph") {
    GeneratorSpec spec;
    spec.num_classes = 2;
    spec.nodes_per_class = 20;
    spec.edge_probability = sbm_table(2, 1.0, 0.0);
    spec.seed = 3;
    const LabeledGraph lg = generate(spec);
    CHECK(edge_homophily(lg) == 1.0);
    CHECK(adjusted_homophily(lg) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deterministic class maps force LI = 1") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (int c : {2, 4}) {
            GeneratorSpec spec;
            spec.num_classes = c;
            spec.nodes_per_class = 40;
            spec.edge_probability = matching_table(c, 0.15);
            spec.seed = seed;
            const LabeledGraph lg = generate(spec);
            REQUIRE(lg.graph.num_edges() > 0);
            CHECK(label_informativeness(lg) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(edge_homophily(lg) == 0.0);
        }
        // odd class count: class 0 self-matched, still deterministic
        GeneratorSpec spec;
        spec.num_classes = 3;
        spec.nodes_per_class = 40;
        spec.edge_probability = involution_table(3, 0.15);
        spec.seed = seed;
        const LabeledGraph lg = generate(spec);
        REQUIRE(lg.graph.num_edges() > 0);
        CHECK(label_informativeness(lg) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("three-class cyclic table: mid informativeness, zero edge homophily") {
    // With three classes every pair of distinct classes is adjacent, so a
    // neighbor's label only narrows the node's label to two candidates. The
    // population joint is uniform over the six ordered off-diagonal pairs:
    // LI = ln(3/2) / ln 3, about 0.369, not 1.
    const double expected = std::log(1.5) / std::log(3.0);
    double total = 0.0;
    int samples = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GeneratorSpec spec;
        spec.num_classes = 3;
        spec.nodes_per_class = 200;
        spec.edge_probability = cyclic_table(3, 0.05);
        spec.seed = seed;
        const LabeledGraph lg = generate(spec);
        CHECK(edge_homophily(lg) == 0.0);
        total += label_informativeness(lg);
        ++samples;
    }
    CHECK(total / samples == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("uniform tables give near-zero informativeness at n >= 600") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GeneratorSpec spec;
        spec.num_classes = 2;
        spec.nodes_per_class = 300;
        spec.edge_probability = uniform_table(2, 0.02);
        spec.seed = seed;
        const LabeledGraph lg = generate(spec);
        CHECK(std::abs(label_informativeness(lg)) <= 0.05);
    }
}

TEST_CASE("seed determinism") {
    GeneratorSpec spec;
    spec.num_classes = 3;
    spec.nodes_per_class = 25;
    spec.edge_probability = sbm_table(3, 0.2, 0.05);
    spec.feature_dim = 4;
    spec.snr = 1.5;
    spec.seed = 99;
    const LabeledGraph a = generate(spec);
    const LabeledGraph b = generate(spec);
    CHECK(a.graph == b.graph);
    CHECK(*a.labels == *b.labels);
    CHECK((*a.features - *b.features).cwiseAbs().maxCoeff() == 0.0);

    spec.seed = 100;
    const LabeledGraph c = generate(spec);
    CHECK_FALSE(a.graph == c.graph);
}

TEST_CASE("edge counts match the table within 3-sigma binomial bounds") {
    GeneratorSpec spec;
    spec.num_classes = 2;
    spec.nodes_per_class = 300;
    const double p_in = 0.03, p_out = 0.01;
    spec.edge_probability = sbm_table(2, p_in, p_out);
    spec.seed = 1;
    const LabeledGraph lg = generate(spec);
    const auto& y = *lg.labels;
    long long intra = 0, inter = 0;
    for (const auto& [u, v] : lg.graph.edges()) ((y[u] == y[v]) ? intra : inter) += 1;
    const double intra_pairs = 2.0 * (300.0 * 299.0 / 2.0);
    const double inter_pairs = 300.0 * 300.0;
    const double intra_sigma = std::sqrt(intra_pairs * p_in * (1 - p_in));
    const double inter_sigma = std::sqrt(inter_pairs * p_out * (1 - p_out));
    CHECK(std::abs(intra - intra_pairs * p_in) <= 3.0 * intra_sigma);
    CHECK(std::abs(inter - inter_pairs * p_out) <= 3.0 * inter_sigma);
}

TEST_CASE("gaussian features") {
    std::vector<int> labels(200);
    std::vector<bool> mask(200, false);
    for (int i = 0; i < 200; ++i) {
        labels[i] = i % 2;
        mask[i] = (i % 4) < 2;  // both classes appear on each side of the split
    }

    // snr = 0: no class signal, readout near chance over seeds.
    double chance_total = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        chance_total += ridge_readout(gaussian_features(labels, 6, 0.0, seed), labels, 1.0, mask);
    }
    CHECK(chance_total / 5 == doctest::Approx(0.5).epsilon(0.25));

    // snr = 100, dim >= C: nearly separable.
    CHECK(ridge_readout(gaussian_features(labels, 6, 100.0, 7), labels, 1.0, mask) >= 0.99);

    // determinism
    const Eigen::MatrixXd x1 = gaussian_features(labels, 6, 2.0, 11);
    const Eigen::MatrixXd x2 = gaussian_features(labels, 6, 2.0, 11);
    CHECK((x1 - x2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spec validation") {
    GeneratorSpec spec;
    spec.num_classes = 2;
    spec.nodes_per_class = 10;
    spec.edge_probability = Eigen::MatrixXd::Constant(2, 2, 1.5);
    CHECK_THROWS_AS(generate(spec), InputError);
    spec.edge_probability = Eigen::MatrixXd::Constant(3, 3, 0.5);
    CHECK_THROWS_AS(generate(spec), InputError);
    Eigen::MatrixXd asym = Eigen::MatrixXd::Constant(2, 2, 0.5);
    asym(0, 1) = 0.25;
    spec.edge_probability = asym;
    CHECK_THROWS_AS(generate(spec), InputError);
    CHECK_THROWS_AS(matching_table(3, 0.5), InputError);
}

TEST_CASE("stratified train mask covers every class at any fraction") {
    std::vector<int> labels{0, 0, 0, 0, 0, 0, 0, 1, 2, 2};
    const auto mask = stratified_train_mask(labels, 0.2, 5);
    std::vector<int> seen(3, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (mask[i]) ++seen[labels[i]];
    }
    CHECK(seen[0] >= 1);
    CHECK(seen[1] >= 1);
    CHECK(seen[2] >= 1);
    // deterministic
    CHECK(stratified_train_mask(labels, 0.2, 5) == mask);
}
