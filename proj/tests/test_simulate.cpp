#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "madfc/simulate.hpp"

using namespace madfc;

TEST_CASE("interval dataset with two groups matches the hand derivation") {
    auto groups = simulate_interval_dataset(2, 1);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].point_fc == 0.5);
    CHECK(groups[0].lower_fc == 0.25);
    CHECK(groups[0].upper_fc == 2.0);
    CHECK(groups[1].point_fc == 2.0);
    CHECK(groups[1].lower_fc == 0.5);
    CHECK(groups[1].upper_fc == 4.0);
    CHECK(groups[0].interval_kind == "confidence interval");
    CHECK(groups[0].label == "group 1");
}

TEST_CASE("interval dataset spans +-(n-1) with constant MAD width 4") {
    for (int n : {2, 3, 5, 9}) {
        auto groups = simulate_interval_dataset(n, 7);
        REQUIRE(static_cast<int>(groups.size()) == n);
        CHECK(mad_forward(groups.front().point_fc) == static_cast<double>(-(n - 1)));
        CHECK(mad_forward(groups.back().point_fc) == static_cast<double>(n - 1));
        for (const auto& g : groups)
            CHECK(mad_forward(g.upper_fc) - mad_forward(g.lower_fc) == 4.0);
    }
    CHECK_THROWS_AS(simulate_interval_dataset(1, 1), domain_error);
}

TEST_CASE("interval dataset is deterministic") {
    auto a = simulate_interval_dataset(5, 42);
    auto b = simulate_interval_dataset(5, 42);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].point_fc == b[i].point_fc);
        CHECK(a[i].lower_fc == b[i].lower_fc);
        CHECK(a[i].upper_fc == b[i].upper_fc);
    }
}

TEST_CASE("boxplot sweep runs from 1/9 to 9 with exact quantile widths") {
    auto boxes = simulate_boxplot_dataset(1);
    REQUIRE(boxes.size() == 9);
    CHECK(boxes.front().median == 1.0 / 9.0);
    CHECK(boxes.back().median == 9.0);
    CHECK(mad_forward(boxes.front().median) == -8.0);
    CHECK(mad_forward(boxes.back().median) == 8.0);
    for (const auto& b : boxes) {
        CHECK(mad_forward(b.q3) - mad_forward(b.q1) == 4.0);
        CHECK(mad_forward(b.max) - mad_forward(b.min) == 8.0);
        CHECK(mad_forward(b.q3) - mad_forward(b.median) == 2.0);
        CHECK(mad_forward(b.median) - mad_forward(b.q1) == 2.0);
        CHECK(b.min <= b.q1);
        CHECK(b.q1 <= b.median);
        CHECK(b.median <= b.q3);
        CHECK(b.q3 <= b.max);
    }
}

TEST_CASE("violin dataset reuses one deviate sequence across groups") {
    auto matrix = simulate_violin_dataset(4, 60, 1.5, 11);
    REQUIRE(matrix.gene_labels.size() == 1);
    REQUIRE(matrix.group_labels.size() == 4);
    REQUIRE(matrix.cells[0].size() == 4);

    auto interval = simulate_interval_dataset(4, 11);
    for (int g = 0; g < 4; ++g) {
        const auto& samples = matrix.cells[0][static_cast<size_t>(g)].values;
        REQUIRE(samples.size() == 60);
        const double center = mad_forward(interval[static_cast<size_t>(g)].point_fc);
        // deviations from the group center are the same sequence everywhere
        Eigen::ArrayXd deviation = mad_forward(samples) - center;
        Eigen::ArrayXd reference =
            mad_forward(matrix.cells[0][0].values) - mad_forward(interval[0].point_fc);
        for (Eigen::Index i = 0; i < samples.size(); ++i)
            CHECK(std::fabs(deviation[i] - reference[i]) < 1e-12);
    }

    // per-group MAD-space standard deviation identical across groups
    auto sd_of = [](const Eigen::ArrayXd& coords) {
        double mean = coords.mean();
        return std::sqrt((coords - mean).square().sum() / static_cast<double>(coords.size() - 1));
    };
    double sd0 = sd_of(mad_forward(matrix.cells[0][0].values));
    for (size_t g = 1; g < 4; ++g)
        CHECK(std::fabs(sd_of(mad_forward(matrix.cells[0][g].values)) - sd0) < 1e-12);
}

TEST_CASE("violin dataset validates its preconditions") {
    CHECK_THROWS_AS(simulate_violin_dataset(1, 60, 1.0, 1), domain_error);
    CHECK_THROWS_AS(simulate_violin_dataset(4, 49, 1.0, 1), domain_error);
    CHECK_THROWS_AS(simulate_violin_dataset(4, 60, 0.0, 1), domain_error);
}

TEST_CASE("violin dataset is seed-deterministic and seed-sensitive") {
    auto a = simulate_violin_dataset(3, 60, 1.0, 5);
    auto b = simulate_violin_dataset(3, 60, 1.0, 5);
    auto c = simulate_violin_dataset(3, 60, 1.0, 6);
    CHECK(serialize_expression_matrix(a) == serialize_expression_matrix(b));
    CHECK(serialize_expression_matrix(a) != serialize_expression_matrix(c));
}

TEST_CASE("normal deviates have sane moments") {
    Eigen::ArrayXd z = detail::standard_normal(20000, 123);
    CHECK(std::fabs(z.mean()) < 0.02);
    double var = (z - z.mean()).square().sum() / static_cast<double>(z.size() - 1);
    CHECK(var == doctest::Approx(1.0).epsilon(0.03));
}
