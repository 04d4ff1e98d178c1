#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "madfc/ticks.hpp"

using namespace madfc;

namespace {

// Printed-precision tolerance for comparing a parsed label against the fold
// change it denotes.
double label_tolerance(double value, LabelFormat format, int places) {
    if (value >= 1.0)
        return 0.0;  // shortest round-trip decimals are exact
    if (format == LabelFormat::decimal) {
        int digits = places;
        int leading = -1 - static_cast<int>(std::floor(std::log10(value)));
        if (leading > 0)
            digits += leading;
        return 0.5 * std::pow(10.0, -digits) + 1e-12;
    }
    return 2e-9;
}

}  // namespace

TEST_CASE("format_label spec examples") {
    CHECK(format_label(2.0, LabelFormat::fraction) == "2");
    CHECK(format_label(1.0 / 3.0, LabelFormat::fraction) == "1/3");
    CHECK(format_label(1.0 / 3.0, LabelFormat::decimal) == "0.33");
    CHECK(format_label(1.0 / 3.0, LabelFormat::exponent) == "3^-1");
    CHECK_THROWS_AS(format_label(0.0, LabelFormat::decimal), domain_error);
    CHECK_THROWS_AS(format_label(-2.0, LabelFormat::fraction), domain_error);
}

TEST_CASE("values at or above 1 render identically in all formats") {
    for (double v : {1.0, 1.5, 2.0, 3.25, 9.0, 144.0}) {
        const std::string expected = format_label(v, LabelFormat::decimal);
        CHECK(format_label(v, LabelFormat::fraction) == expected);
        CHECK(format_label(v, LabelFormat::exponent) == expected);
    }
    CHECK(format_label(2.5, LabelFormat::decimal) == "2.5");
}

TEST_CASE("fraction labels fall back to continued fractions") {
    CHECK(format_label(2.0 / 7.0, LabelFormat::fraction) == "2/7");
    CHECK(format_label(1.0 / 1.5, LabelFormat::fraction) == "2/3");
    CHECK(format_label(0.65, LabelFormat::fraction) == "13/20");
}

TEST_CASE("decimal labels trim trailing zeros") {
    CHECK(format_label(0.5, LabelFormat::decimal) == "0.5");
    CHECK(format_label(0.25, LabelFormat::decimal) == "0.25");
    CHECK(format_label(0.2, LabelFormat::decimal, 3) == "0.2");
}

TEST_CASE("decimal labels keep significant digits for small values") {
    CHECK(format_label(0.0032, LabelFormat::decimal) == "0.0032");
    CHECK(format_label(1.0 / 80.0, LabelFormat::decimal) == "0.013");
    CHECK(format_label(0.001, LabelFormat::decimal) == "0.001");
}

TEST_CASE("parse_label spec examples") {
    CHECK(parse_label("1/4") == 0.25);
    CHECK(parse_label("3^-1") == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(parse_label("2") == 2.0);
    CHECK(parse_label("0.33") == 0.33);
    CHECK_THROWS_AS(parse_label(""), parse_error);
    CHECK_THROWS_AS(parse_label("abc"), parse_error);
    CHECK_THROWS_AS(parse_label("1/0"), parse_error);
    CHECK_THROWS_AS(parse_label("-3"), parse_error);
    CHECK_THROWS_AS(parse_label("2 "), parse_error);
}

TEST_CASE("generate_ticks spec examples") {
    SUBCASE("madfc quarter-to-four") {
        TickSet t = generate_ticks(ScaleKind::madfc, 0.25, 4.0, 7);
        CHECK(t.positions == std::vector<double>{-3, -2, -1, 0, 1, 2, 3});
        CHECK(t.labels == std::vector<std::string>{"1/4", "1/3", "1/2", "1", "2", "3", "4"});
    }
    SUBCASE("log2 eighth-to-eight") {
        TickSet t = generate_ticks(ScaleKind::log2, 0.125, 8.0, 7);
        CHECK(t.positions == std::vector<double>{-3, -2, -1, 0, 1, 2, 3});
        CHECK(t.labels == std::vector<std::string>{"1/8", "1/4", "1/2", "1", "2", "4", "8"});
    }
    SUBCASE("linear one-to-six") {
        TickSet t = generate_ticks(ScaleKind::linear, 1.0, 6.0, 6);
        CHECK(t.positions == std::vector<double>{1, 2, 3, 4, 5, 6});
        CHECK(t.labels == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
    }
}

TEST_CASE("generate_ticks rejects bad ranges") {
    CHECK_THROWS_AS(generate_ticks(ScaleKind::madfc, -1.0, 4.0, 7), domain_error);
    CHECK_THROWS_AS(generate_ticks(ScaleKind::madfc, 4.0, 0.25, 7), domain_error);
    CHECK_THROWS_AS(generate_ticks(ScaleKind::madfc, 2.0, 2.0, 7), domain_error);
    CHECK_THROWS_AS(generate_ticks(ScaleKind::madfc, 0.25, 4.0, 2), domain_error);
}

TEST_CASE("step widens on the 1-2-5 ladder when the budget is tight") {
    TickSet t = generate_ticks(ScaleKind::madfc, mad_inverse(-9.0), 9.0 + 1.0, 7);
    // span 18 with 7 ticks -> step 5 after widening past 3.0 -> 2 was too fine
    for (size_t i = 1; i < t.positions.size(); ++i)
        CHECK(t.positions[i] - t.positions[i - 1] == doctest::Approx(5.0));
    CHECK(t.positions.size() <= 7);
    for (double p : t.positions)
        CHECK(std::fmod(p, 5.0) == 0.0);
}

TEST_CASE("narrow ranges fall back to fractional ladder steps") {
    TickSet t = generate_ticks(ScaleKind::madfc, 1.2, 1.8, 5);
    CHECK(t.positions.size() >= 2);
    CHECK(t.positions.front() >= mad_forward(1.2) - 1e-9);
    CHECK(t.positions.back() <= mad_forward(1.8) + 1e-9);
}

TEST_CASE("exactly one tick at the reference point when spanned") {
    SUBCASE("madfc") {
        TickSet t = generate_ticks(ScaleKind::madfc, 0.2, 30.0, 7);
        CHECK(std::count(t.positions.begin(), t.positions.end(), 0.0) == 1);
    }
    SUBCASE("log2") {
        TickSet t = generate_ticks(ScaleKind::log2, 0.03, 40.0, 5);
        CHECK(std::count(t.positions.begin(), t.positions.end(), 0.0) == 1);
    }
    SUBCASE("linear needs an inserted reference tick") {
        TickSet t = generate_ticks(ScaleKind::linear, 0.5, 12.0, 5);
        CHECK(std::count(t.positions.begin(), t.positions.end(), 1.0) == 1);
        CHECK(std::is_sorted(t.positions.begin(), t.positions.end()));
    }
}

TEST_CASE("symmetric ranges give mirrored positions and reciprocal labels") {
    for (auto scale : {ScaleKind::madfc, ScaleKind::log2}) {
        for (double top : {4.0, 9.0, 30.0}) {
            TickSet t = generate_ticks(scale, 1.0 / top, top, 9);
            const size_t n = t.positions.size();
            for (size_t i = 0; i < n; ++i) {
                CHECK(t.positions[i] == -t.positions[n - 1 - i]);
                double product = parse_label(t.labels[i]) * parse_label(t.labels[n - 1 - i]);
                CHECK(product == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("readability round-trip over random ranges, scales, and formats") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> log_fc(-2.5, 2.5);
    for (int trial = 0; trial < 50; ++trial) {
        double a = std::pow(10.0, log_fc(rng));
        double b = std::pow(10.0, log_fc(rng));
        if (a == b)
            continue;
        double fc_min = std::min(a, b), fc_max = std::max(a, b);
        for (auto scale : {ScaleKind::log2, ScaleKind::linear, ScaleKind::madfc}) {
            for (auto format :
                 {LabelFormat::decimal, LabelFormat::fraction, LabelFormat::exponent}) {
                TickSet t = generate_ticks(scale, fc_min, fc_max, 7, format);
                REQUIRE(std::is_sorted(t.positions.begin(), t.positions.end()));
                for (size_t i = 0; i < t.positions.size(); ++i) {
                    double denoted = scale_inverse(scale, t.positions[i]);
                    double parsed = parse_label(t.labels[i]);
                    double tol = label_tolerance(denoted, format, kDefaultDecimalPlaces);
                    if (tol == 0.0)
                        CHECK(parsed == doctest::Approx(denoted).epsilon(1e-15));
                    else
                        CHECK(std::fabs(parsed - denoted) <= tol);
                }
            }
        }
    }
}

TEST_CASE("tick generation is deterministic") {
    TickSet a = generate_ticks(ScaleKind::madfc, 0.17, 23.0, 7);
    TickSet b = generate_ticks(ScaleKind::madfc, 0.17, 23.0, 7);
    CHECK(a.positions == b.positions);
    CHECK(a.labels == b.labels);
}
