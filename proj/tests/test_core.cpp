#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hurstlab/core.hpp"
#include "hurstlab/error.hpp"
#include "oracles.hpp"

using namespace hurstlab;

namespace {

std::vector<Date> consecutive_dates(std::size_t n) {
    std::vector<Date> d(n);
    const std::chrono::sys_days start{std::chrono::year{2007} / 1 / 2};
    for (std::size_t i = 0; i < n; ++i) d[i] = Date{start + std::chrono::days{static_cast<long>(i)}};
    return d;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::numeric_failure;
}

}  // namespace

TEST(Dates, ParseAndFormat) {
    const auto d = parse_date("2008-02-29");
    ASSERT_TRUE(d);
    EXPECT_EQ(format_date(*d), "2008-02-29");
    EXPECT_FALSE(parse_date("2007-02-29"));
    EXPECT_FALSE(parse_date("2007-1-02"));
    EXPECT_FALSE(parse_date("2007/01/02"));
    EXPECT_FALSE(parse_date("20070102xx"));
}

TEST(PriceSeries, RejectsInvalidInput) {
    EXPECT_EQ(kind_of([] { PriceSeries(consecutive_dates(1), {100.0}); }), ErrorKind::insufficient_data);
    EXPECT_EQ(kind_of([] { PriceSeries(consecutive_dates(3), {100.0, 0.0, 1.0}); }), ErrorKind::invalid_input);
    EXPECT_EQ(kind_of([] { PriceSeries(consecutive_dates(2), {100.0, std::nan("")}); }), ErrorKind::invalid_input);
    auto dates = consecutive_dates(3);
    std::swap(dates[1], dates[2]);
    EXPECT_EQ(kind_of([&] { PriceSeries(dates, {1.0, 2.0, 3.0}); }), ErrorKind::invalid_input);

    try {
        PriceSeries(consecutive_dates(4), {1.0, 2.0, -3.0, 4.0});
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
    }
}

TEST(LogReturns, Examples) {
    const auto flat = log_returns(PriceSeries(consecutive_dates(3), {100.0, 100.0, 100.0}));
    EXPECT_EQ(flat.values(), (std::vector<double>{0.0, 0.0}));

    const double e = std::numbers::e;
    const auto exact = log_returns(PriceSeries(consecutive_dates(3), {1.0, e, e * e}));
    ASSERT_EQ(exact.size(), 2u);
    EXPECT_NEAR(exact.values()[0], 1.0, 1e-15);
    EXPECT_NEAR(exact.values()[1], 1.0, 1e-15);

    const auto one = log_returns(PriceSeries(consecutive_dates(2), {100.0, 105.0}));
    EXPECT_NEAR(one.values()[0], 0.048790164169432, 1e-12);
}

TEST(LogReturns, DatedByLaterPrice) {
    const auto dates = consecutive_dates(3);
    const auto r = log_returns(PriceSeries(dates, {1.0, 2.0, 4.0}));
    EXPECT_EQ(r.timestamps(), std::vector<Date>(dates.begin() + 1, dates.end()));
}

TEST(LogReturns, RebuildingPricesRoundTrips) {
    std::mt19937_64 gen(11);
    std::lognormal_distribution<double> step(0.0, 0.02);
    std::vector<double> p{57.3};
    for (int i = 1; i < 2000; ++i) p.push_back(p.back() * step(gen));
    const auto r = log_returns(PriceSeries(consecutive_dates(p.size()), p));

    double log_level = std::log(p[0]);
    for (std::size_t i = 0; i < r.size(); ++i) {
        log_level += r.values()[i];
        EXPECT_NEAR(std::exp(log_level) / p[i + 1], 1.0, 1e-10);
    }
}

TEST(ExpWeights, Examples) {
    EXPECT_EQ(exp_weights(1, 3.0).weights(), std::vector<double>{1.0});
    EXPECT_EQ(exp_weights(1, 1e-3).weights(), std::vector<double>{1.0});

    const auto w = exp_weights(2, 1.0);
    const double em1 = std::exp(-1.0);
    EXPECT_NEAR(w[0], 1.0 / (1.0 + em1), 1e-15);
    EXPECT_NEAR(w[1], em1 / (1.0 + em1), 1e-15);
    EXPECT_NEAR(w[0], 0.731059, 1e-6);
    EXPECT_NEAR(w[1], 0.268941, 1e-6);

    const auto uniform = exp_weights(750, std::numeric_limits<double>::infinity());
    for (double v : uniform.weights()) EXPECT_DOUBLE_EQ(v, 1.0 / 750.0);
    const auto near_uniform = exp_weights(750, 1e12);
    for (double v : near_uniform.weights()) EXPECT_NEAR(v, 1.0 / 750.0, 1e-12);
}

TEST(ExpWeights, RejectsBadParameters) {
    EXPECT_EQ(kind_of([] { exp_weights(0, 1.0); }), ErrorKind::invalid_parameter);
    EXPECT_EQ(kind_of([] { exp_weights(10, 0.0); }), ErrorKind::invalid_parameter);
    EXPECT_EQ(kind_of([] { exp_weights(10, -2.0); }), ErrorKind::invalid_parameter);
    EXPECT_EQ(kind_of([] { exp_weights(10, std::nan("")); }), ErrorKind::invalid_parameter);
}

TEST(ExpWeights, PropertiesOverParameterGrid) {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<std::size_t> window(1, 10000);
    std::uniform_real_distribution<double> log_theta(std::log(1e-2), std::log(1e6));
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dt = window(gen);
        const double theta = std::exp(log_theta(gen));
        const auto w = exp_weights(dt, theta);
        double total = 0.0;
        for (double v : w.weights()) total += v;
        EXPECT_NEAR(total, 1.0, 1e-12) << dt << ' ' << theta;

        for (std::size_t s = 0; s + 1 < dt; ++s) {
            // Positivity, monotonicity and the constant ratio hold where the
            // weights are representable as normal doubles.
            if (static_cast<double>(s + 1) / theta > 700.0) break;
            ASSERT_GT(w[s + 1], 0.0);
            ASSERT_LT(w[s + 1], w[s]);
            ASSERT_NEAR(w[s] / w[s + 1] / std::exp(1.0 / theta), 1.0, 1e-12);
        }
    }
}

TEST(WeightedMean, Examples) {
    const auto w2 = exp_weights(2, 1.0);
    const std::vector<double> c(2, 3.25);
    EXPECT_NEAR(weighted_mean(c, w2), 3.25, 1e-15);

    const std::vector<double> v{2.0, 4.0};
    const double em1 = std::exp(-1.0);
    const double expected = (2.0 + 4.0 * em1) / (1.0 + em1);
    EXPECT_NEAR(weighted_mean(v, w2), expected, 1e-15);
    EXPECT_NEAR(weighted_mean(v, w2), 2.537883, 1e-6);

    const auto uniform = exp_weights(3, std::numeric_limits<double>::infinity());
    EXPECT_DOUBLE_EQ(weighted_mean(std::vector<double>{1.0, 2.0, 3.0}, uniform), 2.0);
}

TEST(WeightedMean, TruncationRenormalises) {
    const auto w = exp_weights(10, 2.0);
    const std::vector<double> v{5.0, 1.0, 7.0};
    const auto ref = oracle::summed_weights(3, 2.0);
    EXPECT_NEAR(weighted_mean(v, w), ref[0] * 5.0 + ref[1] * 1.0 + ref[2] * 7.0, 1e-14);
}

TEST(WeightedMean, Errors) {
    const auto w = exp_weights(3, 1.0);
    EXPECT_EQ(kind_of([&] { weighted_mean(std::vector<double>{}, w); }), ErrorKind::insufficient_data);
    EXPECT_EQ(kind_of([&] { weighted_mean(std::vector<double>(4, 1.0), w); }), ErrorKind::invalid_parameter);
}

TEST(WeightedMean, UniformIsArithmeticMeanAndLinear) {
    std::mt19937_64 gen(9);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial * 7;
        std::vector<double> x(n), y(n), combo(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = nd(gen);
            y[i] = nd(gen);
        }
        const double a = nd(gen), b = nd(gen);
        for (std::size_t i = 0; i < n; ++i) combo[i] = a * x[i] + b * y[i];

        const auto uniform = exp_weights(n, std::numeric_limits<double>::infinity());
        EXPECT_NEAR(weighted_mean(x, uniform), oracle::mean(x), 1e-12);

        const auto w = exp_weights(n, 0.5 + trial);
        EXPECT_NEAR(weighted_mean(combo, w), a * weighted_mean(x, w) + b * weighted_mean(y, w), 1e-12);
    }
}

TEST(LogPriceSeries, WindowBounds) {
    const LogPriceSeries s({1.0, 2.0, 3.0});
    EXPECT_EQ(s.window(1, 2)[0], 2.0);
    EXPECT_EQ(kind_of([&] { s.window(2, 2); }), ErrorKind::invalid_parameter);
}
