#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "distilled/error.hpp"
#include "distilled/estimators.hpp"
#include "distilled/metrics.hpp"

using namespace distilled;

namespace {

DistillTrace hand_trace(Index p, Eigen::VectorXd budgets, IndexSet final_indices, Eigen::VectorXd final_values)
{
    DistillTrace trace;
    trace.p = p;
    const double total = budgets.sum();
    trace.allocation = make_allocation(std::move(budgets), total);
    IndexSet all(static_cast<std::size_t>(p));
    std::iota(all.begin(), all.end(), Index{0});
    DistillStep first;
    first.obs = {all, Eigen::VectorXd::Ones(p)};
    first.precision = trace.allocation.first() / static_cast<double>(p);
    DistillStep last;
    last.precision = final_indices.empty() ? 0.0 : trace.allocation.last() / static_cast<double>(final_indices.size());
    last.obs = {std::move(final_indices), std::move(final_values)};
    trace.steps = {first, last};
    return trace;
}

} // namespace

TEST(Threshold, HandExamples)
{
    const Eigen::Vector3d y(0.5, 3.1, -0.2);
    EXPECT_EQ(threshold_support(y, 1.0).indices, (IndexSet{1}));
    EXPECT_TRUE(threshold_support(y, 5.0).empty());
    EXPECT_THROW(threshold_support(y, 0.0), ParameterError);
    EXPECT_THROW(threshold_support(y, -1.0), ParameterError);

    // inclusive at the threshold
    EXPECT_EQ(threshold_support(Eigen::Vector2d(1.0, 0.9), 1.0).indices, (IndexSet{0}));
}

TEST(Threshold, OperatingPointsByHand)
{
    const Eigen::Vector3d y(2.0, 1.0, -1.0);
    const auto truth = make_sparse_signal(3, {0}, 1.0);
    const auto tight = threshold_support(y, 1.5);
    EXPECT_EQ(fdp(tight, truth), 0.0);
    EXPECT_EQ(ndp(tight, truth), 0.0);
    const auto loose = threshold_support(y, 0.5);
    EXPECT_EQ(loose.indices, (IndexSet{0, 1}));
    EXPECT_EQ(fdp(loose, truth), 0.5);
    EXPECT_EQ(ndp(loose, truth), 0.0);
}

TEST(Threshold, MonotoneAndShiftEquivariant)
{
    Rng rng(4);
    std::normal_distribution<double> n01;
    for (int rep = 0; rep < 50; ++rep) {
        Eigen::VectorXd y(200);
        for (Index i = 0; i < y.size(); ++i)
            y[i] = n01(rng);
        std::uniform_real_distribution<double> u(0.01, 2.5);
        double t1 = u(rng), t2 = u(rng);
        if (t1 > t2)
            std::swap(t1, t2);
        const auto big = threshold_support(y, t1).indices;
        const auto small = threshold_support(y, t2).indices;
        EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));

        // shifts by exact binary fractions keep the comparison exact
        const double c = 0.5 * (rep % 4 + 1);
        const Eigen::VectorXd shifted = y.array() + c;
        EXPECT_EQ(threshold_support(shifted, t1 + c).indices, big);
    }
}

TEST(DistilledEstimator, UsesStrictFinalThreshold)
{
    // p = 10, R_k = 5 gives c_k = 1/2 and tau = 2
    Eigen::VectorXd budgets(2);
    budgets << 5.0, 5.0;
    const auto trace = hand_trace(10, budgets, {5}, Eigen::VectorXd::Constant(1, 3.0));
    const auto est = ds_support_estimate(trace);
    EXPECT_DOUBLE_EQ(est.threshold, 2.0);
    EXPECT_EQ(est.indices, (IndexSet{5}));
    EXPECT_TRUE(detect(trace));

    const auto at_tau = hand_trace(10, budgets, {5, 6}, Eigen::Vector2d(2.0, 2.0000001));
    EXPECT_EQ(ds_support_estimate(at_tau).indices, (IndexSet{6}));

    const auto empty = hand_trace(10, budgets, {}, Eigen::VectorXd());
    EXPECT_TRUE(ds_support_estimate(empty).empty());
    EXPECT_FALSE(detect(empty));
}

TEST(DistilledEstimator, DefaultThreshold)
{
    const Index p = 1 << 14;
    const auto alloc = plan_allocation(p, static_cast<double>(p));
    EXPECT_NEAR(ds_threshold(alloc, p), 2.846324384183925, 1e-12);
    EXPECT_NEAR(ds_threshold(alloc, p), std::sqrt(2.0 * p / alloc.first()), 1e-12);
}

TEST(DistilledEstimator, NoiselessDetects)
{
    Rng rng(3);
    const auto x = generate_sparse_signal({4096, 10, 3.0}, rng);
    ZeroNoise w;
    const auto trace = run_distilled_sensing(x, plan_allocation(4096, 4096.0), w);
    EXPECT_TRUE(detect(trace));
    EXPECT_EQ(ds_support_estimate(trace).indices, x.support);
}

TEST(DistilledEstimator, SubsetOfFinalIndexSet)
{
    const auto alloc = plan_allocation(2048, 2048.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto x = generate_sparse_signal({2048, 45, 2.5}, rng);
        GaussianNoise w(seed + 99);
        const auto trace = run_distilled_sensing(x, alloc, w);
        const auto est = ds_support_estimate(trace);
        const auto& last = trace.final_observations().indices;
        EXPECT_TRUE(std::includes(last.begin(), last.end(), est.indices.begin(), est.indices.end()));
    }
}

TEST(DistilledEstimator, NullFalseAlarmRate)
{
    const Index p = 1 << 14;
    const auto alloc = plan_allocation(p, static_cast<double>(p));
    const auto x = make_sparse_signal(p, {}, 0.0);
    int alarms = 0;
    for (int r = 0; r < 500; ++r) {
        GaussianNoise w(derive_seed(77, static_cast<std::uint64_t>(r), StreamTag::distilled));
        alarms += detect(run_distilled_sensing(x, alloc, w)) ? 1 : 0;
    }
    EXPECT_LE(alarms, 25);
}

TEST(NonadaptiveThreshold, MidpointConstruction)
{
    EXPECT_NEAR(nonadaptive_threshold(1 << 16, 0.8, 0.5), 3.7970332307799023, 1e-12);
    EXPECT_NEAR(nonadaptive_threshold(1 << 16, 0.8, 0.5, 0.6), std::sqrt(1.2 * std::log(65536.0)), 1e-12);
    EXPECT_THROW(nonadaptive_threshold(1 << 16, 0.5, 0.5), ParameterError);
    EXPECT_THROW(nonadaptive_threshold(1 << 16, 0.3, 0.5), ParameterError);
    EXPECT_THROW(nonadaptive_threshold(1 << 16, 0.8, 0.5, 0.9), ParameterError);
}
