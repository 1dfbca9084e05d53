#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "distilled/error.hpp"
#include "distilled/estimators.hpp"
#include "distilled/metrics.hpp"

using namespace distilled;

TEST(Proportions, HandCounts)
{
    EXPECT_DOUBLE_EQ(fdp(IndexSet{1, 2, 3}, IndexSet{1, 2}), 1.0 / 3.0);
    EXPECT_EQ(fdp(IndexSet{}, IndexSet{1, 2}), 0.0);
    EXPECT_EQ(fdp(IndexSet{4, 5}, IndexSet{4, 5}), 0.0);

    EXPECT_DOUBLE_EQ(ndp(IndexSet{1}, IndexSet{1, 2, 3, 4}), 0.75);
    EXPECT_EQ(ndp(IndexSet{1}, IndexSet{}), 0.0);
    EXPECT_EQ(ndp(IndexSet{0, 1, 2, 3}, IndexSet{1, 2}), 0.0);
}

TEST(Proportions, EmptyConventionsAreFlagged)
{
    const auto truth = make_sparse_signal(4, {}, 0.0);
    const auto m = evaluate({{}, 1.0}, truth, 4, 4.0);
    EXPECT_TRUE(m.empty_estimate);
    EXPECT_TRUE(m.empty_support);
    EXPECT_FALSE(m.detected);
}

TEST(Proportions, PermutationInvariantAndPrecisionComplement)
{
    Rng rng(12);
    for (int rep = 0; rep < 100; ++rep) {
        const Index p = 60;
        IndexSet all(p);
        std::iota(all.begin(), all.end(), Index{0});
        IndexSet est, truth;
        std::bernoulli_distribution coin(0.3);
        for (Index i : all) {
            if (coin(rng))
                est.push_back(i);
            if (coin(rng))
                truth.push_back(i);
        }
        std::vector<Index> perm(all);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto move = [&](const IndexSet& s) {
            IndexSet out;
            for (Index i : s)
                out.push_back(perm[static_cast<std::size_t>(i)]);
            std::sort(out.begin(), out.end());
            return out;
        };
        EXPECT_DOUBLE_EQ(fdp(move(est), move(truth)), fdp(est, truth));
        EXPECT_DOUBLE_EQ(ndp(move(est), move(truth)), ndp(est, truth));

        if (!est.empty()) {
            IndexSet both;
            std::set_intersection(est.begin(), est.end(), truth.begin(), truth.end(), std::back_inserter(both));
            EXPECT_NEAR(fdp(est, truth) + static_cast<double>(both.size()) / est.size(), 1.0, 1e-15);
        }
    }
}

TEST(Aggregate, Means)
{
    TrialMetrics a;
    a.fdp = 0.2;
    a.ndp = 0.4;
    a.detected = true;
    const auto one = aggregate(std::vector<TrialMetrics>{a});
    EXPECT_EQ(one.fdr, 0.2);
    EXPECT_EQ(one.ndr, 0.4);
    EXPECT_EQ(one.detection_rate, 1.0);

    TrialMetrics zero, full;
    full.fdp = 1.0;
    const auto half = aggregate(std::vector<TrialMetrics>{zero, full, zero, full});
    EXPECT_EQ(half.fdr, 0.5);
    EXPECT_EQ(half.detection_rate, 0.0);
    EXPECT_THROW(aggregate(std::vector<TrialMetrics>{}), ParameterError);
}

// Brute-force oracle: threshold directly and count.
TEST(OperatingCurve, MatchesDirectThresholding)
{
    Rng rng(21);
    std::normal_distribution<double> n01;
    for (int rep = 0; rep < 30; ++rep) {
        const Index p = 300;
        const auto truth = generate_sparse_signal({p, 17, 1.5}, rng);
        Eigen::VectorXd y = truth.values;
        for (Index i = 0; i < p; ++i)
            y[i] += n01(rng);
        const auto curve = OperatingCurve::from_dense(y, truth);

        Observations obs;
        for (Index i = 0; i < p; i += 2)
            obs.indices.push_back(i);
        obs.values.resize(obs.size());
        for (Index t = 0; t < obs.size(); ++t)
            obs.values[t] = y[obs.indices[static_cast<std::size_t>(t)]];
        const auto sub = OperatingCurve::from_observations(obs, truth);

        double best = 1.0;
        for (int k = 0; k < 40; ++k) {
            const double tau = 0.05 + 0.1 * k;
            const auto direct = threshold_support(y, tau);
            const auto pt = curve.at(tau, false);
            EXPECT_EQ(pt.discoveries, static_cast<Index>(direct.indices.size()));
            EXPECT_DOUBLE_EQ(pt.fdp, fdp(direct, truth));
            EXPECT_DOUBLE_EQ(pt.ndp, ndp(direct, truth));

            const auto strict = strict_threshold_support(obs, tau);
            const auto spt = sub.at(tau, true);
            EXPECT_DOUBLE_EQ(spt.fdp, fdp(strict, truth));
            EXPECT_DOUBLE_EQ(spt.ndp, ndp(strict, truth));
        }
        // every distinct observation value is a candidate cut
        for (Index i = 0; i < p; ++i) {
            const auto est = threshold_support(y, std::max(y[i], 1e-12));
            best = std::min(best, std::max(fdp(est, truth), ndp(est, truth)));
        }
        EXPECT_LE(curve.best_max_error(), best + 1e-15);
    }
}

TEST(OperatingCurve, SweepIsMonotone)
{
    Rng rng(22);
    std::normal_distribution<double> n01;
    const auto truth = generate_sparse_signal({500, 30, 2.0}, rng);
    Eigen::VectorXd y = truth.values;
    for (Index i = 0; i < y.size(); ++i)
        y[i] += n01(rng);
    const auto curve = OperatingCurve::from_dense(y, truth);
    OperatingPoint prev = curve.at(1e-3, false);
    for (int k = 1; k < 200; ++k) {
        const auto pt = curve.at(1e-3 + 0.03 * k, false);
        EXPECT_LE(pt.discoveries, prev.discoveries);
        EXPECT_GE(pt.ndp, prev.ndp);
        prev = pt;
    }
}

TEST(OperatingCurve, HandEnumeratedThreeCoordinates)
{
    // y = (2.0, 1.0, -1.0), S = {0}
    const auto truth = make_sparse_signal(3, {0}, 1.0);
    const auto curve = OperatingCurve::from_dense(Eigen::Vector3d(2.0, 1.0, -1.0), truth);
    struct Row {
        double tau, fdp, ndp;
        Index discoveries;
    };
    const Row rows[] = {{0.5, 0.5, 0.0, 2}, {1.0, 0.5, 0.0, 2}, {1.5, 0.0, 0.0, 1}, {2.0, 0.0, 0.0, 1}, {2.5, 0.0, 1.0, 0}};
    for (const auto& r : rows) {
        const auto pt = curve.at(r.tau, false);
        EXPECT_EQ(pt.fdp, r.fdp) << r.tau;
        EXPECT_EQ(pt.ndp, r.ndp) << r.tau;
        EXPECT_EQ(pt.discoveries, r.discoveries) << r.tau;
    }
    // strict comparison drops the value sitting on the threshold
    EXPECT_EQ(curve.at(2.0, true).discoveries, 0);
    EXPECT_EQ(curve.best_max_error(), 0.0);
}
