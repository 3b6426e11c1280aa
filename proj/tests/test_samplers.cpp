// Slice-index selection: DEIM, TDEIM, hybrid and the randomized baselines.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"

using namespace tcur;
using namespace tcur::testutil;

namespace {

// Step-by-step execution of the matrix DEIM recursion with explicit inverses.
std::vector<Index> deim_oracle(const Eigen::MatrixXd& u) {
    std::vector<Index> sel;
    Eigen::VectorXd col = u.col(0).cwiseAbs();
    Index arg = 0;
    col.maxCoeff(&arg);
    sel.push_back(arg);
    for (Index j = 1; j < u.cols(); ++j) {
        Eigen::MatrixXd sub(j, j);
        Eigen::VectorXd rhs(j);
        for (Index t = 0; t < j; ++t) {
            sub.row(t) = u.row(sel[static_cast<size_t>(t)]).head(j);
            rhs(t) = u(sel[static_cast<size_t>(t)], j);
        }
        Eigen::VectorXd coeff = sub.inverse() * rhs;
        Eigen::VectorXd resid = (u.col(j) - u.leftCols(j) * coeff).cwiseAbs();
        resid.maxCoeff(&arg);
        sel.push_back(arg);
    }
    for (Index& s : sel) ++s;
    return sel;
}

Eigen::VectorXd tube_norms_of(const Tensor3& lateral) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(lateral.i1());
    for (Index k = 0; k < lateral.i3(); ++k)
        for (Index i = 0; i < lateral.i1(); ++i)
            out(i) += lateral(i, 0, k) * lateral(i, 0, k);
    return out.cwiseSqrt();
}

// Literal execution of the tubal DEIM recursion using the block-circulant
// oracle product and the tensor inverse.
std::vector<Index> tdeim_oracle(const Tensor3& u) {
    const Index n = u.i1();
    std::vector<Index> sel;

    Tensor3 first = slice_lateral(u, IndexSet({1}, u.i2()));
    Eigen::VectorXd norms = tube_norms_of(first);
    Index arg = 0;
    norms.maxCoeff(&arg);
    sel.push_back(arg + 1);

    for (Index j = 2; j <= u.i2(); ++j) {
        std::vector<Index> cols(static_cast<size_t>(j - 1));
        std::iota(cols.begin(), cols.end(), Index{1});
        IndexSet prefix_cols(cols, u.i2());
        IndexSet rows(sel, n);

        Tensor3 u_prefix = slice_lateral(u, prefix_cols);
        Tensor3 u_col = slice_lateral(u, IndexSet({j}, u.i2()));
        Tensor3 sub = slice_horizontal(u_prefix, rows);
        Tensor3 rhs = slice_horizontal(u_col, rows);

        Tensor3 coeff = tproduct_oracle(tinverse(sub), rhs);
        Tensor3 resid = u_col - tproduct_oracle(u_prefix, coeff);

        Eigen::VectorXd rn = tube_norms_of(resid);
        rn.maxCoeff(&arg);
        sel.push_back(arg + 1);
    }
    return sel;
}

} // namespace

TEST(DeimTest, CanonicalBasisPicksLeadingRows) {
    Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(6, 3);
    IndexSet s = deim_matrix(basis);
    EXPECT_EQ(s.indices, (std::vector<Index>{1, 2, 3}));
}

TEST(DeimTest, SingleColumnMaxMagnitude) {
    Eigen::MatrixXd basis(3, 1);
    basis << 3.0, -7.0, 2.0;
    EXPECT_EQ(deim_matrix(basis).indices, (std::vector<Index>{2}));
}

TEST(DeimTest, MatchesHandExecution) {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::MatrixXd basis = random_orthonormal(6, 3, rng);
        EXPECT_EQ(deim_matrix(basis).indices, deim_oracle(basis)) << "trial " << trial;
    }
}

TEST(DeimTest, BasisRangeInvariance) {
    std::mt19937_64 rng(302);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::MatrixXd u = random_orthonormal(8, 3, rng);
        Eigen::MatrixXd m = random_matrix(3, 3, rng) + 4.0 * Eigen::MatrixXd::Identity(3, 3);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        double cond = svd.singularValues()(0) / svd.singularValues()(2);
        if (cond > 1e3) continue;
        std::multiset<Index> a, b;
        for (Index i : deim_matrix(u).indices) a.insert(i);
        for (Index i : deim_matrix(u * m).indices) b.insert(i);
        EXPECT_EQ(a, b) << "trial " << trial;
    }
}

TEST(DeimTest, DegenerateBasisIsReported) {
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(3, 2);
    basis(0, 1) = 1.0;
    try {
        deim_matrix(basis);
        FAIL() << "expected DegeneracyError";
    } catch (const DegeneracyError& e) {
        EXPECT_EQ(e.step(), 2);
    }
}

TEST(TdeimTest, SingleSliceReducesToMatrixDeim) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::MatrixXd basis = random_matrix(12, 4, rng);
        Tensor3 t(12, 4, 1, std::vector<double>(basis.data(), basis.data() + basis.size()));
        EXPECT_EQ(tdeim(t).indices, deim_matrix(basis).indices) << "trial " << trial;
    }
}

TEST(TdeimTest, IdentityBasisPicksLeadingRows) {
    Tensor3 basis = slice_lateral(identity_tensor(5, 3), IndexSet({1, 2}, 5));
    EXPECT_EQ(tdeim(basis).indices, (std::vector<Index>{1, 2}));
}

TEST(TdeimTest, ResidualVanishesAtSampledIndices) {
    std::mt19937_64 rng(304);
    Tensor3 basis = random_tubal_basis(8, 3, 4, rng);
    TdeimResult r = tdeim_with_residual(basis);
    double scale = fro_norm(basis);
    for (Index j = 1; j < 3; ++j)
        for (Index t = 0; t < j; ++t) {
            Index row = r.indices.indices[static_cast<size_t>(t)] - 1;
            double norm_sq = 0.0;
            for (Index k = 0; k < 4; ++k) norm_sq += r.residual(row, j, k) * r.residual(row, j, k);
            EXPECT_LE(std::sqrt(norm_sq), 1e-10 * scale);
        }
}

TEST(TdeimTest, MatchesLiteralOracle) {
    std::mt19937_64 rng(305);
    for (int trial = 0; trial < 8; ++trial) {
        Tensor3 basis = random_tubal_basis(8, 3, 4, rng);
        EXPECT_EQ(tdeim(basis).indices, tdeim_oracle(basis)) << "trial " << trial;
    }
}

TEST(TdeimTest, Deterministic) {
    std::mt19937_64 rng(306);
    Tensor3 basis = random_tubal_basis(10, 4, 5, rng);
    EXPECT_EQ(tdeim(basis).indices, tdeim(basis).indices);
}

TEST(HtdeimTest, NoExtensionEqualsTdeim) {
    std::mt19937_64 rng(307);
    Tensor3 bu = random_tubal_basis(9, 3, 4, rng);
    Tensor3 bv = random_tubal_basis(7, 3, 4, rng);
    auto [p, q] = htdeim(bu, bv, 3, 3);
    EXPECT_EQ(p.indices, tdeim(bu).indices);
    EXPECT_EQ(q.indices, tdeim(bv).indices);
}

TEST(HtdeimTest, HandComputedRankOneExtension) {
    // single lateral slice with tube norms 0.9, 0.3, 0.1: no deflation happens,
    // so the appended index is the largest residual leverage score != s1
    Tensor3 basis(3, 1, 2);
    basis(0, 0, 0) = 0.9;
    basis(1, 0, 0) = 0.3;
    basis(2, 0, 0) = 0.1;
    auto [p, q] = htdeim(basis, basis, 1, 2);
    EXPECT_EQ(p.indices, (std::vector<Index>{1, 2}));
    EXPECT_EQ(q.indices, (std::vector<Index>{1, 2}));

    // leverage-score oracle: scores of the residual (= basis here), s1 removed
    LeverageScores lv = tubal_leverage(basis);
    EXPECT_NEAR(lv.scores[0], 0.81, 1e-12);
    EXPECT_NEAR(lv.scores[1], 0.09, 1e-12);
    EXPECT_NEAR(lv.scores[2], 0.01, 1e-12);
}

TEST(HtdeimTest, DistinctInBoundsManyTrials) {
    std::mt19937_64 rng(308);
    std::uniform_int_distribution<Index> rank_dist(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Index rank = rank_dist(rng);
        Index ext = rank + static_cast<Index>(rng() % 4);
        ext = std::min<Index>(ext, 8);
        Tensor3 bu = random_tubal_basis(10, rank, 3, rng);
        Tensor3 bv = random_tubal_basis(8, rank, 3, rng);
        auto [p, q] = htdeim(bu, bv, rank, ext);
        EXPECT_EQ(p.size(), ext);
        EXPECT_EQ(q.size(), ext);
        p.validate();
        q.validate();
    }
}

TEST(HtdeimTest, RangeValidation) {
    std::mt19937_64 rng(309);
    Tensor3 bu = random_tubal_basis(4, 2, 3, rng);
    Tensor3 bv = random_tubal_basis(4, 2, 3, rng);
    EXPECT_THROW(htdeim(bu, bv, 2, 5), RankError);
    EXPECT_THROW(htdeim(bu, bv, 2, 1), RankError);
}

TEST(TopLeverageTest, Examples) {
    LeverageScores lv{{0.1, 0.9, 0.5}, 2};
    EXPECT_EQ(top_leverage(lv, 2).indices, (std::vector<Index>{2, 3}));

    LeverageScores equal{{0.5, 0.5, 0.5}, 2};
    EXPECT_EQ(top_leverage(equal, 2).indices, (std::vector<Index>{1, 2}));
}

TEST(TopLeverageTest, MatchesSortingOracle) {
    std::mt19937_64 rng(310);
    Tensor3 x = gen_synthetic(3.0, {12, 10, 6});
    LeverageScores lv = tubal_leverage(truncated_tsvd(x, 4).u);
    IndexSet got = top_leverage(lv, 4);

    std::vector<Index> order(lv.scores.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return lv.scores[static_cast<size_t>(a)] > lv.scores[static_cast<size_t>(b)];
    });
    for (Index t = 0; t < 4; ++t)
        EXPECT_EQ(got.indices[static_cast<size_t>(t)], order[static_cast<size_t>(t)] + 1);
}

TEST(LeverageSampleTest, DegenerateDistribution) {
    LeverageScores lv{{0.0, 2.0, 0.0}, 2};
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        EXPECT_EQ(leverage_sample(lv, 1, seed).indices, (std::vector<Index>{2}));
}

TEST(LeverageSampleTest, ExhaustiveDrawCoversAll) {
    LeverageScores lv{{1.0, 1.0, 1.0, 1.0}, 4};
    IndexSet s = leverage_sample(lv, 4, 7);
    std::multiset<Index> got(s.indices.begin(), s.indices.end());
    EXPECT_EQ(got, (std::multiset<Index>{1, 2, 3, 4}));
}

TEST(LeverageSampleTest, MonteCarloMarginal) {
    LeverageScores lv{{1.5, 0.5}, 2};
    int hits = 0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t)
        if (leverage_sample(lv, 1, static_cast<std::uint64_t>(t)).indices[0] == 1) ++hits;
    EXPECT_NEAR(static_cast<double>(hits) / trials, 0.75, 0.01);
}

TEST(LeverageSampleTest, InsufficientPositiveScores) {
    LeverageScores lv{{1.0, 0.0, 0.0}, 1};
    EXPECT_THROW(leverage_sample(lv, 2, 0), SamplingError);
}

TEST(LeverageSampleTest, SeedReproducibility) {
    LeverageScores lv{{0.3, 0.9, 0.5, 0.3}, 2};
    EXPECT_EQ(leverage_sample(lv, 3, 99).indices, leverage_sample(lv, 3, 99).indices);
}

TEST(UniformSampleTest, FullDrawIsPermutation) {
    IndexSet s = uniform_sample(6, 6, 42);
    std::multiset<Index> got(s.indices.begin(), s.indices.end());
    EXPECT_EQ(got, (std::multiset<Index>{1, 2, 3, 4, 5, 6}));
}

TEST(UniformSampleTest, MonteCarloFrequencies) {
    int counts[4] = {0, 0, 0, 0};
    const int trials = 100000;
    for (int t = 0; t < trials; ++t)
        ++counts[uniform_sample(4, 1, static_cast<std::uint64_t>(t)).indices[0] - 1];
    for (int i = 0; i < 4; ++i)
        EXPECT_NEAR(static_cast<double>(counts[i]) / trials, 0.25, 0.01);
}

TEST(UniformSampleTest, SeedReproducibilityAndRange) {
    EXPECT_EQ(uniform_sample(9, 4, 5).indices, uniform_sample(9, 4, 5).indices);
    EXPECT_THROW(uniform_sample(3, 4, 0), RankError);
}

TEST(SamplerDispatchTest, AllMethodsProduceValidSets) {
    std::mt19937_64 rng(311);
    Tensor3 x = random_tensor(9, 8, 4, rng);
    TSvdFactors f = truncated_tsvd(x, 3);
    for (SamplerMethod m : {SamplerMethod::tdeim, SamplerMethod::htdeim,
                            SamplerMethod::top_leverage, SamplerMethod::leverage_sampling,
                            SamplerMethod::uniform}) {
        SamplerConfig config;
        config.method = m;
        config.rank = 3;
        config.extended_rank = m == SamplerMethod::htdeim ? 5 : 0;
        config.seed = 11;
        auto [p, q] = select_slices(config, f, x.i1(), x.i2());
        p.validate();
        q.validate();
        EXPECT_EQ(p.bound, 9);
        EXPECT_EQ(q.bound, 8);
    }
}

TEST(SamplerDispatchTest, NamesRoundTrip) {
    for (SamplerMethod m : {SamplerMethod::tdeim, SamplerMethod::htdeim,
                            SamplerMethod::top_leverage, SamplerMethod::leverage_sampling,
                            SamplerMethod::uniform})
        EXPECT_EQ(parse_sampler(sampler_name(m)), m);
    EXPECT_FALSE(parse_sampler("maxvol").has_value());
}
