#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "entropord/fixtures.hpp"
#include "entropord/majorisation.hpp"
#include "entropord/numeric.hpp"

using namespace entropord;

namespace {

SubsetSum sum_of(std::string_view letters) {
    SubsetSum s = 0;
    for (char c : letters) s |= SubsetSum(1u << letter_from_char(c));
    return s;
}

// Reference pairs in sorted order.
std::vector<Edge> fixture(const char* name) {
    auto v = pairs_of(load_pairs(default_data_dir() / name));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Subsets, Enumeration) {
    EXPECT_EQ(subsets_of_size(2).size(), 15u);
    EXPECT_EQ(subsets_of_size(3).size(), 20u);
    EXPECT_EQ(subset_name(subsets_of_size(2).front()), "a+b");
    EXPECT_EQ(subset_name(subsets_of_size(2).back()), "e+f");
    EXPECT_EQ(subset_name(subsets_of_size(3)[1]), "a+b+d");
}

TEST(AprioriCompare, Examples) {
    EXPECT_EQ(apriori_compare(sum_of("ab"), sum_of("cd")), Comparison::GreaterEq);
    EXPECT_EQ(apriori_compare(sum_of("cd"), sum_of("ab")), Comparison::LessEq);
    EXPECT_EQ(apriori_compare(sum_of("ad"), sum_of("bc")), Comparison::Incomparable);
    EXPECT_EQ(apriori_compare(sum_of("af"), sum_of("bc")), Comparison::Incomparable);
    EXPECT_EQ(apriori_compare(sum_of("ace"), sum_of("ace")), Comparison::Equal);
    EXPECT_EQ(apriori_compare(sum_of("ace"), sum_of("bdf")), Comparison::GreaterEq);
    EXPECT_EQ(apriori_compare(sum_of("aef"), sum_of("bcd")), Comparison::Incomparable);
    EXPECT_THROW(apriori_compare(sum_of("ab"), sum_of("abc")), std::invalid_argument);
}

// GreaterEq holds on every sample; Incomparable shows both orders among samples.
TEST(AprioriCompare, MonteCarloOracle) {
    const int n = 20000;
    std::vector<ProbVector> samples;
    for (int i = 0; i < n; ++i) samples.push_back(sample_sorted(99, i));
    auto value = [](const ProbVector& p, SubsetSum s) {
        double t = 0;
        for (int l = 0; l < kDegree; ++l)
            if (s >> l & 1) t += p[l];
        return t;
    };
    for (int k : {2, 3}) {
        auto nodes = subsets_of_size(k);
        for (SubsetSum s : nodes) {
            for (SubsetSum t : nodes) {
                bool above = false, below = false;
                for (const auto& p : samples) {
                    double d = value(p, s) - value(p, t);
                    above = above || d > 0;
                    below = below || d < 0;
                }
                switch (apriori_compare(s, t)) {
                case Comparison::GreaterEq: EXPECT_FALSE(below) << subset_name(s) << " " << subset_name(t); break;
                case Comparison::LessEq: EXPECT_FALSE(above) << subset_name(s) << " " << subset_name(t); break;
                case Comparison::Equal: EXPECT_FALSE(above || below); break;
                case Comparison::Incomparable:
                    EXPECT_TRUE(above && below) << subset_name(s) << " " << subset_name(t);
                    break;
                }
            }
        }
    }
}

TEST(CoveringPosets, MatchReferenceMatrices) {
    Digraph g2 = gr_covering(2), g3 = gr_covering(3);
    EXPECT_EQ(g2.node_count(), 15);
    EXPECT_EQ(g2.edge_count(), 20u);
    EXPECT_EQ(g3.node_count(), 20);
    EXPECT_EQ(g3.edge_count(), 30u);
    for (auto [g, file] : {std::pair{&g2, "gr2_covering_matrix.txt"}, std::pair{&g3, "gr3_covering_matrix.txt"}}) {
        auto m = load_matrix(default_data_dir() / file);
        ASSERT_EQ(int(m.size()), g->node_count());
        for (int i = 0; i < g->node_count(); ++i)
            for (int j = 0; j < g->node_count(); ++j) EXPECT_EQ(m[i][j] != 0, g->has_edge(i + 1, j + 1)) << file;
    }
}

TEST(Majorisation, Census) {
    Digraph m = majorisation_digraph();
    EXPECT_EQ(m.edge_count(), 423u);
    EXPECT_EQ(transitive_reduction(m).edge_count(), 134u);
    EXPECT_TRUE(is_dag(m));
    EXPECT_EQ(transitive_closure(m).pairs(), m.pairs());
}

TEST(Majorisation, SingleTranspositionSet) {
    Digraph s = single_transposition_majorisations();
    EXPECT_EQ(s.pairs(), fixture("single_transposition_majorisation.txt"));
    std::map<RelationKind, int> kinds;
    for (const auto& [e, k] : s.edges()) ++kinds[k];
    EXPECT_EQ(kinds[RelationKind::MajDiagonal], 15);
    EXPECT_EQ(kinds[RelationKind::MajVertical], 60);
    EXPECT_EQ(kinds[RelationKind::MajHorizontal], 90);

    Digraph red = transitive_reduction(s);
    EXPECT_EQ(red.edge_count(), 135u);
    std::vector<Edge> redundant;
    for (const auto& e : s.pairs())
        if (!red.has_edge(e.first, e.second)) redundant.push_back(e);
    EXPECT_EQ(redundant, fixture("redundant_majorisation.txt"));
    EXPECT_EQ(transitive_closure(s).edge_count(), 421u);
}

TEST(Majorisation, ReductionDifference) {
    auto [plus, minus] = reduction_difference();
    EXPECT_EQ(plus, (std::vector<Edge>{{34, 47}, {46, 47}}));
    EXPECT_EQ(minus, (std::vector<Edge>{{44, 47}, {45, 47}, {46, 48}}));
}

TEST(Transpositions, PairCensus) {
    EXPECT_EQ(transposition_pairs().size(), 360u);
    AdjacencyCensus c = transposition_adjacency_census();
    EXPECT_EQ(c.nonzero, 720);
    EXPECT_EQ(c.zeros_a_plus_a2, 720);
    EXPECT_EQ(c.zeros_a3, 0);
}

TEST(Marginals, NoRelationPairs) {
    EXPECT_EQ(neither_pairs().size(), 106u);
    auto listed = fixture("no_relation.txt");
    std::set<UnorderedPair> want;
    for (auto [x, y] : listed) want.insert({std::min(x, y), std::max(x, y)});
    EXPECT_EQ(no_relation_pairs(), want);
    for (const auto& [x, y] : want) {
        EXPECT_EQ(apriori_row_col_status(x, y), MarginalStatus::Neither);
        EXPECT_FALSE(marginal_order_settled(x, y));
    }
}

TEST(Marginals, StatusOfMajorisingPairs) {
    for (const auto& [e, k] : single_transposition_majorisations().edges())
        EXPECT_EQ(apriori_row_col_status(e.first, e.second), MarginalStatus::Both);
    EXPECT_EQ(to_string(MarginalStatus::RowOnly), "RowOnly");
}
