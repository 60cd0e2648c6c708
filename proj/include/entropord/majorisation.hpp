#pragma once

// A-priori comparison of letter-subset sums and class-level majorisation.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entropord/cosets.hpp"
#include "entropord/digraph.hpp"

namespace entropord {

// Bit l set means letter l is in the sum.
using SubsetSum = std::uint8_t;

std::string subset_name(SubsetSum s);  // "a+b"
int subset_size(SubsetSum s);
// All subsets of the given size in lexicographic order: a+b, a+c, ..., e+f.
std::vector<SubsetSum> subsets_of_size(int k);

enum class Comparison { GreaterEq, LessEq, Equal, Incomparable };

// Holds for every descending probability vector.
Comparison apriori_compare(SubsetSum s, SubsetSum t);
bool apriori_geq(SubsetSum s, SubsetSum t);

// Covering digraph on subsets_of_size(2) (15 nodes) or (3) (20 nodes);
// node i is the i-th subset, edge (X,Y) means X > Y.
Digraph gr_covering(int k);

struct MarginalPair {
    std::array<SubsetSum, 2> rows;
    std::array<SubsetSum, 3> cols;
};
MarginalPair marginals(const LetterArrangement& g);
MarginalPair marginals(ClassId x);

bool rows_majorise(ClassId x, ClassId y);
bool cols_majorise(ClassId x, ClassId y);
bool class_majorises(ClassId x, ClassId y);

Digraph majorisation_digraph();

using UnorderedPair = std::pair<ClassId, ClassId>;  // first < second
std::set<UnorderedPair> transposition_pairs();

struct AdjacencyCensus {
    int nonzero = 0;           // entries of A
    int zeros_a_plus_a2 = 0;   // zero entries of A + A^2
    int zeros_a3 = 0;          // zero entries of A^3
};
AdjacencyCensus transposition_adjacency_census();

// Majorisations between classes one transposition apart, tagged by the
// geometry of the witnessing transposition (horizontal preferred).
Digraph single_transposition_majorisations();

// Signed difference between the 423-pair reduction and the single-transposition
// reduction: first = edges only in the former, second = only in the latter.
std::pair<std::vector<Edge>, std::vector<Edge>> reduction_difference();

enum class MarginalStatus { RowOnly, ColOnly, Both, Neither };
std::string to_string(MarginalStatus s);
MarginalStatus apriori_row_col_status(ClassId x, ClassId y);

// True when every cross comparison between the row (or column) sums of x and
// of y is fixed a priori, so the marginal comparison is settled either way.
bool marginal_order_settled(ClassId x, ClassId y);

// Pairs with Neither in both directions.
std::set<UnorderedPair> neither_pairs();
// Neither pairs whose marginal comparison is still open a priori.
std::set<UnorderedPair> no_relation_pairs();

}  // namespace entropord
