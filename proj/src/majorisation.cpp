#include "entropord/majorisation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace entropord {

std::string subset_name(SubsetSum s) {
    std::string out;
    for (Letter l = 0; l < kDegree; ++l) {
        if (!(s >> l & 1)) continue;
        if (!out.empty()) out += '+';
        out += letter_char(l);
    }
    return out;
}

int subset_size(SubsetSum s) { return std::popcount(static_cast<unsigned>(s)); }

std::vector<SubsetSum> subsets_of_size(int k) {
    std::vector<std::vector<Letter>> combos;
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, Letter from) -> void {
        if (int(cur.size()) == k) {
            combos.push_back(cur);
            return;
        }
        for (Letter l = from; l < kDegree; ++l) {
            cur.push_back(l);
            self(self, l + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<SubsetSum> out;
    for (const auto& c : combos) {
        SubsetSum s = 0;
        for (Letter l : c) s |= SubsetSum(1u << l);
        out.push_back(s);
    }
    return out;
}

namespace {

std::vector<Letter> letters_of(SubsetSum s) {
    std::vector<Letter> v;
    for (Letter l = 0; l < kDegree; ++l)
        if (s >> l & 1) v.push_back(l);
    return v;
}

// every remaining letter of s is at least as large as its counterpart in t
bool dominates(const std::vector<Letter>& s, const std::vector<Letter>& t) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > t[i]) return false;
    return true;
}

}  // namespace

Comparison apriori_compare(SubsetSum s, SubsetSum t) {
    if (subset_size(s) != subset_size(t)) throw std::invalid_argument("subset sizes differ");
    if (s == t) return Comparison::Equal;
    SubsetSum common = s & t;
    auto rs = letters_of(s & ~common);
    auto rt = letters_of(t & ~common);
    if (dominates(rs, rt)) return Comparison::GreaterEq;
    if (dominates(rt, rs)) return Comparison::LessEq;
    return Comparison::Incomparable;
}

bool apriori_geq(SubsetSum s, SubsetSum t) {
    Comparison c = apriori_compare(s, t);
    return c == Comparison::GreaterEq || c == Comparison::Equal;
}

Digraph gr_covering(int k) {
    auto nodes = subsets_of_size(k);
    const int n = int(nodes.size());
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && apriori_compare(nodes[i], nodes[j]) == Comparison::GreaterEq)
                d.add_edge(i + 1, j + 1, RelationKind::Derived);
    return transitive_reduction(d);
}

MarginalPair marginals(const LetterArrangement& g) {
    MarginalPair m{};
    for (int pos = 1; pos <= kDegree; ++pos) {
        SubsetSum bit = SubsetSum(1u << g.at(pos));
        m.rows[(pos - 1) / 3] |= bit;
        m.cols[(pos - 1) % 3] |= bit;
    }
    return m;
}

MarginalPair marginals(ClassId x) { return marginals(class_info(x).canonical_grid); }

namespace {

// each coordinate of the target lies between two coordinates of the source
template <std::size_t N>
bool coordinates_between(const std::array<SubsetSum, N>& src, const std::array<SubsetSum, N>& dst) {
    for (SubsetSum n : dst) {
        bool above = false, below = false;
        for (SubsetSum m : src) {
            above = above || apriori_geq(m, n);
            below = below || apriori_geq(n, m);
        }
        if (!above || !below) return false;
    }
    return true;
}

template <std::size_t N>
bool cross_settled(const std::array<SubsetSum, N>& a, const std::array<SubsetSum, N>& b) {
    for (SubsetSum m : a)
        for (SubsetSum n : b)
            if (apriori_compare(m, n) == Comparison::Incomparable) return false;
    return true;
}

}  // namespace

bool rows_majorise(ClassId x, ClassId y) { return coordinates_between(marginals(x).rows, marginals(y).rows); }

bool cols_majorise(ClassId x, ClassId y) { return coordinates_between(marginals(x).cols, marginals(y).cols); }

bool class_majorises(ClassId x, ClassId y) { return rows_majorise(x, y) && cols_majorise(x, y); }

Digraph majorisation_digraph() {
    Digraph d;
    for (ClassId x = 1; x <= kClassCount; ++x)
        for (ClassId y = 1; y <= kClassCount; ++y)
            if (x != y && class_majorises(x, y)) d.add_edge(x, y, RelationKind::Derived);
    return d;
}

namespace {

enum class Geometry { Horizontal, Vertical, Diagonal };

Geometry geometry(int i, int j) {
    if ((i - 1) / 3 == (j - 1) / 3) return Geometry::Horizontal;
    if ((i - 1) % 3 == (j - 1) % 3) return Geometry::Vertical;
    return Geometry::Diagonal;
}

// neighbour class -> best witnessing geometry
std::map<ClassId, Geometry> transposition_neighbours(ClassId x) {
    std::map<ClassId, Geometry> out;
    const LetterArrangement& g = class_info(x).canonical_grid;
    for (int i = 1; i <= kDegree; ++i) {
        for (int j = i + 1; j <= kDegree; ++j) {
            LetterArrangement h = g;
            std::swap(h.cell[i - 1], h.cell[j - 1]);
            ClassId y = class_of_grid(h);
            if (y == x) continue;
            Geometry geo = geometry(i, j);
            auto [it, fresh] = out.try_emplace(y, geo);
            if (!fresh && geo < it->second) it->second = geo;
        }
    }
    return out;
}

}  // namespace

std::set<UnorderedPair> transposition_pairs() {
    std::set<UnorderedPair> out;
    for (ClassId x = 1; x <= kClassCount; ++x)
        for (const auto& [y, geo] : transposition_neighbours(x)) out.insert({std::min(x, y), std::max(x, y)});
    return out;
}

AdjacencyCensus transposition_adjacency_census() {
    const int n = kClassCount;
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (const auto& [x, y] : transposition_pairs()) a[x - 1][y - 1] = a[y - 1][x - 1] = 1;
    auto mul = [n](const auto& p, const auto& q) {
        std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (p[i][k])
                    for (int j = 0; j < n; ++j) r[i][j] += p[i][k] * q[k][j];
        return r;
    };
    auto a2 = mul(a, a);
    auto a3 = mul(a2, a);
    AdjacencyCensus c;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c.nonzero += a[i][j] != 0;
            c.zeros_a_plus_a2 += (a[i][j] + a2[i][j]) == 0;
            c.zeros_a3 += a3[i][j] == 0;
        }
    }
    return c;
}

Digraph single_transposition_majorisations() {
    Digraph d;
    for (ClassId x = 1; x <= kClassCount; ++x) {
        for (const auto& [y, geo] : transposition_neighbours(x)) {
            if (!class_majorises(x, y)) continue;
            RelationKind k = geo == Geometry::Horizontal ? RelationKind::MajHorizontal
                             : geo == Geometry::Vertical ? RelationKind::MajVertical
                                                         : RelationKind::MajDiagonal;
            d.add_edge(x, y, k);
        }
    }
    return d;
}

std::pair<std::vector<Edge>, std::vector<Edge>> reduction_difference() {
    auto t = transitive_reduction(majorisation_digraph()).pairs();
    auto ts = transitive_reduction(single_transposition_majorisations()).pairs();
    std::vector<Edge> plus, minus;
    std::set_difference(t.begin(), t.end(), ts.begin(), ts.end(), std::back_inserter(plus));
    std::set_difference(ts.begin(), ts.end(), t.begin(), t.end(), std::back_inserter(minus));
    return {plus, minus};
}

std::string to_string(MarginalStatus s) {
    switch (s) {
    case MarginalStatus::RowOnly: return "RowOnly";
    case MarginalStatus::ColOnly: return "ColOnly";
    case MarginalStatus::Both: return "Both";
    case MarginalStatus::Neither: return "Neither";
    }
    return "Neither";
}

MarginalStatus apriori_row_col_status(ClassId x, ClassId y) {
    bool r = rows_majorise(x, y);
    bool c = cols_majorise(x, y);
    if (r && c) return MarginalStatus::Both;
    if (r) return MarginalStatus::RowOnly;
    if (c) return MarginalStatus::ColOnly;
    return MarginalStatus::Neither;
}

bool marginal_order_settled(ClassId x, ClassId y) {
    MarginalPair mx = marginals(x), my = marginals(y);
    return cross_settled(mx.rows, my.rows) || cross_settled(mx.cols, my.cols);
}

std::set<UnorderedPair> neither_pairs() {
    std::set<UnorderedPair> out;
    for (ClassId x = 1; x <= kClassCount; ++x)
        for (ClassId y = x + 1; y <= kClassCount; ++y)
            if (apriori_row_col_status(x, y) == MarginalStatus::Neither &&
                apriori_row_col_status(y, x) == MarginalStatus::Neither)
                out.insert({x, y});
    return out;
}

std::set<UnorderedPair> no_relation_pairs() {
    std::set<UnorderedPair> out;
    for (const auto& p : neither_pairs())
        if (!marginal_order_settled(p.first, p.second)) out.insert(p);
    return out;
}

}  // namespace entropord
