#pragma once

// Diagonal-transposition classification, sporadic relations and assembly of the order.

#include <optional>
#include <string>
#include <vector>

#include "entropord/cosets.hpp"
#include "entropord/digraph.hpp"

namespace entropord {

// Letters of the normal form (alpha x y / u beta v); a smaller letter is a larger value.
struct DiagonalContext {
    Letter alpha = 0, beta = 0, x = 0, y = 0, u = 0, v = 0;

    // Distinct letters with alpha > beta and x > u as values.
    bool valid() const;
    LetterArrangement sigma() const;      // (alpha x y / u beta v)
    LetterArrangement sigma_tau() const;  // (beta x y / u alpha v)
};

enum class DiagonalType { TypeA, TypeAMajorisation, TypeB, NoRelation };
std::string to_string(DiagonalType t);

// Throws std::invalid_argument when the context is not valid.
DiagonalType classify_diagonal(const DiagonalContext& ctx);

// Normal form of a grid in which letters p and q stand diagonally; the flag is
// true when the grid itself is the sigma side. nullopt if p, q are not diagonal.
struct DiagonalPlacement {
    DiagonalContext ctx;
    bool is_sigma = true;
};
std::optional<DiagonalPlacement> diagonal_placement(const LetterArrangement& g, Letter p, Letter q);

// All 12 admissible contexts for the letter pair alpha < beta (as letters).
std::vector<DiagonalContext> diagonal_contexts(Letter alpha, Letter beta);

// 105 edges: 15 MajDiagonal, 75 EntropicA, 15 EntropicB.
Digraph diagonal_relations();

struct TypeBRelation {
    Letter alpha = 0, beta = 0;
    Edge edge;
};
// One per letter pair, lexicographic in (alpha, beta).
std::vector<TypeBRelation> type_b_relations();

// (15,10), (26,10) proven; (37,11), (43,11), (49,11) conjectural.
Digraph sporadic_relations(bool include_c4);
// The four conjectural relations including the consequence (31,11).
std::vector<Edge> c4_relations();

// Majorisations in the full reduction that no single transposition yields.
Digraph exceptional_majorisations();

struct EntropicOrder {
    Digraph primitive;
    Digraph closure;
    Digraph covering;
};
EntropicOrder build_E(bool include_c4 = true);

// Covering graph of the full order with the conjectural covering edges dropped.
Digraph covering_without_c4();

struct CoveringSplit {
    int majorisation = 0;
    int entropic = 0;
};
CoveringSplit covering_split(const Digraph& covering);

struct FactorisationReport {
    bool edge_34_47_absent = false;
    bool edge_46_47_absent = false;
    bool path_34_53_47 = false;
    bool path_46_34_53_47 = false;
    bool ok() const { return edge_34_47_absent && edge_46_47_absent && path_34_53_47 && path_46_34_53_47; }
};
FactorisationReport exceptional_factorisations();

// Pure-entropic primitive edges that are not covering edges of the full order.
std::vector<Edge> factorising_entropic();
// Covering edges of the single-transposition majorisations lost in the full order.
std::vector<Edge> vanishing_majorisations();

// Order for f(x) = -x^2: majorisation plus every diagonal pair oriented by v against y.
Digraph neg_square_order();

}  // namespace entropord
