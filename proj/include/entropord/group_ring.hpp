#pragma once

// Integer group ring of S6 and the algebraic generator of single-transposition relations.

#include <map>
#include <string>
#include <vector>

#include "entropord/cosets.hpp"
#include "entropord/digraph.hpp"

namespace entropord {

class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement one();
    static GroupRingElement of(const Permutation& g, long coeff = 1);

    const std::map<Permutation, long>& terms() const { return terms_; }
    long coefficient(const Permutation& g) const;
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const Permutation& g, const GroupRingElement& a);

    bool operator==(const GroupRingElement&) const = default;

private:
    void add_term(const Permutation& g, long c);
    std::map<Permutation, long> terms_;
};

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b);

// One "coeff cycles" line per term, in permutation order.
std::string dump(const GroupRingElement& a);

// Data attached to a transposition tau = (alpha, beta), alpha < beta as symbols.
// r < s < t < u are the remaining symbols in increasing order.
struct EtaContext {
    Permutation tau;
    int alpha = 0, beta = 0, r = 0, s = 0, t = 0, u = 0;
    Permutation psi;    // (r,s)
    Permutation chi;    // (s,t)
    Permutation gamma;  // (alpha,t,u)(beta,r,s)
    Permutation mu;     // (alpha,beta)(r,t)(s,u)
    Permutation sigma;  // least element of the class of (alpha r s / beta u t)
    Permutation frame;  // left factor of the horizontal part; identity at tau = (1,2)
};

EtaContext eta_context(const Permutation& tau);
// The context obtained by conjugating with an adjacent transposition kappa.
EtaContext eta_step(const EtaContext& c, const Permutation& kappa);

struct EtaComponents {
    GroupRingElement horiz;  // 6 terms
    GroupRingElement cyc;    // 11 terms, left factor sigma included
    GroupRingElement eta;    // (frame*horiz + cyc)(tau - 1), 34 terms
};
EtaComponents eta_components(const EtaContext& c);
EtaComponents eta_components(const Permutation& tau);

// The elements z with eta = sum z(tau - 1), recovered from the negative terms.
std::vector<Permutation> eta_terms(const EtaContext& c);

// Pairs (class(z), class(z tau)), tagged by the geometry of the swap in z.
Digraph relations_from_eta(const EtaContext& c);
Digraph relations_from_eta(const Permutation& tau);

Digraph all_eta_relations();

// Walks all 15 transpositions from start by adjacent conjugation steps.
Digraph inductive_generation(const Permutation& start);

}  // namespace entropord
