#include "entropord/group_ring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "entropord/entropic.hpp"

namespace entropord {

GroupRingElement GroupRingElement::one() { return of(Permutation::identity()); }

GroupRingElement GroupRingElement::of(const Permutation& g, long coeff) {
    GroupRingElement e;
    e.add_term(g, coeff);
    return e;
}

long GroupRingElement::coefficient(const Permutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
}

void GroupRingElement::add_term(const Permutation& g, long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [g, c] : a.terms_)
        for (const auto& [h, d] : b.terms_) out.add_term(compose(g, h), c * d);
    return out;
}

GroupRingElement operator*(const Permutation& g, const GroupRingElement& a) { return GroupRingElement::of(g) * a; }

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }

GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

std::string dump(const GroupRingElement& a) {
    std::ostringstream os;
    for (const auto& [g, c] : a.terms()) os << (c > 0 ? "+" : "") << c << ' ' << format_cycles(g) << '\n';
    return os.str();
}

namespace {

Permutation cycle3(int a, int b, int c) {
    std::array<int, kDegree> img{1, 2, 3, 4, 5, 6};
    img[a - 1] = b;
    img[b - 1] = c;
    img[c - 1] = a;
    return Permutation::from_images(img);
}

std::pair<int, int> moved_pair(const Permutation& tau) {
    std::vector<int> moved;
    for (int i = 1; i <= kDegree; ++i)
        if (tau(i) != i) moved.push_back(i);
    if (moved.size() != 2 || tau(moved[0]) != moved[1])
        throw std::invalid_argument("not a transposition: " + format_cycles(tau));
    return {moved[0], moved[1]};
}

// one-line [alpha, r, s, beta, u, t]
Permutation arrangement_map(int alpha, int beta, int r, int s, int t, int u) {
    return Permutation::from_images({alpha, r, s, beta, u, t});
}

Permutation least_in_class(const Permutation& p) {
    Permutation best = compose(subgroup_K().front(), p);
    for (const auto& k : subgroup_K()) best = std::min(best, compose(k, p));
    return best;
}

EtaContext raw_context(const Permutation& tau) {
    EtaContext c;
    c.tau = tau;
    std::tie(c.alpha, c.beta) = moved_pair(tau);
    std::vector<int> rest;
    for (int i = 1; i <= kDegree; ++i)
        if (i != c.alpha && i != c.beta) rest.push_back(i);
    c.r = rest[0];
    c.s = rest[1];
    c.t = rest[2];
    c.u = rest[3];
    c.psi = Permutation::transposition(c.r, c.s);
    c.chi = Permutation::transposition(c.s, c.t);
    c.gamma = compose(cycle3(c.alpha, c.t, c.u), cycle3(c.beta, c.r, c.s));
    c.mu = compose(tau, compose(Permutation::transposition(c.r, c.t), Permutation::transposition(c.s, c.u)));
    return c;
}

Permutation pi_of(const EtaContext& c) { return arrangement_map(c.alpha, c.beta, c.r, c.s, c.t, c.u); }

RelationKind tag_for(const Permutation& z, const Permutation& tau) {
    auto [a, b] = moved_pair(tau);
    LetterArrangement g = apply(z, LetterArrangement::fiducial());
    int pa = g.position_of(a - 1), pb = g.position_of(b - 1);
    if ((pa - 1) / 3 == (pb - 1) / 3) return RelationKind::MajHorizontal;
    if ((pa - 1) % 3 == (pb - 1) % 3) return RelationKind::MajVertical;
    auto place = diagonal_placement(g, a - 1, b - 1);
    switch (classify_diagonal(place->ctx)) {
    case DiagonalType::TypeAMajorisation: return RelationKind::MajDiagonal;
    case DiagonalType::TypeA: return RelationKind::EntropicA;
    case DiagonalType::TypeB: return RelationKind::EntropicB;
    case DiagonalType::NoRelation: break;
    }
    return RelationKind::Derived;
}

}  // namespace

EtaContext eta_context(const Permutation& tau) {
    EtaContext c = raw_context(tau);
    const Permutation pi = pi_of(c);
    const Permutation pi0 = pi_of(raw_context(Permutation::transposition(1, 2)));
    c.sigma = least_in_class(inverse(pi));
    c.frame = compose(pi0, inverse(pi));
    return c;
}

EtaContext eta_step(const EtaContext& c, const Permutation& kappa) {
    EtaContext n = c;
    n.tau = conjugate(c.tau, kappa);
    std::tie(n.alpha, n.beta) = moved_pair(n.tau);
    n.psi = conjugate(c.psi, kappa);
    n.chi = conjugate(c.chi, kappa);
    n.gamma = conjugate(c.gamma, kappa);
    n.mu = conjugate(c.mu, kappa);
    n.sigma = compose(c.sigma, kappa);
    n.frame = compose(c.frame, kappa);
    // the leftover labels follow psi and chi
    n.r = kappa(c.r);
    n.s = kappa(c.s);
    n.t = kappa(c.t);
    n.u = kappa(c.u);
    return n;
}

EtaComponents eta_components(const EtaContext& c) {
    using R = GroupRingElement;
    const R one = R::one();
    const R psi = R::of(c.psi), chi = R::of(c.chi), gamma = R::of(c.gamma);
    const R psi_mu = R::of(conjugate(c.psi, c.mu));
    EtaComponents e;
    e.horiz = (one + psi) * (one + psi_mu) * (one + chi) - (one + psi * psi_mu) * chi;
    e.cyc = c.sigma * ((one + gamma + gamma * gamma) * (one + psi) * (one + chi)) - c.sigma * (gamma * gamma * psi * chi);
    e.eta = (c.frame * e.horiz + e.cyc) * (R::of(c.tau) - one);
    return e;
}

EtaComponents eta_components(const Permutation& tau) { return eta_components(eta_context(tau)); }

std::vector<Permutation> eta_terms(const EtaContext& c) {
    std::vector<Permutation> out;
    const EtaComponents e = eta_components(c);
    for (const auto& [g, coeff] : e.eta.terms())
        if (coeff < 0) out.push_back(g);
    return out;
}

Digraph relations_from_eta(const EtaContext& c) {
    Digraph d;
    for (const auto& z : eta_terms(c)) d.add_edge(class_of(z), class_of(compose(z, c.tau)), tag_for(z, c.tau));
    return d;
}

Digraph relations_from_eta(const Permutation& tau) { return relations_from_eta(eta_context(tau)); }

Digraph all_eta_relations() {
    Digraph d;
    for (const auto& tau : all_transpositions()) d = d.merged(relations_from_eta(tau));
    return d;
}

Digraph inductive_generation(const Permutation& start) {
    std::map<Permutation, EtaContext> seen;
    seen.emplace(start, eta_context(start));
    std::deque<Permutation> queue{start};
    while (!queue.empty()) {
        const EtaContext c = seen.at(queue.front());
        queue.pop_front();
        for (int end : {c.alpha, c.beta}) {
            for (int nb : {end - 1, end + 1}) {
                if (nb < 1 || nb > kDegree) continue;
                Permutation kappa = Permutation::transposition(std::min(end, nb), std::max(end, nb));
                if (kappa == c.tau) continue;
                EtaContext n = eta_step(c, kappa);
                if (seen.emplace(n.tau, n).second) queue.push_back(n.tau);
            }
        }
    }
    if (seen.size() != all_transpositions().size()) throw std::logic_error("adjacent steps did not reach every transposition");
    Digraph d;
    for (const auto& [tau, c] : seen) d = d.merged(relations_from_eta(c));
    return d;
}

}  // namespace entropord
