#pragma once

// Entropy, mutual information, the identric mean and seeded Monte-Carlo checks.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entropord/cosets.hpp"
#include "entropord/digraph.hpp"

namespace entropord {

constexpr double kCmiTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-10;
constexpr double kDerivativeTolerance = 1e-4;
constexpr double kDerivativeStep = 1e-6;
constexpr double kStrictGap = 1e-9;

// Descending probabilities p1 >= ... >= p6 summing to 1.
using ProbVector = std::array<double, kDegree>;

struct ProbMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> entries;  // row-major

    double at(int i, int j) const { return entries[std::size_t(i) * cols + j]; }
    double& at(int i, int j) { return entries[std::size_t(i) * cols + j]; }
    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;
};

// p_l placed where letter l stands in the grid.
ProbMatrix arrange(const ProbVector& p, const LetterArrangement& g);

struct ConcaveFunction {
    std::string name;
    double (*eval)(double) = nullptr;
    double operator()(double x) const { return eval(x); }
};

// Built-ins: H, h, sq (-x^2), cos (cos(2 pi x / 3)), cubic ((4x/9)^3 - (4x/9)^2).
const ConcaveFunction& concave_function(std::string_view name);
const std::vector<std::string>& concave_function_names();

double cmi(const ProbMatrix& P, const ConcaveFunction& f = concave_function("H"));
double class_cmi(const ProbVector& p, ClassId x, const ConcaveFunction& f = concave_function("H"));
// Index 0 unused.
std::array<double, kClassCount + 1> all_class_cmi(const ProbVector& p, const ConcaveFunction& f);

// exp(-1) (y^y / x^x)^(1/(y-x)); x when x == y. Throws std::domain_error off (0, 1].
double identric_mean(double x, double y);

// |direct CMI difference - identric-mean formula| for swapping the entries at
// positions pos_a and pos_b (1..6, diagonal) of a 2x3 matrix.
double cmi_delta_identity_check(const ProbMatrix& P, int pos_a, int pos_b);
// Direct difference I(swapped) - I(P) for the same swap.
double cmi_swap_delta(const ProbMatrix& P, int pos_a, int pos_b);

// Counter-based generator: draw i of stream (seed, index) is a pure function.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    std::uint64_t next();
    double uniform();  // [0, 1)

private:
    std::uint64_t state_;
};
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

// Six uniforms, normalised and sorted descending; redrawn while any entry or
// adjacent gap is below the strictness guard.
ProbVector sample_sorted(std::uint64_t seed, std::uint64_t index);

// Worker count from ENTROPORD_THREADS, else the hardware concurrency.
int worker_count();

struct Violation {
    int src = 0;
    int dst = 0;
    std::uint64_t sample_index = 0;  // first witnessing sample
    double delta = 0;                // I(src) - I(dst) at that sample
    std::uint64_t count = 0;         // samples violating the edge
};

struct NumericReport {
    std::size_t edges_checked = 0;
    std::uint64_t samples = 0;
    std::vector<Violation> violations;
    std::vector<Edge> unfalsified;
    // classes attaining the maximum CMI, with the number of samples
    std::vector<std::pair<ClassId, std::uint64_t>> argmax;

    nlohmann::ordered_json to_json() const;
};

// Checks I(x) <= I(y) + tolerance for every edge over the sample budget.
NumericReport verify_relations(const Digraph& edges, std::uint64_t samples, std::uint64_t seed,
                               const ConcaveFunction& f = concave_function("H"));

// Searches every ordered pair outside the closure for a sample with I(x) > I(y).
// Stops after the first batch in which all are falsified.
NumericReport falsify_nonrelations(const Digraph& closure, std::uint64_t samples, std::uint64_t seed,
                                   const ConcaveFunction& f = concave_function("H"));

// Ordered pairs never violated across the budget.
Digraph f_survey(const ConcaveFunction& f, std::uint64_t samples, std::uint64_t seed);

struct CheckTally {
    std::string name;
    std::uint64_t tested = 0;
    std::uint64_t failed = 0;
    bool pass() const { return tested > 0 && failed == 0; }
};

struct LollipopReport {
    std::vector<CheckTally> checks;
    bool pass() const;
    nlohmann::ordered_json to_json() const;
};

// Parts (i)-(vii) of the identric-mean lemma, strict log-concavity and the two
// sufficient sign conditions on random diagonal swaps.
LollipopReport lollipop_suite(std::uint64_t trials, std::uint64_t seed);

struct IdentityReport {
    std::uint64_t instances = 0;
    double max_residual = 0;
    std::uint64_t sign_mismatches = 0;
};
// Random diagonal swaps on random class arrangements.
IdentityReport identity_suite(std::uint64_t instances, std::uint64_t seed);

}  // namespace entropord
