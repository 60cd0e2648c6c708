#pragma once

// Loaders for the checked-in reference tables and the appendix verifier.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "entropord/cosets.hpp"
#include "entropord/digraph.hpp"

namespace entropord {

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Compiled-in location of data/.
std::filesystem::path default_data_dir();

// Each record keeps its 1-based source line for diff messages.
struct ClassRow {
    ClassId id = 0;
    LetterArrangement grid;
    Permutation rep;
    int line = 0;
};
std::vector<ClassRow> load_class_table(const std::filesystem::path& file);

struct PairRow {
    Edge pair;
    int line = 0;
};
std::vector<PairRow> load_pairs(const std::filesystem::path& file);
std::vector<Edge> pairs_of(const std::vector<PairRow>& rows);

std::vector<std::vector<int>> load_matrix(const std::filesystem::path& file);

struct TypeBRow {
    Letter alpha = 0, beta = 0;
    Edge edge;
    int line = 0;
};
std::vector<TypeBRow> load_type_b(const std::filesystem::path& file);

struct OrbitTable {
    std::vector<Edge> swapped;
    std::vector<int> fixed;
};
OrbitTable load_orbits(const std::filesystem::path& file);

// Node permutation (1-based) from "(1)(2,3)..." on n nodes.
NodePermutation load_node_cycles(const std::filesystem::path& file, int n = kClassCount);

struct AppendixResult {
    std::string fixture;
    bool ok = false;
    std::string detail;  // first difference, naming the fixture line
};
// Stops at the first mismatching fixture.
std::vector<AppendixResult> verify_appendix(const std::filesystem::path& dir);

}  // namespace entropord
