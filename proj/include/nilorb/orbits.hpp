#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/lie_algebra.hpp"
#include "nilorb/polynomial.hpp"

namespace nilorb {

/// Labels alpha_i(h) in {0,1,2}, indexed by GAP simple-root order.
struct WeightedDiagram {
    std::vector<int> labels;

    bool is_zero() const;
    friend bool operator==(const WeightedDiagram&, const WeightedDiagram&) = default;
    friend auto operator<=>(const WeightedDiagram&, const WeightedDiagram&) = default;
};

/// Reorders into the column order used by the printed tables, and back.
std::vector<int> to_display(const RootSystem& rs, const WeightedDiagram& d);
WeightedDiagram from_display(const RootSystem& rs, std::span<const int> display);
std::string display_string(const RootSystem& rs, const WeightedDiagram& d);

struct Sl2Triple {
    LieElement f;
    LieElement h;
    LieElement e;

    /// [e,f] = h, [h,e] = 2e, [h,f] = -2f by direct bracket arithmetic.
    bool verify() const;
};

struct SearchConfig {
    long omega_bound = 50;
    std::size_t trials = 25;
    bool modular_screen = true;
    bool nicify = true;
    int nicify_max_value = 64;
    bool dimension_prefilter = true;
    int threads = 0;  // 0: OpenMP default
};

struct Representative {
    LieElement e;
    Sl2Triple triple;
    TrialStats stats;
};

/// The unique h = sum a_j h_j with alpha_i(h) = D_i.
LieElement h_from_diagram(const LieAlgebra& L, const WeightedDiagram& d);

/// y in g(-2) with [x, y] = h, if one exists. Throws InputError unless h is
/// in the Cartan subalgebra with integral grading and x lies in g(2).
std::optional<LieElement> in_bracket_image(const LieAlgebra& L, const LieElement& h, const LieElement& x);

/// Random search for e in g(2) with h in [e, g(-2)]. Throws InputError for
/// the zero diagram and ProbablyInvalidDiagram when every trial fails.
Representative find_representative(const LieAlgebra& L, const WeightedDiagram& d, std::mt19937_64& rng,
                                   const SearchConfig& config = {});

/// Coordinate-by-coordinate scan over 0, 1, 2, ... keeping h in [x', g(-2)].
LieElement nicify(const LieAlgebra& L, const LieElement& h, const LieElement& x, int max_value = 64);

/// Throws InputError if no f in g(-2) satisfies [e, f] = h.
Sl2Triple complete_sl2(const LieAlgebra& L, const LieElement& h, const LieElement& e);

/// e must be a combination of root vectors over linearly independent
/// positive roots. Throws InputError when h cannot be found in the Cartan.
WeightedDiagram weighted_dynkin(const LieAlgebra& L, const LieElement& e);

/// sl2-triple through such an e; h is generally not dominant.
Sl2Triple root_sum_triple(const LieAlgebra& L, const LieElement& e);

/// dim g(k) >= dim g(k+2) for all k >= 0: necessary for the grading of an
/// sl2-triple, since ad e is injective on g(k) for k < 0.
bool passes_dimension_filter(const LieAlgebra& L, const WeightedDiagram& d);

/// Generic-point solvability of [x, y] = h with x = sum T_k x_k over g(2),
/// decided by symbolic rank. nullopt if the term budget was exceeded.
std::optional<bool> exact_validity(const LieAlgebra& L, const WeightedDiagram& d, const SymbolicBudget& budget = {});

struct ValidDiagram {
    WeightedDiagram diagram;
    Representative rep;
};

/// All nonzero diagrams that pass the validity test, sorted by labels.
/// Candidate i uses the seed derive_seed(seed, i), so results do not depend
/// on scheduling. Runs an OpenMP loop over candidates.
std::vector<ValidDiagram> enumerate_diagrams(const LieAlgebra& L, std::uint64_t seed, const SearchConfig& config = {});

/// Single-threaded reference for enumerate_diagrams; same output.
std::vector<ValidDiagram> enumerate_diagrams_serial(const LieAlgebra& L, std::uint64_t seed,
                                                    const SearchConfig& config = {});

struct RepNode {
    int root;
    bool is_long;  // drawn black; only meaningful when the type is not simply laced
};

struct RepEdge {
    int a;
    int b;
    int lines;
    bool dotted;
    friend bool operator==(const RepEdge&, const RepEdge&) = default;
};

/// Decorated diagram of a set of roots: nodes i, j joined by
/// <b_i, b_j^vee><b_j, b_i^vee> lines, dotted when both pairings are positive.
struct RepDiagram {
    std::vector<RepNode> nodes;
    std::vector<RepEdge> edges;  // only pairs with at least one line

    int lines_between(int a, int b) const;
    std::optional<RepEdge> edge(int a, int b) const;
};

RepDiagram rep_diagram(const RootSystem& rs, std::span<const int> roots);

/// One simple component of a subsystem label such as "A5+A2+A1" or "Ã2+A2".
/// `tilde` selects short roots for A-type components.
struct ComponentType {
    char series = 'A';
    int rank = 1;
    bool tilde = false;
};

/// Parses "A5+A2+A1", "2A2+A1", "Ã2+A2", "~A1". Labels with (a_i) are
/// rejected with InputError.
std::vector<ComponentType> parse_subsystem(const std::string& label);

struct SubsystemEmbedding {
    std::vector<int> roots;   // simple system of the subsystem, component by component
    LieElement e;             // sum of the corresponding root vectors
    WeightedDiagram diagram;
    bool levi = false;        // the span meets Phi exactly in the subsystem's roots
};

struct SubsystemSearch {
    std::size_t max_nodes = 2'000'000;  // backtracking budget
    bool levi_only = true;
};

/// Embeddings of the requested subsystem as pi-systems (pairwise differences
/// are not roots), one per distinct weighted diagram, sorted by diagram.
/// Throws NotFoundError if none is found within the budget.
std::vector<SubsystemEmbedding> subsystem_representative(const LieAlgebra& L, const std::vector<ComponentType>& types,
                                                         const SubsystemSearch& search = {});

}  // namespace nilorb
