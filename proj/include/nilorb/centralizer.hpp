#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilorb/lie_algebra.hpp"
#include "nilorb/linform.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/polynomial.hpp"

namespace nilorb {

/// Subalgebra of g with a basis b_1..b_n in reduced form: b_k has
/// coefficient 1 at basis index anchors()[k] and 0 at every other anchor, so
/// coordinates of an element of K are read off at the anchors.
class Subalgebra {
public:
    /// Row-reduces the spanning set, then checks closure. Throws InputError
    /// if the span is not closed under the bracket.
    static Subalgebra span(const LieAlgebra& L, const std::vector<LieElement>& spanning);

    const LieAlgebra& parent() const { return *parent_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<LieElement>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& anchors() const noexcept { return anchors_; }

    /// Degree of b_k under the grading used to build K, if it was graded.
    const std::vector<int>& degrees() const noexcept { return degrees_; }

    /// [b_i, b_j] = sum_k c_ij^k b_k as a sparse list of (k, c_ij^k).
    const std::vector<std::pair<std::size_t, Rational>>& structure(std::size_t i, std::size_t j) const {
        return structure_[i * basis_.size() + j];
    }

    /// Coordinates of v in the basis; nullopt if v is not in K.
    std::optional<RatVector> coordinates(const LieElement& v) const;

private:
    friend Subalgebra centralizer(const LieAlgebra& L, const LieElement& e, const Grading* grading);
    static Subalgebra from_reduced(const LieAlgebra& L, std::vector<LieElement> basis, std::vector<std::size_t> anchors);
    void build_structure();

    const LieAlgebra* parent_ = nullptr;
    std::vector<LieElement> basis_;
    std::vector<std::size_t> anchors_;
    std::vector<int> degrees_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> structure_;
};

/// Kernel of ad e. When `grading` is given, e must be homogeneous of degree
/// 2 and the basis is homogeneous; otherwise a grading making e homogeneous
/// is chosen internally where possible.
Subalgebra centralizer(const LieAlgebra& L, const LieElement& e, const Grading* grading = nullptr);

bool is_abelian(const Subalgebra& K);

/// A(i,j) = sum_k c_ij^k T_k.
LinMatrix index_form_matrix(const Subalgebra& K);

struct AnalysisConfig {
    long omega_bound = 50;
    std::size_t trials = 25;
    double max_error = 1e-9;                 // probabilistic lower-bound mode
    bool try_symbolic = true;
    std::size_t symbolic_max_entries = 400;  // rows * cols
    std::size_t symbolic_max_vars = 20;
    SymbolicBudget budget;
    std::optional<int> degree;               // restrict the witness to C_e ∩ g(degree)
    bool nicify_witness = true;
};

struct IndexCertificate {
    WeightedDiagram diagram;
    LieElement e;
    std::size_t dim_k = 0;
    std::size_t rank_g = 0;
    std::vector<long> point;  // T-values, one per basis element of K
    std::uint64_t prime = 0;  // 0 when the rank was computed over Q
    std::size_t rank = 0;
    std::size_t trials_used = 0;
    bool certified = false;

    std::size_t index_bound() const { return dim_k - rank; }
};

/// Samples T-points until dim K - rank A(T) = rank(g), which together with
/// Vinberg's inequality proves ind C_g(e) = rank(g). Inconclusive otherwise.
IndexCertificate verify_elashvili(const LieAlgebra& L, const LieElement& e, std::mt19937_64& rng,
                                  const AnalysisConfig& config = {});

/// Recomputes C_g(e), evaluates A at the stored point and takes the exact
/// rank over Q.
bool recheck(const LieAlgebra& L, const IndexCertificate& cert);

/// Throws InputError if [e, x] != 0.
Subalgebra double_centralizer(const LieAlgebra& L, const LieElement& e, const LieElement& x);

enum class BoundMode { Richardson, Symbolic, Probabilistic };
std::string mode_name(BoundMode m);

struct DoubleCentralizerResult {
    std::size_t centralizer_dim = 0;
    std::size_t min_dim = 0;  // certified upper bound on min dim C_{e,x}
    LieElement witness;
    bool abelian = false;
    BoundMode mode = BoundMode::Probabilistic;
    double error_bound = 0;  // probability that min_dim overstates the minimum
    std::size_t samples = 0;
    std::optional<int> degree;
};

/// Minimum of dim C_{e,x} over x in C_e (or C_e ∩ g(degree)); `h` grades C_e
/// when a degree restriction is requested.
DoubleCentralizerResult min_double_centralizer(const LieAlgebra& L, const LieElement& e, std::mt19937_64& rng,
                                               const AnalysisConfig& config = {}, const LieElement* h = nullptr);

/// Per-orbit drivers. Orbit i uses the seed derive_seed(seed, i). The
/// parallel versions run an OpenMP loop over orbits; results are in input
/// order either way.
std::vector<IndexCertificate> certify_orbits(const LieAlgebra& L, const std::vector<ValidDiagram>& orbits,
                                             std::uint64_t seed, const AnalysisConfig& config = {}, int threads = 0);
std::vector<IndexCertificate> certify_orbits_serial(const LieAlgebra& L, const std::vector<ValidDiagram>& orbits,
                                                    std::uint64_t seed, const AnalysisConfig& config = {});

std::vector<DoubleCentralizerResult> double_centralizer_orbits(const LieAlgebra& L,
                                                               const std::vector<ValidDiagram>& orbits,
                                                               std::uint64_t seed, const AnalysisConfig& config = {},
                                                               int threads = 0);
std::vector<DoubleCentralizerResult> double_centralizer_orbits_serial(const LieAlgebra& L,
                                                                      const std::vector<ValidDiagram>& orbits,
                                                                      std::uint64_t seed,
                                                                      const AnalysisConfig& config = {});

}  // namespace nilorb
