#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/root_system.hpp"

namespace nilorb {

/// One term c * b_k of a bracket of basis elements.
struct Term {
    std::uint32_t index;
    std::int32_t coeff;
};

/// Simple Lie algebra over Q in a Chevalley basis. Basis order: x_alpha for
/// the positive roots in root order, then y_alpha = x_{-alpha} in the same
/// order, then h_1..h_l. Structure constants follow the extraspecial-pair
/// sign convention: N_{alpha,beta} = +(p+1) on every extraspecial pair.
class LieAlgebra {
public:
    explicit LieAlgebra(RootSystem rs);

    const RootSystem& roots() const noexcept { return rs_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rs_.rank(); }
    std::size_t num_positive() const noexcept { return npos_; }

    // 1-based root index -> 0-based basis index.
    std::size_t x_index(std::size_t root) const noexcept { return root - 1; }
    std::size_t y_index(std::size_t root) const noexcept { return npos_ + root - 1; }
    std::size_t h_index(std::size_t j) const noexcept { return 2 * npos_ + j; }
    std::size_t basis_of_root(int signed_root) const noexcept {
        return signed_root > 0 ? x_index(static_cast<std::size_t>(signed_root))
                               : y_index(static_cast<std::size_t>(-signed_root));
    }
    /// Signed root index of a root-vector basis element, 0 for the Cartan part.
    int root_of_basis(std::size_t b) const noexcept {
        if (b < npos_) return static_cast<int>(b + 1);
        if (b < 2 * npos_) return -static_cast<int>(b - npos_ + 1);
        return 0;
    }
    bool is_cartan(std::size_t b) const noexcept { return b >= 2 * npos_; }

    /// [b_i, b_j] as a sparse integer combination of basis elements.
    std::span<const Term> bracket_basis(std::size_t i, std::size_t j) const {
        const std::size_t k = i * dim_ + j;
        return {terms_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
    }

    /// N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b}; 0 if a+b is not a root.
    int structure_constant(int a, int b) const;

    /// Coordinates of the coroot h_alpha in h_1..h_l, alpha positive.
    const std::vector<int>& coroot(std::size_t root) const { return coroots_.at(root - 1); }

    /// alpha(h_j) for the root of basis element b (0 for Cartan elements).
    int weight(std::size_t b, std::size_t j) const;

    std::string basis_name(std::size_t b) const;

private:
    RootSystem rs_;
    std::size_t npos_;
    std::size_t dim_;
    std::vector<std::vector<int>> coroots_;
    std::vector<int> n_table_;  // (2*npos) x (2*npos), rows/cols by basis_of_root
    std::vector<std::size_t> offsets_;
    std::vector<Term> terms_;
};

/// Element of a LieAlgebra. Holds a non-owning pointer; the algebra must
/// outlive its elements.
class LieElement {
public:
    LieElement() = default;
    explicit LieElement(const LieAlgebra& L) : algebra_(&L) {}

    static LieElement basis(const LieAlgebra& L, std::size_t b, const Rational& c = 1);
    static LieElement from_vector(const LieAlgebra& L, std::span<const Rational> coords);

    const LieAlgebra& algebra() const { return *algebra_; }
    const LieAlgebra* algebra_ptr() const noexcept { return algebra_; }
    const std::map<std::size_t, Rational>& coeffs() const noexcept { return coeffs_; }

    Rational coeff(std::size_t b) const;
    void add(std::size_t b, const Rational& c);
    void set(std::size_t b, const Rational& c);
    bool is_zero() const noexcept { return coeffs_.empty(); }
    RatVector to_vector() const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& s);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    const LieAlgebra* algebra_ = nullptr;
    std::map<std::size_t, Rational> coeffs_;
};

/// Throws InputError if the elements belong to different algebras.
LieElement bracket(const LieElement& a, const LieElement& b);

/// dim x dim matrix of ad a; column j holds [a, b_j].
RatMatrix ad_matrix(const LieElement& a);

/// Eigenspace decomposition of g under ad h, h in the Cartan subalgebra.
struct Grading {
    LieElement h;
    std::vector<int> degree;  // per basis index
    std::map<int, std::vector<std::size_t>> components;

    const std::vector<std::size_t>& component(int k) const;
};

/// Throws InputError if h is not in the Cartan subalgebra or some
/// eigenvalue is not an integer.
Grading grade(const LieAlgebra& L, const LieElement& h);

/// Cached algebra per type, built on first use (thread-safe).
const LieAlgebra& algebra_for(Kind kind);

}  // namespace nilorb
