#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/modular.hpp"

namespace nilorb {

/// constant + sum_k coeff_k * T_k, with no zero coefficients stored.
class LinForm {
public:
    LinForm() = default;
    explicit LinForm(Rational constant) : constant_(std::move(constant)) {}

    static LinForm variable(std::size_t k, const Rational& coeff = 1);

    const Rational& constant() const noexcept { return constant_; }
    const std::map<std::size_t, Rational>& coefficients() const noexcept { return coeffs_; }

    void add_term(std::size_t k, const Rational& c);
    void add_constant(const Rational& c) { constant_ += c; }

    bool is_zero() const { return sgn(constant_) == 0 && coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty(); }

    Rational eval(std::span<const Rational> point) const;
    std::uint64_t eval_mod(std::span<const std::uint64_t> point, const PrimeField& f) const;

    LinForm& operator+=(const LinForm& o);
    LinForm& operator*=(const Rational& s);
    friend bool operator==(const LinForm&, const LinForm&) = default;

private:
    Rational constant_ = 0;
    std::map<std::size_t, Rational> coeffs_;
};

class LinMatrix {
public:
    LinMatrix() = default;
    LinMatrix(std::size_t rows, std::size_t cols, std::size_t num_indeterminates)
        : rows_(rows), cols_(cols), nvars_(num_indeterminates), entries_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t num_indeterminates() const noexcept { return nvars_; }

    LinForm& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const LinForm& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Throws InputError if some coefficient index is >= num_indeterminates.
    void validate() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<LinForm> entries_;
};

/// Entrywise substitution T_k := point[k].
RatMatrix eval(const LinMatrix& m, std::span<const Rational> point);
ModMatrix eval_mod(const LinMatrix& m, std::span<const std::uint64_t> point, const PrimeField& f);

/// {-bound, ..., -1, 1, ..., bound}
std::vector<long> omega_set(long bound);

/// Max over `trials` random points (coordinates drawn uniformly from
/// sample_set) of the exact rank. Specialisation never raises the rank, so
/// the result is a lower bound for the generic rank.
std::size_t generic_rank_lower_bound(const LinMatrix& m, std::size_t trials, std::span<const long> sample_set,
                                     std::mt19937_64& rng);

}  // namespace nilorb
