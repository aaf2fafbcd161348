#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

/// Arithmetic in Z/pZ for a prime p < 2^62.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t prime() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;  // throws on a == 0

    std::uint64_t from_int(long long v) const noexcept;
    std::uint64_t from_integer(const Integer& z) const;
    /// nullopt when p divides the denominator.
    std::optional<std::uint64_t> from_rational(const Rational& q) const;

private:
    std::uint64_t p_;
};

/// Uniformly chosen starting point in [2^61, 2^62), advanced to the next prime.
std::uint64_t random_prime(std::mt19937_64& rng);

/// Dense row-major matrix over Z/pZ.
class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Rank over Z/pZ. Row updates below each pivot run in an OpenMP parallel
/// loop once the trailing block is large enough to pay for the fork.
std::size_t rank_mod(ModMatrix m, const PrimeField& field);

/// Single-threaded reference for rank_mod.
std::size_t rank_mod_serial(ModMatrix m, const PrimeField& field);

/// True iff m * x = b has a solution over Z/pZ.
bool solvable_mod(const ModMatrix& m, std::span<const std::uint64_t> b, const PrimeField& field);

}  // namespace nilorb
