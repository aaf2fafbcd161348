#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

/// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    RatVector apply(std::span<const Rational> v) const;
    RatMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

}  // namespace nilorb
