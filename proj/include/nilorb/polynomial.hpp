#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "nilorb/linform.hpp"

namespace nilorb {

/// Sparse multivariate polynomial over Q in a fixed number of variables,
/// terms kept in lexicographic order (leading term first).
class Polynomial {
public:
    using Monomial = std::vector<std::uint32_t>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial from_linform(std::size_t nvars, const LinForm& f);

    std::size_t num_vars() const noexcept { return nvars_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Monomial, Rational, std::greater<>>& terms() const noexcept { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    /// Quotient of an exact division; throws std::logic_error if `divisor`
    /// does not divide *this.
    Polynomial divide_exact(const Polynomial& divisor) const;

    Rational eval(std::span<const Rational> point) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_;
    std::map<Monomial, Rational, std::greater<>> terms_;
};

struct SymbolicBudget {
    std::size_t max_terms = 20000;  // per intermediate polynomial
};

/// Rank over the rational function field Q(T_1..T_m) via fraction-free
/// elimination. Throws ResourceLimitError when an intermediate entry exceeds
/// the term budget.
std::size_t symbolic_rank(const LinMatrix& m, const SymbolicBudget& budget = {});

}  // namespace nilorb
