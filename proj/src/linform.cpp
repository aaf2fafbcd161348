#include "nilorb/linform.hpp"

#include <algorithm>

#include "nilorb/errors.hpp"
#include "nilorb/linalg.hpp"

namespace nilorb {

LinForm LinForm::variable(std::size_t k, const Rational& coeff) {
    LinForm f;
    f.add_term(k, coeff);
    return f;
}

void LinForm::add_term(std::size_t k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) coeffs_.erase(it);
    }
}

Rational LinForm::eval(std::span<const Rational> point) const {
    Rational acc = constant_;
    for (const auto& [k, c] : coeffs_) {
        if (k >= point.size()) throw InputError("LinForm::eval: point too short");
        acc += c * point[k];
    }
    return acc;
}

std::uint64_t LinForm::eval_mod(std::span<const std::uint64_t> point, const PrimeField& f) const {
    auto reduce = [&f](const Rational& q) {
        const auto v = f.from_rational(q);
        if (!v) throw InputError("LinForm::eval_mod: prime divides a denominator");
        return *v;
    };
    std::uint64_t acc = sgn(constant_) == 0 ? 0 : reduce(constant_);
    for (const auto& [k, c] : coeffs_) {
        if (k >= point.size()) throw InputError("LinForm::eval_mod: point too short");
        acc = f.add(acc, f.mul(reduce(c), point[k]));
    }
    return acc;
}

LinForm& LinForm::operator+=(const LinForm& o) {
    constant_ += o.constant_;
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

LinForm& LinForm::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        constant_ = 0;
        coeffs_.clear();
        return *this;
    }
    constant_ *= s;
    for (auto& [k, c] : coeffs_) c *= s;
    return *this;
}

void LinMatrix::validate() const {
    for (const auto& e : entries_)
        if (!e.coefficients().empty() && e.coefficients().rbegin()->first >= nvars_)
            throw InputError("LinMatrix: indeterminate index out of range");
}

RatMatrix eval(const LinMatrix& m, std::span<const Rational> point) {
    if (point.size() != m.num_indeterminates())
        throw InputError("eval: point length does not match the number of indeterminates");
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(point);
    return out;
}

ModMatrix eval_mod(const LinMatrix& m, std::span<const std::uint64_t> point, const PrimeField& f) {
    if (point.size() != m.num_indeterminates())
        throw InputError("eval_mod: point length does not match the number of indeterminates");
    ModMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval_mod(point, f);
    return out;
}

std::vector<long> omega_set(long bound) {
    if (bound <= 0) throw InputError("omega_set: bound must be positive");
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(2 * bound));
    for (long v = -bound; v <= bound; ++v)
        if (v != 0) out.push_back(v);
    return out;
}

std::size_t generic_rank_lower_bound(const LinMatrix& m, std::size_t trials, std::span<const long> sample_set,
                                     std::mt19937_64& rng) {
    if (trials == 0) throw InputError("generic_rank_lower_bound: trials must be >= 1");
    if (sample_set.empty()) throw InputError("generic_rank_lower_bound: empty sample set");
    std::uniform_int_distribution<std::size_t> pick(0, sample_set.size() - 1);
    std::size_t best = 0;
    const std::size_t cap = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < trials && best < cap; ++t) {
        RatVector point(m.num_indeterminates());
        for (auto& v : point) v = sample_set[pick(rng)];
        best = std::max(best, rank(eval(m, point)));
    }
    return best;
}

}  // namespace nilorb
