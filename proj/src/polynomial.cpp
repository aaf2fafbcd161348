#include "nilorb/polynomial.hpp"

#include <stdexcept>
#include <utility>

#include "nilorb/errors.hpp"

namespace nilorb {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::from_linform(std::size_t nvars, const LinForm& f) {
    Polynomial p = constant(nvars, f.constant());
    for (const auto& [k, c] : f.coefficients()) {
        if (k >= nvars) throw InputError("Polynomial::from_linform: variable index out of range");
        Monomial m(nvars, 0);
        m[k] = 1;
        p.add_term(m, c);
    }
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    Monomial m(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("Polynomial::divide_exact: division by zero");
    const auto& [lead_m, lead_c] = *divisor.terms_.begin();
    Polynomial quotient(nvars_);
    Polynomial rest = *this;
    Monomial m(nvars_);
    while (!rest.is_zero()) {
        const auto& [rm, rc] = *rest.terms_.begin();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rm[i] < lead_m[i]) throw std::logic_error("Polynomial::divide_exact: division is not exact");
            m[i] = rm[i] - lead_m[i];
        }
        Polynomial t(nvars_);
        t.add_term(m, rc / lead_c);
        quotient.add_term(m, rc / lead_c);
        rest = rest - t * divisor;
    }
    return quotient;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw InputError("Polynomial::eval: point length mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::size_t symbolic_rank(const LinMatrix& lm, const SymbolicBudget& budget) {
    lm.validate();
    const std::size_t rows = lm.rows();
    const std::size_t cols = lm.cols();
    const std::size_t nvars = lm.num_indeterminates();
    std::vector<Polynomial> a;
    a.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a.push_back(Polynomial::from_linform(nvars, lm(r, c)));

    auto check = [&budget](const Polynomial& p) {
        if (p.num_terms() > budget.max_terms)
            throw ResourceLimitError("symbolic_rank: intermediate polynomial exceeds the term budget");
    };

    Polynomial prev = Polynomial::constant(nvars, 1);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        // Prefer the sparsest available pivot to limit swell.
        std::size_t p = rows;
        for (std::size_t i = rk; i < rows; ++i)
            if (!a[i * cols + c].is_zero() && (p == rows || a[i * cols + c].num_terms() < a[p * cols + c].num_terms()))
                p = i;
        if (p == rows) continue;
        if (p != rk)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[rk * cols + j]);
        const Polynomial pivot = a[rk * cols + c];
        for (std::size_t i = rk + 1; i < rows; ++i) {
            const Polynomial lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Polynomial& x = a[i * cols + j];
                const Polynomial& y = a[rk * cols + j];
                Polynomial num = pivot * x;
                if (!lead.is_zero() && !y.is_zero()) num = num - lead * y;
                check(num);
                x = num.divide_exact(prev);
                check(x);
            }
            a[i * cols + c] = Polynomial(nvars);
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

}  // namespace nilorb
