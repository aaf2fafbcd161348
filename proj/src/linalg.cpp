#include "nilorb/linalg.hpp"

#include <algorithm>
#include <utility>

#include "nilorb/errors.hpp"

namespace nilorb {

std::size_t rank(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Integer> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (m(r, c).get_den() != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(m(r, c)) != 0) a[r * cols + c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }

    Integer prev = 1;
    Integer tmp;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != rk)
            std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols, a.begin() + rk * cols);
        const Integer& pivot = a[rk * cols + c];
        for (std::size_t i = rk + 1; i < rows; ++i) {
            const Integer lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer& x = a[i * cols + j];
                const Integer& y = a[rk * cols + j];
                if (x == 0 && (lead == 0 || y == 0)) continue;
                tmp = pivot * x;
                if (lead != 0 && y != 0) tmp -= lead * y;
                mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

EchelonForm reduced_echelon(RatMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    EchelonForm out;
    std::vector<std::size_t> support;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            auto rp = m.row(p);
            auto rr = m.row(r);
            std::swap_ranges(rp.begin(), rp.end(), rr.begin());
        }
        const Rational inv = 1 / m(r, c);
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (sgn(m(r, j)) == 0) continue;
            m(r, j) *= inv;
            support.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j : support) m(i, j) -= factor * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

namespace {

std::vector<RatVector> kernel_from_echelon(const EchelonForm& ef, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ef.pivot_cols)
        if (c < cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i) {
            const auto pc = ef.pivot_cols[i];
            if (pc >= cols) break;
            if (sgn(ef.reduced(i, f)) != 0) v[pc] = -ef.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<RatVector> kernel(const EchelonForm& ef, std::size_t cols) { return kernel_from_echelon(ef, cols); }

std::vector<RatVector> kernel(const RatMatrix& m) {
    return kernel_from_echelon(reduced_echelon(m), m.cols());
}

std::optional<Solution> solve(const RatMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
    const std::size_t cols = m.cols();
    RatMatrix aug(m.rows(), cols + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
        aug(r, cols) = b[r];
    }
    const EchelonForm ef = reduced_echelon(std::move(aug));
    if (!ef.pivot_cols.empty() && ef.pivot_cols.back() == cols) return std::nullopt;
    Solution s;
    s.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i) s.particular[ef.pivot_cols[i]] = ef.reduced(i, cols);
    s.kernel = kernel_from_echelon(ef, cols);
    return s;
}

}  // namespace nilorb
