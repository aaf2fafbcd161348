#include "nilorb/matrix.hpp"

#include "nilorb/errors.hpp"

namespace nilorb {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& q : entries_)
        if (sgn(q) != 0) return false;
    return true;
}

}  // namespace nilorb
