#include "nilorb/modular.hpp"

#include <algorithm>
#include <utility>

#include "nilorb/errors.hpp"

namespace nilorb {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 62)) throw InputError("PrimeField: modulus out of range");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e != 0) {
        if (e & 1U) result = mul(result, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw InputError("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_int(long long v) const noexcept {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
    const std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % p_;  // avoids overflow at LLONG_MIN
    return sub(p_ - 1, m);
}

std::uint64_t PrimeField::from_integer(const Integer& z) const {
    if (z.fits_slong_p()) return from_int(z.get_si());
    Integer r;
    const Integer pz = Integer(std::to_string(p_));
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    return std::stoull(r.get_str());
}

std::optional<std::uint64_t> PrimeField::from_rational(const Rational& q) const {
    const std::uint64_t den = from_integer(q.get_den());
    if (den == 0) return std::nullopt;
    return mul(from_integer(q.get_num()), inv(den));
}

std::uint64_t random_prime(std::mt19937_64& rng) {
    const std::uint64_t low = std::uint64_t{1} << 61;
    // Stay clear of 2^62 so the next prime still fits below it.
    const std::uint64_t start = low + (rng() % (low - (std::uint64_t{1} << 20)));
    Integer z(std::to_string(start));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    return std::stoull(z.get_str());
}

namespace {

template <bool Parallel>
std::size_t eliminate(ModMatrix& m, const PrimeField& f, std::size_t* last_pivot = nullptr) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != rk) std::swap_ranges(m.row_ptr(p), m.row_ptr(p) + cols, m.row_ptr(rk));
        std::uint64_t* pivot_row = m.row_ptr(rk);
        const std::uint64_t inv = f.inv(pivot_row[c]);
        for (std::size_t j = c; j < cols; ++j) pivot_row[j] = f.mul(pivot_row[j], inv);
        const long long first = static_cast<long long>(rk + 1);
        const long long last = static_cast<long long>(rows);
        const bool big = Parallel && (rows - rk) * (cols - c) > 16384;
#pragma omp parallel for schedule(static) if (big)
        for (long long i = first; i < last; ++i) {
            std::uint64_t* r = m.row_ptr(static_cast<std::size_t>(i));
            const std::uint64_t lead = r[c];
            if (lead == 0) continue;
            const std::uint64_t neg_lead = f.neg(lead);
            for (std::size_t j = c; j < cols; ++j)
                if (pivot_row[j] != 0) r[j] = f.add(r[j], f.mul(neg_lead, pivot_row[j]));
        }
        if (last_pivot != nullptr) *last_pivot = c;
        ++rk;
    }
    return rk;
}

}  // namespace

std::size_t rank_mod(ModMatrix m, const PrimeField& field) { return eliminate<true>(m, field); }

std::size_t rank_mod_serial(ModMatrix m, const PrimeField& field) { return eliminate<false>(m, field); }

bool solvable_mod(const ModMatrix& m, std::span<const std::uint64_t> b, const PrimeField& field) {
    if (b.size() != m.rows()) throw InputError("solvable_mod: right-hand side has wrong length");
    ModMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    std::size_t last_pivot = 0;
    const std::size_t rk = eliminate<false>(aug, field, &last_pivot);
    return rk == 0 || last_pivot != m.cols();
}

}  // namespace nilorb
