#include "nilorb/centralizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "nilorb/errors.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/modular.hpp"
#include "nilorb/parallel.hpp"
#include "nilorb/seed.hpp"

namespace nilorb {

Subalgebra Subalgebra::span(const LieAlgebra& L, const std::vector<LieElement>& spanning) {
    RatMatrix m(spanning.size(), L.dim());
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (spanning[i].algebra_ptr() != nullptr && spanning[i].algebra_ptr() != &L)
            throw InputError("Subalgebra::span: element of another algebra");
        for (const auto& [b, c] : spanning[i].coeffs()) m(i, b) = c;
    }
    const EchelonForm ef = reduced_echelon(std::move(m));
    std::vector<LieElement> basis;
    for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i)
        basis.push_back(LieElement::from_vector(L, ef.reduced.row(i)));
    return from_reduced(L, std::move(basis), ef.pivot_cols);
}

Subalgebra Subalgebra::from_reduced(const LieAlgebra& L, std::vector<LieElement> basis,
                                    std::vector<std::size_t> anchors) {
    Subalgebra k;
    k.parent_ = &L;
    k.basis_ = std::move(basis);
    k.anchors_ = std::move(anchors);
    k.build_structure();
    return k;
}

std::optional<RatVector> Subalgebra::coordinates(const LieElement& v) const {
    RatVector c(basis_.size());
    LieElement rebuilt(*parent_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        c[k] = v.coeff(anchors_[k]);
        if (sgn(c[k]) != 0)
            for (const auto& [b, x] : basis_[k].coeffs()) rebuilt.add(b, c[k] * x);
    }
    if (!(rebuilt == v)) return std::nullopt;
    return c;
}

void Subalgebra::build_structure() {
    const std::size_t n = basis_.size();
    structure_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto c = coordinates(bracket(basis_[i], basis_[j]));
            if (!c) throw InputError("span is not closed under the bracket");
            for (std::size_t k = 0; k < n; ++k)
                if (sgn((*c)[k]) != 0) {
                    structure_[i * n + j].emplace_back(k, (*c)[k]);
                    structure_[j * n + i].emplace_back(k, -(*c)[k]);
                }
        }
}

namespace {

// Eigenvalues of a Cartan element making e homogeneous of degree 2, or
// nullopt if there is none (e.g. e has a Cartan component).
std::optional<std::vector<Rational>> homogeneous_degrees(const LieAlgebra& L, const LieElement& e) {
    const RootSystem& rs = L.roots();
    const std::size_t l = rs.rank();
    std::vector<int> support;
    for (const auto& [b, c] : e.coeffs()) {
        const int r = L.root_of_basis(b);
        if (r == 0) return std::nullopt;
        support.push_back(r);
    }
    RatMatrix m(support.size(), l);
    RatVector rhs(support.size(), 2);
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < l; ++j) m(i, j) = rs.pairing(rs.coeffs(support[i]), j);
    const auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    std::vector<Rational> deg(L.dim());
    for (std::size_t b = 0; b < L.dim(); ++b)
        for (std::size_t j = 0; j < l; ++j)
            if (sgn(sol->particular[j]) != 0) deg[b] += sol->particular[j] * L.weight(b, j);
    return deg;
}

}  // namespace

Subalgebra centralizer(const LieAlgebra& L, const LieElement& e, const Grading* grading) {
    if (e.algebra_ptr() != nullptr && e.algebra_ptr() != &L) throw InputError("centralizer: element of another algebra");
    std::vector<Rational> deg;
    if (grading != nullptr) {
        for (const auto& [b, c] : e.coeffs())
            if (grading->degree[b] != 2) throw InputError("centralizer: e is not homogeneous of degree 2");
        deg.assign(grading->degree.begin(), grading->degree.end());
    } else if (auto d = homogeneous_degrees(L, e)) {
        deg = std::move(*d);
    } else {
        deg.assign(L.dim(), 0);
    }

    std::map<Rational, std::vector<std::size_t>> blocks;
    for (std::size_t b = 0; b < L.dim(); ++b) blocks[deg[b]].push_back(b);
    const bool single_block = blocks.size() == 1 && !e.is_zero();
    const Rational shift = single_block ? Rational(0) : Rational(2);

    std::vector<LieElement> basis;
    std::vector<std::size_t> anchors;
    std::vector<int> degrees;
    for (const auto& [lambda, members] : blocks) {
        const auto target_it = blocks.find(lambda + shift);
        const std::vector<std::size_t> empty;
        const auto& target = target_it == blocks.end() ? empty : target_it->second;
        std::vector<long> row_of(L.dim(), -1);
        for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = static_cast<long>(r);
        RatMatrix m(target.size(), members.size());
        for (std::size_t c = 0; c < members.size(); ++c)
            for (const auto& [i, ei] : e.coeffs())
                for (const Term& t : L.bracket_basis(i, members[c])) {
                    if (row_of[t.index] < 0) throw std::logic_error("centralizer: grading does not match e");
                    m(static_cast<std::size_t>(row_of[t.index]), c) += ei * t.coeff;
                }
        const EchelonForm ef = reduced_echelon(m);
        std::vector<bool> pivot(members.size(), false);
        for (auto pc : ef.pivot_cols) pivot[pc] = true;
        const auto ker = kernel(ef, members.size());
        std::size_t next = 0;
        for (std::size_t c = 0; c < members.size(); ++c) {
            if (pivot[c]) continue;
            LieElement v(L);
            for (std::size_t k = 0; k < members.size(); ++k) v.add(members[k], ker[next][k]);
            ++next;
            basis.push_back(std::move(v));
            anchors.push_back(members[c]);
            degrees.push_back(is_integer(lambda) ? static_cast<int>(lambda.get_num().get_si()) : 0);
        }
    }
    Subalgebra k = Subalgebra::from_reduced(L, std::move(basis), std::move(anchors));
    if (grading != nullptr) k.degrees_ = std::move(degrees);
    return k;
}

bool is_abelian(const Subalgebra& K) {
    for (std::size_t i = 0; i < K.dim(); ++i)
        for (std::size_t j = i + 1; j < K.dim(); ++j)
            if (!K.structure(i, j).empty()) return false;
    return true;
}

LinMatrix index_form_matrix(const Subalgebra& K) {
    const std::size_t n = K.dim();
    LinMatrix a(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : K.structure(i, j)) a(i, j).add_term(k, c);
    return a;
}

namespace {

std::optional<ModMatrix> index_matrix_mod(const Subalgebra& K, std::span<const long> point, const PrimeField& f) {
    const std::size_t n = K.dim();
    std::vector<std::uint64_t> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = f.from_int(point[k]);
    ModMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::uint64_t acc = 0;
            for (const auto& [k, c] : K.structure(i, j)) {
                const auto cm = f.from_rational(c);
                if (!cm) return std::nullopt;
                acc = f.add(acc, f.mul(*cm, t[k]));
            }
            a(i, j) = acc;
            a(j, i) = f.neg(acc);
        }
    return a;
}

RatMatrix index_matrix_exact(const Subalgebra& K, std::span<const long> point) {
    const std::size_t n = K.dim();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational acc = 0;
            for (const auto& [k, c] : K.structure(i, j)) acc += c * point[k];
            a(i, j) = acc;
            a(j, i) = -acc;
        }
    return a;
}

}  // namespace

IndexCertificate verify_elashvili(const LieAlgebra& L, const LieElement& e, std::mt19937_64& rng,
                                  const AnalysisConfig& config) {
    const Subalgebra K = centralizer(L, e);
    IndexCertificate cert;
    cert.e = e;
    cert.dim_k = K.dim();
    cert.rank_g = L.rank();
    const auto omega = omega_set(config.omega_bound);
    std::uniform_int_distribution<std::size_t> pick(0, omega.size() - 1);
    const PrimeField field(random_prime(rng));
    std::vector<long> point(K.dim());
    bool have = false;
    for (std::size_t t = 0; t < config.trials; ++t) {
        ++cert.trials_used;
        for (auto& v : point) v = omega[pick(rng)];
        const auto a = index_matrix_mod(K, point, field);
        if (!a) continue;
        const std::size_t r = rank_mod(*a, field);
        if (K.dim() - r < L.rank()) throw std::logic_error("verify_elashvili: rank exceeds Vinberg's bound");
        if (!have || r > cert.rank) {
            cert.rank = r;
            cert.point = point;
            cert.prime = field.prime();
            have = true;
        }
        if (K.dim() - r == L.rank()) {
            cert.certified = true;
            break;
        }
    }
    return cert;
}

bool recheck(const LieAlgebra& L, const IndexCertificate& cert) {
    const Subalgebra K = centralizer(L, cert.e);
    if (K.dim() != cert.dim_k || cert.point.size() != K.dim()) return false;
    const std::size_t r = rank(index_matrix_exact(K, cert.point));
    if (r < cert.rank) return false;
    return !cert.certified || K.dim() - r == L.rank();
}

Subalgebra double_centralizer(const LieAlgebra& L, const LieElement& e, const LieElement& x) {
    if (!bracket(e, x).is_zero()) throw InputError("double_centralizer: x does not commute with e");
    const Subalgebra K = centralizer(L, e);
    const std::size_t n = K.dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto c = K.coordinates(bracket(x, K.basis()[j]));
        if (!c) throw std::logic_error("double_centralizer: C_e is not closed");
        for (std::size_t k = 0; k < n; ++k) m(k, j) = (*c)[k];
    }
    std::vector<LieElement> span;
    for (const auto& v : kernel(m)) {
        LieElement y(L);
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(v[j]) != 0)
                for (const auto& [b, c] : K.basis()[j].coeffs()) y.add(b, v[j] * c);
        span.push_back(std::move(y));
    }
    return Subalgebra::span(L, span);
}

std::string mode_name(BoundMode m) {
    switch (m) {
        case BoundMode::Richardson: return "exact-richardson";
        case BoundMode::Symbolic: return "exact-symbolic";
        case BoundMode::Probabilistic: return "probabilistic";
    }
    return "?";
}

namespace {

// ad x on C_e in the basis of C_e, x = sum_v T_v b_{vars[v]}.
struct AdMatrix {
    const Subalgebra& K;
    std::vector<std::size_t> vars;

    LinMatrix symbolic() const {
        const std::size_t n = K.dim();
        LinMatrix m(n, n, vars.size());
        for (std::size_t v = 0; v < vars.size(); ++v)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : K.structure(vars[v], j)) m(k, j).add_term(v, c);
        return m;
    }

    std::optional<ModMatrix> at_mod(std::span<const long> t, const PrimeField& f) const {
        const std::size_t n = K.dim();
        ModMatrix m(n, n);
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (t[v] == 0) continue;
            const std::uint64_t tv = f.from_int(t[v]);
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : K.structure(vars[v], j)) {
                    const auto cm = f.from_rational(c);
                    if (!cm) return std::nullopt;
                    m(k, j) = f.add(m(k, j), f.mul(tv, *cm));
                }
        }
        return m;
    }

    RatMatrix at(std::span<const long> t) const {
        const std::size_t n = K.dim();
        RatMatrix m(n, n);
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (t[v] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : K.structure(vars[v], j)) m(k, j) += c * t[v];
        }
        return m;
    }

    std::size_t rank_mod_at(std::span<const long> t, const PrimeField& f) const {
        const auto m = at_mod(t, f);
        return m ? rank_mod(*m, f) : 0;
    }

    LieElement element(std::span<const long> t) const {
        LieElement x(K.parent());
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (t[v] != 0)
                for (const auto& [b, c] : K.basis()[vars[v]].coeffs()) x.add(b, c * t[v]);
        return x;
    }
};

}  // namespace

DoubleCentralizerResult min_double_centralizer(const LieAlgebra& L, const LieElement& e, std::mt19937_64& rng,
                                               const AnalysisConfig& config, const LieElement* h) {
    if (config.degree && h == nullptr) throw InputError("min_double_centralizer: a degree restriction needs h");
    std::optional<Grading> grading;
    if (h != nullptr) grading = grade(L, *h);
    const Subalgebra K = centralizer(L, e, grading ? &*grading : nullptr);
    const std::size_t n = K.dim();
    const std::size_t l = L.rank();

    AdMatrix ad{K, {}};
    for (std::size_t k = 0; k < n; ++k)
        if (!config.degree || K.degrees()[k] == *config.degree) ad.vars.push_back(k);

    DoubleCentralizerResult res;
    res.centralizer_dim = n;
    res.degree = config.degree;
    const std::size_t m = ad.vars.size();
    if (m == 0) {
        res.min_dim = n;
        res.witness = LieElement(L);
        res.abelian = is_abelian(K);
        res.mode = n == l ? BoundMode::Richardson : BoundMode::Symbolic;
        return res;
    }

    const auto omega = omega_set(config.omega_bound);
    std::uniform_int_distribution<std::size_t> pick(0, omega.size() - 1);
    const PrimeField field(random_prime(rng));
    std::vector<long> best(m), t(m);
    std::size_t best_rank = 0;
    bool have = false;
    auto sample = [&](std::size_t count) {
        for (std::size_t s = 0; s < count && (!have || n - best_rank > l); ++s) {
            ++res.samples;
            for (auto& v : t) v = omega[pick(rng)];
            const std::size_t r = ad.rank_mod_at(t, field);
            if (n - r < l) throw std::logic_error("min_double_centralizer: dim C_{e,x} below rank(g)");
            if (!have || r > best_rank) {
                best_rank = r;
                best = t;
                have = true;
            }
        }
    };
    sample(config.trials);

    // Generic rank, when it can be computed exactly.
    std::optional<std::size_t> generic;
    if (n - best_rank == l) {
        generic = best_rank;
        res.mode = BoundMode::Richardson;
    } else if (config.try_symbolic && n * n <= config.symbolic_max_entries && m <= config.symbolic_max_vars) {
        try {
            generic = symbolic_rank(ad.symbolic(), config.budget);
            res.mode = BoundMode::Symbolic;
            for (int round = 0; round < 10 && best_rank < *generic; ++round) sample(config.trials);
        } catch (const ResourceLimitError&) {
            generic.reset();
        }
    }
    if (!generic) {
        // Schwartz-Zippel: if the generic rank exceeded r, some (r+1)-minor
        // would be a nonzero polynomial of degree r+1, vanishing at a uniform
        // point of S^m with probability at most (r+1)/|S|.
        res.mode = BoundMode::Probabilistic;
        const double set_size = 4294967296.0;
        std::uniform_int_distribution<long> wide(-2147483648L, 2147483647L);
        std::vector<long> z(m);
        std::size_t confirmed = 0;
        bool wide_best = false;
        while (true) {
            const double per = static_cast<double>(best_rank + 1) / set_size;
            const auto need = static_cast<std::size_t>(std::ceil(std::log(config.max_error) / std::log(per)));
            if (confirmed >= need) {
                res.error_bound = std::pow(per, static_cast<double>(confirmed));
                break;
            }
            for (auto& v : z) v = wide(rng);
            ++res.samples;
            const std::size_t r = rank(ad.at(z));
            if (r > best_rank) {
                best = z;
                best_rank = r;
                wide_best = true;
                confirmed = 0;
            } else {
                ++confirmed;
            }
        }
        // Prefer a witness with small coordinates of the same rank.
        for (std::size_t s = 0; wide_best && s < 4 * config.trials; ++s) {
            for (auto& v : t) v = omega[pick(rng)];
            if (ad.rank_mod_at(t, field) >= best_rank) {
                best = t;
                wide_best = false;
            }
        }
    }

    // Nicify the witness while keeping the maximal rank.
    if (config.nicify_witness) {
        for (std::size_t v = 0; v < m; ++v) {
            const long original = best[v];
            for (long val = 0; val <= 64; ++val) {
                if (val == original) break;
                best[v] = val;
                if (ad.rank_mod_at(best, field) >= best_rank) goto kept;
            }
            best[v] = original;
        kept:;
        }
    }
    const std::size_t exact = rank(ad.at(best));
    if (n - exact < l) throw std::logic_error("min_double_centralizer: dim C_{e,x} below rank(g)");
    res.witness = ad.element(best);
    const Subalgebra cex = double_centralizer(L, e, res.witness);
    res.min_dim = cex.dim();
    if (res.min_dim != n - exact) throw std::logic_error("min_double_centralizer: inconsistent kernel dimension");
    if (generic && res.min_dim > n - *generic && res.mode != BoundMode::Probabilistic)
        throw std::logic_error("min_double_centralizer: witness does not reach the generic rank");
    res.abelian = is_abelian(cex);
    return res;
}

namespace {

IndexCertificate certify_one(const LieAlgebra& L, const ValidDiagram& orbit, std::uint64_t seed,
                             const AnalysisConfig& config) {
    std::mt19937_64 rng(seed);
    IndexCertificate c = verify_elashvili(L, orbit.rep.e, rng, config);
    c.diagram = orbit.diagram;
    return c;
}

DoubleCentralizerResult double_one(const LieAlgebra& L, const ValidDiagram& orbit, std::uint64_t seed,
                                   const AnalysisConfig& config) {
    std::mt19937_64 rng(seed);
    return min_double_centralizer(L, orbit.rep.e, rng, config, &orbit.rep.triple.h);
}

}  // namespace

std::vector<IndexCertificate> certify_orbits(const LieAlgebra& L, const std::vector<ValidDiagram>& orbits,
                                             std::uint64_t seed, const AnalysisConfig& config, int threads) {
    std::vector<IndexCertificate> out(orbits.size());
    parallel_for(static_cast<long>(orbits.size()), threads, [&](long i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = certify_one(L, orbits[k], derive_seed(seed, k), config);
    });
    return out;
}

std::vector<IndexCertificate> certify_orbits_serial(const LieAlgebra& L, const std::vector<ValidDiagram>& orbits,
                                                    std::uint64_t seed, const AnalysisConfig& config) {
    std::vector<IndexCertificate> out;
    for (std::size_t k = 0; k < orbits.size(); ++k) out.push_back(certify_one(L, orbits[k], derive_seed(seed, k), config));
    return out;
}

std::vector<DoubleCentralizerResult> double_centralizer_orbits(const LieAlgebra& L,
                                                               const std::vector<ValidDiagram>& orbits,
                                                               std::uint64_t seed, const AnalysisConfig& config,
                                                               int threads) {
    std::vector<DoubleCentralizerResult> out(orbits.size());
    parallel_for(static_cast<long>(orbits.size()), threads, [&](long i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = double_one(L, orbits[k], derive_seed(seed, k), config);
    });
    return out;
}

std::vector<DoubleCentralizerResult> double_centralizer_orbits_serial(const LieAlgebra& L,
                                                                      const std::vector<ValidDiagram>& orbits,
                                                                      std::uint64_t seed,
                                                                      const AnalysisConfig& config) {
    std::vector<DoubleCentralizerResult> out;
    for (std::size_t k = 0; k < orbits.size(); ++k) out.push_back(double_one(L, orbits[k], derive_seed(seed, k), config));
    return out;
}

}  // namespace nilorb
