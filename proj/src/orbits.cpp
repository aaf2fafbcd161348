#include "nilorb/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nilorb/linalg.hpp"
#include "nilorb/linform.hpp"
#include "nilorb/modular.hpp"
#include "nilorb/parallel.hpp"
#include "nilorb/seed.hpp"


namespace nilorb {

bool WeightedDiagram::is_zero() const {
    return std::all_of(labels.begin(), labels.end(), [](int v) { return v == 0; });
}

std::vector<int> to_display(const RootSystem& rs, const WeightedDiagram& d) {
    const auto& order = rs.diagram_display_order();
    if (d.labels.size() != order.size()) throw InputError("diagram has wrong number of labels");
    std::vector<int> out(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) out[k] = d.labels[order[k]];
    return out;
}

WeightedDiagram from_display(const RootSystem& rs, std::span<const int> display) {
    const auto& order = rs.diagram_display_order();
    if (display.size() != order.size()) throw InputError("diagram has wrong number of labels");
    WeightedDiagram d;
    d.labels.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) d.labels[order[k]] = display[k];
    return d;
}

std::string display_string(const RootSystem& rs, const WeightedDiagram& d) {
    std::string s;
    for (int v : to_display(rs, d)) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

bool Sl2Triple::verify() const {
    if (e.algebra_ptr() == nullptr || h.algebra_ptr() == nullptr || f.algebra_ptr() == nullptr) return false;
    return bracket(e, f) == h && bracket(h, e) == Rational(2) * e && bracket(h, f) == Rational(-2) * f;
}

namespace {

// Index of each basis element inside a list of basis indices.
std::vector<long> positions(std::size_t dim, const std::vector<std::size_t>& list) {
    std::vector<long> pos(dim, -1);
    for (std::size_t k = 0; k < list.size(); ++k) pos[list[k]] = static_cast<long>(k);
    return pos;
}

// Everything needed to test h in [x, g(-2)] for one diagram.
struct BracketProblem {
    const LieAlgebra* L;
    Grading grading;
    std::vector<std::size_t> g2, gm2, g0;
    std::vector<long> pos0;
    RatVector h0;  // h in g(0) coordinates

    BracketProblem(const LieAlgebra& alg, const LieElement& h) : L(&alg), grading(grade(alg, h)) {
        g2 = grading.component(2);
        gm2 = grading.component(-2);
        g0 = grading.component(0);
        pos0 = positions(alg.dim(), g0);
        h0.assign(g0.size(), 0);
        for (const auto& [b, c] : h.coeffs()) h0[static_cast<std::size_t>(pos0[b])] = c;
    }

    void require_degree2(const LieElement& x) const {
        for (const auto& [b, c] : x.coeffs())
            if (grading.degree[b] != 2) throw InputError("element is not in g(2)");
    }

    // Matrix of y -> [x, y] from g(-2) to g(0).
    RatMatrix block(const LieElement& x) const {
        RatMatrix m(g0.size(), gm2.size());
        for (std::size_t c = 0; c < gm2.size(); ++c)
            for (const auto& [i, xi] : x.coeffs())
                for (const Term& t : L->bracket_basis(i, gm2[c])) m(static_cast<std::size_t>(pos0[t.index]), c) += xi * t.coeff;
        return m;
    }

    ModMatrix block_mod(std::span<const std::pair<std::size_t, std::uint64_t>> x, const PrimeField& f) const {
        ModMatrix m(g0.size(), gm2.size());
        for (std::size_t c = 0; c < gm2.size(); ++c)
            for (const auto& [i, xi] : x)
                for (const Term& t : L->bracket_basis(i, gm2[c])) {
                    auto& slot = m(static_cast<std::size_t>(pos0[t.index]), c);
                    slot = f.add(slot, f.mul(xi, f.from_int(t.coeff)));
                }
        return m;
    }

    std::optional<std::vector<std::uint64_t>> h_mod(const PrimeField& f) const {
        std::vector<std::uint64_t> out(h0.size());
        for (std::size_t k = 0; k < h0.size(); ++k) {
            const auto v = f.from_rational(h0[k]);
            if (!v) return std::nullopt;
            out[k] = *v;
        }
        return out;
    }

    // nullopt: p divides a denominator, no verdict.
    std::optional<bool> member_mod(const LieElement& x, const PrimeField& f) const {
        std::vector<std::pair<std::size_t, std::uint64_t>> xm;
        for (const auto& [b, c] : x.coeffs()) {
            const auto v = f.from_rational(c);
            if (!v) return std::nullopt;
            xm.emplace_back(b, *v);
        }
        const auto hm = h_mod(f);
        if (!hm) return std::nullopt;
        return solvable_mod(block_mod(xm, f), *hm, f);
    }

    std::optional<LieElement> preimage(const LieElement& x) const {
        const auto sol = solve(block(x), h0);
        if (!sol) return std::nullopt;
        LieElement y(*L);
        for (std::size_t c = 0; c < gm2.size(); ++c) y.add(gm2[c], sol->particular[c]);
        return y;
    }
};

LieElement nicify_with(const BracketProblem& prob, const LieElement& x, int max_value, const PrimeField* field) {
    LieElement cur = x;
    for (std::size_t b : prob.g2) {
        const Rational original = cur.coeff(b);
        for (int v = 0; v <= max_value; ++v) {
            if (Rational(v) == original) break;
            cur.set(b, v);
            std::optional<bool> ok;
            if (field != nullptr) ok = prob.member_mod(cur, *field);
            if (!ok) ok = prob.preimage(cur).has_value();
            if (*ok) goto accepted;
        }
        cur.set(b, original);
    accepted:;
    }
    return cur;
}

std::mt19937_64 fixed_rng() { return std::mt19937_64(0x6e696c6f7262ULL); }

}  // namespace

LieElement h_from_diagram(const LieAlgebra& L, const WeightedDiagram& d) {
    const RootSystem& rs = L.roots();
    const std::size_t l = rs.rank();
    if (d.labels.size() != l) throw InputError("diagram has wrong number of labels");
    RatMatrix c(l, l);
    RatVector rhs(l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) c(i, j) = rs.cartan()[i][j];
        rhs[i] = d.labels[i];
    }
    const auto sol = solve(c, rhs);
    LieElement h(L);
    for (std::size_t j = 0; j < l; ++j) h.add(L.h_index(j), sol->particular[j]);
    return h;
}

std::optional<LieElement> in_bracket_image(const LieAlgebra& L, const LieElement& h, const LieElement& x) {
    const BracketProblem prob(L, h);
    if (x.algebra_ptr() != nullptr && x.algebra_ptr() != &L) throw InputError("element of another algebra");
    prob.require_degree2(x);
    return prob.preimage(x);
}

LieElement nicify(const LieAlgebra& L, const LieElement& h, const LieElement& x, int max_value) {
    const BracketProblem prob(L, h);
    prob.require_degree2(x);
    auto rng = fixed_rng();
    const PrimeField field(random_prime(rng));
    LieElement out = nicify_with(prob, x, max_value, &field);
    if (!prob.preimage(out)) out = nicify_with(prob, x, max_value, nullptr);
    return out;
}

Sl2Triple complete_sl2(const LieAlgebra& L, const LieElement& h, const LieElement& e) {
    if (e.is_zero()) throw InputError("complete_sl2: e is zero");
    const BracketProblem prob(L, h);
    prob.require_degree2(e);
    auto f = prob.preimage(e);
    if (!f) throw InputError("complete_sl2: h is not in [e, g(-2)]");
    return Sl2Triple{*f, h, e};
}

Representative find_representative(const LieAlgebra& L, const WeightedDiagram& d, std::mt19937_64& rng,
                                   const SearchConfig& config) {
    if (d.labels.size() != L.rank()) throw InputError("diagram has wrong number of labels");
    for (int v : d.labels)
        if (v < 0 || v > 2) throw InputError("diagram labels must be 0, 1 or 2");
    if (d.is_zero()) throw InputError("the zero diagram has no nonzero representative");

    const LieElement h = h_from_diagram(L, d);
    const BracketProblem prob(L, h);
    const auto omega = omega_set(config.omega_bound);
    std::uniform_int_distribution<std::size_t> pick(0, omega.size() - 1);
    const PrimeField field(random_prime(rng));

    TrialStats stats;
    stats.omega_bound = config.omega_bound;
    stats.g2_dim = prob.g2.size();
    std::vector<std::pair<std::size_t, std::uint64_t>> xm(prob.g2.size());
    const auto hm = prob.h_mod(field);
    for (std::size_t t = 0; t < config.trials; ++t) {
        ++stats.trials;
        LieElement x(L);
        for (std::size_t k = 0; k < prob.g2.size(); ++k) {
            const long v = omega[pick(rng)];
            x.add(prob.g2[k], v);
            xm[k] = {prob.g2[k], field.from_int(v)};
        }
        if (config.modular_screen && hm && !solvable_mod(prob.block_mod(xm, field), *hm, field)) {
            ++stats.screened_out;
            continue;
        }
        if (!prob.preimage(x)) continue;
        LieElement e = x;
        if (config.nicify) {
            e = nicify_with(prob, x, config.nicify_max_value, &field);
            if (!prob.preimage(e)) e = nicify_with(prob, x, config.nicify_max_value, nullptr);
        }
        auto f = prob.preimage(e);
        return Representative{e, Sl2Triple{*f, h, e}, stats};
    }
    throw ProbablyInvalidDiagram("no representative found in " + std::to_string(stats.trials) + " trials", stats);
}

namespace {

// h coordinates (in h_1..h_l) of a triple through a sum of root vectors.
std::vector<Rational> cartan_of_root_sum(const LieAlgebra& L, const LieElement& e) {
    if (e.algebra_ptr() != nullptr && e.algebra_ptr() != &L) throw InputError("element of another algebra");
    const RootSystem& rs = L.roots();
    const std::size_t l = rs.rank();
    std::vector<int> support;
    for (const auto& [b, c] : e.coeffs()) {
        const int r = L.root_of_basis(b);
        if (r <= 0) throw InputError("weighted_dynkin: e must be a combination of positive root vectors");
        support.push_back(r);
    }
    RatMatrix s(support.size(), l);
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < l; ++j) s(i, j) = rs.coeffs(support[i])[j];
    const std::size_t srank = rank(s);
    if (srank != support.size()) throw InputError("weighted_dynkin: roots of e are linearly dependent");

    // f is sought in the Cartan part plus root spaces inside the rational span
    // of the support; the complementary torus fixes e, so a triple can be
    // chosen with f of weight zero for it.
    std::vector<std::size_t> fbasis;
    for (std::size_t j = 0; j < l; ++j) fbasis.push_back(L.h_index(j));
    for (std::size_t r = 1; r <= rs.num_positive(); ++r) {
        bool in_span = srank == l;
        if (!in_span) {
            RatMatrix t(support.size() + 1, l);
            for (std::size_t i = 0; i < support.size(); ++i)
                for (std::size_t j = 0; j < l; ++j) t(i, j) = s(i, j);
            for (std::size_t j = 0; j < l; ++j) t(support.size(), j) = rs.positive_root(r)[j];
            in_span = rank(t) == srank;
        }
        if (in_span) {
            fbasis.push_back(L.x_index(r));
            fbasis.push_back(L.y_index(r));
        }
    }

    // Unknowns: a_0..a_{l-1} (h = sum a_j h_j), then f over fbasis.
    const std::size_t nunk = l + fbasis.size();
    std::map<std::size_t, std::size_t> row_of;  // basis index -> equation row
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    auto row = [&](std::size_t b) -> std::vector<std::pair<std::size_t, Rational>>& {
        auto [it, inserted] = row_of.try_emplace(b, rows.size());
        if (inserted) rows.emplace_back();
        return rows[it->second];
    };
    for (std::size_t u = 0; u < fbasis.size(); ++u)
        for (const auto& [i, ci] : e.coeffs())
            for (const Term& t : L.bracket_basis(i, fbasis[u])) row(t.index).emplace_back(l + u, ci * t.coeff);
    for (std::size_t j = 0; j < l; ++j) row(L.h_index(j)).emplace_back(j, Rational(-1));
    const std::size_t neq = rows.size() + support.size();
    RatMatrix m(neq, nunk);
    RatVector rhs(neq);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [u, c] : rows[r]) m(r, u) += c;
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = 0; j < l; ++j) m(rows.size() + i, j) = rs.pairing(rs.coeffs(support[i]), j);
        rhs[rows.size() + i] = 2;
    }
    const auto sol = solve(m, rhs);
    if (!sol) throw InputError("weighted_dynkin: not completable over the Cartan");
    return std::vector<Rational>(sol->particular.begin(), sol->particular.begin() + static_cast<long>(l));
}

}  // namespace

WeightedDiagram weighted_dynkin(const LieAlgebra& L, const LieElement& e) {
    return WeightedDiagram{dominant_labels(L.roots(), cartan_of_root_sum(L, e))};
}

Sl2Triple root_sum_triple(const LieAlgebra& L, const LieElement& e) {
    const auto a = cartan_of_root_sum(L, e);
    LieElement h(L);
    for (std::size_t j = 0; j < L.rank(); ++j) h.add(L.h_index(j), a[j]);
    return complete_sl2(L, h, e);
}

bool passes_dimension_filter(const LieAlgebra& L, const WeightedDiagram& d) {
    const Grading g = grade(L, h_from_diagram(L, d));
    const int top = g.components.rbegin()->first;
    for (int k = 0; k + 2 <= top; ++k)
        if (g.component(k).size() < g.component(k + 2).size()) return false;
    return true;
}

std::optional<bool> exact_validity(const LieAlgebra& L, const WeightedDiagram& d, const SymbolicBudget& budget) {
    if (d.is_zero()) return false;
    const BracketProblem prob(L, h_from_diagram(L, d));
    const std::size_t nv = prob.g2.size();
    LinMatrix m(prob.g0.size(), prob.gm2.size(), nv);
    LinMatrix aug(prob.g0.size(), prob.gm2.size() + 1, nv);
    for (std::size_t k = 0; k < nv; ++k)
        for (std::size_t c = 0; c < prob.gm2.size(); ++c)
            for (const Term& t : L.bracket_basis(prob.g2[k], prob.gm2[c])) {
                const auto r = static_cast<std::size_t>(prob.pos0[t.index]);
                m(r, c).add_term(k, t.coeff);
                aug(r, c).add_term(k, t.coeff);
            }
    for (std::size_t r = 0; r < prob.g0.size(); ++r) aug(r, prob.gm2.size()).add_constant(prob.h0[r]);
    try {
        return symbolic_rank(m, budget) == symbolic_rank(aug, budget);
    } catch (const ResourceLimitError&) {
        return std::nullopt;
    }
}

namespace {

std::vector<WeightedDiagram> all_candidates(std::size_t l) {
    std::vector<WeightedDiagram> out;
    std::vector<int> labels(l, 0);
    while (true) {
        std::size_t i = l;
        while (i > 0 && labels[i - 1] == 2) labels[--i] = 0;
        if (i == 0) break;
        ++labels[i - 1];
        out.push_back(WeightedDiagram{labels});
    }
    return out;
}

std::optional<ValidDiagram> test_candidate(const LieAlgebra& L, const WeightedDiagram& d, std::uint64_t seed,
                                           const SearchConfig& config) {
    if (config.dimension_prefilter && !passes_dimension_filter(L, d)) return std::nullopt;
    std::mt19937_64 rng(seed);
    try {
        return ValidDiagram{d, find_representative(L, d, rng, config)};
    } catch (const ProbablyInvalidDiagram&) {
        return std::nullopt;
    }
}

std::vector<ValidDiagram> collect(std::vector<std::optional<ValidDiagram>>& found) {
    std::vector<ValidDiagram> out;
    for (auto& f : found)
        if (f) out.push_back(std::move(*f));
    return out;
}

}  // namespace

std::vector<ValidDiagram> enumerate_diagrams(const LieAlgebra& L, std::uint64_t seed, const SearchConfig& config) {
    const auto cands = all_candidates(L.rank());
    std::vector<std::optional<ValidDiagram>> found(cands.size());
    parallel_for(static_cast<long>(cands.size()), config.threads, [&](long i) {
        const auto k = static_cast<std::size_t>(i);
        found[k] = test_candidate(L, cands[k], derive_seed(seed, k), config);
    });
    return collect(found);
}

std::vector<ValidDiagram> enumerate_diagrams_serial(const LieAlgebra& L, std::uint64_t seed,
                                                    const SearchConfig& config) {
    const auto cands = all_candidates(L.rank());
    std::vector<std::optional<ValidDiagram>> found(cands.size());
    for (std::size_t k = 0; k < cands.size(); ++k) found[k] = test_candidate(L, cands[k], derive_seed(seed, k), config);
    return collect(found);
}

int RepDiagram::lines_between(int a, int b) const {
    const auto e = edge(a, b);
    return e ? e->lines : 0;
}

std::optional<RepEdge> RepDiagram::edge(int a, int b) const {
    for (const auto& e : edges)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e;
    return std::nullopt;
}

RepDiagram rep_diagram(const RootSystem& rs, std::span<const int> roots) {
    RepDiagram d;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (roots[i] == roots[j]) throw InputError("rep_diagram: roots must be distinct");
        d.nodes.push_back(RepNode{roots[i], rs.is_long(roots[i])});
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const Coeffs a = rs.coeffs(roots[i]);
            const Coeffs b = rs.coeffs(roots[j]);
            const int p = rs.pairing(a, b);
            const int q = rs.pairing(b, a);
            if (p * q != 0) d.edges.push_back(RepEdge{roots[i], roots[j], p * q, p > 0 && q > 0});
        }
    return d;
}

std::vector<ComponentType> parse_subsystem(const std::string& label) {
    std::vector<ComponentType> out;
    std::size_t i = 0;
    const std::string tilde_a = "\xC3\x83";  // Ã
    while (i < label.size()) {
        int mult = 0;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
            mult = mult * 10 + (label[i++] - '0');
        if (mult == 0) mult = 1;
        ComponentType c;
        if (label.compare(i, tilde_a.size(), tilde_a) == 0) {
            c.tilde = true;
            c.series = 'A';
            i += tilde_a.size();
        } else {
            if (i < label.size() && label[i] == '~') {
                c.tilde = true;
                ++i;
            }
            if (i >= label.size() || std::string("ABCDEFG").find(label[i]) == std::string::npos)
                throw InputError("cannot parse subsystem label: " + label);
            c.series = label[i++];
        }
        int r = 0;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) r = r * 10 + (label[i++] - '0');
        if (r == 0) throw InputError("cannot parse subsystem label: " + label);
        c.rank = r;
        if (i < label.size() && label[i] != '+') throw InputError("unsupported subsystem label: " + label);
        if (i < label.size()) ++i;
        for (int k = 0; k < mult; ++k) out.push_back(c);
    }
    if (out.empty()) throw InputError("empty subsystem label");
    return out;
}

namespace {

// Bourbaki Cartan matrix <a_i, a_j^vee> of a simple type.
std::vector<std::vector<int>> component_cartan(const ComponentType& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto link = [&c](int i, int j) { c[i][j] = c[j][i] = -1; };
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (t.series) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
        case 'C':
            if (n < 2) throw InputError("B/C components need rank >= 2");
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            if (t.series == 'B') c[n - 2][n - 1] = -2;
            else c[n - 1][n - 2] = -2;
            break;
        case 'D':
            if (n < 4) throw InputError("D components need rank >= 4");
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw InputError("E components have rank 6, 7 or 8");
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            if (n != 4) throw InputError("F components have rank 4");
            link(0, 1);
            link(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case 'G':
            if (n != 2) throw InputError("G components have rank 2");
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        default:
            throw InputError("unknown component series");
    }
    return c;
}

std::size_t component_positive_roots(const ComponentType& t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.series) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

bool is_levi(const RootSystem& rs, const std::vector<int>& roots, std::size_t expected_positive) {
    const std::size_t l = rs.rank();
    RatMatrix s(roots.size(), l);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < l; ++j) s(i, j) = rs.coeffs(roots[i])[j];
    const std::size_t srank = rank(s);
    std::size_t count = 0;
    for (std::size_t r = 1; r <= rs.num_positive(); ++r) {
        RatMatrix t(roots.size() + 1, l);
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = 0; j < l; ++j) t(i, j) = s(i, j);
        for (std::size_t j = 0; j < l; ++j) t(roots.size(), j) = rs.positive_root(r)[j];
        if (rank(t) == srank) ++count;
    }
    return count == expected_positive;
}

struct SubsystemSearchState {
    const LieAlgebra& L;
    const RootSystem& rs;
    std::vector<std::vector<int>> target;  // flattened Cartan, 0 across components
    std::vector<int> component;            // component id per node
    std::vector<int> required_length;      // +1 long, -1 short, 0 free
    std::vector<int> first_of_twin;        // earlier node whose root must have smaller index, or -1
    std::vector<int> chosen;
    std::size_t nodes = 0;
    std::size_t budget;
    std::size_t expected_positive = 0;
    int npos = 0;
    std::vector<int> pairing_;
    std::vector<char> diff_root_;

    struct Entry {
        std::vector<int> roots;
        bool levi = false;
        std::size_t levi_checks = 0;
    };
    std::map<std::vector<int>, Entry> found;  // quick diagram -> embedding

    SubsystemSearchState(const LieAlgebra& alg, std::size_t max_nodes) : L(alg), rs(alg.roots()), budget(max_nodes) {}

    bool fits(std::size_t p, int r) const {
        if (required_length[p] != 0 && rs.is_long(r) != (required_length[p] > 0)) return false;
        if (first_of_twin[p] >= 0 && r <= chosen[static_cast<std::size_t>(first_of_twin[p])]) return false;
        for (std::size_t q = 0; q < p; ++q) {
            const int c = chosen[q];
            if (c == r) return false;
            if (pair(r, c) != target[p][q] || pair(c, r) != target[q][p] || diff_is_root(r, c)) return false;
        }
        return true;
    }

    int pair(int a, int b) const { return pairing_[static_cast<std::size_t>((a - 1) * npos + b - 1)]; }
    bool diff_is_root(int a, int b) const { return diff_root_[static_cast<std::size_t>((a - 1) * npos + b - 1)] != 0; }

    void precompute() {
        npos = static_cast<int>(rs.num_positive());
        pairing_.resize(static_cast<std::size_t>(npos * npos));
        diff_root_.resize(pairing_.size());
        for (int a = 1; a <= npos; ++a)
            for (int b = 1; b <= npos; ++b) {
                const Coeffs ca = rs.coeffs(a);
                const Coeffs cb = rs.coeffs(b);
                Coeffs d = ca;
                for (std::size_t k = 0; k < d.size(); ++k) d[k] -= cb[k];
                const auto idx = static_cast<std::size_t>((a - 1) * npos + b - 1);
                pairing_[idx] = rs.pairing(ca, cb);
                diff_root_[idx] = rs.find(d).has_value() ? 1 : 0;
            }
    }

    // h of the principal sl2 of the pi-system: sum c_b h_b with beta(h) = 2.
    std::vector<int> quick_diagram() const {
        const std::size_t n = chosen.size();
        RatMatrix m(n, n);
        RatVector rhs(n, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = target[i][j];
        const auto sol = solve(m, rhs);
        std::vector<Rational> a(rs.rank());
        for (std::size_t j = 0; j < n; ++j) {
            const auto& h = L.coroot(static_cast<std::size_t>(chosen[j]));
            for (std::size_t k = 0; k < a.size(); ++k) a[k] += sol->particular[j] * h[k];
        }
        return dominant_labels(rs, a);
    }

    void run(std::size_t p) {
        if (nodes >= budget) return;
        if (p == target.size()) {
            // Prefer a Levi embedding per diagram; give up on re-checking after
            // a few non-Levi hits.
            auto [it, inserted] = found.try_emplace(quick_diagram());
            Entry& entry = it->second;
            if (!inserted && (entry.levi || entry.levi_checks >= 64)) return;
            ++entry.levi_checks;
            const bool levi = is_levi(rs, chosen, expected_positive);
            if (inserted || levi) {
                entry.roots = chosen;
                entry.levi = levi;
            }
            return;
        }
        const int n = static_cast<int>(rs.num_positive());
        for (int r = 1; r <= n; ++r) {
            if (++nodes >= budget) return;
            if (!fits(p, r)) continue;
            chosen.push_back(r);
            run(p + 1);
            chosen.pop_back();
        }
    }
};

// Order in which to place a component's nodes: each node after the first
// is adjacent to an earlier one.
std::vector<int> connected_order(const std::vector<std::vector<int>>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<int> order{0};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[0] = true;
    while (static_cast<int>(order.size()) < n) {
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            bool adj = false;
            for (int i : order) adj = adj || c[i][j] != 0;
            if (adj) {
                order.push_back(j);
                used[j] = true;
                break;
            }
        }
    }
    return order;
}

}  // namespace

std::vector<SubsystemEmbedding> subsystem_representative(const LieAlgebra& L, const std::vector<ComponentType>& types,
                                                         const SubsystemSearch& search) {
    const RootSystem& rs = L.roots();
    if (types.empty()) throw InputError("empty subsystem");
    SubsystemSearchState st(L, search.max_nodes);
    std::size_t total = 0;
    std::size_t expected_positive = 0;
    for (const auto& t : types) {
        if (t.tilde && (t.series != 'A' || rs.simply_laced()))
            throw InputError("short-root components exist only for A-type in non-simply-laced algebras");
        total += static_cast<std::size_t>(t.rank);
        expected_positive += component_positive_roots(t);
    }
    if (total > rs.rank()) throw NotFoundError("subsystem rank exceeds the rank of the algebra");
    st.target.assign(total, std::vector<int>(total, 0));
    std::size_t base = 0;
    int comp = 0;
    std::vector<std::size_t> comp_start;
    for (const auto& t : types) {
        const auto c = component_cartan(t);
        const auto order = connected_order(c);
        comp_start.push_back(base);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = 0; j < order.size(); ++j) st.target[base + i][base + j] = c[order[i]][order[j]];
            st.component.push_back(comp);
            int len = 0;
            if (!rs.simply_laced() && t.series == 'A') len = t.tilde ? -1 : 1;
            if (!rs.simply_laced() && t.series == 'D') len = 1;
            if (!rs.simply_laced() && t.series == 'E') len = 1;
            st.required_length.push_back(len);
            int twin = -1;
            if (i == 0)
                for (int q = comp - 1; q >= 0; --q) {
                    const auto& o = types[static_cast<std::size_t>(q)];
                    if (o.series == t.series && o.rank == t.rank && o.tilde == t.tilde) {
                        twin = static_cast<int>(comp_start[static_cast<std::size_t>(q)]);
                        break;
                    }
                }
            st.first_of_twin.push_back(twin);
        }
        base += order.size();
        ++comp;
    }
    st.expected_positive = expected_positive;
    st.precompute();
    st.run(0);

    std::vector<SubsystemEmbedding> out;
    for (const auto& [quick, entry] : st.found) {
        SubsystemEmbedding emb;
        emb.roots = entry.roots;
        emb.e = LieElement(L);
        for (int r : entry.roots) emb.e.add(L.x_index(static_cast<std::size_t>(r)), 1);
        emb.diagram = WeightedDiagram{quick};
        emb.levi = entry.levi;
        if (search.levi_only && !emb.levi) continue;
        out.push_back(std::move(emb));
    }
    if (out.empty()) throw NotFoundError("no embedding of the requested subsystem found");
    std::sort(out.begin(), out.end(),
              [](const SubsystemEmbedding& a, const SubsystemEmbedding& b) { return a.diagram < b.diagram; });
    return out;
}

}  // namespace nilorb
