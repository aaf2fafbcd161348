#include "nilorb/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nilorb/errors.hpp"

namespace nilorb {

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::G2: return "G2";
        case Kind::F4: return "F4";
        case Kind::E6: return "E6";
        case Kind::E7: return "E7";
        case Kind::E8: return "E8";
    }
    return "?";
}

Kind parse_kind(std::string_view name) {
    std::string up(name);
    for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (Kind k : all_kinds)
        if (kind_name(k) == up) return k;
    throw InputError("unknown exceptional type: " + std::string(name));
}

namespace {

struct Layout {
    std::vector<std::vector<int>> bourbaki_form;
    std::vector<std::size_t> gap_to_bourbaki;
    std::vector<std::size_t> diagram_order;
};

std::vector<std::vector<int>> simply_laced_form(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
    for (auto [i, j] : edges) {
        b[i - 1][j - 1] = -1;
        b[j - 1][i - 1] = -1;
    }
    return b;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Layout layout_for(Kind kind) {
    switch (kind) {
        case Kind::G2:
            // alpha_1 short, alpha_2 long; the tables print the long node first.
            return {{{2, -3}, {-3, 6}}, {0, 1}, {1, 0}};
        case Kind::F4:
            // GAP numbers the simple roots (Bourbaki) alpha_4, alpha_1, alpha_3, alpha_2.
            return {{{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}, {3, 0, 2, 1}, {1, 3, 2, 0}};
        case Kind::E6:
            return {simply_laced_form(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}), iota_vec(6), iota_vec(6)};
        case Kind::E7:
            return {simply_laced_form(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}), iota_vec(7), iota_vec(7)};
        case Kind::E8:
            return {simply_laced_form(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}), iota_vec(8),
                    iota_vec(8)};
    }
    throw InputError("unknown kind");
}

}  // namespace

RootSystem build_root_system(Kind kind) {
    const Layout lay = layout_for(kind);
    const std::size_t l = lay.gap_to_bourbaki.size();
    RootSystem rs;
    rs.kind_ = kind;
    rs.gap_to_display_ = lay.gap_to_bourbaki;
    rs.diagram_order_ = lay.diagram_order;
    rs.form_.assign(l, std::vector<int>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            rs.form_[i][j] = lay.bourbaki_form[lay.gap_to_bourbaki[i]][lay.gap_to_bourbaki[j]];
    rs.cartan_.assign(l, std::vector<int>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) rs.cartan_[i][j] = 2 * rs.form_[i][j] / rs.form_[j][j];

    // Height-by-height generation. Within a height, roots are visited in list
    // order and extended by simple roots taken in Bourbaki order; this
    // reproduces the GAP ordering (for F4 the GAP index order does not).
    auto add = [&rs](Coeffs c) {
        rs.positive_.push_back(c);
        rs.index_.emplace(std::move(c), static_cast<int>(rs.positive_.size()));
    };
    std::vector<std::size_t> extend_order(l);
    for (std::size_t i = 0; i < l; ++i) extend_order[lay.gap_to_bourbaki[i]] = i;
    std::vector<std::size_t> level;
    for (std::size_t i = 0; i < l; ++i) {
        Coeffs c(l, 0);
        c[i] = 1;
        add(c);
        level.push_back(i);
    }
    while (!level.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t r : level) {
            for (std::size_t i : extend_order) {
                Coeffs cand = rs.positive_[r];
                cand[i] += 1;
                if (rs.index_.count(cand) != 0) continue;
                // alpha_i-string through beta: beta + alpha_i is a root iff
                // p - <beta, alpha_i^vee> > 0, p = max{k : beta - k alpha_i in Phi}.
                const Coeffs& beta = rs.positive_[r];
                int p = 0;
                Coeffs down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || rs.index_.count(down) == 0) break;
                    ++p;
                }
                int pair = 0;
                for (std::size_t k = 0; k < l; ++k) pair += beta[k] * rs.cartan_[k][i];
                if (p - pair > 0) {
                    add(cand);
                    next.push_back(rs.positive_.size() - 1);
                }
            }
        }
        level = std::move(next);
    }

    rs.norms_.reserve(rs.positive_.size());
    rs.long_norm_ = 0;
    int short_norm = 1 << 30;
    for (const auto& c : rs.positive_) {
        const int n = rs.inner(c, c);
        rs.norms_.push_back(n);
        rs.long_norm_ = std::max(rs.long_norm_, n);
        short_norm = std::min(short_norm, n);
    }
    rs.simply_laced_ = short_norm == rs.long_norm_;
    return rs;
}

std::optional<int> RootSystem::find(const Coeffs& c) const {
    if (c.size() != rank()) return std::nullopt;
    bool nonneg = true;
    bool nonpos = true;
    for (int v : c) {
        nonneg = nonneg && v >= 0;
        nonpos = nonpos && v <= 0;
    }
    if (nonneg) {
        auto it = index_.find(c);
        if (it != index_.end()) return it->second;
        return std::nullopt;
    }
    if (nonpos) {
        Coeffs neg(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        auto it = index_.find(neg);
        if (it != index_.end()) return -it->second;
    }
    return std::nullopt;
}

Coeffs RootSystem::coeffs(int signed_index) const {
    if (signed_index == 0 || static_cast<std::size_t>(std::abs(signed_index)) > positive_.size())
        throw InputError("root index out of range");
    Coeffs c = positive_[static_cast<std::size_t>(std::abs(signed_index)) - 1];
    if (signed_index < 0)
        for (auto& v : c) v = -v;
    return c;
}

Root RootSystem::root(int signed_index) const { return Root{coeffs(signed_index), signed_index}; }

int RootSystem::norm(int signed_index) const {
    return norms_.at(static_cast<std::size_t>(std::abs(signed_index)) - 1);
}

bool RootSystem::is_long(int signed_index) const { return norm(signed_index) == long_norm_; }

int RootSystem::inner(const Coeffs& a, const Coeffs& b) const {
    int acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) acc += a[i] * b[j] * form_[i][j];
    }
    return acc;
}

int RootSystem::pairing(const Coeffs& a, std::size_t j) const {
    int acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) acc += a[i] * cartan_[i][j];
    return acc;
}

int RootSystem::pairing(const Coeffs& a, const Coeffs& b) const { return 2 * inner(a, b) / inner(b, b); }

int RootSystem::height(int signed_index) const {
    const Coeffs c = coeffs(signed_index);
    return std::accumulate(c.begin(), c.end(), 0);
}

Coeffs RootSystem::to_display(const Coeffs& gap) const {
    Coeffs d(gap.size());
    for (std::size_t i = 0; i < gap.size(); ++i) d[gap_to_display_[i]] = gap[i];
    return d;
}

Coeffs RootSystem::from_display(const Coeffs& display) const {
    Coeffs g(display.size());
    for (std::size_t i = 0; i < display.size(); ++i) g[i] = display[gap_to_display_[i]];
    return g;
}

std::vector<Rational> dominant_chamber(const RootSystem& rs, std::vector<Rational> labels) {
    const auto& c = rs.cartan();
    const std::size_t l = rs.rank();
    if (labels.size() != l) throw InputError("dominant_chamber: wrong number of labels");
    // s_i(h) = h - alpha_i(h) h_i, so alpha_k(s_i h) = alpha_k(h) - alpha_i(h) C[k][i].
    // The Weyl group is finite, so this terminates.
    while (true) {
        std::size_t i = 0;
        while (i < l && sgn(labels[i]) >= 0) ++i;
        if (i == l) return labels;
        const Rational li = labels[i];
        for (std::size_t k = 0; k < l; ++k)
            if (c[k][i] != 0) labels[k] -= li * c[k][i];
    }
}

std::vector<int> dominant_labels(const RootSystem& rs, std::span<const Rational> h_coords) {
    const std::size_t l = rs.rank();
    if (h_coords.size() != l) throw InputError("dominant_labels: wrong number of coordinates");
    std::vector<Rational> labels(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) labels[i] += rs.cartan()[i][j] * h_coords[j];
    labels = dominant_chamber(rs, std::move(labels));
    std::vector<int> out(l);
    for (std::size_t i = 0; i < l; ++i) {
        if (!is_integer(labels[i])) throw InputError("dominant_labels: non-integral eigenvalue");
        out[i] = static_cast<int>(labels[i].get_num().get_si());
    }
    return out;
}

}  // namespace nilorb
