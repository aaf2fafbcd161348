#include "nilorb/lie_algebra.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

#include "nilorb/errors.hpp"

namespace nilorb {

namespace {

constexpr int kUnset = 1 << 30;

// Structure constants N_{a,b} from the extraspecial-pair signs, propagated
// with the standard identities for a Chevalley basis:
//   N_{a,b} = -N_{b,a}
//   a+b+c = 0          =>  N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
//   N_{a,b} N_{-a,-b}  =  -(p+1)^2
//   a+b+c+d = 0, no opposite pair  =>
//     N_{ab}N_{cd}/(a+b)^2 + N_{bc}N_{ad}/(b+c)^2 + N_{ca}N_{bd}/(c+a)^2 = 0
// Every value reduces to positive pairs summing to roots of smaller height.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs)
        : rs_(rs), n_(static_cast<int>(rs.num_positive())), memo_(4 * rs.num_positive() * rs.num_positive(), kUnset) {}

    int operator()(int a, int b) {
        int& slot = memo_[static_cast<std::size_t>(slot_of(a) * 2 * n_ + slot_of(b))];
        if (slot == kUnset) slot = compute(a, b);
        return slot;
    }

private:
    int slot_of(int a) const { return a > 0 ? a - 1 : n_ - a - 1; }

    std::optional<int> sum(int a, int b) const {
        Coeffs c = rs_.coeffs(a);
        const Coeffs cb = rs_.coeffs(b);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += cb[i];
        return rs_.find(c);
    }

    int string_p(int a, int b) const {
        const Coeffs ca = rs_.coeffs(a);
        Coeffs c = rs_.coeffs(b);
        int p = 0;
        while (true) {
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= ca[i];
            if (!rs_.find(c)) return p;
            ++p;
        }
    }

    int compute(int a, int b) {
        const auto s = sum(a, b);
        if (!s) return 0;
        if (a > 0 && b > 0) {
            if (a > b) return -(*this)(b, a);
            const int xi = *s;
            int a1 = 0;
            for (std::size_t i = 0; i < rs_.rank(); ++i) {
                Coeffs c = rs_.coeffs(xi);
                c[i] -= 1;
                const auto r = rs_.find(c);
                if (r && *r > 0) {
                    a1 = static_cast<int>(i) + 1;
                    break;
                }
            }
            const int b1 = *sum(xi, -a1);
            if (a == a1) return string_p(a, b) + 1;
            const int c = -a1;
            const int d = -b1;
            Rational acc = 0;
            if (auto bc = sum(b, c)) acc += Rational((*this)(b, c) * (*this)(a, d)) / rs_.norm(*bc);
            if (auto ca = sum(c, a)) acc += Rational((*this)(c, a) * (*this)(b, d)) / rs_.norm(*ca);
            const Rational val = -Rational(rs_.norm(xi)) * acc / (*this)(c, d);
            return static_cast<int>(val.get_num().get_si());
        }
        if (a < 0 && b < 0) {
            const int p = string_p(-a, -b);
            return -(p + 1) * (p + 1) / (*this)(-a, -b);
        }
        if (a < 0) return -(*this)(b, a);
        // a > 0 > b; complete to a + b + c = 0.
        const int c = -*s;
        if (c < 0) return rs_.norm(c) * (*this)(b, c) / rs_.norm(a);
        return rs_.norm(c) * (*this)(c, a) / rs_.norm(b);
    }

    const RootSystem& rs_;
    int n_;
    std::vector<int> memo_;
};

}  // namespace

LieAlgebra::LieAlgebra(RootSystem rs) : rs_(std::move(rs)), npos_(rs_.num_positive()), dim_(2 * npos_ + rs_.rank()) {
    const std::size_t l = rs_.rank();
    coroots_.reserve(npos_);
    for (std::size_t r = 1; r <= npos_; ++r) {
        const Coeffs& c = rs_.positive_root(r);
        std::vector<int> h(l);
        const int nr = rs_.norm(static_cast<int>(r));
        for (std::size_t i = 0; i < l; ++i) h[i] = c[i] * rs_.norm(static_cast<int>(i) + 1) / nr;
        coroots_.push_back(std::move(h));
    }

    StructureConstants N(rs_);
    const std::size_t nroot = 2 * npos_;
    n_table_.assign(nroot * nroot, 0);
    for (std::size_t i = 0; i < nroot; ++i)
        for (std::size_t j = 0; j < nroot; ++j) n_table_[i * nroot + j] = N(root_of_basis(i), root_of_basis(j));

    offsets_.assign(dim_ * dim_ + 1, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const int a = root_of_basis(i);
            const int b = root_of_basis(j);
            if (a != 0 && b != 0) {
                if (a + b == 0) {
                    const int sign = a > 0 ? 1 : -1;
                    const auto& h = coroots_[static_cast<std::size_t>(std::abs(a)) - 1];
                    for (std::size_t k = 0; k < l; ++k)
                        if (h[k] != 0) terms_.push_back({static_cast<std::uint32_t>(h_index(k)), sign * h[k]});
                } else if (const int n = n_table_[i * nroot + j]; n != 0) {
                    Coeffs c = rs_.coeffs(a);
                    const Coeffs cb = rs_.coeffs(b);
                    for (std::size_t k = 0; k < l; ++k) c[k] += cb[k];
                    terms_.push_back({static_cast<std::uint32_t>(basis_of_root(*rs_.find(c))), n});
                }
            } else if (a != 0) {
                const int w = rs_.pairing(rs_.coeffs(a), j - 2 * npos_);
                if (w != 0) terms_.push_back({static_cast<std::uint32_t>(i), -w});
            } else if (b != 0) {
                const int w = rs_.pairing(rs_.coeffs(b), i - 2 * npos_);
                if (w != 0) terms_.push_back({static_cast<std::uint32_t>(j), w});
            }
            offsets_[i * dim_ + j + 1] = terms_.size();
        }
    }
}

int LieAlgebra::structure_constant(int a, int b) const {
    const std::size_t nroot = 2 * npos_;
    return n_table_[basis_of_root(a) * nroot + basis_of_root(b)];
}

int LieAlgebra::weight(std::size_t b, std::size_t j) const {
    const int r = root_of_basis(b);
    return r == 0 ? 0 : rs_.pairing(rs_.coeffs(r), j);
}

std::string LieAlgebra::basis_name(std::size_t b) const {
    if (b < npos_) return "x" + std::to_string(b + 1);
    if (b < 2 * npos_) return "y" + std::to_string(b - npos_ + 1);
    return "h" + std::to_string(b - 2 * npos_ + 1);
}

LieElement LieElement::basis(const LieAlgebra& L, std::size_t b, const Rational& c) {
    if (b >= L.dim()) throw InputError("basis index out of range");
    LieElement e(L);
    e.add(b, c);
    return e;
}

LieElement LieElement::from_vector(const LieAlgebra& L, std::span<const Rational> coords) {
    if (coords.size() != L.dim()) throw InputError("coordinate vector has wrong length");
    LieElement e(L);
    for (std::size_t b = 0; b < coords.size(); ++b)
        if (sgn(coords[b]) != 0) e.coeffs_.emplace(b, coords[b]);
    return e;
}

Rational LieElement::coeff(std::size_t b) const {
    auto it = coeffs_.find(b);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LieElement::add(std::size_t b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) coeffs_.erase(it);
    }
}

void LieElement::set(std::size_t b, const Rational& c) {
    if (sgn(c) == 0)
        coeffs_.erase(b);
    else
        coeffs_[b] = c;
}

RatVector LieElement::to_vector() const {
    RatVector v(algebra_->dim());
    for (const auto& [b, c] : coeffs_) v[b] = c;
    return v;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (algebra_ == nullptr) algebra_ = o.algebra_;
    for (const auto& [b, c] : o.coeffs_) add(b, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (algebra_ == nullptr) algebra_ = o.algebra_;
    for (const auto& [b, c] : o.coeffs_) add(b, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [b, c] : coeffs_) c *= s;
    return *this;
}

std::string LieElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : coeffs_) {
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << algebra_->basis_name(b);
    }
    return os.str();
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    if (a.algebra_ptr() == nullptr || b.algebra_ptr() == nullptr) {
        if (a.algebra_ptr() == nullptr && a.is_zero()) return LieElement(b.algebra());
        if (b.algebra_ptr() == nullptr && b.is_zero()) return LieElement(a.algebra());
    }
    if (a.algebra_ptr() != b.algebra_ptr()) throw InputError("bracket: elements of different algebras");
    const LieAlgebra& L = a.algebra();
    RatVector acc(L.dim());
    std::vector<bool> touched(L.dim(), false);
    Rational prod;
    for (const auto& [i, ci] : a.coeffs()) {
        for (const auto& [j, cj] : b.coeffs()) {
            const auto terms = L.bracket_basis(i, j);
            if (terms.empty()) continue;
            prod = ci * cj;
            for (const Term& t : terms) {
                acc[t.index] += prod * t.coeff;
                touched[t.index] = true;
            }
        }
    }
    LieElement out(L);
    for (std::size_t k = 0; k < L.dim(); ++k)
        if (touched[k]) out.add(k, acc[k]);
    return out;
}

RatMatrix ad_matrix(const LieElement& a) {
    const LieAlgebra& L = a.algebra();
    RatMatrix m(L.dim(), L.dim());
    for (const auto& [i, ci] : a.coeffs())
        for (std::size_t j = 0; j < L.dim(); ++j)
            for (const Term& t : L.bracket_basis(i, j)) m(t.index, j) += ci * t.coeff;
    return m;
}

const std::vector<std::size_t>& Grading::component(int k) const {
    static const std::vector<std::size_t> empty;
    auto it = components.find(k);
    return it == components.end() ? empty : it->second;
}

Grading grade(const LieAlgebra& L, const LieElement& h) {
    if (h.algebra_ptr() != nullptr && h.algebra_ptr() != &L) throw InputError("grade: element of another algebra");
    std::vector<Rational> a(L.rank());
    for (const auto& [b, c] : h.coeffs()) {
        if (!L.is_cartan(b)) throw InputError("grade: h is not in the Cartan subalgebra");
        a[b - 2 * L.num_positive()] = c;
    }
    Grading g;
    g.h = h.algebra_ptr() == nullptr ? LieElement(L) : h;
    g.degree.resize(L.dim());
    for (std::size_t b = 0; b < L.dim(); ++b) {
        Rational ev = 0;
        if (!L.is_cartan(b))
            for (std::size_t j = 0; j < L.rank(); ++j)
                if (sgn(a[j]) != 0) ev += a[j] * L.weight(b, j);
        if (!is_integer(ev)) throw InputError("grade: non-integral eigenvalue of ad h");
        g.degree[b] = static_cast<int>(ev.get_num().get_si());
        g.components[g.degree[b]].push_back(b);
    }
    return g;
}

const LieAlgebra& algebra_for(Kind kind) {
    static std::array<std::unique_ptr<LieAlgebra>, 5> cache;
    static std::array<std::once_flag, 5> flags;
    const auto i = static_cast<std::size_t>(kind);
    std::call_once(flags[i], [&] { cache[i] = std::make_unique<LieAlgebra>(build_root_system(kind)); });
    return *cache[i];
}

}  // namespace nilorb
