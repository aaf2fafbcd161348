#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

enum class Kind { G2, F4, E6, E7, E8 };

std::string_view kind_name(Kind k);
/// Accepts "G2", "g2", ... Throws InputError otherwise.
Kind parse_kind(std::string_view name);
inline constexpr Kind all_kinds[] = {Kind::G2, Kind::F4, Kind::E6, Kind::E7, Kind::E8};

using Coeffs = std::vector<int>;

/// Positive roots carry index +k (1-based position in positive_roots),
/// negative roots -k.
struct Root {
    Coeffs coeffs;
    int index = 0;
};

/// An exceptional root system in GAP simple-root numbering, with positive
/// roots in GAP order.
class RootSystem {
public:
    Kind kind() const noexcept { return kind_; }
    std::size_t rank() const noexcept { return cartan_.size(); }
    std::size_t num_positive() const noexcept { return positive_.size(); }

    /// cartan()[i][j] = <alpha_i, alpha_j^vee>
    const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }
    const std::vector<Coeffs>& positive_roots() const noexcept { return positive_; }
    const Coeffs& positive_root(std::size_t index1) const { return positive_.at(index1 - 1); }

    /// Signed 1-based index of a root given by its coefficients, or nullopt.
    std::optional<int> find(const Coeffs& c) const;
    Root root(int signed_index) const;
    Coeffs coeffs(int signed_index) const;

    bool is_long(int signed_index) const;
    bool simply_laced() const noexcept { return simply_laced_; }

    /// (a, b) for the invariant form normalised so short roots have norm 2.
    int inner(const Coeffs& a, const Coeffs& b) const;
    int norm(int signed_index) const;

    /// <a, alpha_j^vee> for 0-based simple index j.
    int pairing(const Coeffs& a, std::size_t j) const;
    /// <a, b^vee>
    int pairing(const Coeffs& a, const Coeffs& b) const;

    int height(int signed_index) const;
    int highest_root() const { return static_cast<int>(positive_.size()); }

    /// gap_to_display()[i] = display (Bourbaki) position of GAP simple root i.
    const std::vector<std::size_t>& gap_to_display() const noexcept { return gap_to_display_; }
    /// diagram_display_order()[k] = GAP node printed at position k in the
    /// orbit tables' weighted-diagram columns.
    const std::vector<std::size_t>& diagram_display_order() const noexcept { return diagram_order_; }

    Coeffs to_display(const Coeffs& gap) const;
    Coeffs from_display(const Coeffs& display) const;

    friend RootSystem build_root_system(Kind kind);

private:
    Kind kind_ = Kind::G2;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> form_;
    std::vector<Coeffs> positive_;
    std::map<Coeffs, int> index_;
    std::vector<int> norms_;
    int long_norm_ = 2;
    bool simply_laced_ = true;
    std::vector<std::size_t> gap_to_display_;
    std::vector<std::size_t> diagram_order_;
};

RootSystem build_root_system(Kind kind);

/// Conjugates h = sum_j a_j h_j into the dominant chamber by simple
/// reflections and returns (alpha_1(h), ..., alpha_l(h)). Throws InputError
/// if the resulting labels are not integers.
std::vector<int> dominant_labels(const RootSystem& rs, std::span<const Rational> h_coords);

/// Same, starting from the labels alpha_i(h) directly.
std::vector<Rational> dominant_chamber(const RootSystem& rs, std::vector<Rational> labels);

}  // namespace nilorb
