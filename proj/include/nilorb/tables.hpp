#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/lie_algebra.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

struct OrbitRecord {
    Kind kind = Kind::G2;
    std::string label;
    std::vector<int> display_diagram;  // as printed
    WeightedDiagram diagram;           // GAP order
    std::vector<int> rep_roots;        // 1-based GAP indices
    std::vector<RepNode> nodes;        // expected decorations
    std::vector<RepEdge> edges;
};

/// Data files are compiled in; a directory holding files with the same names
/// (G2.roots, F4.orbits, ...) overrides them.
std::string table_text(const std::string& file_name, const std::optional<std::filesystem::path>& dir = {});

/// Throws InputError for E7/E8, which have no stored orbit table.
std::vector<OrbitRecord> load_tables(Kind kind, const std::optional<std::filesystem::path>& dir = {});

/// Positive roots in display (Bourbaki) coefficients, GAP order.
std::vector<Coeffs> load_root_table(Kind kind, const std::optional<std::filesystem::path>& dir = {});

bool has_orbit_table(Kind kind);

struct RowCheck {
    std::string label;
    bool grading = false;      // every representative root has eta = 2
    bool diagram = false;      // weighted_dynkin round-trips
    bool decorations = false;  // rep_diagram matches the stored picture
    bool sl2 = false;          // completes to a verified triple
    std::string detail;

    bool ok() const { return grading && diagram && decorations && sl2; }
};

struct TableReport {
    Kind kind = Kind::G2;
    std::vector<RowCheck> rows;

    std::size_t passed() const;
};

TableReport verify_tables(const std::vector<OrbitRecord>& records, const LieAlgebra& L);

/// Label of the stored row with diagram d, if any.
std::optional<std::string> table_label(const std::vector<OrbitRecord>& records, const WeightedDiagram& d);

}  // namespace nilorb
