#include "nilorb/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nilorb/errors.hpp"

namespace nilorb {

namespace detail {
const std::map<std::string, std::string>& embedded_tables();
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::vector<int> ints(const std::string& s) {
    std::istringstream in(s);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    return out;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

int parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw InputError("bad integer");
        return v;
    } catch (const std::exception&) {
        throw InputError("malformed table entry '" + s + "' in " + context);
    }
}

}  // namespace

std::string table_text(const std::string& file_name, const std::optional<std::filesystem::path>& dir) {
    if (dir) {
        const auto path = *dir / file_name;
        std::ifstream in(path);
        if (in) {
            std::ostringstream os;
            os << in.rdbuf();
            return os.str();
        }
    }
    const auto& tables = detail::embedded_tables();
    const auto it = tables.find(file_name);
    if (it == tables.end()) throw InputError("no table named " + file_name);
    return it->second;
}

bool has_orbit_table(Kind kind) { return kind == Kind::G2 || kind == Kind::F4 || kind == Kind::E6; }

std::vector<Coeffs> load_root_table(Kind kind, const std::optional<std::filesystem::path>& dir) {
    const std::string name = std::string(kind_name(kind)) + ".roots";
    std::vector<Coeffs> out;
    for (const auto& line : data_lines(table_text(name, dir))) out.push_back(ints(line));
    return out;
}

std::vector<OrbitRecord> load_tables(Kind kind, const std::optional<std::filesystem::path>& dir) {
    if (!has_orbit_table(kind)) throw InputError("no stored orbit table for " + std::string(kind_name(kind)));
    const std::string name = std::string(kind_name(kind)) + ".orbits";
    const RootSystem& rs = algebra_for(kind).roots();
    std::vector<OrbitRecord> out;
    for (const auto& line : data_lines(table_text(name, dir))) {
        const auto f = split(line, '|');
        if (f.size() < 4) throw InputError("malformed orbit row in " + name + ": " + line);
        OrbitRecord r;
        r.kind = kind;
        r.label = f[0];
        r.display_diagram = ints(f[1]);
        r.diagram = from_display(rs, r.display_diagram);
        r.rep_roots = ints(f[2]);
        for (int root : r.rep_roots)
            if (root < 1 || static_cast<std::size_t>(root) > rs.num_positive())
                throw InputError("root index out of range in " + name + ": " + line);
        std::istringstream nodes(f[3]);
        std::string tok;
        while (nodes >> tok) {
            if (tok.size() < 2 || (tok.back() != 'L' && tok.back() != 'S'))
                throw InputError("malformed node '" + tok + "' in " + name);
            r.nodes.push_back(RepNode{parse_int(tok.substr(0, tok.size() - 1), name), tok.back() == 'L'});
        }
        if (f.size() > 4) {
            std::istringstream edges(f[4]);
            while (edges >> tok) {
                // a-b:n or a-b:nd
                const auto dash = tok.find('-');
                const auto colon = tok.find(':');
                if (dash == std::string::npos || colon == std::string::npos || colon < dash)
                    throw InputError("malformed edge '" + tok + "' in " + name);
                RepEdge e{};
                e.a = parse_int(tok.substr(0, dash), name);
                e.b = parse_int(tok.substr(dash + 1, colon - dash - 1), name);
                std::string n = tok.substr(colon + 1);
                e.dotted = !n.empty() && n.back() == 'd';
                if (e.dotted) n.pop_back();
                e.lines = parse_int(n, name);
                r.edges.push_back(e);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t TableReport::passed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok(); }));
}

namespace {

bool same_decorations(const RootSystem& rs, const OrbitRecord& rec, const RepDiagram& got, std::string& detail) {
    if (got.nodes.size() != rec.nodes.size()) {
        detail += "node count differs; ";
        return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < rec.nodes.size(); ++i) {
        const bool black = got.nodes[i].is_long && !rs.simply_laced();
        if (got.nodes[i].root != rec.nodes[i].root || black != rec.nodes[i].is_long) {
            detail += "node " + std::to_string(rec.nodes[i].root) + " differs; ";
            ok = false;
        }
    }
    auto key = [](const RepEdge& e) { return std::make_tuple(std::min(e.a, e.b), std::max(e.a, e.b), e.lines, e.dotted); };
    std::set<std::tuple<int, int, int, bool>> want, have;
    for (const auto& e : rec.edges) want.insert(key(e));
    for (const auto& e : got.edges) have.insert(key(e));
    if (want != have) {
        detail += "edges differ; ";
        ok = false;
    }
    return ok;
}

}  // namespace

TableReport verify_tables(const std::vector<OrbitRecord>& records, const LieAlgebra& L) {
    TableReport report;
    const RootSystem& rs = L.roots();
    report.kind = rs.kind();
    for (const auto& rec : records) {
        RowCheck row;
        row.label = rec.label;
        const LieElement h = h_from_diagram(L, rec.diagram);
        LieElement e(L);
        row.grading = true;
        for (int r : rec.rep_roots) {
            e.add(L.x_index(static_cast<std::size_t>(r)), 1);
            Rational eta = 0;
            for (std::size_t j = 0; j < rs.rank(); ++j) eta += h.coeff(L.h_index(j)) * L.weight(L.x_index(static_cast<std::size_t>(r)), j);
            if (eta != 2) {
                row.grading = false;
                row.detail += "root " + std::to_string(r) + " has eta " + eta.get_str() + "; ";
            }
        }
        try {
            const WeightedDiagram d = weighted_dynkin(L, e);
            row.diagram = d == rec.diagram;
            if (!row.diagram) row.detail += "weighted diagram is " + display_string(rs, d) + "; ";
        } catch (const InputError& ex) {
            row.detail += std::string(ex.what()) + "; ";
        }
        row.decorations = same_decorations(rs, rec, rep_diagram(rs, rec.rep_roots), row.detail);
        if (row.grading) {
            try {
                row.sl2 = complete_sl2(L, h, e).verify();
            } catch (const InputError& ex) {
                row.detail += std::string(ex.what()) + "; ";
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::optional<std::string> table_label(const std::vector<OrbitRecord>& records, const WeightedDiagram& d) {
    for (const auto& r : records)
        if (r.diagram == d) return r.label;
    return std::nullopt;
}

}  // namespace nilorb
