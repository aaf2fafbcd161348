#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilorb/centralizer.hpp"
#include "nilorb/errors.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/seed.hpp"
#include "nilorb/tables.hpp"

namespace nilorb::cli {

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string type;
    std::optional<std::uint64_t> seed;
    long omega = 50;
    std::size_t trials = 25;
    bool exact = false;
    bool as_json = false;
    int threads = 0;
    std::size_t max_terms = 20000;
    std::string data_dir;

    std::uint64_t resolved_seed = 0;

    std::optional<std::filesystem::path> dir() const {
        if (data_dir.empty()) return std::nullopt;
        return std::filesystem::path(data_dir);
    }
    SearchConfig search() const {
        SearchConfig c;
        c.omega_bound = omega;
        c.trials = trials;
        c.modular_screen = !exact;
        c.threads = threads;
        return c;
    }
    AnalysisConfig analysis() const {
        AnalysisConfig c;
        c.omega_bound = omega;
        c.trials = trials;
        c.budget.max_terms = max_terms;
        return c;
    }
};

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v != nullptr ? std::string(v) : fallback;
}

json element_json(const LieElement& x) {
    json a = json::array();
    for (const auto& [b, c] : x.coeffs()) a.push_back(json::array({b, to_string(c)}));
    return a;
}

LieElement element_from_json(const LieAlgebra& L, const json& a) {
    LieElement x(L);
    if (!a.is_array()) throw InputError("element must be an array of [index, coefficient] pairs");
    for (const auto& t : a) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_string())
            throw InputError("malformed element term");
        const auto b = t[0].get<std::size_t>();
        if (b >= L.dim()) throw InputError("basis index out of range");
        x.add(b, parse_rational(t[1].get<std::string>()));
    }
    return x;
}

json triple_json(const Sl2Triple& t) {
    return json{{"e", element_json(t.e)}, {"h", element_json(t.h)}, {"f", element_json(t.f)}};
}

Sl2Triple triple_from_json(const LieAlgebra& L, const json& j) {
    return Sl2Triple{element_from_json(L, j.at("f")), element_from_json(L, j.at("h")), element_from_json(L, j.at("e"))};
}

std::vector<int> parse_diagram_text(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("diagram labels must be comma-separated integers, got '" + text + "'");
        }
    }
    return out;
}

// Left-justified in a 12-column field; widths count UTF-8 code points.
std::string label_cell(const std::optional<std::string>& s) {
    std::string out = s ? *s : "-";
    std::size_t width = 0;
    for (unsigned char ch : out) width += (ch & 0xC0) != 0x80 ? 1 : 0;
    if (width < 12) out.append(12 - width, ' ');
    return out;
}

json label_json(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::vector<OrbitRecord> records_for(Kind k, const RunConfig& cfg) {
    return has_orbit_table(k) ? load_tables(k, cfg.dir()) : std::vector<OrbitRecord>{};
}

json header(const std::string& command, Kind k, const RunConfig& cfg) {
    json j;
    j["command"] = command;
    j["type"] = std::string(kind_name(k));
    j["seed"] = cfg.resolved_seed;
    j["omega"] = cfg.omega;
    j["trials"] = cfg.trials;
    j["exact"] = cfg.exact;
    return j;
}

void text_header(std::ostream& out, const std::string& command, Kind k, const RunConfig& cfg) {
    out << "# " << command << ' ' << kind_name(k) << " seed=" << cfg.resolved_seed << " omega=" << cfg.omega
        << " trials=" << cfg.trials << (cfg.exact ? " exact" : "") << '\n';
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// roots

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
    const Kind k = parse_kind(cfg.type);
    const RootSystem& rs = algebra_for(k).roots();
    auto coeff_text = [](const Coeffs& c) {
        std::string s;
        for (int v : c) s += (s.empty() ? "" : " ") + std::to_string(v);
        return s;
    };
    if (cfg.as_json) {
        json j;
        j["command"] = "roots";
        j["type"] = std::string(kind_name(k));
        j["roots"] = json::array();
        for (std::size_t i = 1; i <= rs.num_positive(); ++i) {
            const Coeffs& c = rs.coeffs(static_cast<int>(i));
            j["roots"].push_back(json{{"index", i},
                                      {"gap", c},
                                      {"display", rs.to_display(c)},
                                      {"height", rs.height(static_cast<int>(i))},
                                      {"long", rs.is_long(static_cast<int>(i))}});
        }
        emit(out, j);
    } else {
        for (std::size_t i = 1; i <= rs.num_positive(); ++i) {
            const Coeffs c = rs.coeffs(static_cast<int>(i));
            out << std::setw(3) << i << "  gap " << coeff_text(c) << "  display " << coeff_text(rs.to_display(c)) << '\n';
        }
    }
    return kOk;
}

// orbits

int cmd_orbits(const RunConfig& cfg, std::ostream& out) {
    const Kind k = parse_kind(cfg.type);
    const LieAlgebra& L = algebra_for(k);
    const auto records = records_for(k, cfg);
    const auto orbits = enumerate_diagrams(L, cfg.resolved_seed, cfg.search());
    const auto certs = certify_orbits(L, orbits, derive_seed(cfg.resolved_seed, 1), cfg.analysis(), cfg.threads);
    bool all_certified = true;
    if (!cfg.as_json) text_header(out, "orbits", k, cfg);
    json rows = json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        const auto& c = certs[i];
        const bool rechecked = cfg.exact && recheck(L, c);
        all_certified = all_certified && c.certified && (!cfg.exact || rechecked);
        const auto label = table_label(records, o.diagram);
        if (cfg.as_json) {
            json r;
            r["label"] = label_json(label);
            r["diagram"] = to_display(L.roots(), o.diagram);
            r["diagram_gap"] = o.diagram.labels;
            r["triple"] = triple_json(o.rep.triple);
            r["trials"] = o.rep.stats.trials;
            r["dim_centralizer"] = c.dim_k;
            r["index_certified"] = c.certified;
            if (cfg.exact) r["rechecked_over_Q"] = rechecked;
            rows.push_back(std::move(r));
        } else {
            out << label_cell(label) << ' '
                << display_string(L.roots(), o.diagram) << "  dim C_e=" << c.dim_k << "  index "
                << (c.certified ? "certified" : "inconclusive") << "  e = " << o.rep.e.to_string() << '\n';
        }
    }
    if (cfg.as_json) {
        json j = header("orbits", k, cfg);
        j["count"] = orbits.size();
        j["orbits"] = std::move(rows);
        emit(out, j);
    }
    return all_certified ? kOk : kInconclusive;
}

// rep

int cmd_rep(const RunConfig& cfg, const std::string& diagram_text, const std::string& subsystem, bool gap_order,
            std::ostream& out, std::ostream& err) {
    const Kind k = parse_kind(cfg.type);
    const LieAlgebra& L = algebra_for(k);
    const RootSystem& rs = L.roots();
    WeightedDiagram d;
    Representative rep;
    std::vector<int> subsystem_roots;
    std::size_t alternatives = 0;
    if (!subsystem.empty()) {
        const auto types = parse_subsystem(subsystem);
        std::vector<SubsystemEmbedding> embs;
        try {
            embs = subsystem_representative(L, types);
        } catch (const NotFoundError&) {
            SubsystemSearch s;
            s.levi_only = false;
            embs = subsystem_representative(L, types, s);
        }
        alternatives = embs.size();
        d = embs.front().diagram;
        subsystem_roots = embs.front().roots;
        rep.e = embs.front().e;
        rep.triple = root_sum_triple(L, rep.e);
    } else {
        const auto labels = parse_diagram_text(diagram_text);
        if (labels.size() != rs.rank()) throw InputError("diagram needs " + std::to_string(rs.rank()) + " labels");
        d = gap_order ? WeightedDiagram{labels} : from_display(rs, labels);
        if (d.is_zero()) throw InputError("the zero diagram belongs to the zero orbit");
        for (int v : d.labels)
            if (v < 0 || v > 2) throw InputError("diagram labels must be 0, 1 or 2");
        if (cfg.exact) {
            const auto valid = exact_validity(L, d, SymbolicBudget{cfg.max_terms});
            if (!valid) {
                err << "exact validity check exceeded the term budget (" << cfg.max_terms << ")\n";
                return kBudget;
            }
            if (!*valid) {
                err << "diagram " << display_string(rs, d) << " is not the diagram of a nilpotent orbit (exact)\n";
                return kInconclusive;
            }
        }
        std::mt19937_64 rng(cfg.resolved_seed);
        try {
            rep = find_representative(L, d, rng, cfg.search());
        } catch (const ProbablyInvalidDiagram& ex) {
            const auto& s = ex.stats();
            if (cfg.as_json) {
                json j = header("rep", k, cfg);
                j["diagram"] = to_display(rs, d);
                j["valid"] = false;
                j["stats"] = json{{"trials", s.trials}, {"screened_out", s.screened_out}, {"g2_dim", s.g2_dim}};
                emit(out, j);
            }
            err << "no representative found for " << display_string(rs, d) << ": " << s.trials << " trials, "
                << s.screened_out << " rejected by the modular screen, dim g(2) = " << s.g2_dim
                << ", omega = " << s.omega_bound << '\n';
            return kInconclusive;
        }
    }
    const bool verified = rep.triple.verify();
    const auto label = table_label(records_for(k, cfg), d);
    if (cfg.as_json) {
        json j = header("rep", k, cfg);
        j["label"] = label_json(label);
        j["diagram"] = to_display(rs, d);
        j["diagram_gap"] = d.labels;
        j["valid"] = true;
        if (!subsystem.empty()) {
            j["subsystem"] = subsystem;
            j["subsystem_roots"] = subsystem_roots;
            j["matching_diagrams"] = alternatives;
        } else {
            j["stats"] = json{{"trials", rep.stats.trials}, {"screened_out", rep.stats.screened_out},
                              {"g2_dim", rep.stats.g2_dim}};
        }
        j["triple"] = triple_json(rep.triple);
        j["triple_verified"] = verified;
        emit(out, j);
    } else {
        text_header(out, "rep", k, cfg);
        out << "label    " << (label ? *label : std::string("-")) << '\n';
        out << "diagram  " << display_string(rs, d) << '\n';
        out << "e        " << rep.triple.e.to_string() << '\n';
        out << "h        " << rep.triple.h.to_string() << '\n';
        out << "f        " << rep.triple.f.to_string() << '\n';
        out << "triple   " << (verified ? "verified" : "FAILED") << '\n';
        if (alternatives > 1)
            out << "note     " << subsystem << " matches " << alternatives
                << " weighted diagrams; showing the first\n";
    }
    return verified ? kOk : kFailed;
}

// index

json certificate_json(const LieAlgebra& L, const ValidDiagram& o, const IndexCertificate& c,
                      const std::optional<std::string>& label) {
    json r;
    r["label"] = label_json(label);
    r["diagram"] = to_display(L.roots(), o.diagram);
    r["diagram_gap"] = o.diagram.labels;
    r["triple"] = triple_json(o.rep.triple);
    r["dim_centralizer"] = c.dim_k;
    r["rank_g"] = c.rank_g;
    r["point"] = c.point;
    r["prime"] = c.prime;
    r["rank_at_point"] = c.rank;
    r["trials_used"] = c.trials_used;
    r["certified"] = c.certified;
    return r;
}

int cmd_index(const RunConfig& cfg, const std::string& out_file, std::ostream& out) {
    const Kind k = parse_kind(cfg.type);
    const LieAlgebra& L = algebra_for(k);
    const auto records = records_for(k, cfg);
    const auto orbits = enumerate_diagrams(L, cfg.resolved_seed, cfg.search());
    const auto certs = certify_orbits(L, orbits, derive_seed(cfg.resolved_seed, 1), cfg.analysis(), cfg.threads);
    json doc = header("index", k, cfg);
    doc["certificates"] = json::array();
    std::size_t certified = 0;
    if (!cfg.as_json) text_header(out, "index", k, cfg);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& c = certs[i];
        bool ok = c.certified;
        json r = certificate_json(L, orbits[i], c, table_label(records, orbits[i].diagram));
        if (cfg.exact) {
            ok = ok && recheck(L, c);
            r["rechecked_over_Q"] = ok;
        }
        certified += ok ? 1 : 0;
        doc["certificates"].push_back(std::move(r));
        if (!cfg.as_json)
            out << label_cell(table_label(records, orbits[i].diagram))
                << ' ' << display_string(L.roots(), orbits[i].diagram) << "  dim C_e=" << c.dim_k
                << "  rank A(T)=" << c.rank << "  index<=" << c.index_bound() << "  "
                << (ok ? "certified" : "inconclusive") << '\n';
    }
    doc["certified"] = certified;
    doc["total"] = orbits.size();
    if (cfg.as_json) emit(out, doc);
    else out << "# " << certified << '/' << orbits.size() << " certified, rank(g) = " << L.rank() << '\n';
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw InputError("cannot write " + out_file);
        emit(f, doc);
    }
    return certified == orbits.size() ? kOk : kInconclusive;
}

// doublecen

int cmd_doublecen(const RunConfig& cfg, std::optional<int> degree, const std::string& out_file, std::ostream& out,
                  std::ostream& err) {
    const Kind k = parse_kind(cfg.type);
    const LieAlgebra& L = algebra_for(k);
    const auto records = records_for(k, cfg);
    const auto orbits = enumerate_diagrams(L, cfg.resolved_seed, cfg.search());
    AnalysisConfig ac = cfg.analysis();
    ac.degree = degree;
    const auto results = double_centralizer_orbits(L, orbits, derive_seed(cfg.resolved_seed, 2), ac, cfg.threads);
    json doc = header("doublecen", k, cfg);
    if (degree) doc["degree"] = *degree;
    doc["rank_g"] = L.rank();
    doc["rows"] = json::array();
    if (!cfg.as_json) text_header(out, "doublecen", k, cfg);
    std::size_t exceptional = 0;
    bool probabilistic = false;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& r = results[i];
        const auto label = table_label(records, orbits[i].diagram);
        const bool exc = r.min_dim > L.rank();
        exceptional += exc ? 1 : 0;
        probabilistic = probabilistic || r.mode == BoundMode::Probabilistic;
        json row;
        row["label"] = label_json(label);
        row["diagram"] = to_display(L.roots(), orbits[i].diagram);
        row["diagram_gap"] = orbits[i].diagram.labels;
        row["triple"] = triple_json(orbits[i].rep.triple);
        row["dim_centralizer"] = r.centralizer_dim;
        row["min_dim"] = r.min_dim;
        row["witness"] = element_json(r.witness);
        row["abelian"] = r.abelian;
        row["mode"] = mode_name(r.mode);
        row["error_bound"] = r.error_bound;
        row["samples"] = r.samples;
        row["exceptional"] = exc;
        doc["rows"].push_back(std::move(row));
        if (!cfg.as_json) {
            std::ostringstream mode;
            mode << mode_name(r.mode);
            if (r.mode == BoundMode::Probabilistic) mode << "(err<=" << std::setprecision(3) << r.error_bound << ')';
            out << label_cell(label) << ' '
                << display_string(L.roots(), orbits[i].diagram) << "  dim C_e=" << r.centralizer_dim
                << "  min dim C_e,x=" << r.min_dim << "  abelian=" << (r.abelian ? "yes" : "no") << "  "
                << mode.str() << (exc ? "  EXCEPTIONAL" : "") << '\n';
            if (exc) out << "    x = " << r.witness.to_string() << '\n';
        }
    }
    doc["exceptional"] = exceptional;
    if (cfg.as_json) emit(out, doc);
    else out << "# " << exceptional << " of " << orbits.size() << " orbits have min dim C_e,x > rank(g) = " << L.rank() << '\n';
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw InputError("cannot write " + out_file);
        emit(f, doc);
    }
    if (cfg.exact && probabilistic) {
        err << "some lower bounds are only probabilistic; the exact rank exceeded the symbolic limits\n";
        return kBudget;
    }
    return kOk;
}

// recheck

bool check_triple(const LieAlgebra& L, const json& row, std::string& why) {
    const Sl2Triple t = triple_from_json(L, row.at("triple"));
    if (!t.verify()) {
        why = "sl2 relations fail";
        return false;
    }
    std::vector<Rational> coords(L.rank());
    for (const auto& [b, c] : t.h.coeffs()) {
        if (!L.is_cartan(b)) {
            why = "h is not in the Cartan subalgebra";
            return false;
        }
        coords[b - L.h_index(0)] = c;
    }
    if (dominant_labels(L.roots(), coords) != row.at("diagram_gap").get<std::vector<int>>()) {
        why = "h does not match the diagram";
        return false;
    }
    return true;
}

bool recheck_row(const LieAlgebra& L, const std::string& command, const json& row, std::string& why) {
    if (!check_triple(L, row, why)) return false;
    const LieElement e = element_from_json(L, row.at("triple").at("e"));
    if (command == "index") {
        IndexCertificate c;
        c.diagram = WeightedDiagram{row.at("diagram_gap").get<std::vector<int>>()};
        c.e = e;
        c.dim_k = row.at("dim_centralizer").get<std::size_t>();
        c.rank_g = row.at("rank_g").get<std::size_t>();
        c.point = row.at("point").get<std::vector<long>>();
        c.prime = row.at("prime").get<std::uint64_t>();
        c.rank = row.at("rank_at_point").get<std::size_t>();
        c.certified = row.at("certified").get<bool>();
        if (c.rank_g != L.rank()) {
            why = "rank_g is wrong";
            return false;
        }
        if (!c.certified) {
            why = "certificate is marked inconclusive";
            return false;
        }
        if (!recheck(L, c)) {
            why = "exact rank at the stored point does not certify the index";
            return false;
        }
        return true;
    }
    if (command == "doublecen") {
        const LieElement x = element_from_json(L, row.at("witness"));
        if (!bracket(e, x).is_zero()) {
            why = "witness does not commute with e";
            return false;
        }
        if (centralizer(L, e).dim() != row.at("dim_centralizer").get<std::size_t>()) {
            why = "dim C_e differs";
            return false;
        }
        const Subalgebra cex = double_centralizer(L, e, x);
        if (cex.dim() != row.at("min_dim").get<std::size_t>()) {
            why = "dim C_e,x differs";
            return false;
        }
        if (is_abelian(cex) != row.at("abelian").get<bool>()) {
            why = "abelian flag differs";
            return false;
        }
        return true;
    }
    if (command == "orbits") {
        if (centralizer(L, e).dim() != row.at("dim_centralizer").get<std::size_t>()) {
            why = "dim C_e differs";
            return false;
        }
        return true;
    }
    why = "unknown command";
    return false;
}

int cmd_recheck(const std::string& file, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot read " + file);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw InputError("not a JSON document: " + std::string(ex.what()));
    }
    try {
        const std::string command = doc.at("command").get<std::string>();
        const LieAlgebra& L = algebra_for(parse_kind(doc.at("type").get<std::string>()));
        std::vector<const json*> rows;
        if (command == "index")
            for (const auto& r : doc.at("certificates")) rows.push_back(&r);
        else if (command == "doublecen")
            for (const auto& r : doc.at("rows")) rows.push_back(&r);
        else if (command == "orbits")
            for (const auto& r : doc.at("orbits")) rows.push_back(&r);
        else if (command == "rep")
            rows.push_back(&doc);
        else
            throw InputError("cannot recheck output of '" + command + "'");
        std::size_t good = 0;
        for (const json* r : rows) {
            std::string why;
            bool ok = false;
            if (command == "rep") {
                ok = !r->contains("valid") || r->at("valid").get<bool>() ? check_triple(L, *r, why) : false;
                if (!ok && why.empty()) why = "no representative recorded";
            } else {
                ok = recheck_row(L, command, *r, why);
            }
            good += ok ? 1 : 0;
            std::string diagram;
            for (int v : r->at("diagram").get<std::vector<int>>()) diagram += (diagram.empty() ? "" : " ") + std::to_string(v);
            out << (ok ? "ok    " : "FAIL  ") << diagram << (ok ? "" : "  (" + why + ")") << '\n';
        }
        out << "# " << good << '/' << rows.size() << ' ' << command << " records recheck\n";
        return good == rows.size() ? kOk : kFailed;
    } catch (const json::exception& ex) {
        throw InputError("malformed certificate file: " + std::string(ex.what()));
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nilpotent orbits in the exceptional Lie algebras", "nilorb"};
    app.require_subcommand(0, 1);
    RunConfig cfg;
    cfg.data_dir = env_or("NILORB_DATA_DIR", "");
    try {
        cfg.threads = std::stoi(env_or("NILORB_THREADS", "0"));
    } catch (const std::exception&) {
        cfg.threads = 0;
    }
    std::string recheck_file;
    app.add_option("--recheck", recheck_file, "Re-verify a JSON certificate file");

    auto common = [&cfg](CLI::App* sub, bool seeded) {
        sub->add_option("type", cfg.type, "G2, F4, E6, E7 or E8")->required();
        sub->add_flag("--json", cfg.as_json, "JSON output");
        sub->add_option("--data-dir", cfg.data_dir, "Directory overriding the built-in tables (env NILORB_DATA_DIR)");
        if (!seeded) return;
        sub->add_option("--seed", cfg.seed, "Random seed (default: from entropy, always echoed)");
        sub->add_option("--omega", cfg.omega, "Coefficients are drawn from {-b..b} minus 0")
            ->check(CLI::PositiveNumber);
        sub->add_option("--trials", cfg.trials, "Random trials per diagram or orbit")->check(CLI::PositiveNumber);
        sub->add_flag("--exact", cfg.exact, "Exact checks instead of modular screening");
        sub->add_option("--threads", cfg.threads, "Worker threads, 0 = OpenMP default (env NILORB_THREADS)");
        sub->add_option("--max-terms", cfg.max_terms, "Term budget for symbolic rank computations");
    };

    auto* roots = app.add_subcommand("roots", "List the positive roots");
    common(roots, false);
    auto* orbits = app.add_subcommand("orbits", "Enumerate nilpotent orbits");
    common(orbits, true);
    auto* rep = app.add_subcommand("rep", "Representative and sl2-triple for one diagram");
    common(rep, true);
    std::string diagram_text, subsystem;
    bool gap_order = false;
    rep->add_option("diagram", diagram_text, "Comma-separated labels in display order, e.g. 0,1");
    rep->add_option("--subsystem", subsystem, "Take the orbit of a subsystem label such as A5+A2+A1");
    rep->add_flag("--gap-order", gap_order, "Diagram labels are in GAP simple-root order");
    auto* index = app.add_subcommand("index", "Certify ind C_g(e) = rank(g) for every orbit");
    common(index, true);
    std::string out_file;
    index->add_option("--out", out_file, "Also write the JSON certificates to this file");
    auto* doublecen = app.add_subcommand("doublecen", "Minimal dimension of C_e,x for every orbit");
    common(doublecen, true);
    std::optional<int> degree;
    doublecen->add_option("--degree", degree, "Restrict x to the ad h eigenvalue-k part of C_e");
    doublecen->add_option("--out", out_file, "Also write the JSON table to this file");
    auto* recheck_cmd = app.add_subcommand("recheck", "Re-verify a JSON certificate file");
    std::string recheck_arg;
    recheck_cmd->add_option("file", recheck_arg, "File written by orbits, rep, index or doublecen --json")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << '\n';
        return kUsage;
    }

#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
    cfg.resolved_seed = cfg.seed ? *cfg.seed : entropy_seed();

    try {
        if (!recheck_file.empty()) return cmd_recheck(recheck_file, out);
        if (recheck_cmd->parsed()) return cmd_recheck(recheck_arg, out);
        if (roots->parsed()) return cmd_roots(cfg, out);
        if (orbits->parsed()) return cmd_orbits(cfg, out);
        if (rep->parsed()) {
            if (diagram_text.empty() == subsystem.empty()) throw InputError("give either a diagram or --subsystem");
            return cmd_rep(cfg, diagram_text, subsystem, gap_order, out, err);
        }
        if (index->parsed()) return cmd_index(cfg, out_file, out);
        if (doublecen->parsed()) return cmd_doublecen(cfg, degree, out_file, out, err);
        out << app.help();
        return kUsage;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const ResourceLimitError& ex) {
        err << "budget exceeded: " << ex.what() << '\n';
        return kBudget;
    } catch (const NotFoundError& ex) {
        err << "not found: " << ex.what() << '\n';
        return kInconclusive;
    }
}

}  // namespace nilorb::cli
