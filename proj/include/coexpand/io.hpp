#ifndef COEXPAND_IO_HPP
#define COEXPAND_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "cover.hpp"
#include "errors.hpp"
#include "expansion.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "tu.hpp"

namespace coexpand {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ----- rationals: exact "p/q" strings ---------------------------------------

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw FormatError("expected an integer or a 'p/q' string");
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::runtime_error&) {
            throw FormatError("bad integer literal '" + j.get<std::string>() + "'");
        }
    }
    throw FormatError("expected an integer");
}

inline json to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline IntVec int_vector_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("expected an integer array");
    IntVec v;
    for (const auto& e : j) v.push_back(integer_from_json(e));
    return v;
}

// ----- matrices --------------------------------------------------------------

inline IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw FormatError("matrix JSON needs rows, cols and data");
    std::size_t r = j["rows"].get<std::size_t>(), c = j["cols"].get<std::size_t>();
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != r * c)
        throw FormatError("matrix data has wrong length");
    IntMatrix m(r, c);
    std::size_t t = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t jj = 0; jj < c; ++jj) m(i, jj) = integer_from_json(data[t++]);
    return m;
}

inline json to_json(const IntMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) data.push_back(m(i, j).str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

// Text format ("rows cols" header) or the JSON object, sniffed by first byte.
inline IntMatrix parse_matrix_any(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return matrix_from_json(json::parse(text));
        break;
    }
    return parse_matrix_text(text);
}

inline IntMatrix load_matrix(const std::string& path) {
    try {
        return parse_matrix_any(read_file(path));
    } catch (const json::exception& e) {
        throw FormatError("bad matrix JSON in '" + path + "': " + e.what());
    }
}

// ----- complexes -------------------------------------------------------------

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw FormatError("complex JSON needs a 'facets' array");
    const auto& fj = j["facets"];
    if (!fj.is_array() || fj.empty()) throw FormatError("facets must be a nonempty array");
    std::vector<std::vector<VertexLabel>> facets;
    for (const auto& f : fj) {
        if (!f.is_array() || f.empty()) throw FormatError("each facet must be a nonempty array");
        std::vector<VertexLabel> t;
        for (const auto& v : f) {
            if (v.is_number_integer())
                t.emplace_back(v.get<long long>());
            else if (v.is_string())
                t.emplace_back(v.get<std::string>());
            else
                throw FormatError("vertex labels must be integers or strings");
        }
        facets.push_back(std::move(t));
    }
    return build_complex(facets);
}

inline SimplicialComplex load_complex(const std::string& path) {
    try {
        return complex_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw FormatError("bad complex JSON in '" + path + "': " + e.what());
    }
}

inline json to_json(const SimplicialComplex& X) {
    // emit the maximal simplices; rebuilding from them reproduces the complex
    json facets = json::array();
    for (int k = X.dim(); k >= 0; --k)
        for (const auto& s : X.simplices(k)) {
            bool covered = false;
            if (k < X.dim())
                for (const auto& t : X.simplices(k + 1))
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        covered = true;
                        break;
                    }
            if (covered) continue;
            json f = json::array();
            for (int v : s) {
                const auto& l = X.vertex_label(v);
                if (std::holds_alternative<long long>(l))
                    f.push_back(std::get<long long>(l));
                else
                    f.push_back(std::get<std::string>(l));
            }
            facets.push_back(f);
        }
    json counts = json::array();
    for (int k = 0; k <= X.dim(); ++k) counts.push_back(X.num_simplices(k));
    return json{{"facets", facets}, {"dim", X.dim()}, {"counts", counts}};
}

// ----- voltage assignments ---------------------------------------------------

namespace detail_io {

inline int resolve_label(const SimplicialComplex& X, const json& j) {
    for (std::size_t v = 0; v < X.num_vertices(); ++v) {
        const auto& l = X.vertex_label(v);
        if (j.is_number_integer() && std::holds_alternative<long long>(l) &&
            std::get<long long>(l) == j.get<long long>())
            return static_cast<int>(v);
        if (j.is_string() && std::holds_alternative<std::string>(l) &&
            std::get<std::string>(l) == j.get<std::string>())
            return static_cast<int>(v);
    }
    throw FormatError("unknown vertex label " + j.dump());
}

inline int resolve_label_str(const SimplicialComplex& X, const std::string& s) {
    for (std::size_t v = 0; v < X.num_vertices(); ++v)
        if (label_str(X.vertex_label(v)) == s) return static_cast<int>(v);
    throw FormatError("unknown vertex label '" + s + "'");
}

} // namespace detail_io

/**
 * Voltage file {"degree": d, "tree": [[u,v],...], "voltages": {"u-v": [...]}}
 * with vertex labels resolved against the base complex. A key "v-u" given
 * against the orientation stores the inverse permutation.
 */
inline VoltageAssignment voltage_from_json(const json& j, const SimplicialComplex& X) {
    if (!j.is_object() || !j.contains("degree")) throw FormatError("voltage JSON needs a degree");
    VoltageAssignment va;
    va.degree = j["degree"].get<std::size_t>();
    if (j.contains("tree"))
        for (const auto& e : j["tree"]) {
            if (!e.is_array() || e.size() != 2) throw FormatError("tree edges are pairs");
            int u = detail_io::resolve_label(X, e[0]);
            int v = detail_io::resolve_label(X, e[1]);
            if (u > v) std::swap(u, v);
            va.tree.push_back({u, v});
        }
    if (j.contains("voltages")) {
        if (!j["voltages"].is_object()) throw FormatError("voltages must be an object");
        for (const auto& [key, val] : j["voltages"].items()) {
            // split "u-v" at the dash that makes both halves known labels
            int u = -1, v = -1;
            for (std::size_t p = 1; p + 1 < key.size(); ++p) {
                if (key[p] != '-') continue;
                try {
                    u = detail_io::resolve_label_str(X, key.substr(0, p));
                    v = detail_io::resolve_label_str(X, key.substr(p + 1));
                    break;
                } catch (const FormatError&) {
                    u = v = -1;
                }
            }
            if (u < 0 || v < 0) throw FormatError("cannot resolve voltage edge '" + key + "'");
            std::vector<std::size_t> perm;
            for (const auto& img : val) perm.push_back(img.get<std::size_t>());
            va.set_voltage(u, v, std::move(perm));
        }
    }
    return va;
}

inline VoltageAssignment load_voltage(const std::string& path, const SimplicialComplex& X) {
    try {
        return voltage_from_json(json::parse(read_file(path)), X);
    } catch (const json::exception& e) {
        throw FormatError("bad voltage JSON in '" + path + "': " + e.what());
    }
}

// ----- bounds boxes ----------------------------------------------------------

inline Bound bound_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return Bound::plus_inf();
        if (s == "-inf") return Bound::minus_inf();
        return Bound::at(integer_from_json(j));
    }
    return Bound::at(integer_from_json(j));
}

inline std::vector<Bound> bounds_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("bounds must be arrays");
    std::vector<Bound> out;
    for (const auto& e : j) out.push_back(bound_from_json(e));
    return out;
}

/**
 * BoundsBox JSON {"b": [...], "b_prime": [...], "c": [...], "c_prime": [...]}
 * with "inf"/"-inf" sentinels; the primed keys may also be written "b'"/"c'".
 */
inline BoundsBox bounds_box_from_json(const json& j) {
    auto pick = [&](const char* a, const char* b) -> const json& {
        if (j.contains(a)) return j[a];
        if (j.contains(b)) return j[b];
        throw FormatError(std::string("bounds box needs '") + a + "'");
    };
    BoundsBox box;
    box.var_lo = bounds_from_json(pick("b", "var_lo"));
    box.var_hi = bounds_from_json(pick("b_prime", "b'"));
    box.row_lo = bounds_from_json(pick("c", "row_lo"));
    box.row_hi = bounds_from_json(pick("c_prime", "c'"));
    return box;
}

inline BoundsBox load_bounds_box(const std::string& path) {
    try {
        return bounds_box_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw FormatError("bad bounds JSON in '" + path + "': " + e.what());
    }
}

inline json to_json(const Bound& b) {
    switch (b.kind) {
        case Bound::Kind::neg_inf: return "-inf";
        case Bound::Kind::pos_inf: return "inf";
        default: return b.value.str();
    }
}

// ----- reports ---------------------------------------------------------------

inline json to_json(const Certificate& c) {
    json j;
    switch (c.kind) {
        case Certificate::Kind::lp_dual: j["kind"] = "lp_dual"; break;
        case Certificate::Kind::branch_and_bound: j["kind"] = "branch_and_bound"; break;
        case Certificate::Kind::vertex_enumeration: j["kind"] = "vertex_enumeration"; break;
        case Certificate::Kind::formula: j["kind"] = "formula"; break;
    }
    if (!c.dual.empty()) j["dual"] = to_json(c.dual);
    if (c.count) j["count"] = c.count;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline json to_json(const ExpansionResult& r) {
    json j;
    j["value"] = to_string(r.value);
    j["ring"] = r.ring == Ring::real ? "real" : "integer";
    j["minimizer"] = to_json(r.minimizer);
    if (!r.witness.empty()) j["witness"] = to_json(r.witness);
    j["certificate"] = to_json(r.certificate);
    return j;
}

inline json to_json(const HomologyReport& h) {
    json t = json::array();
    for (const auto& d : h.torsion) t.push_back(d.str());
    return json{{"k", h.k}, {"betti", h.betti}, {"torsion", t}};
}

inline json to_json(const ManifoldReport& r) {
    json j{{"is_pseudomanifold", r.is_pseudomanifold},
           {"is_closed", r.is_closed},
           {"is_orientable", r.is_orientable},
           {"is_connected", r.is_connected},
           {"dim", r.dim}};
    if (r.fundamental_class) {
        json fc = json::object();
        for (const auto& [idx, c] : r.fundamental_class->coeffs)
            fc[std::to_string(idx)] = to_string(c);
        j["fundamental_class"] = fc;
    }
    return j;
}

inline json to_json(const TUReport& r) {
    json j{{"is_tu", r.is_tu},
           {"method", r.method == TUReport::Method::exhaustive ? "exhaustive" : "row_criterion"},
           {"minors_checked", r.minors_checked}};
    if (r.witness) {
        j["witness"] = json{{"rows", r.witness->rows},
                            {"cols", r.witness->cols},
                            {"det", r.witness->det.str()}};
    }
    return j;
}

inline json to_json(const HKReport& r) {
    json verts = json::array();
    for (const auto& v : r.vertices) verts.push_back(to_json(v));
    json j{{"vertex_count", r.vertices.size()},
           {"all_integral", r.all_integral},
           {"vertices", verts}};
    if (r.fractional_witness) j["fractional_witness"] = to_json(*r.fractional_witness);
    return j;
}

} // namespace coexpand

#endif // COEXPAND_IO_HPP
