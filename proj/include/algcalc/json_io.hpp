#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>  // single-header JSON library, shipped under vendor/
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "hopf.hpp"
#include "lie.hpp"
#include "matrix_geometry.hpp"

// JSON file formats for the shipped instance library.
//
// Every scalar is serialized as a string in the exact literal format of
// Scalar::str()/Scalar::parse() ("p/q", "p/q+r/s*i", ...), so parsing a
// serialized file reproduces the object exactly.  Each file carries a
// "kind" discriminator:
//
//   algebra      associative algebra by sparse structure constants
//   lie          Lie algebra by sparse bracket constants (rows i < j only)
//   hopf         algebra block + comultiplication/counit/antipode
//   rmatrix      an element of A (x) A as a dim^2 coordinate list
//   matrix-basis anti-Hermitian traceless basis for a matrix geometry
//   connection   linear-connection coefficients omega^p_{rq}
//
// Structural problems in a file raise IOError (exit code 2 in the CLI);
// mathematical invariant failures raised by the constructors (associativity,
// Jacobi, ...) propagate as Error (exit code 1).

namespace algcalc {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------ file plumbing

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IOError("parse error in '" + path + "': " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

/// Resolve an instance path: as given, then under $ALGCALC_DATA, then under
/// the compiled-in default data directory (when defined).
inline std::string resolve_data_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* env = std::getenv("ALGCALC_DATA")) {
        fs::path p = fs::path(env) / path;
        if (fs::exists(p)) return p.string();
    }
#ifdef ALGCALC_DATA_DIR
    {
        fs::path p = fs::path(ALGCALC_DATA_DIR) / path;
        if (fs::exists(p)) return p.string();
    }
#endif
    return path;  // let the open fail with the original name
}

template <typename T>
T json_field(const Json& j, const std::string& key) {
    if (!j.contains(key)) throw IOError("missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw IOError("bad field '" + key + "': " + e.what());
    }
}

inline std::string json_kind(const Json& j) {
    return json_field<std::string>(j, "kind");
}

inline void require_kind(const Json& j, const std::string& kind) {
    std::string k = json_kind(j);
    if (k != kind)
        throw IOError("expected a '" + kind + "' file, found kind '" + k + "'");
}

// ------------------------------------------------------- scalars and vectors

inline Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

inline Vec vec_from_json(const Json& j, std::size_t expect) {
    if (!j.is_array() || j.size() != expect)
        throw IOError("expected a coordinate list of length " +
                      std::to_string(expect));
    Vec v;
    v.reserve(expect);
    for (const auto& e : j) {
        if (!e.is_string()) throw IOError("coordinates must be scalar strings");
        v.push_back(Scalar::parse(e.get<std::string>()));
    }
    return v;
}

namespace detail {

/// Sparse coefficient list [[i, j, k, "c"], ...] for a dim^3 table,
/// ascending (i, j, k), zero entries omitted.
inline Json table_to_json(const std::vector<std::vector<Vec>>& table) {
    Json out = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j)
            for (std::size_t k = 0; k < table[i][j].size(); ++k)
                if (!table[i][j][k].is_zero())
                    out.push_back(Json::array(
                        {i, j, k, table[i][j][k].str()}));
    return out;
}

struct TableEntry {
    std::size_t i, j, k;
    Scalar c;
};

inline std::vector<TableEntry> table_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw IOError("expected a coefficient list");
    std::vector<TableEntry> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4)
            throw IOError("coefficient rows must be [i, j, k, scalar]");
        TableEntry e;
        try {
            e.i = row.at(0).get<std::size_t>();
            e.j = row.at(1).get<std::size_t>();
            e.k = row.at(2).get<std::size_t>();
        } catch (const nlohmann::json::exception& ex) {
            throw IOError(std::string("bad coefficient row: ") + ex.what());
        }
        if (e.i >= dim || e.j >= dim || e.k >= dim)
            throw IOError("coefficient index out of range");
        if (!row.at(3).is_string())
            throw IOError("coefficient values must be scalar strings");
        e.c = Scalar::parse(row.at(3).get<std::string>());
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<std::string> names_from_json(const Json& j, std::size_t dim) {
    auto names = json_field<std::vector<std::string>>(j, "names");
    if (names.size() != dim) throw IOError("'names' must list every basis element");
    return names;
}

}  // namespace detail

// ------------------------------------------------------ associative algebras

inline Json algebra_to_json(const FDAlgebra& alg) {
    const std::size_t n = alg.dim();
    Json j;
    j["kind"] = "algebra";
    j["label"] = alg.label();
    j["dim"] = n;
    j["names"] = alg.names();
    j["unit"] = vec_to_json(alg.unit());
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = alg.basis_product(a, b);
    j["mult"] = detail::table_to_json(table);
    return j;
}

inline FDAlgebra algebra_from_json(const Json& j) {
    require_kind(j, "algebra");
    const auto n = json_field<std::size_t>(j, "dim");
    if (n == 0) throw IOError("'dim' must be positive");
    auto names = detail::names_from_json(j, n);
    Vec unit = vec_from_json(
        j.contains("unit") ? j.at("unit") : throw IOError("missing field 'unit'"),
        n);
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n)));
    for (const auto& e : detail::table_from_json(
             j.contains("mult") ? j.at("mult") : throw IOError("missing field 'mult'"),
             n))
        mult[e.i][e.j][e.k] += e.c;
    return FDAlgebra(n, std::move(names), std::move(unit), std::move(mult),
                     json_field<std::string>(j, "label"));
}

// --------------------------------------------------------------- Lie algebras

inline Json lie_to_json(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Json j;
    j["kind"] = "lie";
    j["label"] = g.label();
    j["dim"] = n;
    j["names"] = g.names();
    // antisymmetry makes the rows with i < j a complete description
    Json br = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = i + 1; jj < n; ++jj)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = g.basis_bracket(i, jj)[k];
                if (!c.is_zero()) br.push_back(Json::array({i, jj, k, c.str()}));
            }
    j["bracket"] = br;
    return j;
}

inline LieAlgebra lie_from_json(const Json& j) {
    require_kind(j, "lie");
    const auto n = json_field<std::size_t>(j, "dim");
    if (n == 0) throw IOError("'dim' must be positive");
    auto names = detail::names_from_json(j, n);
    std::vector<std::vector<Vec>> bracket(n, std::vector<Vec>(n, Vec(n)));
    for (const auto& e : detail::table_from_json(
             j.contains("bracket") ? j.at("bracket")
                                   : throw IOError("missing field 'bracket'"),
             n)) {
        if (e.i >= e.j)
            throw IOError("'bracket' rows must have i < j; the i > j half "
                          "follows by antisymmetry");
        bracket[e.i][e.j][e.k] += e.c;
        bracket[e.j][e.i][e.k] -= e.c;
    }
    return LieAlgebra(n, std::move(names), std::move(bracket),
                      json_field<std::string>(j, "label"));
}

// -------------------------------------------------------------- Hopf algebras

inline Json hopf_to_json(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    Json j;
    j["kind"] = "hopf";
    j["label"] = h.algebra().label();
    Json alg = algebra_to_json(h.algebra());
    alg.erase("kind");
    alg.erase("label");
    j["algebra"] = alg;
    // comul rows [i, a, b, c]: Delta(e_i) has coefficient c on e_a (x) e_b
    Json comul = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = h.delta().at(a * n + b, i);
                if (!c.is_zero()) comul.push_back(Json::array({i, a, b, c.str()}));
            }
    j["comul"] = comul;
    j["counit"] = vec_to_json(h.counit());
    Json anti = Json::array();
    for (std::size_t r = 0; r < n; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < n; ++c) row.push_back(h.antipode().at(r, c).str());
        anti.push_back(row);
    }
    j["antipode"] = anti;
    return j;
}

inline HopfAlgebra hopf_from_json(const Json& j) {
    require_kind(j, "hopf");
    if (!j.contains("algebra")) throw IOError("missing field 'algebra'");
    Json alg_block = j.at("algebra");
    alg_block["kind"] = "algebra";
    alg_block["label"] = json_field<std::string>(j, "label");
    FDAlgebra alg = algebra_from_json(alg_block);
    const std::size_t n = alg.dim();
    ExactMatrix delta(n * n, n);
    for (const auto& e : detail::table_from_json(
             j.contains("comul") ? j.at("comul")
                                 : throw IOError("missing field 'comul'"),
             n))
        delta.at(e.j * n + e.k, e.i) += e.c;
    Vec counit = vec_from_json(
        j.contains("counit") ? j.at("counit")
                             : throw IOError("missing field 'counit'"),
        n);
    if (!j.contains("antipode")) throw IOError("missing field 'antipode'");
    const Json& anti = j.at("antipode");
    if (!anti.is_array() || anti.size() != n)
        throw IOError("'antipode' must be a " + std::to_string(n) + " x " +
                      std::to_string(n) + " matrix of scalar strings");
    ExactMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Vec row = vec_from_json(anti.at(r), n);
        for (std::size_t c = 0; c < n; ++c) s.at(r, c) = row[c];
    }
    return HopfAlgebra(std::move(alg), std::move(delta), std::move(counit),
                       std::move(s));
}

// ------------------------------------------------------------------ R-matrices

inline Json rmatrix_to_json(const std::string& label, const Vec& value,
                            std::size_t dim) {
    if (value.size() != dim * dim)
        throw IOError("r-matrix value must have dim^2 coordinates");
    Json j;
    j["kind"] = "rmatrix";
    j["label"] = label;
    j["dim"] = dim;
    j["value"] = vec_to_json(value);  // coordinate of e_p (x) e_q at p*dim + q
    return j;
}

/// Returns (label, value); the caller checks dim against its Hopf algebra.
inline std::pair<std::string, Vec> rmatrix_from_json(const Json& j) {
    require_kind(j, "rmatrix");
    const auto n = json_field<std::size_t>(j, "dim");
    Vec v = vec_from_json(
        j.contains("value") ? j.at("value") : throw IOError("missing field 'value'"),
        n * n);
    return {json_field<std::string>(j, "label"), std::move(v)};
}

// --------------------------------------------------------- matrix-geometry IO

inline Json matrix_basis_to_json(const MatrixGeometry& geo,
                                 const std::string& label) {
    Json j;
    j["kind"] = "matrix-basis";
    j["label"] = label;
    j["n"] = geo.n();
    Json eps = Json::array();
    for (std::size_t r = 0; r < geo.basis_size(); ++r)
        eps.push_back(vec_to_json(geo.eps(r)));
    j["eps"] = eps;
    return j;
}

inline MatrixGeometry matrix_basis_from_json(const Json& j) {
    require_kind(j, "matrix-basis");
    const auto n = json_field<std::size_t>(j, "n");
    if (n < 2) throw IOError("'n' must be at least 2");
    if (!j.contains("eps")) throw IOError("missing field 'eps'");
    const Json& eps_j = j.at("eps");
    if (!eps_j.is_array() || eps_j.size() != n * n - 1)
        throw IOError("'eps' must list n^2 - 1 matrices");
    std::vector<Vec> eps;
    for (const auto& row : eps_j) eps.push_back(vec_from_json(row, n * n));
    return MatrixGeometry(n, std::move(eps), json_field<std::string>(j, "label"));
}

/// Connection coefficients omega^p_{rq} for a matrix geometry with m
/// independent derivations, sparse rows [p, r, q, "c"].
inline Json connection_to_json(
    const std::string& label,
    const std::vector<std::vector<std::vector<Scalar>>>& omega) {
    Json j;
    j["kind"] = "connection";
    j["label"] = label;
    j["m"] = omega.size();
    Json rows = Json::array();
    for (std::size_t p = 0; p < omega.size(); ++p)
        for (std::size_t r = 0; r < omega[p].size(); ++r)
            for (std::size_t q = 0; q < omega[p][r].size(); ++q)
                if (!omega[p][r][q].is_zero())
                    rows.push_back(Json::array({p, r, q, omega[p][r][q].str()}));
    j["omega"] = rows;
    return j;
}

inline std::pair<std::string, std::vector<std::vector<std::vector<Scalar>>>>
connection_from_json(const Json& j) {
    require_kind(j, "connection");
    const auto m = json_field<std::size_t>(j, "m");
    if (m == 0) throw IOError("'m' must be positive");
    std::vector<std::vector<std::vector<Scalar>>> omega(
        m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
    for (const auto& e : detail::table_from_json(
             j.contains("omega") ? j.at("omega")
                                 : throw IOError("missing field 'omega'"),
             m))
        omega[e.i][e.j][e.k] += e.c;
    return {json_field<std::string>(j, "label"), std::move(omega)};
}

}  // namespace algcalc
