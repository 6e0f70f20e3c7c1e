// algcalc: batch front end for the exact computer-algebra headers.
//
// Subcommands
//   check-algebra <file>                 associativity/unit verdict, center,
//                                        derivation and inner-derivation dims
//   cohomology <file> [--module ...]     Chevalley-Eilenberg Betti table
//   matrix-geometry <n|file> [...]       Maurer-Cartan residuals, torsion and
//                                        curvature tables for a connection
//   hopf check|qybe|pairing|uq [...]     Hopf-algebra law suites
//
// Exit codes: 0 all checks pass; 1 a mathematical check failed (or an
// algebraic invariant was violated); 2 file/flag parse error.
//
// Reports are deterministic byte-for-byte for identical inputs and flags;
// randomized spot checks derive from --seed (default fixed) and the seed is
// embedded in every report.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <algcalc/algebra.hpp>
#include <algcalc/combinat.hpp>
#include <algcalc/connections.hpp>
#include <algcalc/hopf.hpp>
#include <algcalc/json_io.hpp>
#include <algcalc/lie.hpp>
#include <algcalc/matrix_geometry.hpp>
#include <algcalc/report.hpp>
#include <algcalc/rng.hpp>
#include <algcalc/uqbplus.hpp>

namespace {

using namespace algcalc;

std::string base_name(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

Json load_instance(const std::string& path) {
    return load_json_file(resolve_data_path(path));
}

// ------------------------------------------------------------ check-algebra

Report cmd_check_algebra(const std::string& path, unsigned long seed) {
    Json j = load_instance(path);
    FDAlgebra alg = algebra_from_json(j);  // validates associativity + unit
    Report rep;
    rep.command = "check-algebra " + base_name(path);
    rep.instance = alg.label();
    rep.detail = "associative algebra of dimension " + std::to_string(alg.dim());
    rep.seed = seed;

    auto& structure = rep.add_section("structure");
    rep.add_check(structure, "associativity on all basis triples", true);
    rep.add_check(structure, "two-sided unit", true);
    rep.add_info(structure, "commutative", alg.is_commutative() ? "yes" : "no");
    rep.add_info(structure, "center dimension",
                 std::to_string(alg.center().dim()));
    const auto ders = alg.derivations();
    rep.add_info(structure, "derivation dimension", std::to_string(ders.size()));
    std::vector<Vec> inner;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        inner.push_back(alg.inner_derivation(alg.basis_element(i)).vectorize());
    const std::size_t inner_dim =
        Subspace::span(inner, alg.dim() * alg.dim()).dim();
    rep.add_info(structure, "inner derivation dimension",
                 std::to_string(inner_dim));
    return rep;
}

// --------------------------------------------------------------- cohomology

Report cmd_cohomology(const std::string& path, const std::string& module,
                      long max_degree, bool representatives,
                      unsigned long seed) {
    Json j = load_instance(path);
    LieAlgebra g = lie_from_json(j);  // validates antisymmetry + Jacobi
    if (module != "trivial" && module != "adjoint")
        throw IOError("--module must be 'trivial' or 'adjoint'");
    const unsigned kmax = max_degree < 0
                              ? static_cast<unsigned>(g.dim())
                              : static_cast<unsigned>(max_degree);

    Report rep;
    rep.command = "cohomology " + base_name(path) + " --module " + module +
                  " --max-degree " + std::to_string(kmax);
    rep.instance = g.label();
    rep.detail = "Lie algebra of dimension " + std::to_string(g.dim());
    rep.seed = seed;

    Representation trivial = Representation::trivial(g, 1);
    Representation adjoint_rep =
        module == "adjoint" ? Representation::adjoint(g)
                            : Representation::trivial(g, 1);
    const Representation& rep_used = module == "adjoint" ? adjoint_rep : trivial;

    auto table = betti_table(rep_used, kmax, representatives);
    auto& sec = rep.add_section("chevalley-eilenberg cohomology");
    rep.add_info(sec, "coefficients", module);
    std::string betti_line;
    for (const auto& e : table) {
        if (!betti_line.empty()) betti_line += " ";
        betti_line += std::to_string(e.betti);
    }
    rep.add_info(sec, "betti table", betti_line);
    for (const auto& e : table) {
        rep.add_info(sec,
                     "H^" + std::to_string(e.degree),
                     std::to_string(e.betti) + "  (cochains " +
                         std::to_string(e.cochain_dim) + ", cocycles " +
                         std::to_string(e.kernel_dim) + ", coboundaries " +
                         std::to_string(e.image_prev_dim) + ")");
    }
    if (representatives) {
        auto& rsec = rep.add_section("representative cocycles");
        const std::size_t md = rep_used.module_dim();
        for (const auto& e : table) {
            auto tuples = increasing_tuples(static_cast<int>(g.dim()),
                                            static_cast<int>(e.degree));
            for (std::size_t ri = 0; ri < e.representatives.size(); ++ri) {
                Vec v = e.representatives[ri].vectorize();
                std::string desc;
                for (std::size_t t = 0; t < tuples.size(); ++t)
                    for (std::size_t m = 0; m < md; ++m) {
                        const Scalar& c = v[t * md + m];
                        if (c.is_zero()) continue;
                        if (!desc.empty()) desc += " + ";
                        desc += "(" + c.str() + ")*theta{";
                        for (std::size_t x = 0; x < tuples[t].size(); ++x) {
                            if (x) desc += ",";
                            desc += std::to_string(tuples[t][x] + 1);
                        }
                        desc += "}";
                        if (md > 1) desc += "*m" + std::to_string(m + 1);
                    }
                if (desc.empty()) desc = "1";
                rep.add_info(rsec,
                             "H^" + std::to_string(e.degree) + " generator " +
                                 std::to_string(ri + 1),
                             desc);
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------- matrix-geometry

std::string idx1(std::size_t i) { return std::to_string(i + 1); }

Report cmd_matrix_geometry(const std::string& target,
                           const std::string& connection, unsigned long seed) {
    // target: "2", "3", or a matrix-basis file
    std::unique_ptr<MatrixGeometry> geo;
    std::string target_echo;
    if (target == "2") {
        geo = std::make_unique<MatrixGeometry>(MatrixGeometry::su2());
        target_echo = "2";
    } else if (target == "3") {
        geo = std::make_unique<MatrixGeometry>(MatrixGeometry::su3());
        target_echo = "3";
    } else if (target.find_first_not_of("0123456789") == std::string::npos) {
        throw IOError("built-in bases exist for n = 2 and n = 3; pass a "
                      "matrix-basis file for other sizes");
    } else {
        geo = std::make_unique<MatrixGeometry>(
            matrix_basis_from_json(load_instance(target)));
        target_echo = base_name(target);
    }
    const std::size_t m = geo->basis_size();

    Report rep;
    rep.command = "matrix-geometry " + target_echo + " --connection " +
                  (connection == "flat" || connection == "torsion-free"
                       ? connection
                       : base_name(connection));
    rep.instance = "m" + std::to_string(geo->n());
    rep.detail = "matrix geometry on M_" + std::to_string(geo->n()) + " with " +
                 std::to_string(m) + " derivations";
    rep.seed = seed;

    auto& calc = rep.add_section("derivation-based calculus");
    bool mc_all = true;
    const auto mc = geo->maurer_cartan_residuals();
    for (std::size_t r = 0; r < m; ++r)
        if (!mc[r].is_zero()) mc_all = false;
    rep.add_check(calc, "maurer-cartan equations for theta^r", mc_all);
    bool deps_all = true;
    for (std::size_t r = 0; r < m; ++r)
        if (!geo->d_eps_residual(r).is_zero()) deps_all = false;
    rep.add_check(calc, "structure equation for d eps_r", deps_all);
    Rng rng(seed);
    bool da_all = true;
    for (int t = 0; t < 20; ++t) {
        Vec a = rng.vec(geo->algebra().dim());
        if (!geo->da_residual(a).is_zero()) da_all = false;
    }
    rep.add_check(calc, "da = a theta - theta a on 20 seeded elements", da_all);

    // connection: named choice or coefficient file
    std::unique_ptr<LinearConnectionMn> conn;
    if (connection == "flat") {
        conn = std::make_unique<LinearConnectionMn>(LinearConnectionMn::flat(*geo));
    } else if (connection == "torsion-free") {
        conn = std::make_unique<LinearConnectionMn>(
            LinearConnectionMn::torsion_free(*geo));
    } else {
        auto [label, omega] = connection_from_json(load_instance(connection));
        if (omega.size() != m)
            throw IOError("connection file is for " +
                          std::to_string(omega.size()) +
                          " derivations, geometry has " + std::to_string(m));
        conn = std::make_unique<LinearConnectionMn>(*geo, std::move(omega));
    }

    constexpr std::size_t kMaxRows = 64;
    auto& tor = rep.add_section("torsion");
    const auto t = mn_torsion(*conn);
    std::size_t tnz = 0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t q = 0; q < m; ++q) {
                if (t[p][r][q].is_zero()) continue;
                ++tnz;
                if (tnz <= kMaxRows)
                    rep.add_info(tor,
                                 "T^" + idx1(p) + "(u" + idx1(r) + ",u" + idx1(q) + ")",
                                 t[p][r][q].str());
            }
    if (tnz > kMaxRows)
        rep.add_info(tor, "further entries",
                     std::to_string(tnz - kMaxRows) + " more omitted");
    rep.add_info(tor, "nonzero entries",
                 std::to_string(tnz) + " of " + std::to_string(m * m * m));
    rep.add_info(tor, "torsion vanishes", tnz == 0 ? "yes" : "no");

    auto& cur = rep.add_section("curvature");
    const auto rr = mn_curvature(*conn);
    std::size_t rnz = 0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t s = 0; s < m; ++s) {
                    if (rr[p][r][q][s].is_zero()) continue;
                    ++rnz;
                    if (rnz <= kMaxRows)
                        rep.add_info(cur,
                                     "R(u" + idx1(r) + ",u" + idx1(q) + ")^" +
                                         idx1(p) + "_" + idx1(s),
                                     rr[p][r][q][s].str());
                }
    if (rnz > kMaxRows)
        rep.add_info(cur, "further entries",
                     std::to_string(rnz - kMaxRows) + " more omitted");
    rep.add_info(cur, "nonzero entries",
                 std::to_string(rnz) + " of " + std::to_string(m * m * m * m));
    rep.add_info(cur, "curvature vanishes", rnz == 0 ? "yes" : "no");
    return rep;
}

// ----------------------------------------------------------------- hopf ...

HopfAlgebra hopf_from_file(const std::string& path) {
    return hopf_from_json(load_instance(path));
}

Report cmd_hopf_check(const std::string& path, unsigned long seed) {
    HopfAlgebra h = hopf_from_file(path);
    Report rep;
    rep.command = "hopf check " + base_name(path);
    rep.instance = h.algebra().label();
    rep.detail = "Hopf algebra of dimension " + std::to_string(h.dim());
    rep.seed = seed;
    auto& laws = rep.add_section("hopf laws");
    rep.add_checks(laws, verify_hopf(h));
    auto& props = rep.add_section("properties");
    rep.add_info(props, "cocommutative", h.cocommutative() ? "yes" : "no");
    const bool s2 = h.antipode() * h.antipode() ==
                    ExactMatrix::identity(h.dim());
    rep.add_info(props, "antipode squared is the identity", s2 ? "yes" : "no");
    return rep;
}

Report cmd_hopf_qybe(const std::string& path, const std::string& rmat,
                     unsigned long seed) {
    HopfAlgebra h = hopf_from_file(path);
    Report rep;
    rep.command = "hopf qybe " + base_name(path) + " --r " +
                  (rmat == "identity" ? rmat : base_name(rmat));
    rep.instance = h.algebra().label();
    rep.detail = "Hopf algebra of dimension " + std::to_string(h.dim());
    rep.seed = seed;
    std::string rlabel = "1 (x) 1";
    std::unique_ptr<RMatrix> r;
    if (rmat == "identity") {
        r = std::make_unique<RMatrix>(RMatrix::identity(h));
    } else {
        auto [label, value] = rmatrix_from_json(load_instance(rmat));
        if (value.size() != h.dim() * h.dim())
            throw IOError("r-matrix file dimension does not match the algebra");
        rlabel = label;
        r = std::make_unique<RMatrix>(h, std::move(value));  // throws Error if
                                                             // not invertible
    }
    auto& sec = rep.add_section("quantum yang-baxter");
    rep.add_info(sec, "r-matrix", rlabel);
    rep.add_checks(sec, qybe_check(h, *r));
    return rep;
}

Report cmd_hopf_pairing(const std::string& path_a, const std::string& path_b,
                        unsigned long seed) {
    HopfAlgebra ha = hopf_from_file(path_a);
    HopfAlgebra hb = hopf_from_file(path_b);
    Report rep;
    rep.command =
        "hopf pairing " + base_name(path_a) + " " + base_name(path_b);
    rep.instance = ha.algebra().label() + " / " + hb.algebra().label();
    rep.detail = "evaluation pairing <e_i, f_j> = delta_ij";
    rep.seed = seed;
    if (ha.dim() != hb.dim())
        throw IOError("the two Hopf algebras must have equal dimension for "
                      "the evaluation pairing");
    ExactMatrix pm = ExactMatrix::identity(ha.dim());
    auto& sec = rep.add_section("dual pairing");
    rep.add_checks(sec, dual_pairing_check(ha, hb, pm));
    return rep;
}

Report cmd_hopf_uq(const std::string& q_str, long cap, unsigned long seed) {
    Scalar q = Scalar::parse(q_str);
    UqBPlus uq(q, cap);  // throws Error for q = 0 or cap < 1
    Report rep;
    rep.command = "hopf uq --q " + q_str + " --cap " + std::to_string(cap);
    rep.instance = "uq-bplus";
    rep.detail = "q-deformed plane with group-like g, primitive-type a; q = " +
                 q.str();
    rep.seed = seed;
    CheckReport laws = uq.verify();
    auto& sec = rep.add_section("defining relations and co-operations");
    rep.add_info(sec, "scope", laws.context);
    rep.add_checks(sec, laws);
    CheckReport pairing = uq.pairing_check();
    auto& psec = rep.add_section("self-pairing");
    rep.add_info(psec, "scope", pairing.context);
    rep.add_checks(psec, pairing);
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algcalc: exact checks for finite-dimensional algebras,\n"
                 "Lie-algebra cohomology, matrix geometries, and Hopf algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    unsigned long seed = algcalc::kDefaultSeed;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized spot checks")
        ->capture_default_str();
    app.fallthrough();

    std::string algebra_path;
    auto* ca = app.add_subcommand("check-algebra",
                                  "Validate an associative algebra file and "
                                  "report its structure");
    ca->add_option("file", algebra_path, "algebra JSON file")->required();

    std::string lie_path, module = "trivial";
    long max_degree = -1;
    bool representatives = false;
    auto* co = app.add_subcommand(
        "cohomology", "Chevalley-Eilenberg cohomology of a Lie algebra file");
    co->add_option("file", lie_path, "Lie-algebra JSON file")->required();
    co->add_option("--module", module, "Coefficient module: trivial or adjoint")
        ->capture_default_str();
    co->add_option("--max-degree", max_degree,
                   "Highest degree to compute (default: the dimension)");
    co->add_flag("--representatives", representatives,
                 "Also list representative cocycles");

    std::string mg_target, connection = "flat";
    auto* mg = app.add_subcommand(
        "matrix-geometry",
        "Derivation-based calculus on M_n and a linear connection");
    mg->add_option("n", mg_target, "2, 3, or a matrix-basis JSON file")
        ->required();
    mg->add_option("--connection", connection,
                   "flat, torsion-free, or a connection JSON file")
        ->capture_default_str();

    auto* hopf = app.add_subcommand("hopf", "Hopf-algebra law suites");
    hopf->require_subcommand(1);
    std::string hopf_path;
    auto* hc = hopf->add_subcommand("check", "All Hopf axioms on a hopf file");
    hc->add_option("file", hopf_path, "hopf JSON file")->required();
    std::string qybe_path, rmat = "identity";
    auto* hq = hopf->add_subcommand(
        "qybe", "Quantum Yang-Baxter and quasi-triangularity checks");
    hq->add_option("file", qybe_path, "hopf JSON file")->required();
    hq->add_option("--r", rmat, "identity or an rmatrix JSON file")
        ->capture_default_str();
    std::string pair_a, pair_b;
    auto* hp = hopf->add_subcommand(
        "pairing", "Evaluation pairing between two hopf files");
    hp->add_option("file-a", pair_a, "hopf JSON file")->required();
    hp->add_option("file-b", pair_b, "hopf JSON file")->required();
    std::string q_str = "2";
    long cap = 6;
    auto* hu = hopf->add_subcommand(
        "uq", "Presented q-deformed enveloping algebra checks");
    hu->add_option("--q", q_str, "Deformation parameter (exact literal)")
        ->capture_default_str();
    hu->add_option("--cap", cap, "Degree cap for monomial enumeration")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // flag/usage problems are parse errors
    }

    try {
        algcalc::Report rep;
        if (ca->parsed()) {
            rep = cmd_check_algebra(algebra_path, seed);
        } else if (co->parsed()) {
            rep = cmd_cohomology(lie_path, module, max_degree, representatives,
                                 seed);
        } else if (mg->parsed()) {
            rep = cmd_matrix_geometry(mg_target, connection, seed);
        } else if (hopf->parsed()) {
            if (hc->parsed()) rep = cmd_hopf_check(hopf_path, seed);
            else if (hq->parsed()) rep = cmd_hopf_qybe(qybe_path, rmat, seed);
            else if (hp->parsed()) rep = cmd_hopf_pairing(pair_a, pair_b, seed);
            else rep = cmd_hopf_uq(q_str, cap, seed);
        }
        std::cout << rep.render(format);
        return rep.status == 0 ? 0 : 1;
    } catch (const algcalc::IOError& e) {
        std::cerr << "algcalc: parse error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "algcalc: parse error: " << e.what() << "\n";
        return 2;
    } catch (const algcalc::Error& e) {
        std::cerr << "algcalc: invariant failure: " << e.what() << "\n";
        return 1;
    }
}
