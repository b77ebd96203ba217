#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffcanon/canonicalize.hpp"
#include "cliffcanon/harness.hpp"

namespace {

using namespace cliffcanon;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitReducible = 2;
constexpr int kExitRelation = 3;
constexpr int kExitParse = 4;

std::optional<double> env_atol() {
    const char* v = std::getenv("CLIFFCANON_ATOL");
    if (v == nullptr || *v == '\0') return std::nullopt;
    char* end = nullptr;
    const double x = std::strtod(v, &end);
    if (end == v || !(x > 0.0)) {
        throw Error("CLIFFCANON_ATOL: expected a positive number");
    }
    return x;
}

Tolerance tolerance_for(std::size_t dim, std::optional<double> atol_override) {
    if (atol_override) return Tolerance(*atol_override, 1e-10);
    if (auto e = env_atol()) return Tolerance(*e, 1e-10);
    return default_tolerance(dim);
}

// Overridden tolerances govern acceptance thresholds; the factorizations
// inside a transform still need machine-level cutoffs, so loosening is
// capped at the default there.
Tolerance numeric_tolerance(std::size_t dim, const Tolerance& user) {
    const double cap = default_tolerance(dim).atol;
    return Tolerance(std::min(user.atol, cap), user.rank_rtol);
}

int parse_class_sign(const std::string& text) {
    if (text == "+1" || text == "1") return 1;
    if (text == "-1") return -1;
    throw Error("--class-sign: expected +1 or -1");
}

void matrix_to_json_rows(nlohmann::json& out, const Matrix& m) {
    out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
}

int cmd_classify(unsigned r, unsigned s) {
    const Signature sig{r, s};
    const AlgebraType t = classify(sig);
    const std::size_t n = irreducible_dim(sig);
    std::cout << "field: " << to_string(t.field) << "\n";
    std::cout << "block_size: " << (std::size_t{1} << t.block_log2) << "\n";
    std::cout << "direct_sum: " << (t.is_direct_sum ? "true" : "false") << "\n";
    std::cout << "irreducible_dim: " << n << "\n";

    const unsigned k = radon_hurwitz(n);
    unsigned max_r = 0;
    for (unsigned rr = 0; rr <= k + 9; ++rr) {
        if (irreducible_dim({rr, 0}) <= n) max_r = rr;
    }
    std::cout << "radon_hurwitz: k(" << n << ")=" << k << ", max r with irreducible_dim(r,0) <= " << n << " is "
              << max_r << ": " << (max_r == k ? "consistent" : "INCONSISTENT") << "\n";
    return kExitOk;
}

int cmd_build(unsigned r, unsigned s, const std::string& class_sign_text, const std::string& out) {
    const int class_sign = parse_class_sign(class_sign_text);
    const CanonicalPackage pkg = build_canonical({r, s}, class_sign);
    RepFile f = RepFile::from_package(pkg);
    f.metadata["source"] = "build";
    write_rep_file(f, out);
    return kExitOk;
}

int cmd_scramble(const std::string& in, std::uint64_t seed, bool invertible, double cond, const std::string& out) {
    RepFile f = read_rep_file(in);
    const Representation rep = f.to_representation();
    const Representation scrambled = invertible ? scramble_invertible(rep, seed, cond) : scramble(rep, seed);
    RepFile g = RepFile::from_representation(scrambled);
    g.class_sign = f.class_sign;
    g.metadata = f.metadata;
    g.metadata["seed"] = std::to_string(seed);
    g.metadata["scramble"] = invertible ? "invertible" : "orthogonal";
    write_rep_file(g, out);
    return kExitOk;
}

int cmd_canonicalize(const std::string& in, const std::string& out, const std::string& p_out,
                     std::optional<double> atol) {
    RepFile f = read_rep_file(in);
    const Representation rep = f.to_representation();
    const Tolerance tol = numeric_tolerance(rep.dim, tolerance_for(rep.dim, atol));
    const CanonicalizeResult res = canonicalize(rep, tol);

    RepFile g = RepFile::from_representation(res.rep_t);
    g.class_sign = res.class_sign;
    g.metadata = f.metadata;
    g.metadata["source"] = "canonicalize";
    write_rep_file(g, out);

    if (!p_out.empty()) {
        nlohmann::json pj;
        matrix_to_json_rows(pj["p"], res.p);
        matrix_to_json_rows(pj["m"], res.m);
        const std::string text = pj.dump(2) + "\n";
        if (p_out == "-") {
            std::cout << text;
        } else {
            std::ofstream outp(p_out);
            if (!outp) throw Error("cannot write '" + p_out + "'");
            outp << text;
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& against, std::optional<double> atol) {
    RepFile f = read_rep_file(in);
    const Representation rep = f.to_representation();
    const Tolerance tol = tolerance_for(rep.dim, atol);
    const VerifyReport report = verify(rep, tol);

    nlohmann::json j = nlohmann::json::parse(to_json(report));
    bool ok = report.pass;

    if (!against.empty()) {
        RepFile f2 = read_rep_file(against);
        const Representation rep2 = f2.to_representation();
        nlohmann::json aj;
        const bool sig_match = rep.sig == rep2.sig && rep.dim == rep2.dim;
        aj["signature_match"] = sig_match;
        bool equivalent = false;
        if (sig_match) {
            const Tolerance ntol = numeric_tolerance(rep.dim, tol);
            const CanonicalizeResult ca = canonicalize(rep, ntol);
            const CanonicalizeResult cb = canonicalize(rep2, ntol);
            aj["class_sign_match"] = ca.class_sign == cb.class_sign;
            double canonical_residual = 0.0;
            for (std::size_t i = 0; i < ca.rep_t.generators.size(); ++i) {
                canonical_residual =
                    std::max(canonical_residual, residual_max(ca.rep_t.generators[i], cb.rep_t.generators[i]));
            }
            aj["canonical_residual"] = canonical_residual;

            // Conjugator P with P^{-1} A P = B, composed from the two
            // transforms: P = m_a^{-1} p_a p_b^T m_b.
            const Matrix p = solve_left_upper(ca.m, ca.p * cb.p.transpose() * cb.m);
            const Matrix pinv = solve_left_upper(cb.m, cb.p * ca.p.transpose() * ca.m);
            double conj_residual = 0.0;
            for (std::size_t i = 0; i < rep.generators.size(); ++i) {
                conj_residual =
                    std::max(conj_residual, residual_max(pinv * rep.generators[i] * p, rep2.generators[i]));
            }
            aj["conjugator_residual"] = conj_residual;
            matrix_to_json_rows(aj["conjugator"], p);
            const double gate = std::max(1e4 * numeric_tolerance(rep.dim, tol).atol, tol.atol);
            equivalent = (ca.class_sign == cb.class_sign) && canonical_residual <= gate && conj_residual <= gate;
        }
        aj["equivalent"] = equivalent;
        j["against"] = std::move(aj);
        ok = ok && equivalent;
    }

    std::cout << j.dump(2) << "\n";
    return ok ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical real representations of Clifford algebras Cl(r,s)"};
    app.require_subcommand(1);

    unsigned r = 0, s = 0;
    std::string class_sign_text = "+1";
    std::string in_path = "-", out_path = "-", p_out_path, against_path;
    std::uint64_t seed = 0;
    bool invertible = false;
    double cond = 100.0;
    double atol_flag = 0.0;
    bool have_atol = false;

    auto* c_classify = app.add_subcommand("classify", "matrix-algebra type of Cl(r,s)");
    c_classify->add_option("r", r, "negative-square generator count")->required();
    c_classify->add_option("s", s, "positive-square generator count")->required();

    auto* c_build = app.add_subcommand("build", "canonical representation of Cl(r,s)");
    c_build->add_option("r", r)->required();
    c_build->add_option("s", s)->required();
    c_build->add_option("--class-sign", class_sign_text, "+1 or -1 (direct-sum types only)");
    c_build->add_option("--out", out_path, "output file, '-' for stdout");

    auto* c_scramble = app.add_subcommand("scramble", "conjugate by a seeded random matrix");
    c_scramble->add_option("in", in_path, "input rep file, defaults to stdin");
    c_scramble->add_option("--seed", seed, "random seed")->required();
    c_scramble->add_flag("--invertible", invertible, "general invertible instead of orthogonal");
    c_scramble->add_option("--cond", cond, "condition number for --invertible");
    c_scramble->add_option("--out", out_path, "output file, '-' for stdout");

    auto* c_canon = app.add_subcommand("canonicalize", "transform to the canonical form");
    c_canon->add_option("in", in_path, "input rep file, defaults to stdin");
    c_canon->add_option("--out", out_path, "canonical rep file, '-' for stdout");
    c_canon->add_option("--p-out", p_out_path, "change-of-basis file");

    auto* c_verify = app.add_subcommand("verify", "residual report as JSON");
    c_verify->add_option("in", in_path, "input rep file, defaults to stdin");
    c_verify->add_option("--against", against_path, "check equivalence with this rep file");
    auto* atol_opt = c_verify->add_option("--atol", atol_flag, "absolute tolerance override");

    CLI11_PARSE(app, argc, argv);
    have_atol = atol_opt->count() > 0;

    try {
        if (c_classify->parsed()) return cmd_classify(r, s);
        if (c_build->parsed()) return cmd_build(r, s, class_sign_text, out_path);
        if (c_scramble->parsed()) return cmd_scramble(in_path, seed, invertible, cond, out_path);
        if (c_canon->parsed()) return cmd_canonicalize(in_path, out_path, p_out_path, std::nullopt);
        if (c_verify->parsed())
            return cmd_verify(in_path, against_path, have_atol ? std::optional<double>(atol_flag) : std::nullopt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ReducibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitReducible;
    } catch (const RelationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelation;
    } catch (const NotSpdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelation;
    } catch (const RankError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelation;
    } catch (const RankMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelation;
    } catch (const NotOrthonormalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRelation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitFail;
}
