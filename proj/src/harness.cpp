#include "cliffcanon/harness.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace cliffcanon {

using nlohmann::json;

Representation RepFile::to_representation() const {
    Representation rep;
    rep.sig = {r, s};
    rep.dim = dim;
    rep.generators = generators;
    return rep;
}

RepFile RepFile::from_representation(const Representation& rep) {
    RepFile f;
    f.r = rep.sig.r;
    f.s = rep.sig.s;
    f.dim = rep.dim;
    f.generators = rep.generators;
    return f;
}

RepFile RepFile::from_package(const CanonicalPackage& pkg) {
    RepFile f = from_representation(pkg.rep);
    f.class_sign = pkg.class_sign;
    f.commutant = pkg.commutant;
    f.complementary = pkg.complementary;
    return f;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& rows, std::size_t dim, const std::string& where) {
    if (!rows.is_array() || rows.size() != dim) {
        throw ParseError("rep file: field '" + where + "': expected an array of " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != dim) {
            throw ParseError("rep file: field '" + where + "[" + std::to_string(i) + "]': expected " +
                             std::to_string(dim) + " numbers");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            const json& v = row[j];
            if (!v.is_number()) {
                throw ParseError("rep file: field '" + where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]': expected a number");
            }
            m(i, j) = v.get<double>();
            if (!std::isfinite(m(i, j))) {
                throw ParseError("rep file: field '" + where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]': entry is not finite");
            }
        }
    }
    return m;
}

std::vector<Matrix> matrix_list_from_json(const json& arr, std::size_t dim, const std::string& where) {
    if (!arr.is_array()) throw ParseError("rep file: field '" + where + "': expected an array of matrices");
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(matrix_from_json(arr[i], dim, where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

unsigned uint_field(const json& j, const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("rep file: field '") + name + "': missing");
    const json& v = j.at(name);
    if (!v.is_number_unsigned()) throw ParseError(std::string("rep file: field '") + name + "': expected a nonnegative integer");
    return v.get<unsigned>();
}

} // namespace

std::string to_json(const RepFile& file) {
    json j;
    j["r"] = file.r;
    j["s"] = file.s;
    j["dim"] = file.dim;
    if (file.class_sign) j["class_sign"] = *file.class_sign;
    json gens = json::array();
    for (const auto& g : file.generators) gens.push_back(matrix_to_json(g));
    j["generators"] = std::move(gens);
    if (!file.commutant.empty()) {
        json c = json::array();
        for (const auto& m : file.commutant) c.push_back(matrix_to_json(m));
        j["commutant"] = std::move(c);
    }
    if (!file.complementary.empty()) {
        json c = json::array();
        for (const auto& m : file.complementary) c.push_back(matrix_to_json(m));
        j["complementary"] = std::move(c);
    }
    if (!file.metadata.empty()) j["metadata"] = file.metadata;
    return j.dump(2) + "\n";
}

RepFile rep_file_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("rep file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("rep file: top level: expected an object");

    RepFile f;
    f.r = uint_field(j, "r");
    f.s = uint_field(j, "s");
    f.dim = uint_field(j, "dim");
    if (f.dim == 0) throw ParseError("rep file: field 'dim': must be at least 1");
    if (j.contains("class_sign")) {
        const json& v = j.at("class_sign");
        if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
            throw ParseError("rep file: field 'class_sign': expected +1 or -1");
        }
        f.class_sign = v.get<int>();
    }
    if (!j.contains("generators")) throw ParseError("rep file: field 'generators': missing");
    f.generators = matrix_list_from_json(j.at("generators"), f.dim, "generators");
    if (f.generators.size() != f.r + f.s) {
        throw ParseError("rep file: field 'generators': expected " + std::to_string(f.r + f.s) + " matrices, got " +
                         std::to_string(f.generators.size()));
    }
    if (j.contains("commutant")) f.commutant = matrix_list_from_json(j.at("commutant"), f.dim, "commutant");
    if (j.contains("complementary"))
        f.complementary = matrix_list_from_json(j.at("complementary"), f.dim, "complementary");
    if (j.contains("metadata")) {
        const json& m = j.at("metadata");
        if (!m.is_object()) throw ParseError("rep file: field 'metadata': expected an object of strings");
        for (auto it = m.begin(); it != m.end(); ++it) {
            if (!it.value().is_string()) {
                throw ParseError("rep file: field 'metadata." + it.key() + "': expected a string");
            }
            f.metadata[it.key()] = it.value().get<std::string>();
        }
    }
    return f;
}

RepFile read_rep_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("rep file: cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return rep_file_from_json(text);
}

void write_rep_file(const RepFile& file, const std::string& path) {
    const std::string text = to_json(file);
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("rep file: cannot write '" + path + "'");
    out << text;
}

VerifyReport verify(const Representation& rep, const Tolerance& tol) {
    VerifyReport rep_out;
    const Matrix id = Matrix::identity(rep.dim);
    const unsigned n = rep.sig.n();
    if (rep.generators.size() != n) throw DimensionMismatchError("verify: generator count does not match signature");

    for (unsigned i = 0; i < n; ++i) {
        const Matrix& g = rep.generators[i];
        const double sq = (i < rep.sig.r) ? -1.0 : 1.0;
        rep_out.relation_residual = std::max(rep_out.relation_residual, residual_max(g * g, sq * id));
        for (unsigned j = i + 1; j < n; ++j) {
            rep_out.relation_residual =
                std::max(rep_out.relation_residual, (g * rep.generators[j] + rep.generators[j] * g).max_abs());
        }
        // Skew for the negative squares, symmetric for the positive.
        rep_out.symmetry_residual = std::max(rep_out.symmetry_residual, residual_max(g.transpose(), sq * g));
        if (n >= 2) rep_out.trace_max = std::max(rep_out.trace_max, std::fabs(g.trace()));
    }

    if (n % 2 == 1) {
        const Matrix v = volume(rep);
        const double v00 = v(0, 0);
        if (residual_max(v, v00 * id) <= tol.atol) rep_out.volume_scalar = v00;
    }

    rep_out.classified = classify(rep.sig);
    rep_out.pass = rep_out.relation_residual <= tol.atol && rep_out.symmetry_residual <= tol.atol &&
                   rep_out.trace_max <= tol.atol;
    return rep_out;
}

VerifyReport verify(const Representation& rep) { return verify(rep, default_tolerance(rep.dim)); }

std::string to_json(const VerifyReport& report) {
    json j;
    j["relation_residual"] = report.relation_residual;
    j["symmetry_residual"] = report.symmetry_residual;
    j["trace_max"] = report.trace_max;
    if (report.volume_scalar) {
        j["volume_scalar"] = *report.volume_scalar;
    } else {
        j["volume_scalar"] = nullptr;
    }
    j["classified"] = {{"field", to_string(report.classified.field)},
                       {"block_log2", report.classified.block_log2},
                       {"is_direct_sum", report.classified.is_direct_sum}};
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::uint64_t Rng::next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = next_uniform();
    } while (u1 <= 0.0);
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Matrix haar_orthogonal(std::size_t n, Rng& rng) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.next_gaussian();
    // Gaussian matrices are full rank almost surely, so plain orth gives
    // all n columns; the positive-diagonal convention it applies is the
    // sign fold that makes the distribution Haar.
    const Matrix q = orth(g, Tolerance(1e-12, 1e-14));
    if (q.cols() != n) throw Error("haar_orthogonal: gaussian sample was rank deficient");
    return q;
}

namespace {

Representation conjugate_all(const Representation& rep, const Matrix& q_inv_left, const Matrix& q_right) {
    Representation out;
    out.sig = rep.sig;
    out.dim = rep.dim;
    for (const auto& g : rep.generators) out.generators.push_back(q_inv_left * g * q_right);
    return out;
}

} // namespace

Representation scramble(const Representation& rep, std::uint64_t seed) {
    Rng rng(seed);
    const Matrix q = haar_orthogonal(rep.dim, rng);
    return conjugate_all(rep, q.transpose(), q);
}

Representation scramble_invertible(const Representation& rep, std::uint64_t seed, double cond) {
    if (cond < 1.0) throw Error("scramble_invertible: condition number must be >= 1");
    Rng rng(seed);
    const std::size_t n = rep.dim;
    const Matrix q1 = haar_orthogonal(n, rng);
    const Matrix q2 = haar_orthogonal(n, rng);

    std::vector<double> sv(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) sv[i] = std::pow(cond, rng.next_uniform());
    if (n >= 2) {
        sv[0] = 1.0;
        sv[n - 1] = cond;
    }

    // M = Q1 diag(sv) Q2^T, M^{-1} = Q2 diag(1/sv) Q1^T.
    Matrix d(n, n), dinv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = sv[i];
        dinv(i, i) = 1.0 / sv[i];
    }
    const Matrix m = q1 * d * q2.transpose();
    const Matrix minv = q2 * dinv * q1.transpose();
    return conjugate_all(rep, minv, m);
}

} // namespace cliffcanon
