#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffcanon/canonicalize.hpp"
#include "cliffcanon/construct.hpp"

namespace cliffcanon {

// On-disk representation: signature, generators and free-form metadata,
// plus the optional commutant / complementary lists a build emits.
struct RepFile {
    unsigned r = 0;
    unsigned s = 0;
    std::size_t dim = 1;
    std::optional<int> class_sign;
    std::vector<Matrix> generators;
    std::vector<Matrix> commutant;
    std::vector<Matrix> complementary;
    std::map<std::string, std::string> metadata;

    Representation to_representation() const;
    static RepFile from_representation(const Representation& rep);
    static RepFile from_package(const CanonicalPackage& pkg);
};

// JSON round trip; numbers are written with shortest round-trip
// precision, so write-then-read reproduces every double bit for bit.
std::string to_json(const RepFile& file);
RepFile rep_file_from_json(const std::string& text);
RepFile read_rep_file(const std::string& path); // "-" reads stdin
void write_rep_file(const RepFile& file, const std::string& path); // "-" writes stdout

// Residual report over the defining relations.  pass requires relation,
// symmetry and trace residuals all within atol; the volume scalar is
// reported when r+s is odd and the volume element is scalar.
struct VerifyReport {
    double relation_residual = 0.0;
    double symmetry_residual = 0.0;
    double trace_max = 0.0;
    std::optional<double> volume_scalar;
    AlgebraType classified;
    bool pass = false;
};

VerifyReport verify(const Representation& rep, const Tolerance& tol);
VerifyReport verify(const Representation& rep);

std::string to_json(const VerifyReport& report);

// Deterministic stream of uniform and Gaussian doubles from a 64-bit
// seed (splitmix64 + Box-Muller), independent of the platform's
// <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double next_uniform();  // [0, 1)
    double next_gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
// R diagonal signs folded into Q.
Matrix haar_orthogonal(std::size_t n, Rng& rng);

// Conjugate every generator by a seeded Haar orthogonal matrix.
Representation scramble(const Representation& rep, std::uint64_t seed);

// Conjugate by Q1 * diag(s) * Q2^T with singular values spread so the
// condition number is exactly `cond`.
Representation scramble_invertible(const Representation& rep, std::uint64_t seed, double cond);

} // namespace cliffcanon
