#pragma once

#include <vector>

#include "cliffcanon/construct.hpp"
#include "cliffcanon/matrix.hpp"

namespace cliffcanon {

// Representation with skew-symmetric / symmetric generators plus the
// upper-triangular factor m of the averaging inner product: the new
// generators are m * A * m^{-1}.
struct SymmetrizeResult {
    Representation rep;
    Matrix m;
};

// Averages the standard inner product over all 2^(r+s) words of
// generators (S = sum over words w of w^T w, accumulated by the
// one-multiply-per-generator recursion S_k = S_{k-1} + A_k^T S_{k-1} A_k),
// factors S = R^T R and conjugates every generator by R.  Afterwards the
// first r generators are skew-symmetric and the last s symmetric.
SymmetrizeResult symmetrize(const Representation& rep, const Tolerance& tol);
SymmetrizeResult symmetrize(const Representation& rep);

// Canonical bases for two anticommuting trace-zero generators:
//   sigma_tau:     B -> sigma x I, C -> tau x I    via [X, C X]
//   epsilon_sigma: A -> epsilon x I, B -> sigma x I via [X, -A X]
//   epsilon_tau:   A -> epsilon x I, B -> tau x I   via (1/sqrt 2)[X+AX, X-AX]
// with X = orth(B + I) in each mode.  A^2 = -I, B^2 = C^2 = +I.
enum class SplitMode { sigma_tau, epsilon_sigma, epsilon_tau };

Matrix split_pair(const Matrix* a, const Matrix& b, const Matrix* c, SplitMode mode, const Tolerance& tol);

// Commuting odd words whose joint +1 eigenspace seeds the canonical
// basis, the free generators whose signed words on that eigenvector
// enumerate the basis, and the expected eigenspace dimension (1, 2 or 4
// for real, complex or quaternionic type).
struct AbelianPlan {
    std::vector<GeneratorWord> mus;
    std::vector<unsigned> free;
    std::size_t expected_fix_dim = 1;
};

// Plan for Cl(r,0), r = 8d+c.  Each 8-block contributes the words
// (1,2,3), (1,4,5), (2,4,6), (1..7) prefixed by the product of all
// earlier blocks, and the free generators (1,2,4,8); the partial block
// contributes up to three more words and the free tail.  c = 3 is
// rejected: those algebras are handled by dropping their dependent last
// generator, which reduces them to c = 2.
AbelianPlan abelian_plan(Signature sig);

// orth of the product of (mu + I) over the plan words: an orthonormal
// basis of the joint +1 eigenspace.  Column count must match the plan.
Matrix common_fixed_space(const Representation& rep, const AbelianPlan& plan, const Tolerance& tol);

// Orthonormal basis columns generated from x by the free generators.
// With three or more free generators the leading block is
// [x, A1 x, A2 x, -A1A2 x, A4 x, -A1A4 x, -A2A4 x, -A1A2A4 x] followed by
// doubling with each remaining free generator in plan order; one or two
// free generators use the minus convention [x, -A1 x (, -A2 x, -A1A2 x)].
Matrix build_basis(const Representation& rep, const std::vector<double>& x, const AbelianPlan& plan,
                   const Tolerance& tol);

struct CanonicalizeResult {
    Representation rep_t;  // canonical form, conjugated by p
    Matrix p;              // orthogonal change of basis for the symmetrized input
    Matrix m;              // symmetrizing factor (identity-scaled when input was already symmetric)
    int class_sign = 1;    // +1 unless the algebra is a direct sum
};

// Full transform: symmetrize, verify relations, then either peel
// (epsilon x I, tau x I) pairs for s >= 1 or run the abelian-subalgebra
// construction for s = 0.  The output generators depend only on the
// representation class, never on the basis the input arrived in.
CanonicalizeResult canonicalize(const Representation& rep, const Tolerance& tol);
CanonicalizeResult canonicalize(const Representation& rep);

// s >= 1 lane on an already symmetrized representation.
CanonicalizeResult canonicalize_rs(const Representation& rep, const Tolerance& tol);

// q = p2 * p1^{-1} for two change-of-basis matrices producing the same
// canonical form; q must commute with every generator of rep_t.
Matrix commutant_quotient(const Matrix& p1, const Matrix& p2, const Representation& rep_t, const Tolerance& tol);

} // namespace cliffcanon
