#pragma once

#include <vector>

#include "cliffcanon/algebra.hpp"
#include "cliffcanon/matrix.hpp"

namespace cliffcanon {

// An ordered set of generator matrices for Cl(r,s): the first r square
// to -I, the last s to +I, and all pairs anticommute.
struct Representation {
    Signature sig;
    std::size_t dim = 1;
    std::vector<Matrix> generators;
};

// Largest residual over the defining relations: squares, anticommutators
// and (for r+s >= 2) traces.
double relation_residual(const Representation& rep);

// Canonical representation together with its commutant (the complex or
// quaternionic structure, 0-3 matrices squaring to -I and commuting with
// every generator) and the positive-square complementary generators
// (0-2 matrices anticommuting with every generator).
struct CanonicalPackage {
    Representation rep;
    std::vector<Matrix> commutant;
    std::vector<Matrix> complementary;
    int class_sign = 1;
};

// Canonical construction of Cl(r,s).  For s >= 1 the generators come
// from the half-dimension recursion; for s = 0 they follow the
// Cl(8d) -> Cl(8d+1) -> Cl(8d+3) -> Cl(8d+7) -> Cl(8d+8) chain, with
// the in-between ranks r = 8d + c, c in {2,4,5,6}, taken as the leading
// generators of the next chain algebra at the same dimension.
// class_sign = -1 is accepted only for direct-sum types and negates the
// last generator of the +1 build.
CanonicalPackage build_canonical(Signature sig, int class_sign = 1);

// Complex matrix as a (real, imaginary) pair; just enough arithmetic for
// the complex Clifford construction.
struct ComplexMatrix {
    Matrix re;
    Matrix im;
};

ComplexMatrix cmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix ckron(const ComplexMatrix& a, const ComplexMatrix& b);

// Generators of the complex Clifford algebra Cl_c(n) on C^(2^floor(n/2)):
// all squares -I, pairwise anticommuting.  Built by the two-step tensor
// recursion (sigma x a_j, epsilon x I, i tau x I) from the explicit
// one- and three-generator bases.
std::vector<ComplexMatrix> build_complex(unsigned n);

// Volume element: ordered product of all generators.
Matrix volume(const Representation& rep);

} // namespace cliffcanon
