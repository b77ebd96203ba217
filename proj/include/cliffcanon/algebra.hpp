#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffcanon/matrix.hpp"

namespace cliffcanon {

// Signature (r,s) of Cl(r,s): r generators square to -1, s square to +1.
struct Signature {
    unsigned r = 0;
    unsigned s = 0;

    unsigned n() const { return r + s; }
    bool operator==(const Signature&) const = default;
};

enum class Field { R, C, H };

std::string to_string(Field f);

// Real dimension of the field as an R-algebra: 1, 2 or 4.
unsigned field_real_dim(Field f);

// Cl(r,s) as a matrix algebra: K(2^block_log2), doubled when
// is_direct_sum is set.
struct AlgebraType {
    Field field = Field::R;
    unsigned block_log2 = 0;
    bool is_direct_sum = false;

    bool operator==(const AlgebraType&) const = default;
};

AlgebraType classify(Signature sig);

// Real, complex or quaternionic type from (s - r) mod 8.
Field rep_type(Signature sig);

// Real dimension of the irreducible representation of Cl(r,s).
std::size_t irreducible_dim(Signature sig);

// Radon-Hurwitz number: write N = (2a+1) * 2^(4d+c) with c in 0..3,
// then k(N) = 8d + 2^c - 1.
unsigned radon_hurwitz(std::size_t n);

// Sign of omega^2 for the volume element omega = e_1 ... e_{r+s}:
// (-1)^(n(n+1)/2 + s).
int volume_square(Signature sig);

// omega is central exactly when n = r + s is odd.
bool volume_is_central(Signature sig);

// A signed product of distinct generators, indices 1-based and strictly
// increasing.  All reorderings are absorbed into the sign.
struct GeneratorWord {
    std::vector<unsigned> indices;
    int sign = 1;

    GeneratorWord() = default;
    GeneratorWord(std::vector<unsigned> idx, int sgn = 1);

    unsigned order() const { return static_cast<unsigned>(indices.size()); }
    bool operator==(const GeneratorWord&) const = default;
};

// sign * product of the indexed generator matrices, evaluated left to
// right in stored index order.
Matrix word_product(const std::vector<Matrix>& generators, const GeneratorWord& w);

// Sign c with u*v = c * v*u for words of anticommuting generators whose
// common factor has order a: with orders a+b and a+c the sign is
// (-1)^(ab+ac+bc).
int commutation_sign(const GeneratorWord& u, const GeneratorWord& v);

} // namespace cliffcanon
