#include "cliffcanon/algebra.hpp"

#include <algorithm>

namespace cliffcanon {

std::string to_string(Field f) {
    switch (f) {
        case Field::R: return "R";
        case Field::C: return "C";
        case Field::H: return "H";
    }
    return "?";
}

unsigned field_real_dim(Field f) {
    switch (f) {
        case Field::R: return 1;
        case Field::C: return 2;
        case Field::H: return 4;
    }
    return 0;
}

AlgebraType classify(Signature sig) {
    const unsigned sum = sig.s + sig.r;
    const unsigned diff = (sig.s + 8u * (sig.r / 8u + 1u) - sig.r) % 8u; // (s - r) mod 8
    AlgebraType t;
    switch (diff) {
        case 0:
        case 2:
            t = {Field::R, (sum - 0) / 2, false};
            break;
        case 1:
            t = {Field::R, (sum - 1) / 2, true};
            break;
        case 3:
        case 7:
            t = {Field::C, (sum - 1) / 2, false};
            break;
        case 4:
        case 6:
            t = {Field::H, (sum - 2) / 2, false};
            break;
        case 5:
            t = {Field::H, (sum - 3) / 2, true};
            break;
    }
    return t;
}

Field rep_type(Signature sig) { return classify(sig).field; }

std::size_t irreducible_dim(Signature sig) {
    const AlgebraType t = classify(sig);
    if (t.block_log2 >= 60) throw Error("irreducible_dim: dimension overflows for this signature");
    return static_cast<std::size_t>(field_real_dim(t.field)) << t.block_log2;
}

unsigned radon_hurwitz(std::size_t n) {
    if (n == 0) throw Error("radon_hurwitz: n must be positive");
    unsigned twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    const unsigned d = twos / 4;
    const unsigned c = twos % 4;
    return 8 * d + (1u << c) - 1;
}

int volume_square(Signature sig) {
    const unsigned n = sig.n();
    const unsigned e = n * (n + 1) / 2 + sig.s;
    return (e % 2 == 0) ? 1 : -1;
}

bool volume_is_central(Signature sig) { return sig.n() % 2 == 1; }

GeneratorWord::GeneratorWord(std::vector<unsigned> idx, int sgn) : indices(std::move(idx)), sign(sgn) {
    if (sign != 1 && sign != -1) throw Error("generator word: sign must be +1 or -1");
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        if (indices[i] >= indices[i + 1]) throw Error("generator word: indices must be strictly increasing");
    }
    if (!indices.empty() && indices.front() == 0) throw Error("generator word: indices are 1-based");
}

Matrix word_product(const std::vector<Matrix>& generators, const GeneratorWord& w) {
    if (generators.empty()) throw IndexOutOfRangeError("word_product: no generators");
    const std::size_t n = generators.front().rows();
    Matrix out = Matrix::identity(n);
    for (unsigned idx : w.indices) {
        if (idx == 0 || idx > generators.size()) {
            throw IndexOutOfRangeError("word_product: generator index " + std::to_string(idx) + " out of range");
        }
        out = out * generators[idx - 1];
    }
    if (w.sign < 0) out = -out;
    return out;
}

int commutation_sign(const GeneratorWord& u, const GeneratorWord& v) {
    std::size_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < u.indices.size() && j < v.indices.size()) {
        if (u.indices[i] == v.indices[j]) {
            ++common;
            ++i;
            ++j;
        } else if (u.indices[i] < v.indices[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    const std::size_t a = common;
    const std::size_t b = u.indices.size() - common;
    const std::size_t c = v.indices.size() - common;
    return ((a * b + a * c + b * c) % 2 == 0) ? 1 : -1;
}

} // namespace cliffcanon
