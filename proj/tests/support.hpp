#pragma once

#include <vector>

#include "cliffcanon/canonicalize.hpp"
#include "cliffcanon/construct.hpp"
#include "cliffcanon/harness.hpp"

namespace testsupport {

using namespace cliffcanon;

// Reference generators for the canonical form of Cl(3,0):
// A1 = sigma x epsilon, A2 = epsilon x I, A3 = A1 A2.
inline std::vector<Matrix> cl30_reference() {
    const Matrix a1{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    const Matrix a2{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    const Matrix a3{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
    return {a1, a2, a3};
}

// Reference generators for the canonical form of Cl(7,0), as triple
// tensor products of the Pauli matrices.
inline std::vector<Matrix> cl70_reference() {
    const Matrix s = pauli::sigma(), e = pauli::epsilon(), t = pauli::tau();
    const Matrix one = Matrix::identity(2);
    auto k3 = [](const Matrix& a, const Matrix& b, const Matrix& c) { return kron(a, kron(b, c)); };
    return {
        -1.0 * k3(s, s, e), -1.0 * k3(s, e, one), -1.0 * k3(s, t, e), -1.0 * k3(e, one, one),
        -1.0 * k3(t, one, e), -1.0 * k3(t, e, s), -1.0 * k3(t, e, t),
    };
}

// Action of the Cl(7,0) canonical generators on the basis
// (X, A1 X, ..., A7 X): entry [i][j] says A_{i+1} maps basis vector j to
// sign * basis vector idx.
struct SignedIndex {
    int sign;
    int idx;
};

inline const SignedIndex (*cl70_action_table())[8] {
    static const SignedIndex table[7][8] = {
        {{+1, 1}, {-1, 0}, {-1, 3}, {+1, 2}, {-1, 5}, {+1, 4}, {+1, 7}, {-1, 6}},
        {{+1, 2}, {+1, 3}, {-1, 0}, {-1, 1}, {-1, 6}, {-1, 7}, {+1, 4}, {+1, 5}},
        {{+1, 3}, {-1, 2}, {+1, 1}, {-1, 0}, {-1, 7}, {+1, 6}, {-1, 5}, {+1, 4}},
        {{+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}, {-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}},
        {{+1, 5}, {-1, 4}, {+1, 7}, {-1, 6}, {+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
        {{+1, 6}, {-1, 7}, {-1, 4}, {+1, 5}, {+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
        {{+1, 7}, {+1, 6}, {-1, 5}, {-1, 4}, {+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
    };
    return table;
}

inline Representation make_rep(unsigned r, unsigned s, std::vector<Matrix> gens) {
    Representation rep;
    rep.sig = {r, s};
    rep.dim = gens.empty() ? 1 : gens.front().rows();
    rep.generators = std::move(gens);
    return rep;
}

inline double max_generator_residual(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    double res = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) res = std::max(res, residual_max(a[i], b[i]));
    return res;
}

// Random small-integer matrix for exact-arithmetic property tests.
inline Matrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<double>(lo + static_cast<int>(rng.next_u64() % static_cast<unsigned>(hi - lo + 1)));
    return m;
}

} // namespace testsupport
