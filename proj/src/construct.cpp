#include "cliffcanon/construct.hpp"

#include <algorithm>
#include <cmath>

namespace cliffcanon {

namespace {

bool commutes_exactly(const Matrix& a, const Matrix& b, double tol) {
    return (a * b - b * a).max_abs() <= tol;
}

bool anticommutes_exactly(const Matrix& a, const Matrix& b, double tol) {
    return (a * b + b * a).max_abs() <= tol;
}

double square_residual(const Matrix& a, double target) {
    return residual_max(a * a, target * Matrix::identity(a.rows()));
}

// Package for (r,0) built along the Table-2 style chain.
CanonicalPackage build_r0(unsigned r);

CanonicalPackage lift_diagonal(const CanonicalPackage& half) {
    // Cl(r,s) -> Cl(r+1,s+1) on double dimension: old generators and
    // complementary generators tensor with sigma, new pair is
    // (epsilon x I, tau x I), commutant lifts as 1 x J.
    const Matrix s2 = pauli::sigma(), e2 = pauli::epsilon(), t2 = pauli::tau();
    const Matrix id = Matrix::identity(half.rep.dim);
    CanonicalPackage out;
    out.rep.sig = {half.rep.sig.r + 1, half.rep.sig.s + 1};
    out.rep.dim = 2 * half.rep.dim;
    const unsigned hr = half.rep.sig.r, hs = half.rep.sig.s;
    for (unsigned i = 0; i < hr; ++i) out.rep.generators.push_back(kron(s2, half.rep.generators[i]));
    out.rep.generators.push_back(kron(e2, id));
    for (unsigned i = 0; i < hs; ++i) out.rep.generators.push_back(kron(s2, half.rep.generators[hr + i]));
    out.rep.generators.push_back(kron(t2, id));
    for (const auto& j : half.commutant) out.commutant.push_back(kron(Matrix::identity(2), j));
    for (const auto& b : half.complementary) out.complementary.push_back(kron(s2, b));
    return out;
}

CanonicalPackage lift_twisted(const CanonicalPackage& half) {
    // Cl(r,0) -> Cl(0,r+2) on double dimension: the twist turns the
    // negative-square generators a_i into positive-square epsilon x a_i,
    // and appends (sigma x I, tau x I).  Only positive-square
    // complementary generators are representable in the package, and the
    // twist produces none, so they are not propagated here.
    const Matrix s2 = pauli::sigma(), e2 = pauli::epsilon(), t2 = pauli::tau();
    const Matrix id = Matrix::identity(half.rep.dim);
    CanonicalPackage out;
    out.rep.sig = {0, half.rep.sig.r + 2};
    out.rep.dim = 2 * half.rep.dim;
    for (const auto& a : half.rep.generators) out.rep.generators.push_back(kron(e2, a));
    out.rep.generators.push_back(kron(s2, id));
    out.rep.generators.push_back(kron(t2, id));
    for (const auto& j : half.commutant) out.commutant.push_back(kron(Matrix::identity(2), j));
    return out;
}

// Commutant and complementary generators for a truncated chain algebra,
// recomputed from the elements the chain provides: the dropped
// generators, their products, the chain commutant and complementary
// matrices, and dropped-times-commutant products.
void truncation_structure(CanonicalPackage& pkg, const CanonicalPackage& chain, unsigned keep) {
    const double tol = 1e-12;
    std::vector<Matrix> pool;
    const auto& g = chain.rep.generators;
    for (std::size_t i = keep; i < g.size(); ++i) pool.push_back(g[i]);
    for (std::size_t i = keep; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pool.push_back(g[i] * g[j]);
    for (std::size_t i = keep; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            for (std::size_t k = j + 1; k < g.size(); ++k) pool.push_back(g[i] * g[j] * g[k]);
    for (const auto& m : chain.commutant) pool.push_back(m);
    for (const auto& m : chain.complementary) pool.push_back(m);
    for (std::size_t i = keep; i < g.size(); ++i)
        for (const auto& m : chain.commutant) pool.push_back(g[i] * m);

    auto commutes_with_kept = [&](const Matrix& m) {
        for (const auto& k : pkg.rep.generators)
            if (!commutes_exactly(m, k, tol)) return false;
        return true;
    };
    auto anticommutes_with_kept = [&](const Matrix& m) {
        for (const auto& k : pkg.rep.generators)
            if (!anticommutes_exactly(m, k, tol)) return false;
        return true;
    };

    for (const auto& cand : pool) {
        if (pkg.commutant.size() >= 3) break;
        if (square_residual(cand, -1.0) > tol) continue;
        if (!commutes_with_kept(cand)) continue;
        bool ok = true;
        for (const auto& prev : pkg.commutant)
            if (!anticommutes_exactly(cand, prev, tol)) ok = false;
        if (ok) pkg.commutant.push_back(cand);
    }
    for (const auto& cand : pool) {
        if (pkg.complementary.size() >= 2) break;
        if (square_residual(cand, 1.0) > tol) continue;
        if (!anticommutes_with_kept(cand)) continue;
        bool ok = true;
        for (const auto& prev : pkg.complementary)
            if (!anticommutes_exactly(cand, prev, tol)) ok = false;
        if (ok) pkg.complementary.push_back(cand);
    }
}

CanonicalPackage build_r0(unsigned r) {
    const Matrix s2 = pauli::sigma(), e2 = pauli::epsilon(), t2 = pauli::tau();

    if (r == 0) {
        CanonicalPackage pkg;
        pkg.rep.sig = {0, 0};
        pkg.rep.dim = 1;
        pkg.complementary.push_back(Matrix{{1}});
        return pkg;
    }

    const unsigned c = r % 8;
    const unsigned base = r - c; // 8d

    switch (c) {
        case 0: {
            // Cl(8d,0) from Cl(8d-1,0) = Cl(8(d-1)+7,0): one new
            // generator epsilon x I, complementary alpha = tau x I.
            CanonicalPackage prev = build_r0(r - 1);
            CanonicalPackage pkg;
            pkg.rep.sig = {r, 0};
            pkg.rep.dim = 2 * prev.rep.dim;
            const Matrix id = Matrix::identity(prev.rep.dim);
            for (const auto& gi : prev.rep.generators) pkg.rep.generators.push_back(kron(s2, gi));
            pkg.rep.generators.push_back(kron(e2, id));
            pkg.complementary.push_back(kron(t2, id));
            return pkg;
        }
        case 1: {
            // Cl(8d+1,0): complex type; J = epsilon x alpha, two
            // complementary generators tau x I and sigma x alpha.
            CanonicalPackage prev = build_r0(base);
            CanonicalPackage pkg;
            pkg.rep.sig = {r, 0};
            pkg.rep.dim = 2 * prev.rep.dim;
            const Matrix id = Matrix::identity(prev.rep.dim);
            const Matrix& alpha = prev.complementary.at(0);
            for (const auto& gi : prev.rep.generators) pkg.rep.generators.push_back(kron(s2, gi));
            pkg.rep.generators.push_back(kron(e2, id));
            pkg.commutant.push_back(kron(e2, alpha));
            pkg.complementary.push_back(kron(t2, id));
            pkg.complementary.push_back(kron(s2, alpha));
            return pkg;
        }
        case 3: {
            // Cl(8d+3,0): quaternionic type; third new generator is
            // tau x J, commutant (1 x J, epsilon x beta1, epsilon x beta2).
            CanonicalPackage prev = build_r0(base + 1);
            CanonicalPackage pkg;
            pkg.rep.sig = {r, 0};
            pkg.rep.dim = 2 * prev.rep.dim;
            const Matrix id = Matrix::identity(prev.rep.dim);
            const Matrix& jc = prev.commutant.at(0);
            for (const auto& gi : prev.rep.generators) pkg.rep.generators.push_back(kron(s2, gi));
            pkg.rep.generators.push_back(kron(e2, id));
            pkg.rep.generators.push_back(kron(t2, jc));
            pkg.commutant.push_back(kron(Matrix::identity(2), jc));
            pkg.commutant.push_back(kron(e2, prev.complementary.at(0)));
            pkg.commutant.push_back(kron(e2, prev.complementary.at(1)));
            return pkg;
        }
        case 7: {
            // Cl(8d+7,0): real and maximal; new generators epsilon x I
            // and tau x J_k for the three quaternionic structures.
            CanonicalPackage prev = build_r0(base + 3);
            CanonicalPackage pkg;
            pkg.rep.sig = {r, 0};
            pkg.rep.dim = 2 * prev.rep.dim;
            const Matrix id = Matrix::identity(prev.rep.dim);
            for (const auto& gi : prev.rep.generators) pkg.rep.generators.push_back(kron(s2, gi));
            pkg.rep.generators.push_back(kron(e2, id));
            for (const auto& jk : prev.commutant) pkg.rep.generators.push_back(kron(t2, jk));
            return pkg;
        }
        default: {
            // Off-chain rank: leading r generators of the next chain
            // algebra at the same dimension.
            const unsigned next = (c == 2) ? base + 3 : base + 7;
            CanonicalPackage chain = build_r0(next);
            CanonicalPackage pkg;
            pkg.rep.sig = {r, 0};
            pkg.rep.dim = chain.rep.dim;
            pkg.rep.generators.assign(chain.rep.generators.begin(), chain.rep.generators.begin() + r);
            truncation_structure(pkg, chain, r);
            return pkg;
        }
    }
}

} // namespace

double relation_residual(const Representation& rep) {
    double res = 0.0;
    const Matrix id = Matrix::identity(rep.dim);
    const unsigned n = rep.sig.n();
    for (unsigned i = 0; i < n; ++i) {
        const double sq = (i < rep.sig.r) ? -1.0 : 1.0;
        res = std::max(res, residual_max(rep.generators[i] * rep.generators[i], sq * id));
        for (unsigned j = i + 1; j < n; ++j) {
            res = std::max(res, (rep.generators[i] * rep.generators[j] + rep.generators[j] * rep.generators[i]).max_abs());
        }
    }
    if (n >= 2) {
        for (const auto& g : rep.generators) res = std::max(res, std::fabs(g.trace()));
    }
    return res;
}

CanonicalPackage build_canonical(Signature sig, int class_sign) {
    if (class_sign != 1 && class_sign != -1) throw InvalidClassSignError("build_canonical: class sign must be +1 or -1");
    if (class_sign == -1 && !classify(sig).is_direct_sum) {
        throw InvalidClassSignError("build_canonical: class sign -1 requires a direct-sum type");
    }

    CanonicalPackage pkg;
    if (sig.s == 0) {
        pkg = build_r0(sig.r);
    } else if (sig.r >= 1) {
        pkg = lift_diagonal(build_canonical({sig.r - 1, sig.s - 1}, 1));
    } else if (sig.s == 1) {
        pkg.rep.sig = {0, 1};
        pkg.rep.dim = 1;
        pkg.rep.generators.push_back(Matrix{{1}});
    } else {
        pkg = lift_twisted(build_canonical({sig.s - 2, 0}, 1));
    }

    pkg.class_sign = class_sign;
    if (class_sign == -1) {
        Matrix& last = pkg.rep.generators.back();
        last = -last;
    }
    return pkg;
}

ComplexMatrix cmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexMatrix ckron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {kron(a.re, b.re) - kron(a.im, b.im), kron(a.re, b.im) + kron(a.im, b.re)};
}

std::vector<ComplexMatrix> build_complex(unsigned n) {
    const Matrix s2 = pauli::sigma(), e2 = pauli::epsilon(), t2 = pauli::tau();
    const Matrix z2 = Matrix::zero(2, 2);

    if (n == 0) return {};
    if (n == 1) return {{Matrix{{0}}, Matrix{{1}}}};
    if (n == 3) {
        // The 2x2 base: (i tau, epsilon, i sigma).
        return {{z2, t2}, {e2, z2}, {z2, s2}};
    }

    std::vector<ComplexMatrix> prev = build_complex(n - 2);
    const std::size_t half = prev.empty() ? 1 : prev.front().re.rows();
    const Matrix id = Matrix::identity(half);
    std::vector<ComplexMatrix> out;
    for (const auto& a : prev) out.push_back({kron(s2, a.re), kron(s2, a.im)});
    out.push_back({kron(e2, id), Matrix::zero(2 * half, 2 * half)});
    out.push_back({Matrix::zero(2 * half, 2 * half), kron(t2, id)});
    return out;
}

Matrix volume(const Representation& rep) {
    Matrix v = Matrix::identity(rep.dim);
    for (const auto& g : rep.generators) v = v * g;
    return v;
}

} // namespace cliffcanon
