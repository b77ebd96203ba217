#include "cliffcanon/canonicalize.hpp"

#include <cmath>
#include <cstdlib>

namespace cliffcanon {

namespace {

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* row = a.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

Matrix submatrix(const Matrix& a, std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i0 + i, j0 + j);
    return out;
}

void check_rep_shape(const Representation& rep) {
    if (rep.generators.size() != rep.sig.n()) {
        throw DimensionMismatchError("representation: generator count does not match signature");
    }
    for (const auto& g : rep.generators) {
        if (g.rows() != rep.dim || g.cols() != rep.dim) {
            throw DimensionMismatchError("representation: generator shape does not match dim");
        }
    }
}

// Gate for structural checks on data that has been through a few dense
// products; loose enough for conditioned inputs, still far below any
// genuine relation violation.
double structure_gate(const Tolerance& tol) { return 1e4 * tol.atol; }

// Orthogonal P for the s = 0 lane (signature carried in rep.sig).
Matrix r0_change_of_basis(const Representation& rep, const Tolerance& tol);

// Orthogonal P for any symmetrized representation.
Matrix change_of_basis(const Representation& rep, const Tolerance& tol) {
    const unsigned r = rep.sig.r, s = rep.sig.s;
    const std::size_t n2 = rep.dim;

    if (r + s == 0) return Matrix::identity(n2);
    if (s == 0) return r0_change_of_basis(rep, tol);
    if (r == 0 && s == 1) {
        // Scalar representation, already canonical.
        if (n2 != 1) throw DimensionMismatchError("canonicalize: Cl(0,1) factor must be one dimensional");
        return Matrix::identity(1);
    }

    const std::size_t half = n2 / 2;
    Matrix p1;
    Representation halfrep;
    const double gate = structure_gate(tol);

    if (r >= 1) {
        // Peel (A_r, B_s) to (epsilon x I, tau x I); the rest become
        // sigma x (half-dimension generators) of Cl(r-1, s-1).
        p1 = split_pair(&rep.generators[r - 1], rep.generators[r + s - 1], nullptr, SplitMode::epsilon_tau, tol);
        halfrep.sig = {r - 1, s - 1};
        halfrep.dim = half;
        for (unsigned i = 0; i + 1 < r + s; ++i) {
            if (i == r - 1) continue;
            const Matrix g = conjugate_orthogonal(rep.generators[i], p1);
            if (submatrix(g, 0, half, half, half).max_abs() > gate ||
                submatrix(g, half, 0, half, half).max_abs() > gate ||
                residual_max(submatrix(g, half, half, half, half), -submatrix(g, 0, 0, half, half)) > gate) {
                throw RelationError("canonicalize: generator is not block diagonal after the pair split");
            }
            halfrep.generators.push_back(submatrix(g, 0, 0, half, half));
        }
    } else {
        // s >= 2, r = 0: peel (B_s, B_{s-1}) to (sigma x I, tau x I); the
        // rest become epsilon x a_i with a_i^2 = -I, i.e. Cl(s-2, 0).
        p1 = split_pair(nullptr, rep.generators[s - 1], &rep.generators[s - 2], SplitMode::sigma_tau, tol);
        halfrep.sig = {s - 2, 0};
        halfrep.dim = half;
        for (unsigned i = 0; i + 2 < s; ++i) {
            const Matrix g = conjugate_orthogonal(rep.generators[i], p1);
            if (submatrix(g, 0, 0, half, half).max_abs() > gate ||
                submatrix(g, half, half, half, half).max_abs() > gate ||
                residual_max(submatrix(g, half, 0, half, half), -submatrix(g, 0, half, half, half)) > gate) {
                throw RelationError("canonicalize: generator is not block off-diagonal after the pair split");
            }
            halfrep.generators.push_back(submatrix(g, 0, half, half, half));
        }
    }

    const Matrix ph = change_of_basis(halfrep, tol);
    return p1 * kron(Matrix::identity(2), ph);
}

Matrix r0_change_of_basis(const Representation& rep, const Tolerance& tol) {
    const unsigned r = rep.sig.r;
    if (r == 0) return Matrix::identity(rep.dim);

    const unsigned c = r % 8;
    if (c == 3 || c == 7) {
        // Direct-sum type: the product of all generators is +-I, so the
        // last generator is a word in the others and the basis comes from
        // the leading r-1 alone.
        Representation sub;
        sub.sig = {r - 1, 0};
        sub.dim = rep.dim;
        sub.generators.assign(rep.generators.begin(), rep.generators.end() - 1);
        return r0_change_of_basis(sub, tol);
    }

    const AbelianPlan plan = abelian_plan(rep.sig);
    const Matrix fixed = common_fixed_space(rep, plan, tol);
    return build_basis(rep, fixed.col(0), plan, tol);
}

// Volume scalar of a representation whose volume element is central:
// the v with volume = v * I.
double volume_scalar(const Representation& rep, const Tolerance& tol) {
    const Matrix v = volume(rep);
    const double v00 = v(0, 0);
    if (residual_max(v, v00 * Matrix::identity(rep.dim)) > structure_gate(tol) || std::fabs(std::fabs(v00) - 1.0) > structure_gate(tol)) {
        throw RelationError("canonicalize: volume element is not +-identity");
    }
    return v00;
}

} // namespace

SymmetrizeResult symmetrize(const Representation& rep, const Tolerance& tol) {
    check_rep_shape(rep);
    SymmetrizeResult out;
    out.rep = rep;
    out.m = Matrix::identity(rep.dim);

    // A second pass refines the factorization: the averaged sum of an
    // already averaged representation is 2^n * I, so the pass is a
    // perfectly conditioned correction and the composed factor still
    // satisfies m^T m = S for the original input.
    const double word_scale = std::pow(2.0, -static_cast<double>(rep.sig.n()));
    for (int pass = 0; pass < 2; ++pass) {
        Matrix s = Matrix::identity(rep.dim);
        for (const auto& g : out.rep.generators) s = s + g.transpose() * s * g;
        s = 0.5 * (s + s.transpose());
        if (pass > 0) s = word_scale * s;
        const Matrix r = spd_factor(s, Tolerance(tol.atol * (1.0 + s.max_abs()), tol.rank_rtol));
        for (auto& g : out.rep.generators) g = solve_right_upper(r * g, r);
        out.m = r * out.m;
    }
    return out;
}

SymmetrizeResult symmetrize(const Representation& rep) { return symmetrize(rep, default_tolerance(rep.dim)); }

Matrix split_pair(const Matrix* a, const Matrix& b, const Matrix* c, SplitMode mode, const Tolerance& tol) {
    const std::size_t n = b.rows();
    if (n % 2 != 0) throw RankError("split_pair: odd dimension");
    const Matrix x = orth(b + Matrix::identity(n), tol);
    if (x.cols() != n / 2) {
        throw RankError("split_pair: orth(B + I) has rank " + std::to_string(x.cols()) + ", expected " +
                        std::to_string(n / 2));
    }
    switch (mode) {
        case SplitMode::sigma_tau: {
            if (c == nullptr) throw Error("split_pair: sigma_tau mode needs C");
            return hcat({x, (*c) * x});
        }
        case SplitMode::epsilon_sigma: {
            if (a == nullptr) throw Error("split_pair: epsilon_sigma mode needs A");
            return hcat({x, -((*a) * x)});
        }
        case SplitMode::epsilon_tau: {
            if (a == nullptr) throw Error("split_pair: epsilon_tau mode needs A");
            const Matrix ax = (*a) * x;
            const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            return hcat({inv_sqrt2 * (x + ax), inv_sqrt2 * (x - ax)});
        }
    }
    throw Error("split_pair: unknown mode");
}

AbelianPlan abelian_plan(Signature sig) {
    if (sig.s != 0) throw UnsupportedCError("abelian_plan: defined for Cl(r,0) only");
    const unsigned r = sig.r;
    const unsigned c = r % 8;
    const unsigned d = r / 8;
    if (c == 3) throw UnsupportedCError("abelian_plan: c = 3 is handled by dropping the dependent last generator");

    AbelianPlan plan;
    auto block_words = [&](unsigned off, unsigned count) {
        // Words (1,2,3), (1,4,5), (2,4,6) and optionally (1..7) of the
        // block at `off`, prefixed by all generators before the block.
        std::vector<unsigned> prefix;
        for (unsigned i = 1; i <= off; ++i) prefix.push_back(i);
        static const unsigned triples[3][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}};
        for (unsigned t = 0; t < std::min(count, 3u); ++t) {
            std::vector<unsigned> idx = prefix;
            for (unsigned k : triples[t]) idx.push_back(off + k);
            plan.mus.emplace_back(std::move(idx));
        }
        if (count >= 4) {
            std::vector<unsigned> idx = prefix;
            for (unsigned k = 1; k <= 7; ++k) idx.push_back(off + k);
            plan.mus.emplace_back(std::move(idx));
        }
    };

    for (unsigned i = 0; i < d; ++i) block_words(8 * i, 4);
    if (c == 4) block_words(8 * d, 1);
    if (c == 5) block_words(8 * d, 2);
    if (c == 6 || c == 7) block_words(8 * d, 3);

    for (unsigned i = 0; i < d; ++i)
        for (unsigned k : {1u, 2u, 4u, 8u}) plan.free.push_back(8 * i + k);
    if (c == 1) plan.free.push_back(8 * d + 1);
    if (c == 2) {
        plan.free.push_back(8 * d + 1);
        plan.free.push_back(8 * d + 2);
    }
    if (c >= 4) {
        plan.free.push_back(8 * d + 1);
        plan.free.push_back(8 * d + 2);
        plan.free.push_back(8 * d + 4);
    }

    plan.expected_fix_dim = field_real_dim(rep_type(sig));

    for (std::size_t i = 0; i < plan.mus.size(); ++i)
        for (std::size_t j = i + 1; j < plan.mus.size(); ++j)
            if (commutation_sign(plan.mus[i], plan.mus[j]) != 1) {
                throw Error("abelian_plan: words do not commute");
            }
    if ((std::size_t{1} << plan.free.size()) != irreducible_dim(sig)) {
        throw Error("abelian_plan: free generator count does not match the representation dimension");
    }
    return plan;
}

Matrix common_fixed_space(const Representation& rep, const AbelianPlan& plan, const Tolerance& tol) {
    check_rep_shape(rep);
    const double gate = structure_gate(tol);
    const Matrix id = Matrix::identity(rep.dim);

    std::vector<Matrix> mus;
    for (const auto& w : plan.mus) {
        Matrix m = word_product(rep.generators, w);
        if (residual_max(m, m.transpose()) > gate || residual_max(m * m, id) > gate) {
            throw RelationError("common_fixed_space: plan word is not a symmetric involution");
        }
        mus.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < mus.size(); ++i)
        for (std::size_t j = i + 1; j < mus.size(); ++j)
            if ((mus[i] * mus[j] - mus[j] * mus[i]).max_abs() > gate) {
                throw RelationError("common_fixed_space: plan words do not commute on this representation");
            }

    Matrix prod = id;
    for (const auto& m : mus) prod = prod * (m + id);
    if (prod.trace() < 0.5) {
        throw RelationError("common_fixed_space: projector product has vanishing trace");
    }

    const Matrix fixed = orth(prod, tol);
    if (fixed.cols() != plan.expected_fix_dim) {
        throw RankMismatchError("common_fixed_space: fixed space has dimension " + std::to_string(fixed.cols()) +
                                ", expected " + std::to_string(plan.expected_fix_dim));
    }
    return fixed;
}

Matrix build_basis(const Representation& rep, const std::vector<double>& x, const AbelianPlan& plan,
                   const Tolerance& tol) {
    check_rep_shape(rep);
    if (x.size() != rep.dim) throw DimensionMismatchError("build_basis: seed vector has wrong length");
    const std::size_t n = rep.dim;
    const std::size_t f = plan.free.size();
    if ((std::size_t{1} << f) != n) throw DimensionMismatchError("build_basis: 2^free != dim");

    auto gen = [&](unsigned idx) -> const Matrix& { return rep.generators.at(idx - 1); };

    Matrix p(n, n);
    std::size_t filled = 0;
    auto push = [&](const std::vector<double>& v) { p.set_col(filled++, v); };

    if (f == 0) {
        push(x);
    } else if (f <= 2) {
        // Quaternion-style columns [x, -A1 x, -A2 x, -A1A2 x].
        push(x);
        const std::vector<double> a1x = matvec(gen(plan.free[0]), x);
        std::vector<double> m1 = a1x;
        for (auto& v : m1) v = -v;
        push(m1);
        if (f == 2) {
            std::vector<double> a2x = matvec(gen(plan.free[1]), x);
            for (auto& v : a2x) v = -v;
            push(a2x);
            std::vector<double> a12x = matvec(gen(plan.free[0]), matvec(gen(plan.free[1]), x));
            for (auto& v : a12x) v = -v;
            push(a12x);
        }
    } else {
        // Leading 8-column block over the first three free generators,
        // signs chosen so the columns coincide with [x, A1 x, ..., A7 x]
        // whenever those generators exist.
        const Matrix& a1 = gen(plan.free[0]);
        const Matrix& a2 = gen(plan.free[1]);
        const Matrix& a4 = gen(plan.free[2]);
        const std::vector<double> a1x = matvec(a1, x);
        const std::vector<double> a2x = matvec(a2, x);
        const std::vector<double> a4x = matvec(a4, x);
        auto neg = [](std::vector<double> v) {
            for (auto& e : v) e = -e;
            return v;
        };
        push(x);
        push(a1x);
        push(a2x);
        push(neg(matvec(a1, a2x)));
        push(a4x);
        push(neg(matvec(a1, a4x)));
        push(neg(matvec(a2, a4x)));
        push(neg(matvec(a1, matvec(a2, a4x))));
        for (std::size_t k = 3; k < f; ++k) {
            const Matrix block = submatrix(p, 0, 0, n, filled);
            const Matrix doubled = gen(plan.free[k]) * block;
            for (std::size_t j = 0; j < doubled.cols(); ++j) p.set_col(filled + j, doubled.col(j));
            filled += doubled.cols();
        }
    }

    if (filled != n) throw DimensionMismatchError("build_basis: internal column count mismatch");
    if (residual_max(p.transpose() * p, Matrix::identity(n)) > structure_gate(tol)) {
        throw NotOrthonormalError("build_basis: columns are not orthonormal; seed vector is outside the fixed space");
    }
    return p;
}

CanonicalizeResult canonicalize(const Representation& rep, const Tolerance& tol) {
    check_rep_shape(rep);
    if (rep.dim != irreducible_dim(rep.sig)) {
        throw ReducibleError("canonicalize: dimension " + std::to_string(rep.dim) + " is not the irreducible dimension " +
                             std::to_string(irreducible_dim(rep.sig)) + " of this signature");
    }

    SymmetrizeResult sym = symmetrize(rep, tol);
    if (relation_residual(sym.rep) > structure_gate(tol)) {
        throw RelationError("canonicalize: generator relations fail after symmetrization");
    }

    CanonicalizeResult out;
    out.m = sym.m;
    out.class_sign = 1;
    if (classify(rep.sig).is_direct_sum && rep.sig.n() > 0) {
        const double v = volume_scalar(sym.rep, tol);
        const double vplus = volume(build_canonical(rep.sig, 1).rep)(0, 0);
        out.class_sign = (v * vplus > 0.0) ? 1 : -1;
    }

    out.p = change_of_basis(sym.rep, tol);
    out.rep_t.sig = rep.sig;
    out.rep_t.dim = rep.dim;
    for (const auto& g : sym.rep.generators) out.rep_t.generators.push_back(conjugate_orthogonal(g, out.p));
    return out;
}

CanonicalizeResult canonicalize(const Representation& rep) { return canonicalize(rep, default_tolerance(rep.dim)); }

CanonicalizeResult canonicalize_rs(const Representation& rep, const Tolerance& tol) {
    if (rep.sig.s < 1) throw UnsupportedCError("canonicalize_rs: requires s >= 1");
    check_rep_shape(rep);
    if (rep.dim != irreducible_dim(rep.sig)) {
        throw DimensionMismatchError("canonicalize_rs: not an irreducible dimension");
    }
    CanonicalizeResult out;
    out.m = Matrix::identity(rep.dim);
    out.class_sign = 1;
    out.p = change_of_basis(rep, tol);
    out.rep_t.sig = rep.sig;
    out.rep_t.dim = rep.dim;
    for (const auto& g : rep.generators) out.rep_t.generators.push_back(conjugate_orthogonal(g, out.p));
    return out;
}

Matrix commutant_quotient(const Matrix& p1, const Matrix& p2, const Representation& rep_t, const Tolerance& tol) {
    if (!is_orthogonal(p1, Tolerance(structure_gate(tol), tol.rank_rtol)) ||
        !is_orthogonal(p2, Tolerance(structure_gate(tol), tol.rank_rtol))) {
        throw Error("commutant_quotient: inputs must be orthogonal");
    }
    const Matrix q = p2 * p1.transpose();
    for (const auto& g : rep_t.generators) {
        if ((q * g - g * q).max_abs() > structure_gate(tol)) {
            throw NotInCommutantError("commutant_quotient: quotient does not commute with the canonical generators");
        }
    }
    return q;
}

} // namespace cliffcanon
