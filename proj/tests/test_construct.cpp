#include <doctest.h>

#include <set>

#include <cmath>

#include "support.hpp"

using namespace cliffcanon;
using namespace testsupport;

namespace {

void check_package_relations(const CanonicalPackage& pkg) {
    const Matrix id = Matrix::identity(pkg.rep.dim);
    CHECK(relation_residual(pkg.rep) == 0.0);
    for (const auto& g : pkg.rep.generators) {
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) {
                const double v = g(i, j);
                CHECK((v == 0.0 || v == 1.0 || v == -1.0));
            }
    }
    for (std::size_t a = 0; a < pkg.commutant.size(); ++a) {
        const Matrix& j = pkg.commutant[a];
        CHECK(residual_max(j * j, -id) == 0.0);
        for (const auto& g : pkg.rep.generators) CHECK((j * g - g * j).max_abs() == 0.0);
        for (std::size_t b = a + 1; b < pkg.commutant.size(); ++b) {
            CHECK((j * pkg.commutant[b] + pkg.commutant[b] * j).max_abs() == 0.0);
        }
    }
    for (std::size_t a = 0; a < pkg.complementary.size(); ++a) {
        const Matrix& c = pkg.complementary[a];
        CHECK(residual_max(c * c, id) == 0.0);
        for (const auto& g : pkg.rep.generators) CHECK((c * g + g * c).max_abs() == 0.0);
        for (std::size_t b = a + 1; b < pkg.complementary.size(); ++b) {
            CHECK((c * pkg.complementary[b] + pkg.complementary[b] * c).max_abs() == 0.0);
        }
    }
}

} // namespace

TEST_CASE("canonical Cl(3,0) matches the reference matrices exactly") {
    const CanonicalPackage pkg = build_canonical({3, 0});
    const auto ref = cl30_reference();
    REQUIRE(pkg.rep.generators.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(pkg.rep.generators[i] == ref[i]);
    CHECK(volume(pkg.rep) == -Matrix::identity(4));

    SUBCASE("class sign -1 negates the last generator and flips the volume") {
        const CanonicalPackage neg = build_canonical({3, 0}, -1);
        CHECK(neg.rep.generators[2] == -ref[2]);
        CHECK(volume(neg.rep) == Matrix::identity(4));
        check_package_relations(neg);
    }
}

TEST_CASE("small base cases") {
    SUBCASE("Cl(1,1) is {epsilon, tau}") {
        const CanonicalPackage pkg = build_canonical({1, 1});
        CHECK(pkg.rep.generators[0] == pauli::epsilon());
        CHECK(pkg.rep.generators[1] == pauli::tau());
    }
    SUBCASE("Cl(0,2) is {sigma, tau}") {
        const CanonicalPackage pkg = build_canonical({0, 2});
        CHECK(pkg.rep.generators[0] == pauli::sigma());
        CHECK(pkg.rep.generators[1] == pauli::tau());
    }
    SUBCASE("Cl(0,1) is the scalar representation") {
        CHECK(build_canonical({0, 1}).rep.generators[0] == Matrix{{1}});
        CHECK(build_canonical({0, 1}, -1).rep.generators[0] == Matrix{{-1}});
    }
    SUBCASE("Cl(1,0) package") {
        const CanonicalPackage pkg = build_canonical({1, 0});
        CHECK(pkg.rep.generators[0] == pauli::epsilon());
        REQUIRE(pkg.commutant.size() == 1);
        CHECK(pkg.commutant[0] == pauli::epsilon());
        REQUIRE(pkg.complementary.size() == 2);
        CHECK(pkg.complementary[0] == pauli::tau());
        CHECK(pkg.complementary[1] == pauli::sigma());
    }
}

TEST_CASE("volume identities along the chain") {
    SUBCASE("r = 8 and r = 16 give tau x I") {
        for (unsigned r : {8u, 16u}) {
            const CanonicalPackage pkg = build_canonical({r, 0});
            const Matrix expected = kron(pauli::tau(), Matrix::identity(pkg.rep.dim / 2));
            CHECK(volume(pkg.rep) == expected);
        }
    }
    SUBCASE("r = 9 gives epsilon x tau x I") {
        const CanonicalPackage pkg = build_canonical({9, 0});
        const Matrix expected = kron(pauli::epsilon(), kron(pauli::tau(), Matrix::identity(8)));
        CHECK(volume(pkg.rep) == expected);
    }
    SUBCASE("r = 3 and r = 11 give minus identity") {
        for (unsigned r : {3u, 11u}) {
            const CanonicalPackage pkg = build_canonical({r, 0});
            CHECK(volume(pkg.rep) == -Matrix::identity(pkg.rep.dim));
        }
    }
    SUBCASE("r = 7 and r = 15 give the identity") {
        for (unsigned r : {7u, 15u}) {
            const CanonicalPackage pkg = build_canonical({r, 0});
            CHECK(volume(pkg.rep) == Matrix::identity(pkg.rep.dim));
        }
    }
}

TEST_CASE("relations are exact for every supported signature") {
    for (unsigned r = 0; r <= 10; ++r)
        for (unsigned s = 0; r + s <= 10; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            const CanonicalPackage pkg = build_canonical({r, s});
            CHECK(pkg.rep.dim == irreducible_dim({r, s}));
            check_package_relations(pkg);
        }
    for (unsigned r = 11; r <= 16; ++r) {
        CAPTURE(r);
        const CanonicalPackage pkg = build_canonical({r, 0});
        CHECK(pkg.rep.dim == irreducible_dim({r, 0}));
        check_package_relations(pkg);
    }
}

TEST_CASE("volume squares match the sign formula") {
    for (unsigned r = 0; r <= 10; ++r)
        for (unsigned s = 0; r + s <= 10; ++s) {
            const Representation rep = build_canonical({r, s}).rep;
            const Matrix v = volume(rep);
            CHECK(residual_max(v * v, static_cast<double>(volume_square({r, s})) * Matrix::identity(rep.dim)) == 0.0);
        }
}

TEST_CASE("commutant and complementary counts follow the chain table") {
    // (commutant, complementary) per chain rank, both chain depths.
    const struct {
        unsigned r;
        std::size_t commutant;
        std::size_t complementary;
    } rows[] = {
        {0, 0, 1}, {8, 0, 1}, {16, 0, 1}, {1, 1, 2}, {9, 1, 2}, {3, 3, 0}, {11, 3, 0}, {7, 0, 0}, {15, 0, 0},
    };
    for (const auto& row : rows) {
        CAPTURE(row.r);
        const CanonicalPackage pkg = build_canonical({row.r, 0});
        CHECK(pkg.commutant.size() == row.commutant);
        CHECK(pkg.complementary.size() == row.complementary);
    }
}

TEST_CASE("truncated ranks recover the commutant of their type") {
    const struct {
        unsigned r;
        std::size_t commutant;
    } rows[] = {{2, 3}, {4, 3}, {5, 1}, {6, 0}, {10, 3}, {12, 3}, {13, 1}, {14, 0}};
    for (const auto& row : rows) {
        CAPTURE(row.r);
        const CanonicalPackage pkg = build_canonical({row.r, 0});
        CHECK(pkg.commutant.size() == row.commutant);
        CHECK(field_real_dim(rep_type({row.r, 0})) == row.commutant + 1);
        check_package_relations(pkg);
    }
}

TEST_CASE("chain tensor forms at depth one are exact") {
    const Matrix s = pauli::sigma(), e = pauli::epsilon(), t = pauli::tau();

    SUBCASE("Cl(7,0) generators") {
        const CanonicalPackage pkg = build_canonical({7, 0});
        auto k3 = [](const Matrix& a, const Matrix& b, const Matrix& c) { return kron(a, kron(b, c)); };
        CHECK(pkg.rep.generators[0] == k3(s, s, e));
        CHECK(pkg.rep.generators[1] == k3(s, e, Matrix::identity(2)));
        CHECK(pkg.rep.generators[2] == k3(s, t, e));
        CHECK(pkg.rep.generators[3] == kron(e, Matrix::identity(4)));
        CHECK(pkg.rep.generators[4] == k3(t, Matrix::identity(2), e));
        CHECK(pkg.rep.generators[5] == k3(t, e, t));
        CHECK(pkg.rep.generators[6] == k3(t, e, s));
    }

    SUBCASE("Cl(9,0) structure matrices") {
        const CanonicalPackage pkg = build_canonical({9, 0});
        const Matrix alpha = kron(t, Matrix::identity(8)); // complementary generator of Cl(8,0)
        CHECK(pkg.rep.generators[8] == kron(e, Matrix::identity(16)));
        REQUIRE(pkg.commutant.size() == 1);
        CHECK(pkg.commutant[0] == kron(e, alpha));
        REQUIRE(pkg.complementary.size() == 2);
        CHECK(pkg.complementary[0] == kron(t, Matrix::identity(16)));
        CHECK(pkg.complementary[1] == kron(s, alpha));
    }

    SUBCASE("Cl(11,0) commutant") {
        const CanonicalPackage nine = build_canonical({9, 0});
        const CanonicalPackage pkg = build_canonical({11, 0});
        CHECK(pkg.rep.generators[10] == kron(t, nine.commutant[0]));
        REQUIRE(pkg.commutant.size() == 3);
        CHECK(pkg.commutant[0] == kron(Matrix::identity(2), nine.commutant[0]));
        CHECK(pkg.commutant[1] == kron(e, nine.complementary[0]));
        CHECK(pkg.commutant[2] == kron(e, nine.complementary[1]));
    }
}

TEST_CASE("class sign handling") {
    CHECK_THROWS_AS(build_canonical({8, 0}, -1), InvalidClassSignError);
    CHECK_THROWS_AS(build_canonical({2, 2}, -1), InvalidClassSignError);
    CHECK_THROWS_AS(build_canonical({3, 0}, 0), InvalidClassSignError);

    SUBCASE("direct-sum types accept both signs and volumes differ") {
        for (Signature sig : {Signature{7, 0}, Signature{1, 2}, Signature{2, 3}}) {
            REQUIRE(classify(sig).is_direct_sum);
            const Matrix vp = volume(build_canonical(sig, 1).rep);
            const Matrix vm = volume(build_canonical(sig, -1).rep);
            CHECK(residual_max(vp, -vm) == 0.0);
        }
    }
}

TEST_CASE("complex Clifford construction") {
    SUBCASE("one generator is multiplication by i") {
        const auto gens = build_complex(1);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0].re == Matrix{{0}});
        CHECK(gens[0].im == Matrix{{1}});
    }

    SUBCASE("three generators match the 2x2 base exactly") {
        const auto gens = build_complex(3);
        REQUIRE(gens.size() == 3);
        CHECK(gens[0].re == Matrix::zero(2, 2));
        CHECK(gens[0].im == pauli::tau());
        CHECK(gens[1].re == pauli::epsilon());
        CHECK(gens[1].im == Matrix::zero(2, 2));
        CHECK(gens[2].re == Matrix::zero(2, 2));
        CHECK(gens[2].im == pauli::sigma());
    }

    SUBCASE("relations hold for n up to 7") {
        for (unsigned n = 1; n <= 7; ++n) {
            CAPTURE(n);
            const auto gens = build_complex(n);
            REQUIRE(gens.size() == n);
            const std::size_t dim = std::size_t{1} << (n / 2);
            const Matrix id = Matrix::identity(dim);
            for (unsigned i = 0; i < n; ++i) {
                CHECK(gens[i].re.rows() == dim);
                const ComplexMatrix sq = cmul(gens[i], gens[i]);
                CHECK(residual_max(sq.re, -id) <= 1e-14);
                CHECK(sq.im.max_abs() <= 1e-14);
                for (unsigned j = i + 1; j < n; ++j) {
                    const ComplexMatrix ac1 = cmul(gens[i], gens[j]);
                    const ComplexMatrix ac2 = cmul(gens[j], gens[i]);
                    CHECK((ac1.re + ac2.re).max_abs() <= 1e-14);
                    CHECK((ac1.im + ac2.im).max_abs() <= 1e-14);
                }
            }
        }
    }

    SUBCASE("odd n: the product of all generators is a central scalar") {
        for (unsigned n : {1u, 3u, 5u, 7u}) {
            const auto gens = build_complex(n);
            const std::size_t dim = std::size_t{1} << (n / 2);
            ComplexMatrix prod{Matrix::identity(dim), Matrix::zero(dim, dim)};
            for (const auto& g : gens) prod = cmul(prod, g);
            // Scalar means re = a*I and im = b*I.
            CHECK(residual_max(prod.re, prod.re(0, 0) * Matrix::identity(dim)) <= 1e-14);
            CHECK(residual_max(prod.im, prod.im(0, 0) * Matrix::identity(dim)) <= 1e-14);
            const double norm = prod.re(0, 0) * prod.re(0, 0) + prod.im(0, 0) * prod.im(0, 0);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}
