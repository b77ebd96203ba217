#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace cliffcanon;
using namespace testsupport;

namespace {

// Matrix-algebra table transliterated from the pairwise isomorphism
// list (one row per value of s - r), independent of the mod-8 formula
// used by classify().
AlgebraType oracle_type(unsigned r, unsigned s) {
    const unsigned m = std::min(r, s);
    const int k = static_cast<int>(s) - static_cast<int>(r);
    switch (k) {
        case 0: return {Field::R, m, false};
        case 1: return {Field::R, m, true};
        case 2: return {Field::R, m + 1, false};
        case 3: return {Field::C, m + 1, false};
        case 4: return {Field::H, m + 1, false};
        case 5: return {Field::H, m + 1, true};
        case 6: return {Field::H, m + 2, false};
        case 7: return {Field::C, m + 3, false};
        case -1: return {Field::C, m, false};
        case -2: return {Field::H, m, false};
        case -3: return {Field::H, m, true};
        case -4: return {Field::H, m + 1, false};
        case -5: return {Field::C, m + 2, false};
        case -6: return {Field::R, m + 3, false};
        case -7: return {Field::R, m + 3, true};
        case 8:
        case -8: return {Field::R, m + 4, false};
        default: break;
    }
    // Fold the 8-periodicity until the difference is in range.
    if (k > 8) {
        AlgebraType t = oracle_type(r, s - 8);
        t.block_log2 += 4;
        return t;
    }
    AlgebraType t = oracle_type(r - 8, s);
    t.block_log2 += 4;
    return t;
}

} // namespace

TEST_CASE("classify matches the isomorphism table") {
    CHECK(classify({0, 0}) == AlgebraType{Field::R, 0, false});
    CHECK(classify({7, 0}) == AlgebraType{Field::R, 3, true});
    CHECK(classify({3, 0}) == AlgebraType{Field::H, 0, true});
    CHECK(classify({1, 1}) == AlgebraType{Field::R, 1, false});
    CHECK(classify({9, 0}) == AlgebraType{Field::C, 4, false});

    for (unsigned r = 0; r <= 8; ++r)
        for (unsigned s = 0; s <= 8; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            CHECK(classify({r, s}) == oracle_type(r, s));
        }
}

TEST_CASE("classify is 8-periodic with block growth 4") {
    for (unsigned r = 0; r <= 8; ++r)
        for (unsigned s = 0; s <= 8; ++s) {
            const AlgebraType base = classify({r, s});
            for (const AlgebraType shifted : {classify({r + 8, s}), classify({r, s + 8})}) {
                CHECK(shifted.field == base.field);
                CHECK(shifted.is_direct_sum == base.is_direct_sum);
                CHECK(shifted.block_log2 == base.block_log2 + 4);
            }
        }
}

TEST_CASE("rep_type") {
    CHECK(rep_type({8, 0}) == Field::R);
    CHECK(rep_type({1, 0}) == Field::C);
    CHECK(rep_type({3, 0}) == Field::H);
    CHECK(rep_type({0, 1}) == Field::R);
    CHECK(rep_type({0, 3}) == Field::C);
}

TEST_CASE("irreducible dimensions") {
    CHECK(irreducible_dim({3, 0}) == 4);
    CHECK(irreducible_dim({7, 0}) == 8);
    CHECK(irreducible_dim({9, 0}) == 32);
    CHECK(irreducible_dim({0, 0}) == 1);
    CHECK(irreducible_dim({0, 1}) == 1);

    for (unsigned r = 0; r <= 12; ++r)
        for (unsigned s = 0; r + s <= 12; ++s) {
            const AlgebraType t = oracle_type(r, s);
            CHECK(irreducible_dim({r, s}) == (std::size_t{field_real_dim(t.field)} << t.block_log2));
        }
}

TEST_CASE("radon-hurwitz numbers") {
    CHECK(radon_hurwitz(1) == 0);
    CHECK(radon_hurwitz(8) == 7);
    CHECK(radon_hurwitz(16) == 8);
    CHECK(radon_hurwitz(3) == 0);
    CHECK(radon_hurwitz(12) == 3);

    SUBCASE("maximal r representable on R^N") {
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u, 64u, 128u}) {
            unsigned max_r = 0;
            for (unsigned r = 0; r <= 40; ++r) {
                if (irreducible_dim({r, 0}) <= n) max_r = r;
            }
            CHECK(max_r == radon_hurwitz(n));
        }
    }
}

TEST_CASE("volume element sign and centrality") {
    CHECK(volume_square({3, 0}) == 1);
    CHECK(volume_is_central({3, 0}));
    CHECK(volume_square({1, 0}) == -1);
    CHECK(volume_is_central({1, 0}));
    CHECK(volume_square({0, 2}) == -1);
    CHECK(!volume_is_central({0, 2}));
    CHECK(volume_square({7, 0}) == 1);
    CHECK(volume_square({9, 0}) == -1);
}

TEST_CASE("generator words") {
    SUBCASE("construction validates ordering and sign") {
        CHECK_THROWS_AS(GeneratorWord({2, 2}), Error);
        CHECK_THROWS_AS(GeneratorWord({3, 1}), Error);
        CHECK_THROWS_AS(GeneratorWord({1}, 2), Error);
        CHECK(GeneratorWord({1, 4, 6}).order() == 3);
    }

    SUBCASE("empty word is the identity") {
        const auto gens = cl30_reference();
        CHECK(word_product(gens, GeneratorWord{}) == Matrix::identity(4));
    }

    SUBCASE("full word on canonical Cl(3,0) is minus the identity") {
        const auto gens = cl30_reference();
        CHECK(word_product(gens, GeneratorWord({1, 2, 3})) == -Matrix::identity(4));
    }

    SUBCASE("full word on canonical Cl(7,0) is the identity") {
        const auto gens = cl70_reference();
        CHECK(word_product(gens, GeneratorWord({1, 2, 3, 4, 5, 6, 7})) == Matrix::identity(8));
    }

    SUBCASE("out-of-range index") {
        const auto gens = cl30_reference();
        CHECK_THROWS_AS(word_product(gens, GeneratorWord({4})), IndexOutOfRangeError);
    }
}

TEST_CASE("commutation sign rule on the Cl(7,0) triple products") {
    const std::vector<GeneratorWord> words = {
        GeneratorWord({1, 2, 3}), GeneratorWord({1, 4, 5}), GeneratorWord({1, 6, 7}), GeneratorWord({2, 4, 6}),
        GeneratorWord({2, 5, 7}), GeneratorWord({3, 4, 7}), GeneratorWord({3, 5, 6}), GeneratorWord{},
    };
    for (const auto& gens : {cl70_reference(), build_canonical({7, 0}).rep.generators}) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = 0; j < words.size(); ++j) {
                const Matrix wi = word_product(gens, words[i]);
                const Matrix wj = word_product(gens, words[j]);
                const int sign = commutation_sign(words[i], words[j]);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(residual_max(wi * wj, static_cast<double>(sign) * (wj * wi)) == 0.0);
            }
        }
    }

    SUBCASE("odd words with odd common factor commute") {
        for (std::size_t i = 0; i + 1 < words.size(); ++i)
            for (std::size_t j = i + 1; j + 1 < words.size(); ++j) {
                // Every distinct pair of the triple products shares exactly
                // one generator, so they commute.
                CHECK(commutation_sign(words[i], words[j]) == 1);
            }
    }
}
