#include <doctest.h>

#include <random>

#include "qgi/coreinv.hpp"
#include "qgi/errors.hpp"
#include "qgi/geninv.hpp"
#include "qgi/ncdet.hpp"
#include "qgi/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/sampling.hpp"

using namespace qgi;
using fixtures::q;

TEST_CASE("core inverses of the worked example") {
    const QMatrix a = fixtures::example_a();
    CHECK(right_core(a, CoreMethod::Direct) == fixtures::example_core_right());
    CHECK(right_core(a, CoreMethod::Staged) == fixtures::example_core_right());
    CHECK(right_core(a, CoreMethod::Composition) == fixtures::example_core_right());
    CHECK(right_core_verified(a) == fixtures::example_core_right());

    CHECK(left_core_verified(a) == fixtures::example_core_left());
    CHECK(mp_inverse(fixtures::example_core_left()) == fixtures::example_mp_of_core_left());
}

TEST_CASE("core inverse preconditions and degenerate cases") {
    CHECK(right_core(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK(left_core(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK_THROWS_AS(right_core(fixtures::nilpotent_2x2()), IndexTooLarge);
    CHECK_THROWS_AS(left_core(fixtures::nilpotent_2x2()), IndexTooLarge);
    CHECK(right_core(QMatrix::zero(2, 2)) == QMatrix::zero(2, 2));

    std::mt19937 rng(113);
    int seen = 0;
    while (seen < 5) {
        const QMatrix m = sampling::random_square(rng, 3);
        if (elim_rank(m) < 3) continue;
        ++seen;
        const QMatrix inv = elim_inverse(m);
        CHECK(right_core_verified(m) == inv);
        CHECK(left_core_verified(m) == inv);
    }
}

TEST_CASE("core inverses satisfy their defining systems") {
    std::mt19937 rng(127);
    int seen = 0;
    while (seen < 12) {
        const QMatrix m = sampling::random_with_rank_at_most(rng, 3, 2);
        if (matrix_index(m) > 1 || m.is_zero()) continue;
        ++seen;
        const QMatrix rc = right_core_verified(m);
        const QMatrix lc = left_core_verified(m);
        CHECK(verify(System::CoreRight, m, rc).ok());
        CHECK(verify(System::CoreLeft, m, lc).ok());
    }
}

TEST_CASE("core inverse identity battery") {
    std::mt19937 rng(131);
    int seen = 0;
    while (seen < 10) {
        const QMatrix m = seen % 2 == 0 ? sampling::random_square(rng, 3)
                                        : sampling::random_with_rank_at_most(rng, 3, 2);
        if (matrix_index(m) > 1 || m.is_zero()) continue;
        ++seen;
        const QMatrix rc = right_core(m);
        const QMatrix lc = left_core(m);
        const QMatrix sharp = group_inverse(m);
        const QMatrix p = projector_p(m);
        const QMatrix qa = projector_q(m);
        // MP and group inverses of the core inverses
        CHECK(mp_inverse(rc) == m * p);
        CHECK(group_inverse(rc) == m * p);
        CHECK(mp_inverse(lc) == qa * m);
        CHECK(group_inverse(lc) == qa * m);
        // reflexive inner inverses
        CHECK(m * rc * m == m);
        CHECK(rc * m * rc == rc);
        CHECK(m * lc * m == m);
        CHECK(lc * m * lc == lc);
        // squares recover the group inverse
        CHECK(rc * rc * m == sharp);
        CHECK(m * (lc * lc) == sharp);
        // products with A
        CHECK(rc * m == sharp * m);
        CHECK(m * lc == m * sharp);
    }
}

TEST_CASE("EP coincidence") {
    std::mt19937 rng(137);
    for (int t = 0; t < 8; ++t) {
        const QMatrix h = sampling::random_hermitian(rng, 3);
        if (projector_q(h) != projector_p(h)) continue;
        const QMatrix mp = mp_inverse(h);
        CHECK(right_core(h) == mp);
        CHECK(left_core(h) == mp);
        CHECK(group_inverse(h) == mp);
    }
}

TEST_CASE("core-EP inverses") {
    const QMatrix a = fixtures::example_a();
    CHECK(core_ep(a, Side::Right) == fixtures::example_core_right());
    CHECK(core_ep(a, Side::Left) == fixtures::example_core_left());
    CHECK(core_ep_verified(a, Side::Right) == fixtures::example_core_right());

    CHECK(core_ep(QMatrix::identity(3), Side::Right) == QMatrix::identity(3));
    CHECK(core_ep(QMatrix::identity(3), Side::Left) == QMatrix::identity(3));
    CHECK(core_ep(fixtures::nilpotent_2x2(), Side::Right) == QMatrix::zero(2, 2));
    CHECK(core_ep(fixtures::nilpotent_2x2(), Side::Left) == QMatrix::zero(2, 2));

    std::mt19937 rng(139);
    for (int t = 0; t < 12; ++t) {
        const QMatrix m = t == 0   ? sampling::random_with_index(rng, 4, 3)
                          : t % 2 == 0 ? sampling::random_with_index(rng, 3, 2)
                                       : sampling::random_square(rng, 3);
        const QMatrix right = core_ep_verified(m, Side::Right);
        const QMatrix left = core_ep_verified(m, Side::Left);
        CHECK(verify(System::CoreEpRight, m, right).ok());
        CHECK(verify(System::CoreEpLeft, m, left).ok());
    }
}

TEST_CASE("DMP and MPD inverses") {
    CHECK(dmp(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK(mpd(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK(dmp(fixtures::nilpotent_2x2()) == QMatrix::zero(2, 2));
    CHECK(mpd(fixtures::nilpotent_2x2()) == QMatrix::zero(2, 2));

    const QMatrix a = fixtures::example_a();
    CHECK(dmp(a) == group_inverse(a) * a * mp_inverse(a));
    CHECK(mpd(a) == mp_inverse(a) * a * group_inverse(a));

    std::mt19937 rng(149);
    for (int t = 0; t < 12; ++t) {
        const QMatrix m = t == 0   ? sampling::random_with_index(rng, 4, 3)
                          : t % 3 == 0 ? sampling::random_with_index(rng, 3, 2)
                                       : sampling::random_square(rng, 2 + t % 3);
        const QMatrix d = dmp_verified(m);
        const QMatrix md = mpd_verified(m);
        CHECK(d == dmp_composition(m, Backend::Oracle));
        CHECK(md == mpd_composition(m, Backend::Oracle));
        CHECK(verify(System::Dmp, m, d).ok());
        CHECK(verify(System::Mpd, m, md).ok());
    }
}

TEST_CASE("Hermitian DMP/MPD specializations") {
    std::mt19937 rng(151);
    for (int t = 0; t < 8; ++t) {
        const QMatrix h = sampling::random_hermitian(rng, 3);
        const QMatrix expected = dmp_composition(h, Backend::Oracle);
        CHECK(dmp(h, Form::HermitianRow) == expected);
        CHECK(dmp(h, Form::HermitianColumn) == expected);
        const QMatrix expected_mpd = mpd_composition(h, Backend::Oracle);
        CHECK(mpd(h, Form::HermitianRow) == expected_mpd);
        CHECK(mpd(h, Form::HermitianColumn) == expected_mpd);
    }
    CHECK_THROWS_AS(dmp(fixtures::example_a(), Form::HermitianRow), NotHermitian);
}

TEST_CASE("CMP inverse") {
    CHECK(cmp(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK(cmp(fixtures::nilpotent_2x2()) == QMatrix::zero(2, 2));

    const QMatrix a = fixtures::example_a();
    const QMatrix expected = projector_q(a) * drazin(a) * projector_p(a);
    for (int l : {1, 2})
        for (bool rdet_form : {false, true})
            CHECK(cmp(a, {l, rdet_form, false}) == expected);
    CHECK(cmp_verified(a) == expected);

    std::mt19937 rng(157);
    for (int t = 0; t < 10; ++t) {
        const QMatrix m = t == 0   ? sampling::random_with_index(rng, 4, 3)
                          : t % 3 == 0 ? sampling::random_with_index(rng, 3, 2)
                                       : sampling::random_square(rng, 2 + t % 2);
        const QMatrix x = cmp_verified(m);
        CHECK(x == cmp_composition(m, Backend::Oracle));
        CHECK(verify(System::Cmp, m, x).ok());
    }
}

TEST_CASE("Hermitian CMP specialization") {
    std::mt19937 rng(163);
    for (int t = 0; t < 6; ++t) {
        const QMatrix h = sampling::random_hermitian(rng, 3);
        const QMatrix expected = cmp_composition(h, Backend::Oracle);
        for (int l : {1, 2})
            for (bool rdet_form : {false, true})
                CHECK(cmp(h, {l, rdet_form, true}) == expected);
    }
    CHECK_THROWS_AS(cmp(fixtures::example_a(), {1, false, true}), NotHermitian);
}

TEST_CASE("core-nilpotent decomposition") {
    const auto [identity_core, identity_nil] = core_nilpotent_split(QMatrix::identity(3));
    CHECK(identity_core == QMatrix::identity(3));
    CHECK(identity_nil == QMatrix::zero(3, 3));

    const auto [nil_core, nil_nil] = core_nilpotent_split(fixtures::nilpotent_2x2());
    CHECK(nil_core == QMatrix::zero(2, 2));
    CHECK(nil_nil == fixtures::nilpotent_2x2());

    const QMatrix a = fixtures::example_a();
    const auto [core, nil] = core_nilpotent_split(a);
    CHECK(core == a);
    CHECK(nil == QMatrix::zero(3, 3));

    std::mt19937 rng(167);
    for (int t = 0; t < 10; ++t) {
        const QMatrix m = t % 2 == 0 ? sampling::random_with_index(rng, 3, 2)
                                     : sampling::random_square(rng, 3);
        const auto [c, n] = core_nilpotent_split(m);
        CHECK(c + n == m);
        CHECK((c * n).is_zero());
        CHECK((n * c).is_zero());
        CHECK(n.pow(m.rows()).is_zero());
        CHECK((matrix_index(c) <= 1 || c.is_zero()));
        CHECK(core_nilpotent_split(m, Backend::Oracle).first == c);
    }
}

TEST_CASE("hat-matrix exponent selection by computation") {
    // On index-2 inputs the power-matched auxiliary matrices reproduce the
    // compositions; freezing the exponents at the square does not.
    std::mt19937 rng(173);
    bool dmp_discriminated = false, mpd_discriminated = false, cmp_discriminated = false;
    for (int t = 0; t < 20; ++t) {
        const QMatrix m = sampling::random_with_index(rng, 3, 2);
        REQUIRE(matrix_index(m) == 2);

        const QMatrix dmp_expected = dmp_composition(m, Backend::Oracle);
        CHECK(detail::dmp_general(m, detail::HatExponents::PowerMatched) == dmp_expected);
        if (detail::dmp_general(m, detail::HatExponents::Squared) != dmp_expected)
            dmp_discriminated = true;

        const QMatrix mpd_expected = mpd_composition(m, Backend::Oracle);
        CHECK(detail::mpd_general(m, detail::HatExponents::PowerMatched) == mpd_expected);
        if (detail::mpd_general(m, detail::HatExponents::Squared) != mpd_expected)
            mpd_discriminated = true;

        const QMatrix cmp_expected = cmp_composition(m, Backend::Oracle);
        for (int l : {1, 2})
            for (bool rdet_form : {false, true})
                CHECK(detail::cmp_general(m, l, rdet_form,
                                          detail::HatExponents::PowerMatched) == cmp_expected);
        if (detail::cmp_general(m, 2, false, detail::HatExponents::Squared) != cmp_expected)
            cmp_discriminated = true;
    }
    CHECK(dmp_discriminated);
    CHECK(mpd_discriminated);
    CHECK(cmp_discriminated);
}

TEST_CASE("index-one inputs make both exponent choices coincide") {
    const QMatrix a = fixtures::example_a();
    CHECK(detail::dmp_general(a, detail::HatExponents::Squared) ==
          detail::dmp_general(a, detail::HatExponents::PowerMatched));
    CHECK(detail::mpd_general(a, detail::HatExponents::Squared) ==
          detail::mpd_general(a, detail::HatExponents::PowerMatched));
}
