#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polybounds/errors.hpp"
#include "polybounds/format.hpp"
#include "polybounds/verify.hpp"

using namespace polybounds;

using Status = VerificationReport::Status;

TEST_CASE("verify_pair: theorem claims hold on a moderate grid") {
    CHECK(verify_pair(wilker_bounds(3), 500, 192).status == Status::verified);
    CHECK(verify_pair(sf_d_bounds(SfK::pi, 6), 500, 192).status == Status::verified);
    CHECK(verify_pair(sf_d_bounds(SfK::three, 1), 500, 192).status == Status::verified);
    CHECK(verify_pair(sf_e_bounds(2), 500, 192).status == Status::verified);
}

TEST_CASE("verify_pair: margins and gap are positive and sane") {
    const VerificationReport rep = verify_pair(wilker_bounds(3), 500, 192);
    CHECK(rep.min_lower_margin.sign() == 1);
    CHECK(rep.min_upper_margin.sign() == 1);
    CHECK(rep.max_gap.sign() == 1);
    // gap grows toward pi/2, so the argmax must be the last grid point b*500/501
    CHECK(rep.argmax_x > BigFloat::from_decimal("1.567", 64));
    CHECK(rep.grid_points == 500);
    CHECK(rep.precision_bits == 192);
}

TEST_CASE("verify_pair: a true inequality never reports violated, even at 32 bits") {
    for (mpfr_prec_t p = 32; p <= 512; p *= 2) {
        const VerificationReport rep = verify_pair(wilker_bounds(3), 2, p);
        CHECK(rep.status != Status::violated);
    }
}

TEST_CASE("verify_pair: indeterminate at low precision, verified after escalation") {
    CHECK(verify_pair(wilker_bounds(8), 100, 32).status == Status::indeterminate);
    const BoundPair pairs[] = {wilker_bounds(8), sf_d_bounds(SfK::three, 8),
                               sf_d_bounds(SfK::pi, 8), sf_e_bounds(8)};
    for (const BoundPair& pair : pairs) {
        bool reached_verified = false;
        for (mpfr_prec_t p = 32; p <= 65536 && !reached_verified; p *= 2) {
            const Status s = verify_pair(pair, 100, p).status;
            CHECK(s != Status::violated);
            reached_verified = s == Status::verified;
        }
        CHECK(reached_verified);
    }
}

TEST_CASE("verify_pair: a swapped pair is detected as violated") {
    const BoundPair good = wilker_bounds(3);
    BoundPair swapped = good;
    swapped.lower = good.upper;
    swapped.upper = good.lower;
    swapped.lower.side = Side::lower;
    swapped.upper.side = Side::upper;
    CHECK(verify_pair(swapped, 50, 128).status == Status::violated);
}

TEST_CASE("verify_pair: deterministic reports") {
    const VerificationReport a = verify_pair(sf_d_bounds(SfK::three, 4), 200, 128);
    const VerificationReport b = verify_pair(sf_d_bounds(SfK::three, 4), 200, 128);
    CHECK(a.status == b.status);
    CHECK(a.min_lower_margin == b.min_lower_margin);
    CHECK(a.min_upper_margin == b.min_upper_margin);
    CHECK(a.max_gap == b.max_gap);
    CHECK(a.argmax_x == b.argmax_x);
}

TEST_CASE("verify_pair preconditions") {
    CHECK_THROWS_AS(verify_pair(wilker_bounds(3), 1, 128), std::invalid_argument);
    CHECK_THROWS_AS(verify_pair(wilker_bounds(3), 100, 16), std::invalid_argument);
}

TEST_CASE("wilker_error_table reproduces the reference sup values") {
    const auto rows = wilker_error_table({3, 4, 5, 6}, 256);
    REQUIRE(rows.size() == 4);
    const char* expected[] = {
        "0.00191501118086268953204051062529122638",
        "0.000919303464364165546600481952276700990",
        "0.000202958771715982003413884198185924180",
        "0.0000519654822293265063633948354050742822",
    };
    for (size_t i = 0; i < 4; ++i) {
        CHECK(rows[i].m == 3 + i);
        CHECK((rows[i].sup_gap - BigFloat::from_decimal(expected[i], 256)).abs() <
              BigFloat::from_decimal("1e-30", 64));
    }
    CHECK_THROWS_AS(wilker_error_table({2}, 256), OrderTooSmall);
}

TEST_CASE("max_gap: wilker gap peaks at the right endpoint") {
    const auto [x, gap] = max_gap(wilker_bounds(3), 192);
    CHECK(x > BigFloat::from_decimal("1.5707", 64));
    CHECK((gap - BigFloat::from_decimal("0.00191501118086268953204051062529122638", 192)).abs() <
          BigFloat::from_decimal("1e-25", 64));
}

TEST_CASE("max_gap: sf_e order 3, cross-checked against a brute-force scan") {
    const BoundPair pair = sf_e_bounds(3);
    const auto [x, gap] = max_gap(pair, 192);

    BigFloat brute(192);
    const BigFloat one = BigFloat::from_long(1, 192);
    for (unsigned i = 0; i <= 2000; ++i) {
        const BigFloat xi = div(BigFloat::from_ulong(i, 192), BigFloat::from_ulong(2000, 192), 192);
        const BigFloat g = eval_bound(pair.upper, xi, 192) - eval_bound(pair.lower, xi, 192);
        if (g > brute) brute = g;
    }
    CHECK(gap >= brute - BigFloat::from_decimal("1e-40", 64));
    CHECK((gap - BigFloat::from_decimal("0.0559153744139442382789407392587990611", 192)).abs() <
          BigFloat::from_decimal("1e-30", 64));
    CHECK(x > BigFloat::from_decimal("0.999", 64));
}

TEST_CASE("max_gap: identical sides give zero gap") {
    const PiConstant q(BigRational(5, 7));
    const PiConstant b(BigRational(1));
    const BoundPair degenerate = wd_bound_pair({PiConstant(), q}, 1, q, b);
    const auto [x, gap] = max_gap(degenerate, 128);
    CHECK(gap.is_zero());
}
