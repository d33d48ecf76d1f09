#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "polybounds/bernoulli.hpp"
#include "polybounds/errors.hpp"
#include "polybounds/pi_constant.hpp"
#include "polybounds/rational.hpp"
#include "test_util.hpp"

using namespace polybounds;

TEST_CASE("BigRational canonical form and arithmetic") {
    BigRational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(2, 3) + BigRational(1, 6) == BigRational(5, 6));
    CHECK(BigRational(1, 3) * BigRational(3, 5) == BigRational(1, 5));
    CHECK(BigRational(1, 3) - BigRational(1, 3) == BigRational(0));
    CHECK(BigRational(7, 2) / BigRational(7, 2) == BigRational(1));
    CHECK(BigRational(-1, 2) < BigRational(1, 3));
    CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK(BigRational::from_string("-16/14175").to_string() == "-16/14175");
    CHECK(BigRational::from_string("42").to_string() == "42");
}

TEST_CASE("bernoulli: base cases and convention") {
    CHECK(bernoulli(0) == BigRational(1));
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(8) == BigRational(-1, 30));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
}

TEST_CASE("bernoulli: odd indices >= 3 vanish") {
    for (unsigned n = 3; n <= 199; n += 2) CHECK(bernoulli(n).is_zero());
}

TEST_CASE("bernoulli: defining recurrence sum C(m+1,j) B_j = 0 up to m = 200") {
    for (unsigned m = 1; m <= 200; ++m) {
        BigRational sum(0);
        for (unsigned j = 0; j <= m; ++j)
            sum += BigRational(binomial(m + 1, j), 1) * bernoulli(j);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("PiConstant ring laws on random instances") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        const PiConstant a = testutil::random_pi_constant(rng);
        const PiConstant b = testutil::random_pi_constant(rng);
        const PiConstant c = testutil::random_pi_constant(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == PiConstant());
        CHECK(a + PiConstant() == a);
        CHECK(a * PiConstant(1) == a);
    }
}

TEST_CASE("pi_eval: rational and mixed constants") {
    CHECK(pi_eval(PiConstant(1), 64) == BigFloat::from_long(1, 64));

    // pi/2 - 3/2
    PiConstant c = PiConstant::pi_power(1, BigRational(1, 2)) + PiConstant(BigRational(-3, 2));
    BigFloat v = pi_eval(c, 128);
    BigFloat expected = BigFloat::from_decimal("0.0707963267948966192313216916397514420986", 192);
    CHECK((v - expected).abs() < BigFloat::from_decimal("1e-37", 64));

    // f(pi/2) = 2/pi - pi^3/45 + pi^5/3780
    PiConstant f = PiConstant::pi_power(-1, BigRational(2)) +
                   PiConstant::pi_power(3, BigRational(-1, 45)) +
                   PiConstant::pi_power(5, BigRational(1, 3780));
    v = pi_eval(f, 128);
    expected = BigFloat::from_decimal("0.0285489902617867818381622610051152284271", 192);
    CHECK((v - expected).abs() < BigFloat::from_decimal("1e-37", 64));
}

TEST_CASE("pi_eval: two-precision consistency within the documented bound") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const PiConstant c = testutil::random_pi_constant(rng);
        for (mpfr_prec_t p : {64L, 96L, 128L}) {
            const BigFloat lo = pi_eval(c, p);
            const BigFloat hi = pi_eval(c, 2 * p);
            const BigFloat budget =
                add(mul(BigFloat::from_long(8, 64), hi.abs(), 64).mul_2si(-p),
                    BigFloat::from_long(8, 64).mul_2si(-p), 64);
            CHECK((lo - hi).abs() <= budget);
        }
    }
}

TEST_CASE("pi_sign: examples from the Shafer-Fink coefficient signs") {
    CHECK(pi_sign(PiConstant()) == 0);
    // 3/40 - 5 pi/216 > 0 (kept positive coefficient)
    CHECK(pi_sign(PiConstant(BigRational(3, 40)) + PiConstant::pi_power(1, BigRational(-5, 216))) == 1);
    // 1 - pi/3 < 0 (retained negative coefficient)
    CHECK(pi_sign(PiConstant(1) + PiConstant::pi_power(1, BigRational(-1, 3))) == -1);
    CHECK(pi_sign(PiConstant(BigRational(-7, 3))) == -1);
    CHECK(pi_sign(PiConstant::pi_power(-4, BigRational(1, 9999))) == 1);
}

TEST_CASE("pi_sign agrees with pi_eval at 512 bits away from zero") {
    std::mt19937_64 rng(99);
    const BigFloat tiny = BigFloat::from_long(1, 64).mul_2si(-256);
    for (int i = 0; i < 150; ++i) {
        const PiConstant c = testutil::random_pi_constant(rng);
        const BigFloat v = pi_eval(c, 512);
        if (v.abs() > tiny) CHECK(pi_sign(c) == v.sign());
    }
}

TEST_CASE("pi_eval survives deep cancellation") {
    // pi minus its 39-decimal truncation: the value is ~1.7e-40, about 132
    // bits below the term magnitudes, so the escalation loop must widen
    // several times before the quarter-ulp bound holds.
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 39);
    const BigRational approx(mpz_class("3141592653589793238462643383279502884197"), den);
    const PiConstant c = PiConstant::pi_power(1) - PiConstant(approx);
    const BigFloat lo = pi_eval(c, 64);
    const BigFloat hi = pi_eval(c, 320);
    CHECK(lo.sign() == 1);
    CHECK(pi_sign(c) == 1);
    CHECK((lo - hi).abs() <= hi.abs().mul_2si(-60));
    // truncation, not rounding, so the residual is below 1e-40
    CHECK(hi < BigFloat::from_decimal("1e-39", 64));
    CHECK(hi > BigFloat::from_decimal("1e-41", 64));
}

TEST_CASE("pi_sign respects the precision cap") {
    // pi - 355/113 is about 2.7e-7: resolvable at 64 bits but not under a cap
    // below the working floor.
    PiConstant nearpi = PiConstant::pi_power(1) + PiConstant(BigRational(-355, 113));
    CHECK(pi_sign(nearpi) == -1);
    CHECK_THROWS_AS(pi_sign(nearpi, 2), PrecisionCapExceeded);
}

TEST_CASE("memo tables are safe under concurrent mixed callers") {
    const BigRational b120 = bernoulli(120);
    std::vector<std::thread> workers;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            for (unsigned i = 0; i < 40; ++i) {
                if (!(bernoulli(200 + (t * 40 + i) % 64) == bernoulli(200 + (t * 40 + i) % 64)))
                    ++failures;
                if (!(bernoulli(120) == b120)) ++failures;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(failures == 0);
}
