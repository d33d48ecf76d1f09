#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polybounds/format.hpp"
#include "polybounds/series.hpp"
#include "test_util.hpp"

using namespace polybounds;

namespace {
PiConstant pc(const std::string& s) { return parse_exact(s); }
}  // namespace

TEST_CASE("wilker_c: leading zeros and the reference coefficients") {
    CHECK(wilker_c(0).is_zero());
    CHECK(wilker_c(1).is_zero());
    CHECK(wilker_c(2).is_zero());
    CHECK(wilker_c(3) == pc("16/14175"));
    CHECK(wilker_c(4) == pc("8/467775"));
    CHECK(wilker_c(5) == pc("3184/638512875"));
    CHECK(wilker_c(6) == pc("272/638512875"));
    CHECK(wilker_c(7) == pc("7264/162820783125"));
}

TEST_CASE("sf_d with k = 3: zeros and reference values") {
    CHECK(sf_d(SfK::three, 0).is_zero());
    CHECK(sf_d(SfK::three, 1).is_zero());
    CHECK(sf_d(SfK::three, 2) == pc("1/180"));
    CHECK(sf_d(SfK::three, 3) == pc("1/189"));
    CHECK(sf_d(SfK::three, 4) == pc("23/5184"));
    CHECK(sf_d(SfK::three, 5) == pc("629/171072"));
    CHECK(sf_d(SfK::three, 6) == pc("14929/4852224"));
}

TEST_CASE("sf_d with k = pi: the seven reference constants") {
    CHECK(sf_d(SfK::pi, 0) == pc("1 - 1/3*pi^1"));
    CHECK(sf_d(SfK::pi, 1) == pc("1/6 - 1/18*pi^1"));
    CHECK(sf_d(SfK::pi, 2) == pc("3/40 - 5/216*pi^1"));
    CHECK(sf_d(SfK::pi, 3) == pc("5/112 - 17/1296*pi^1"));
    CHECK(sf_d(SfK::pi, 4) == pc("35/1152 - 269/31104*pi^1"));
    CHECK(sf_d(SfK::pi, 5) == pc("63/2816 - 1163/186624*pi^1"));
    CHECK(sf_d(SfK::pi, 6) == pc("231/13312 - 10657/2239488*pi^1"));
}

TEST_CASE("sf_e: convention endpoints and reference values") {
    CHECK(sf_e(0) == pc("3"));
    CHECK(sf_e(1).is_zero());
    CHECK(sf_e(2) == pc("1/60"));
    CHECK(sf_e(3) == pc("11/840"));
    CHECK(sf_e(4) == pc("67/6720"));
    CHECK(sf_e(5) == pc("3461/443520"));
    CHECK(sf_e(6) == pc("29011/4612608"));
    // E(0) = 3 is what makes the x^7 upper tail come out as pi - 181/60.
    CHECK(sf_e(0) + sf_e(1) + sf_e(2) == pc("181/60"));
}

TEST_CASE("sequence shapes: d3 and e rational, dpi affine in pi") {
    for (unsigned m = 0; m <= 40; ++m) {
        CHECK(sf_d(SfK::three, m).is_rational());
        CHECK(sf_e(m).is_rational());
        CHECK(wilker_c(m).is_rational());
        const PiConstant dpi = sf_d(SfK::pi, m);
        for (const auto& [e, q] : dpi.terms()) {
            CHECK(e >= 0);
            CHECK(e <= 1);
        }
    }
}

TEST_CASE("positivity of every sequence through index 60") {
    for (unsigned k = 3; k <= 60; ++k) CHECK(pi_sign(wilker_c(k)) == 1);
    for (unsigned m = 2; m <= 60; ++m) {
        CHECK(pi_sign(sf_d(SfK::three, m)) == 1);
        CHECK(pi_sign(sf_d(SfK::pi, m)) == 1);
        CHECK(sf_e(m).rational_part().sign() == 1);
    }
}

TEST_CASE("CoeffSeq routes ids to the right sequences") {
    CHECK(CoeffSeq(SeqId::wilker_c).at(3) == wilker_c(3));
    CHECK(CoeffSeq(SeqId::sf_d3).at(2) == sf_d(SfK::three, 2));
    CHECK(CoeffSeq(SeqId::sf_dpi).at(0) == sf_d(SfK::pi, 0));
    CHECK(CoeffSeq(SeqId::sf_e).at(0) == sf_e(0));
}

TEST_CASE("split_nonneg: spec examples") {
    SUBCASE("already nonnegative input is untouched") {
        std::vector<PiConstant> in{PiConstant(), PiConstant(), PiConstant(BigRational(1, 180))};
        const SplitSeries s = split_nonneg(in);
        CHECK(s.negative_terms.empty());
        CHECK(s.nonneg == in);
    }
    SUBCASE("first three dpi coefficients: indices 0 and 1 are negative") {
        std::vector<PiConstant> in{sf_d(SfK::pi, 0), sf_d(SfK::pi, 1), sf_d(SfK::pi, 2)};
        const SplitSeries s = split_nonneg(in);
        REQUIRE(s.negative_terms.size() == 2);
        CHECK(s.negative_terms[0].first == 0);
        CHECK(s.negative_terms[0].second == pc("1 - 1/3*pi^1"));
        CHECK(s.negative_terms[1].first == 1);
        CHECK(s.negative_terms[1].second == pc("1/6 - 1/18*pi^1"));
        CHECK(s.nonneg[0].is_zero());
        CHECK(s.nonneg[1].is_zero());
        CHECK(s.nonneg[2] == pc("3/40 - 5/216*pi^1"));
    }
    SUBCASE("empty input") {
        const SplitSeries s = split_nonneg({});
        CHECK(s.nonneg.empty());
        CHECK(s.negative_terms.empty());
    }
}

TEST_CASE("split_nonneg round-trips index by index") {
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<PiConstant> in;
        std::uniform_int_distribution<int> len(0, 8);
        const int n = len(rng);
        for (int i = 0; i < n; ++i) in.push_back(testutil::random_pi_constant(rng, 3));
        const SplitSeries s = split_nonneg(in);
        REQUIRE(s.nonneg.size() == in.size());
        std::vector<PiConstant> rebuilt = s.nonneg;
        for (const auto& [idx, val] : s.negative_terms) rebuilt[idx] += val;
        for (size_t i = 0; i < in.size(); ++i) CHECK(rebuilt[i] == in[i]);
    }
}
