#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tropfrieze/example.hpp"
#include "tropfrieze/theta.hpp"

using namespace tropfrieze;

namespace {

std::size_t count_status(const CheckReport& report, CheckStatus s) {
    std::size_t n = 0;
    for (const auto& item : report)
        if (item.status == s) ++n;
    return n;
}

}  // namespace

TEST_CASE("theta reproduces the golden columns") {
    const auto spec = builtin_ot_a4();
    const auto fx = builtin_fixtures();
    const auto theta = theta_from_spec(spec, index_table(spec));
    REQUIRE(theta.hom.domain().size() == 4);
    CHECK(theta.hom.domain().label(0) == "S(P(1))");
    for (std::size_t j = 0; j < 4; ++j) CHECK(theta.hom.column(j) == fx.theta_expected[j]);
}

TEST_CASE("theta on sums of simples") {
    const auto spec = builtin_ot_a4();
    const auto theta = theta_from_spec(spec, index_table(spec));
    const Basis sb = spec.simple_basis();
    const Basis tb = spec.tilting_basis();

    CHECK(theta.hom.apply(FreeAbelianElement(sb, {1, 1, 0, 0})) ==
          FreeAbelianElement(tb, {-1, 1, 0, 0}));
    // sum of all four columns of the golden table
    CHECK(theta.hom.apply(FreeAbelianElement(sb, {1, 1, 1, 1})) ==
          FreeAbelianElement(tb, {-1, 1, -1, 1}));
}

TEST_CASE("alternating sums over specific angles") {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const Basis tb = spec.tilting_basis();

    // window resolving I(4): P(1) -> P(2) -> P(3) -> P(4) -> I(4)
    CHECK(angle_alternating_sum(spec, table, spec.angles[0]).is_zero());
    // trivial angle I(4) -> 0 -> 0 -> 0 -> P(1)
    CHECK(angle_alternating_sum(spec, table, spec.angles[9 + 4]) ==
          FreeAbelianElement(tb, {0, 1, -1, 1}));
    // trivial angle S3P(1) -> 0 -> 0 -> 0 -> P(2)
    CHECK(angle_alternating_sum(spec, table, spec.angles[9 + 5]) ==
          FreeAbelianElement(tb, {-1, 1, 0, 0}));
}

TEST_CASE("additivity with error term holds on all labelled angles") {
    const auto spec = builtin_ot_a4();
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    const auto report = verify_additivity(spec, table, theta);
    REQUIRE(report.size() == 18);
    CHECK(count_status(report, CheckStatus::pass) == 18);
}

TEST_CASE("angles without labels are skipped") {
    auto spec = builtin_ot_a4();
    spec.angles[0].image_class.reset();
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    const auto report = verify_additivity(spec, table, theta);
    CHECK(count_status(report, CheckStatus::skipped) == 1);
    CHECK(count_status(report, CheckStatus::pass) == 17);
}

TEST_CASE("a wrong label fails with both sides listed") {
    auto spec = builtin_ot_a4();
    spec.angles[0].image_class = FreeAbelianElement(spec.simple_basis(), {0, 2, 0, 0});
    const auto table = index_table(spec);
    const auto theta = theta_from_spec(spec, table);
    const auto report = verify_additivity(spec, table, theta);
    REQUIRE(report.size() == 18);
    CHECK(report[0].status == CheckStatus::fail);
    CHECK(report[0].detail.find("sum=") != std::string::npos);
    CHECK(report[0].detail.find("theta=") != std::string::npos);
}

TEST_CASE("every simple needs a determining angle") {
    auto spec = builtin_ot_a4();
    // window 7 carries the only unit label for S(P(3))
    spec.angles[7].image_class.reset();
    CHECK_THROWS_WITH_AS(theta_from_spec(spec, index_table(spec)),
                         doctest::Contains("S(P(3))"), ThetaError);
}

TEST_CASE("conflicting determining angles are rejected") {
    auto spec = builtin_ot_a4();
    // relabelling this trivial angle as S(P(2)) contradicts window 6
    spec.angles[9 + 4].image_class = FreeAbelianElement(spec.simple_basis(), {0, 1, 0, 0});
    CHECK_THROWS_WITH_AS(theta_from_spec(spec, index_table(spec)),
                         doctest::Contains("inconsistent"), ThetaError);
}

TEST_CASE("different determining sets give the same map") {
    const auto base = builtin_ot_a4();
    auto pruned = base;
    // drop the two trivial angles that duplicate window labels
    pruned.angles[9 + 4].image_class.reset();
    pruned.angles[9 + 8].image_class.reset();
    const auto t1 = theta_from_spec(base, index_table(base));
    const auto t2 = theta_from_spec(pruned, index_table(pruned));
    CHECK(t1.hom == t2.hom);
}

TEST_CASE("dichotomy across the declared pairs") {
    const auto spec = builtin_ot_a4();
    const auto report = verify_dichotomy(spec);
    REQUIRE(report.size() == 9);
    CHECK(count_status(report, CheckStatus::pass) == 9);
}

TEST_CASE("dichotomy edge cases") {
    SUBCASE("missing labels are skipped, not failed") {
        auto spec = builtin_ot_a4();
        spec.angles[spec.exchange_pairs[0].angle01].image_class.reset();
        const auto report = verify_dichotomy(spec);
        CHECK(report[0].status == CheckStatus::skipped);
    }
    SUBCASE("both labels nonzero fails") {
        auto spec = builtin_ot_a4();
        // pair 0 references window 5 (label S(1)) and trivial 0 (label 0)
        spec.angles[9].image_class = FreeAbelianElement(spec.simple_basis(), {0, 0, 1, 0});
        const auto report = verify_dichotomy(spec);
        CHECK(report[0].status == CheckStatus::fail);
    }
    SUBCASE("requires the Calabi-Yau hypothesis") {
        auto spec = builtin_ot_a4();
        spec.calabi_yau_2d = false;
        CHECK_THROWS_AS(verify_dichotomy(spec), Error);
    }
}
