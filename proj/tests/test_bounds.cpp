#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pda/bounds.hpp"
#include "pda/combinatorics.hpp"

using namespace pda;

namespace {

// Independent nested-bound implementation: the recursive form
//   B(F, K, Z) = ceil( (K(F-Z) + (F-1) B(F-1, K', Z)) / F ) style chain,
// evaluated here directly as the textbook telescoping sum of ceilings.
long long nested_reference(int F, int K, int Z) {
    long long total = 0;
    long long t = K;
    for (int j = 1; j <= F - Z; ++j) {
        t = ceil_div(t * (F - Z - j + 1), F - j + 1);
        total += t;
    }
    return total;
}

}  // namespace

TEST_CASE("basic bound values") {
    CHECK(lower_bound_basic(5, 7, 3).value == 4);
    CHECK(lower_bound_basic(4, 6, 2).value == 4);
    CHECK(lower_bound_basic(4, 3, 2).value == 2);
    CHECK(lower_bound_basic(5, 5, 5).value == 0);
}

TEST_CASE("nested bound matches the independent reference") {
    for (int F = 1; F <= 12; ++F)
        for (int Z = 0; Z < F; ++Z)
            for (int K = 1; K <= 40; ++K)
                CHECK(lower_bound_nested(F, K, Z).value == nested_reference(F, K, Z));
}

TEST_CASE("nested dominates basic; strictly at (4,3,2)") {
    for (int F = 1; F <= 12; ++F)
        for (int Z = 0; Z < F; ++Z)
            for (int K = 1; K <= 40; ++K)
                CHECK(lower_bound_nested(F, K, Z).value >= lower_bound_basic(F, K, Z).value);
    CHECK(lower_bound_nested(4, 3, 2).value == 3);
    CHECK(lower_bound_basic(4, 3, 2).value == 2);
}

TEST_CASE("frequency bound") {
    auto b = lower_bound_frequency(5, 10, 2);
    CHECK(b.value == (5 - 2 - 1) * 3 + 1);
    CHECK(!b.assumption.empty());
}

TEST_CASE("rpda feasibility") {
    CHECK(rpda_feasibility(5, 10, 2).feasible);   // the recursive family hits it
    CHECK(!rpda_feasibility(5, 7, 2).feasible);   // integral quotient, K not C(F,Z)-multiple
    CHECK(!rpda_feasibility(3, 2, 1).feasible);   // K(F-Z) <= (Z+1)(F-Z-1) boundary
}

TEST_CASE("known values: simple families") {
    CHECK(best_known_s(5, 9, 5)->lo == 0);
    CHECK(best_known_s(3, 4, 0)->lo == 12);
    CHECK(best_known_s(6, 6, 5)->lo == 1);
    CHECK(best_known_s(8, 4, 6)->lo == 2);   // stacked blocks, F >= (F-Z)K
    CHECK(best_known_s(4, 2, 2)->lo == 2);
    CHECK(best_known_s(5, 2, 3)->lo == 2);   // K=2 with F < 2Z
    CHECK(best_known_s(5, 2, 2)->lo == 4);   // K=2 with F >= 2Z
}

TEST_CASE("known values: Z=1 formula") {
    CHECK(best_known_s(5, 5, 1)->lo == 10);
    CHECK(best_known_s(5, 10, 1)->lo == 20);
    CHECK(best_known_s(5, 6, 1)->lo == 14);
    CHECK(best_known_s(4, 5, 1)->lo == 9);
    CHECK(best_known_s(4, 6, 1)->lo == 11);
}

TEST_CASE("known values: recursive family and its transpose") {
    CHECK(best_known_s(5, 10, 2)->lo == 10);
    CHECK(best_known_s(6, 20, 3)->lo == 15);
    CHECK(best_known_s(5, 9, 3)->lo == 5);    // one dropped column, same S
    CHECK(best_known_s(10, 5, 4)->lo == 10);  // transpose of the (5, Z=2) array
}

TEST_CASE("known values: closed forms for F=4,5") {
    // s(4,K,2)
    const long long f4[] = {2, 2, 3, 4, 4, 4, 6, 6, 7, 8, 8, 8};
    for (int K = 1; K <= 12; ++K) CHECK(best_known_s(4, K, 2)->lo == f4[K - 1]);
    // s(5,K,3)
    const long long f53[] = {2, 2, 3, 3, 4, 4, 5, 5, 5, 5};
    for (int K = 1; K <= 10; ++K) CHECK(best_known_s(5, K, 3)->lo == f53[K - 1]);
    // s(5,K,2) away from the contested K
    CHECK(best_known_s(5, 3, 2)->lo == 5);
    CHECK(best_known_s(5, 4, 2)->lo == 6);
    CHECK(best_known_s(5, 5, 2)->lo == 7);
    CHECK(best_known_s(5, 6, 2)->lo == 8);
    CHECK(best_known_s(5, 10, 2)->lo == 10);
    CHECK(best_known_s(5, 19, 2)->lo == 20);
}

TEST_CASE("known values: documented disagreement at (5,7,2) and note at (5,8,2)") {
    auto kv = best_known_s(5, 7, 2);
    REQUIRE(kv.has_value());
    CHECK(!kv->exact());
    CHECK(kv->lo == 9);
    CHECK(kv->hi == 10);
    CHECK(!kv->conflict_note.empty());

    kv = best_known_s(5, 8, 2);
    REQUIRE(kv.has_value());
    CHECK(kv->exact());
    CHECK(kv->lo == 10);
    CHECK(!kv->conflict_note.empty());
}

TEST_CASE("known values: square and near-square cases") {
    CHECK(best_known_s(6, 6, 2)->lo == 11);
    CHECK(best_known_s(7, 7, 2)->lo == 17);
    CHECK(best_known_s(8, 8, 2)->lo == 23);
    CHECK(best_known_s(6, 6, 3)->lo == 6);
    CHECK(best_known_s(7, 7, 3)->lo == 10);
    CHECK(best_known_s(7, 7, 4)->lo == 6);
    CHECK(best_known_s(7, 7, 5)->lo == 4);
    CHECK(best_known_s(8, 8, 5)->lo == 6);
    CHECK(best_known_s(12, 12, 9)->lo == 6);
    for (int t = 1; t <= 5; ++t) {
        auto kv = best_known_s(3 * t, 3 * t, 3 * t - 2);
        REQUIRE(kv.has_value());
        CHECK(kv->lo == (t == 1 ? 3 : 3));
    }
    CHECK(best_known_s(8, 12, 6)->lo == 4);
    CHECK(best_known_s(10, 20, 8)->lo == 5);
}

TEST_CASE("known values: K=4, Z=3 column") {
    const long long f43[] = {1, 3, 4, 8, 10, 12, 14, 17, 18};
    for (int F = 4; F <= 12; ++F) CHECK(best_known_s(F, 4, 3)->lo == f43[F - 4]);
    for (int F = 13; F <= 20; ++F) CHECK(best_known_s(F, 4, 3)->lo == 4LL * F - 30);
}

TEST_CASE("known values are never below the basic bound") {
    for (int F = 1; F <= 10; ++F)
        for (int Z = 0; Z <= F; ++Z)
            for (int K = 1; K <= 40; ++K)
                if (auto kv = best_known_s(F, K, Z))
                    CHECK(kv->lo >= lower_bound_basic(F, K, Z).value);
}
