#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fixig/predictors.hpp"

using namespace fixig;

namespace {

// all descending partitions of n into exactly `parts` parts
void partitions(int remaining, int parts, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (remaining >= 1 && remaining <= max_part) {
            cur.push_back(remaining);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int p = std::min(max_part, remaining - parts + 1); p >= (remaining + parts - 1) / parts;
         --p) {
        cur.push_back(p);
        partitions(remaining - p, parts - 1, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("complete-graph predictor on known profiles") {
    CHECK(predicted_fix_complete(5, PreimageProfile{{3, 2}}) == 5);
    CHECK(predicted_fix_complete(5, PreimageProfile{{4, 1}}) == 5);
    CHECK(predicted_fix_complete(6, PreimageProfile{{3, 1, 1, 1}}) == 5);
    CHECK_THROWS_AS(predicted_fix_complete(5, PreimageProfile{{5}}), std::invalid_argument);
    CHECK_THROWS_AS(predicted_fix_complete(5, PreimageProfile{{1, 1, 1, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(predicted_fix_complete(6, PreimageProfile{{3, 2}}), std::invalid_argument);
}

TEST_CASE("predictor output stays inside the theorem's bounds") {
    for (int n = 3; n <= 12; ++n)
        for (int s = 2; s <= n - 1; ++s) {
            std::vector<std::vector<int>> profs;
            std::vector<int> cur;
            partitions(n, s, n, cur, profs);
            for (const auto& counts : profs) {
                int fix = predicted_fix_complete(n, PreimageProfile{counts});
                CHECK(fix >= 2 * (n - s) - 1);
                CHECK(fix <= 2 * n - s - 3);
            }
        }
}

TEST_CASE("corollary profiles reproduce their closed forms") {
    for (int n = 4; n <= 12; ++n)
        for (int s = 3; s <= n - 1; ++s) {
            if (n - s >= 2) {
                std::vector<int> c{n - s, 2};
                c.insert(c.end(), s - 2, 1);
                CHECK(predicted_fix_complete(n, PreimageProfile{c}) == 2 * n - (s + 4));
            }
            {
                std::vector<int> c{n - s + 1};
                c.insert(c.end(), s - 1, 1);
                CHECK(predicted_fix_complete(n, PreimageProfile{c}) == 2 * n - (s + 3));
            }
            if (n % s == 0 && n / s >= 2) {
                std::vector<int> c(s, n / s);
                CHECK(predicted_fix_complete(n, PreimageProfile{c}) == 2 * (n - s) - 1);
            }
        }
}

TEST_CASE("matching-deletion predictor") {
    CHECK(predicted_fix_complete_minus_matching(6, 1) == 7);
    CHECK(predicted_fix_complete_minus_matching(6, 3) == 5);
    CHECK(predicted_fix_complete_minus_matching(7, 3, ImageKind::saturated) == 6);
    CHECK(predicted_fix_complete_minus_matching(7, 3, ImageKind::twin) == 5);
    CHECK(predicted_fix_complete_minus_matching(5, 1) == 5);
    CHECK_THROWS_AS(predicted_fix_complete_minus_matching(6, 4), std::invalid_argument);
    CHECK_THROWS_AS(predicted_fix_complete_minus_matching(6, 0), std::invalid_argument);
    // the odd final case requires an image kind
    CHECK_THROWS_AS(predicted_fix_complete_minus_matching(7, 3), std::invalid_argument);
}

TEST_CASE("equality characterization orders") {
    CHECK(equality_complete_orders(2) == std::vector<int>{4});
    CHECK(equality_complete_orders(3) == std::vector<int>{5, 6});
    CHECK(equality_complete_orders(4) == std::vector<int>{6, 7, 8});
    for (int s = 2; s <= 10; ++s)
        CHECK(equality_complete_orders(s).size() == static_cast<std::size_t>(s - 1));
    CHECK_THROWS_AS(equality_complete_orders(1), std::invalid_argument);
}
