#include "fixig/predictors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixig {

int predicted_fix_complete(int n, const PreimageProfile& profile) {
    int s = profile.parts();
    if (n < 3) throw std::invalid_argument("predicted_fix_complete requires n >= 3");
    if (s <= 1 || s >= n)
        throw std::invalid_argument("predicted_fix_complete requires 1 < s < n");
    if (profile.total() != n)
        throw std::invalid_argument("profile entries must sum to n");
    int singles = static_cast<int>(
        std::count(profile.counts.begin(), profile.counts.end(), 1));
    if (singles <= 1) return 2 * (n - s) - 1;
    return 2 * n - 2 * s + singles - 2;
}

int predicted_fix_complete_minus_matching(int n, int removed, ImageKind kind) {
    if (n < 3) throw std::invalid_argument("matching predictor requires n >= 3");
    if (removed < 1 || removed > n / 2)
        throw std::invalid_argument("matching predictor requires 1 <= i <= n/2");
    int half = n / 2;
    if (removed <= half - 1) return 2 * n - 2 * removed - 3;
    if (n % 2 == 0) return n - 1;
    // n odd, removed == floor(n/2): exactly one saturated vertex remains and
    // the answer depends on whether the constant image is it or a twin.
    switch (kind) {
        case ImageKind::twin: return 2 * half - 1;
        case ImageKind::saturated: return 2 * half;
        case ImageKind::unspecified:
            throw std::invalid_argument(
                "image kind (twin|saturated) required for odd n with i = floor(n/2)");
    }
    throw std::invalid_argument("bad image kind");
}

std::vector<int> equality_complete_orders(int s) {
    if (s < 2) throw std::invalid_argument("equality_complete_orders requires s >= 2");
    std::vector<int> orders;
    orders.reserve(s - 1);
    for (int m = s + 2; m <= 2 * s; ++m) orders.push_back(m);
    return orders;
}

} // namespace fixig
