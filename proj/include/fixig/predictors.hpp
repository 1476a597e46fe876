// Closed-form predictors for fixing numbers of functigraphs of complete
// graphs and of complete graphs minus a matching, plus the equality
// characterization. These are the formulas the verification suites check
// against brute force.
#pragma once

#include <vector>

#include "fixig/functigraph.hpp"

namespace fixig {

// Predicted fix(F_{K_n}) for a function with the given preimage profile,
// 1 < s < n, n >= 3. With j = #(profile entries equal to 1):
//   j <= 1  ->  2(n-s)-1
//   else    ->  2n-2s+j-2
// Always lies in [2(n-s)-1, 2n-s-3].
int predicted_fix_complete(int n, const PreimageProfile& profile);

enum class ImageKind { twin, saturated, unspecified };

// Predicted fix(F_{G_i}) where G_i = K_n minus i disjoint edges and g is
// constant. The image kind matters only for odd n with i = floor(n/2):
//   i <= floor(n/2)-1          -> 2n-2i-3
//   n even, i = n/2            -> n-1
//   n odd,  i = floor(n/2)     -> 2*floor(n/2)-1 (twin) or 2*floor(n/2) (saturated)
int predicted_fix_complete_minus_matching(int n, int removed,
                                          ImageKind kind = ImageKind::unspecified);

// Orders m of complete graphs admitting fix(K_m) = fix(F_{K_m}) at image
// size s: {s+2, s+3, ..., 2s}, s >= 2 (s-1 of them).
std::vector<int> equality_complete_orders(int s);

} // namespace fixig
