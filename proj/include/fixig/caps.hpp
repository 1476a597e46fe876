// Resource caps for the exact solvers. Everything in this library is
// exhaustive, so each entry point refuses inputs past its cap instead of
// silently running forever.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixig {

struct Caps {
    int aut_max_n = 32;                         // automorphism search input size
    std::uint64_t aut_max_elements = 10'000'000; // explicit group element cap
    int mdim_max_n = 16;                        // metric dimension input size
    int enum_graphs_max_n = 6;                  // connected-graph enumeration
    int enum_functions_max_n = 5;               // all-functions sweep (n^n of them)

    // Defaults, with overrides from $FIXIG_CAPS_DIR/caps.conf when present
    // (key=value lines, '#' comments).
    static const Caps& defaults();

    // Parse "key=value"; unknown keys are errors.
    void set(const std::string& key, const std::string& value);
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fixig
