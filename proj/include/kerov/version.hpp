#pragma once

namespace kerov {

inline constexpr const char* version = "0.1.0";

// Recorded in every output header so runs can be reproduced in other languages.
inline constexpr const char* rng_algorithm =
    "xoshiro256++ (splitmix64-derived per-stream state, Box-Muller cosine normals)";

}  // namespace kerov
