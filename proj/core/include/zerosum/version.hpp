#pragma once

namespace zerosum {

// Bumped whenever enumeration output could change; cache files carry this
// stamp in their name and are recomputed on mismatch.
inline constexpr int kEngineVersion = 1;

// Version of the on-disk JSON schemas (atom cache, poset export).
inline constexpr int kSchemaVersion = 1;

}  // namespace zerosum
