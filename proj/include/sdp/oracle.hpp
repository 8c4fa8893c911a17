#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

// Exhaustive backtracking over simple paths from s. Ground truth for every
// other solver; correct but exponential, intended for n up to ~20.

// All f-conforming s-t paths in deterministic order (neighbors visited by
// ascending edge index). Stops early after `limit` certificates if given.
std::vector<PathCertificate> oracle_enumerate(const Instance& inst,
                                              std::optional<long long> limit = std::nullopt);

// Yes with the first certificate found, else No. Respects max_vertices.
SolveOutcome oracle_exists(const Instance& inst);

// Minimum-vertex-count certificate via branch and bound; No when no conforming
// path exists or the minimum exceeds max_vertices.
SolveOutcome oracle_shortest(const Instance& inst);

// oracle_exists with a wall-clock budget; Inconclusive on timeout.
SolveOutcome oracle_exists_bounded(const Instance& inst, std::chrono::milliseconds budget);

} // namespace sdp
