#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdp/core.hpp"

namespace sdp {

enum class Strategy { Auto, Oracle, Statespace, Fen, Cactus, ColorCoding };

struct PortfolioPolicy {
    Strategy strategy = Strategy::Auto;
    int fen_budget = 20;
    int type_budget = 24;
    int color_budget = 64;
    double epsilon = 0.05;
    std::uint64_t seed = 0;
    long long time_budget_ms = 30000;   // oracle fallback budget
};

struct PortfolioResult {
    SolveOutcome outcome;
    std::string strategy;               // strategy that produced the outcome
    std::vector<std::string> notes;     // per-strategy skip/failure reasons
};

// Auto order: trivial s=t, cactus (existence), small fen, small |D(G)|,
// universal-source Turing split (existence), color coding (bounded k),
// time-boxed oracle. Every Yes certificate is re-verified before returning.
PortfolioResult solve_portfolio(const Instance& inst, const PortfolioPolicy& policy = {});

} // namespace sdp
