#pragma once

#include <cstdint>

namespace lda {

// Every potentially unbounded search in the library draws from one of these
// caps. Exhausting a cap raises BudgetExceeded; it never degrades into a
// wrong boolean. The defaults are the values the acceptance suite pins.
struct Budget {
    // Word-problem engine: number of expansion insertions one compare() may
    // perform, and the leaf-count ceiling for explored expansions
    // (max(floor, factor * (size(u) + size(v)))).
    std::uint64_t compare_steps = 400000;
    std::uint32_t expansion_size_factor = 4;
    std::uint32_t expansion_size_floor = 32;

    // Laver-table refutation: deepest table level consulted (level n has 2^n
    // elements), both for equality refutation and for candidate pruning.
    // Every shifted generator assignment into that table is checked, so a
    // deeper table refutes strictly more pairs at linear extra cost.  Depth
    // matters in practice: some 7-leaf pairs are separated by no table below
    // level 9.
    std::uint32_t table_levels = 10;

    // Left-division fallback: candidate quotients are enumerated up to
    // quotient_size_factor * size(b) leaves.
    std::uint32_t quotient_size_factor = 4;

    // Square/nth root searches: leaf cap for enumerated root candidates.
    std::uint32_t root_candidate_size = 8;

    // Sigma rewriting: insertions for one sigma_equiv search.
    std::uint64_t sigma_steps = 400000;

    // Division form computation: merge-step budget per division_form call.
    std::uint64_t df_steps = 1u << 20;

    // Hard leaf-count cap on any constructed term (right powers and friends).
    std::uint32_t max_term_size = 1u << 20;

    // Cone searches: how many stage lifts a square-root or equation search
    // may try beyond the canonical stage.
    std::uint32_t cone_stage_lifts = 6;

    // Model probes: leaf cap and tuple budget for witness enumeration.
    std::uint32_t probe_term_size = 8;
    std::uint64_t probe_tuples = 200000;

    // Uniform multiplier (CLI --budget). Scales every cap above.
    Budget scaled(double factor) const {
        Budget b = *this;
        auto mul_u64 = [factor](std::uint64_t v) {
            double x = static_cast<double>(v) * factor;
            return x < 1.0 ? std::uint64_t{1} : static_cast<std::uint64_t>(x);
        };
        auto mul_u32 = [factor](std::uint32_t v) {
            double x = static_cast<double>(v) * factor;
            if (x < 1.0) return std::uint32_t{1};
            if (x > 4294967295.0) return std::uint32_t{4294967295u};
            return static_cast<std::uint32_t>(x);
        };
        b.compare_steps = mul_u64(b.compare_steps);
        b.expansion_size_floor = mul_u32(b.expansion_size_floor);
        b.table_levels = mul_u32(b.table_levels);
        if (b.table_levels > 10) b.table_levels = 10;  // 2^10 rows is the hard table cap
        b.root_candidate_size = mul_u32(b.root_candidate_size);
        b.sigma_steps = mul_u64(b.sigma_steps);
        b.df_steps = mul_u64(b.df_steps);
        b.cone_stage_lifts = mul_u32(b.cone_stage_lifts);
        b.probe_term_size = mul_u32(b.probe_term_size);
        b.probe_tuples = mul_u64(b.probe_tuples);
        return b;
    }
};

}  // namespace lda
