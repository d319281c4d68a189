#pragma once

// Decision procedures for the word problem of the free left distributive
// algebra: equality, the left-divisibility order, quotients, common right
// powers, square/nth roots, and bounded rewrite closures.
//
// Design notes:
//  - compare() runs a bidirectional confluent search. Both inputs grow
//    breadth-first sets of forward LD-expansions (u(vw) -> (uv)(uw) at any
//    position). Verdicts are literal certificates over interned ids:
//      Equal:   the expansion sets intersect (confluence).
//      Less:    an expansion of v has an expansion of u as a proper left
//               spine prefix (then v = u d1...dk up to LD).
//      Greater: symmetric.
//      Clash:   expansions of u and v share a literal left prefix (possibly
//               empty) followed by distinct generator leaves, i.e. ag <= u
//               and ah <= v with g != h.
//    Exactly one certificate is reachable for free-algebra inputs; hitting
//    the step or size cap first raises BudgetExceeded, never a wrong answer.
//  - Cheap sound negatives run before any search: the head generator and the
//    right depth are invariant under LD steps, and evaluation into a Laver
//    table commutes with LD-equality for every assignment of the generators,
//    so a mismatch under any of them refutes equality outright.
//  - All caches key on interned ids, so results are shared across calls.
//    Unordered containers are used only for membership; every iteration
//    that affects an answer runs over deterministic orders.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lda/config.hpp"
#include "lda/laver.hpp"
#include "lda/term.hpp"

namespace lda {

enum class CompareOutcome { Equal, Less, Greater, Clash };

const char* to_string(CompareOutcome o);

class LdEngine {
  public:
    LdEngine(TermUniverse& u, Budget budget);

    TermUniverse& universe() { return u_; }
    const Budget& budget() const { return budget_; }

    // All one-step forward expansions of t, deterministic position order.
    std::vector<TermId> forward_steps(TermId t);
    // All one-step backward contractions (inverse rewrites) of t.
    std::vector<TermId> backward_steps(TermId t);

    // Quadrichotomy. Throws BudgetExceeded when caps run out first.
    CompareOutcome compare(TermId a, TermId b);
    bool ld_equiv(TermId a, TermId b);

    // a | b: some c has b = ac up to LD (strict: never true for a = b).
    bool left_divides(TermId a, TermId b);
    // The c above, as a term. NotDivisible if a does not divide b.
    TermId quotient(TermId a, TermId b);

    // (n, m) with u^(n) = v^(m); the pair produced by the structural
    // recursion through powers of the generator. One-generator terms only.
    std::pair<std::uint32_t, std::uint32_t> common_power(TermId a, TermId b);

    // All square roots found within the candidate budget, enumeration order.
    std::vector<TermId> square_roots(TermId t);
    // First m-th root in enumeration order, if any surfaces within budget.
    std::optional<TermId> nth_root(TermId t, std::uint32_t m);

    // Sound equality refutation through table images (cheap, cached).
    bool table_refutes(TermId a, TermId b);

    // Everything connected to t by single LD steps (either direction)
    // through terms of at most size_cap leaves. complete reports whether
    // the walk closed before node_budget ran out.
    std::vector<TermId> bounded_closure(TermId t, std::uint32_t size_cap,
                                        std::uint64_t node_budget, bool* complete);
    // Is there such a connection from a to b? False only when the closure
    // finished exhaustively; BudgetExceeded when the budget ran out first.
    bool connected_within(TermId a, TermId b, std::uint32_t size_cap,
                          std::uint64_t node_budget);

    // Steps consumed by the most recent top-level operation.
    std::uint64_t last_steps() const { return last_steps_; }

  private:
    TermUniverse& u_;
    Budget budget_;

    std::unordered_map<TermId, std::vector<TermId>> fwd_cache_;
    std::unordered_map<std::uint64_t, std::uint8_t> cmp_cache_;
    std::unordered_map<TermId, std::pair<std::uint32_t, std::uint32_t>> power_cache_;
    // (level, variant) -> per-term table image under that assignment.
    std::unordered_map<std::uint64_t, std::unordered_map<TermId, std::uint16_t>> image_cache_;
    // Term images always land in the subalgebra generated by the assigned
    // values, so order refutation may restrict multipliers to it. Per
    // (level, variant): that subalgebra, rows masked to its columns, and the
    // right-multiplication cones computed from them, one per source.
    struct ConeCtx {
        bool trivial = false;  // subalgebra is the whole table: refutes nothing
        std::vector<std::uint32_t> sub;
        std::vector<std::uint64_t> sub_mask;
        std::vector<std::uint64_t> srow_masks;
        std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> reach;
    };
    std::unordered_map<std::uint64_t, ConeCtx> cone_cache_;

    std::uint64_t last_steps_ = 0;

    CompareOutcome compare_impl(TermId a, TermId b);
    CompareOutcome search_compare(TermId a, TermId b);
    std::optional<CompareOutcome> refute_compare(TermId a, TermId b);
    bool cone_refutes_le(TermId a, TermId b);
    ConeCtx& cone_ctx(std::uint32_t level, std::uint32_t variant);
    const std::vector<std::uint64_t>& cone_reach(ConeCtx& cc, std::uint32_t level,
                                                 std::uint32_t source);
    bool equiv_impl(TermId a, TermId b);
    bool divides_impl(TermId a, TermId b);
    std::uint16_t table_image(TermId t, std::uint32_t level, std::uint32_t variant);
    std::uint32_t refutation_level() const;
    std::uint32_t refutation_variants() const;
    std::pair<std::uint32_t, std::uint32_t> power_align(TermId t);
};

}  // namespace lda
