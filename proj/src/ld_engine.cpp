#include "lda/ld_engine.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "lda/errors.hpp"

namespace lda {

namespace {

inline std::uint64_t pack2(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

// Outcome codes for the pair cache; stored for the (min,max) orientation.
inline CompareOutcome flip(CompareOutcome o) {
    if (o == CompareOutcome::Less) return CompareOutcome::Greater;
    if (o == CompareOutcome::Greater) return CompareOutcome::Less;
    return o;
}

// Assignment index that sends every generator to 1 (used when shifted
// assignments cannot cover it, i.e. with two or more generators).
constexpr std::uint32_t kAllOnes = 0xffffffffu;

// Number of terms with s leaves: Catalan(s-1) shapes times alphabet^s leaf
// labelings, saturating instead of overflowing.
std::uint64_t term_layer_count(std::uint32_t alphabet, std::uint32_t s) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;  // Catalan(0)
    for (std::uint32_t k = 0; k + 1 < s; ++k) {
        // C(k+1) = C(k) * 2(2k+1) / (k+2)
        if (c > cap / (2 * (2 * k + 1))) return cap;
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    for (std::uint32_t i = 0; i < s; ++i) {
        if (c > cap / alphabet) return cap;
        c *= alphabet;
    }
    return c;
}

}  // namespace

const char* to_string(CompareOutcome o) {
    switch (o) {
        case CompareOutcome::Equal: return "equal";
        case CompareOutcome::Less: return "less";
        case CompareOutcome::Greater: return "greater";
        case CompareOutcome::Clash: return "clash";
    }
    return "?";
}

LdEngine::LdEngine(TermUniverse& u, Budget budget) : u_(u), budget_(budget) {}

std::vector<TermId> LdEngine::forward_steps(TermId t) {
    auto it = fwd_cache_.find(t);
    if (it != fwd_cache_.end()) return it->second;
    std::vector<TermId> out;
    if (!u_.is_leaf(t)) {
        // Copy child ids up front: app() may grow the node store and node
        // references do not survive that.
        const TermId L = u_.left(t), R = u_.right(t);
        // Root redex first, then positions inside the left child, then the
        // right child: a fixed order keeps closures and searches canonical.
        if (!u_.is_leaf(R)) {
            const TermId RL = u_.left(R), RR = u_.right(R);
            out.push_back(u_.app(u_.app(L, RL), u_.app(L, RR)));
        }
        for (TermId l2 : forward_steps(L)) out.push_back(u_.app(l2, R));
        for (TermId r2 : forward_steps(R)) out.push_back(u_.app(L, r2));
    }
    if (fwd_cache_.size() < (1u << 22)) fwd_cache_.emplace(t, out);
    return out;
}

std::vector<TermId> LdEngine::backward_steps(TermId t) {
    std::vector<TermId> out;
    if (u_.is_leaf(t)) return out;
    const TermId L = u_.left(t), R = u_.right(t);
    // (uv)(uw) -> u(vw) at the root, then inside either child.
    if (!u_.is_leaf(L) && !u_.is_leaf(R) && u_.left(L) == u_.left(R)) {
        const TermId U = u_.left(L), V = u_.right(L), W = u_.right(R);
        out.push_back(u_.app(U, u_.app(V, W)));
    }
    for (TermId l2 : backward_steps(L)) out.push_back(u_.app(l2, R));
    for (TermId r2 : backward_steps(R)) out.push_back(u_.app(L, r2));
    return out;
}

std::uint32_t LdEngine::refutation_level() const {
    std::uint32_t lev = budget_.table_levels;
    if (lev < 1) lev = 1;
    return std::min<std::uint32_t>(lev, 10);
}

std::uint32_t LdEngine::refutation_variants() const {
    // Shifted assignments g -> ((g + v) mod 2^level) + 1 for v below the
    // table size; past 64 the extra shifts add little and cost linearly.
    return std::min<std::uint32_t>(1u << refutation_level(), 64);
}

std::uint16_t LdEngine::table_image(TermId t, std::uint32_t level, std::uint32_t variant) {
    auto& memo = image_cache_[pack2(level, variant)];
    const LaverTable& tab = LaverTable::level(level);
    const std::uint32_t n = tab.elements();
    // Iterative post-order so deep combs do not recurse.
    std::vector<TermId> stack{t};
    while (!stack.empty()) {
        TermId cur = stack.back();
        if (memo.count(cur)) {
            stack.pop_back();
            continue;
        }
        if (u_.is_leaf(cur)) {
            std::uint32_t g = u_.gen_of(cur);
            memo[cur] = static_cast<std::uint16_t>(
                variant == kAllOnes ? 1 : ((g + variant) % n) + 1);
            stack.pop_back();
            continue;
        }
        const TermNode& nd = u_.node(cur);
        auto li = memo.find(nd.left), ri = memo.find(nd.right);
        if (li != memo.end() && ri != memo.end()) {
            memo[cur] = tab.at(li->second, ri->second);
            stack.pop_back();
        } else {
            if (ri == memo.end()) stack.push_back(nd.right);
            if (li == memo.end()) stack.push_back(nd.left);
        }
    }
    return memo[t];
}

bool LdEngine::table_refutes(TermId a, TermId b) {
    if (a == b) return false;
    // Only the deepest table is consulted: reducing entries mod 2^k is a
    // homomorphism onto each lower table, so any low-level mismatch is
    // already visible at the top under a lifted assignment.
    const std::uint32_t lev = refutation_level();
    const std::uint32_t nv = refutation_variants();
    for (std::uint32_t v = 0; v < nv; ++v)
        if (table_image(a, lev, v) != table_image(b, lev, v)) return true;
    if (u_.alphabet() > 1 && table_image(a, lev, kAllOnes) != table_image(b, lev, kAllOnes))
        return true;
    return false;
}

CompareOutcome LdEngine::compare(TermId a, TermId b) {
    last_steps_ = 0;
    return compare_impl(a, b);
}

CompareOutcome LdEngine::compare_impl(TermId a, TermId b) {
    if (a == b) return CompareOutcome::Equal;
    // The head generator survives every LD step; distinct heads clash.
    if (u_.headgen(a) != u_.headgen(b)) return CompareOutcome::Clash;
    const std::uint64_t key = pack2(std::min(a, b), std::max(a, b));
    auto it = cmp_cache_.find(key);
    if (it != cmp_cache_.end()) {
        auto o = static_cast<CompareOutcome>(it->second);
        return a <= b ? o : flip(o);
    }
    CompareOutcome res;
    if (auto fast = refute_compare(a, b))
        res = *fast;
    else
        res = search_compare(a, b);
    cmp_cache_[key] = static_cast<std::uint8_t>(a <= b ? res : flip(res));
    return res;
}

LdEngine::ConeCtx& LdEngine::cone_ctx(std::uint32_t level, std::uint32_t variant) {
    auto hit = cone_cache_.find(pack2(level, variant));
    if (hit != cone_cache_.end()) return hit->second;
    const LaverTable& tab = LaverTable::level(level);
    const std::uint32_t N = tab.elements();
    const std::uint32_t W = tab.mask_words();
    ConeCtx cc;
    cc.sub_mask.assign(W, 0);
    auto add = [&](std::uint32_t e) {
        std::uint64_t& w = cc.sub_mask[(e - 1) >> 6];
        const std::uint64_t bit = std::uint64_t{1} << ((e - 1) & 63);
        if (w & bit) return;
        w |= bit;
        cc.sub.push_back(e);
    };
    for (std::uint32_t g = 0; g < u_.alphabet(); ++g)
        add(variant == kAllOnes ? 1 : ((g + variant) % N) + 1);
    // Close under products. Element i is multiplied against every j <= i in
    // both orders; later arrivals revisit the earlier ones, so all ordered
    // pairs get covered exactly once.
    for (std::size_t i = 0; i < cc.sub.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(tab.at(cc.sub[i], cc.sub[j]));
            add(tab.at(cc.sub[j], cc.sub[i]));
        }
    cc.trivial = cc.sub.size() == N;  // e.g. whenever some generator maps to 1
    if (!cc.trivial) {
        cc.srow_masks.assign(static_cast<std::size_t>(N) * W, 0);
        for (std::uint32_t q = 1; q <= N; ++q) {
            std::uint64_t* m = cc.srow_masks.data() + (q - 1) * static_cast<std::size_t>(W);
            for (std::uint32_t d : cc.sub) {
                const std::uint32_t v = tab.at(q, d) - 1u;
                m[v >> 6] |= std::uint64_t{1} << (v & 63);
            }
        }
    }
    return cone_cache_.emplace(pack2(level, variant), std::move(cc)).first->second;
}

const std::vector<std::uint64_t>& LdEngine::cone_reach(ConeCtx& cc, std::uint32_t level,
                                                       std::uint32_t source) {
    auto hit = cc.reach.find(source);
    if (hit != cc.reach.end()) return hit->second;
    const LaverTable& tab = LaverTable::level(level);
    const std::uint32_t W = tab.mask_words();
    const std::uint64_t* srow = [&](std::uint32_t q) {
        return cc.srow_masks.data() + (q - 1) * static_cast<std::size_t>(W);
    }(source);
    std::vector<std::uint64_t> r(srow, srow + W);
    // Worklist closure; every element enters at most once per source.
    std::vector<std::uint32_t> work;
    for (std::uint32_t w = 0; w < W; ++w)
        for (std::uint64_t bits = r[w]; bits; bits &= bits - 1)
            work.push_back((w << 6) + static_cast<std::uint32_t>(std::countr_zero(bits)) + 1);
    while (!work.empty()) {
        const std::uint32_t q = work.back();
        work.pop_back();
        const std::uint64_t* qm = cc.srow_masks.data() + (q - 1) * static_cast<std::size_t>(W);
        for (std::uint32_t w = 0; w < W; ++w) {
            std::uint64_t fresh = qm[w] & ~r[w];
            if (!fresh) continue;
            r[w] |= fresh;
            for (; fresh; fresh &= fresh - 1)
                work.push_back((w << 6) +
                               static_cast<std::uint32_t>(std::countr_zero(fresh)) + 1);
        }
    }
    return cc.reach.emplace(source, std::move(r)).first->second;
}

bool LdEngine::cone_refutes_le(TermId a, TermId b) {
    // If a <L b then b = a c1 ... ck (k >= 1) up to LD. Under any assignment
    // the c-images lie in the generated subalgebra, so b's image must sit in
    // the right-multiplication cone of a's image over those multipliers. One
    // miss refutes the order outright.
    const std::uint32_t lev = refutation_level();
    const std::uint32_t nv = refutation_variants();
    for (std::uint32_t v = 0; v < nv; ++v) {
        ConeCtx& cc = cone_ctx(lev, v);
        if (cc.trivial) continue;
        const std::uint32_t q = table_image(b, lev, v);
        const std::vector<std::uint64_t>& r = cone_reach(cc, lev, table_image(a, lev, v));
        if (!((r[(q - 1) >> 6] >> ((q - 1) & 63)) & 1)) return true;
    }
    return false;
}

std::optional<CompareOutcome> LdEngine::refute_compare(TermId a, TermId b) {
    // Decision by elimination: exactly one of the four relations holds, so
    // with equality refuted, ruling out one strict order leaves the other as
    // the answer over one generator (where clashes cannot occur), and ruling
    // out both orders leaves the clash. Certificates are only searched for
    // when these sound refutations stay silent.
    if (!table_refutes(a, b)) return std::nullopt;
    const bool no_less = cone_refutes_le(a, b);
    const bool no_greater = cone_refutes_le(b, a);
    if (u_.alphabet() == 1) {
        if (no_less && !no_greater) return CompareOutcome::Greater;
        if (no_greater && !no_less) return CompareOutcome::Less;
        return std::nullopt;
    }
    if (no_less && no_greater) return CompareOutcome::Clash;
    return std::nullopt;
}

namespace {

// One side of the confluent search: the expansion set grown so far plus the
// certificate indices derived from each member's left spine.
struct SearchSide {
    std::vector<TermId> queue;
    std::size_t qpos = 0;
    std::unordered_set<TermId> members;
    std::unordered_set<TermId> prefixes;
    // prefix product -> generators seen immediately after it (kNoTerm keys
    // the head position).
    std::unordered_map<TermId, std::vector<std::uint32_t>> gens_after;
};

}  // namespace

CompareOutcome LdEngine::search_compare(TermId a, TermId b) {
    const std::uint32_t size_cap =
        std::max(budget_.expansion_size_floor,
                 budget_.expansion_size_factor * (u_.size(a) + u_.size(b)));
    // The step budget is per search; last_steps_ keeps accumulating so the
    // caller can report the total cost of a compound operation.
    const std::uint64_t base = last_steps_;
    SearchSide sides[2];
    int verdict = -1;  // encodes CompareOutcome once >= 0

    // add_member returns true once a certificate fires; verdicts are phrased
    // for the (a, b) orientation, side 0 holding a.
    auto add_member = [&](int s, TermId t) -> bool {
        SearchSide& self = sides[s];
        SearchSide& other = sides[1 - s];
        if (!self.members.insert(t).second) return false;
        if (++last_steps_ - base > budget_.compare_steps)
            throw BudgetExceeded("comparison step budget exhausted");
        self.queue.push_back(t);
        if (other.members.count(t)) {
            verdict = static_cast<int>(CompareOutcome::Equal);
            return true;
        }
        // t equals the s-origin up to LD; as a proper prefix of an
        // other-side member it certifies s-origin < other-origin.
        if (other.prefixes.count(t)) {
            verdict = static_cast<int>(s == 0 ? CompareOutcome::Less : CompareOutcome::Greater);
            return true;
        }
        TermId cur = t;
        while (!u_.is_leaf(cur)) {
            const TermNode& nd = u_.node(cur);
            if (u_.is_leaf(nd.right)) {
                std::uint32_t g = u_.gen_of(nd.right);
                auto oit = other.gens_after.find(nd.left);
                if (oit != other.gens_after.end())
                    for (std::uint32_t g2 : oit->second)
                        if (g2 != g) {
                            verdict = static_cast<int>(CompareOutcome::Clash);
                            return true;
                        }
                auto& mine = self.gens_after[nd.left];
                if (std::find(mine.begin(), mine.end(), g) == mine.end()) mine.push_back(g);
            }
            cur = nd.left;
            if (self.prefixes.insert(cur).second && other.members.count(cur)) {
                // other-origin appears as a proper prefix of an s-member.
                verdict =
                    static_cast<int>(s == 0 ? CompareOutcome::Greater : CompareOutcome::Less);
                return true;
            }
        }
        std::uint32_t g = u_.gen_of(cur);
        auto oit = other.gens_after.find(kNoTerm);
        if (oit != other.gens_after.end())
            for (std::uint32_t g2 : oit->second)
                if (g2 != g) {
                    verdict = static_cast<int>(CompareOutcome::Clash);
                    return true;
                }
        auto& mine = self.gens_after[kNoTerm];
        if (std::find(mine.begin(), mine.end(), g) == mine.end()) mine.push_back(g);
        return false;
    };

    if (add_member(0, a)) return static_cast<CompareOutcome>(verdict);
    if (add_member(1, b)) return static_cast<CompareOutcome>(verdict);
    while (sides[0].qpos < sides[0].queue.size() || sides[1].qpos < sides[1].queue.size()) {
        for (int s = 0; s < 2; ++s) {
            SearchSide& side = sides[s];
            if (side.qpos >= side.queue.size()) continue;
            TermId t = side.queue[side.qpos++];
            for (TermId e : forward_steps(t)) {
                if (u_.size(e) > size_cap) continue;
                if (add_member(s, e)) return static_cast<CompareOutcome>(verdict);
            }
        }
    }
    throw BudgetExceeded("expansion size cap reached without a certificate");
}

bool LdEngine::ld_equiv(TermId a, TermId b) {
    last_steps_ = 0;
    return equiv_impl(a, b);
}

bool LdEngine::equiv_impl(TermId a, TermId b) {
    if (a == b) return true;
    if (u_.headgen(a) != u_.headgen(b) || u_.rdepth(a) != u_.rdepth(b)) return false;
    if (table_refutes(a, b)) return false;
    return compare_impl(a, b) == CompareOutcome::Equal;
}

bool LdEngine::left_divides(TermId a, TermId b) {
    last_steps_ = 0;
    return divides_impl(a, b);
}

bool LdEngine::divides_impl(TermId a, TermId b) {
    if (u_.headgen(a) != u_.headgen(b)) return false;
    if (u_.rdepth(b) < 2) return false;  // b = ac forces a compound class
    // b = ac puts b's image in the row of a's image under every assignment,
    // with the columns restricted to the generated subalgebra where that is
    // proper.
    {
        const std::uint32_t lev = refutation_level();
        const std::uint32_t nv = refutation_variants();
        const LaverTable& tab = LaverTable::level(lev);
        const std::uint32_t W = tab.mask_words();
        for (std::uint32_t v = 0; v < nv; ++v) {
            ConeCtx& cc = cone_ctx(lev, v);
            const std::uint32_t p = table_image(a, lev, v);
            const std::uint64_t* m =
                cc.trivial ? tab.row_mask(p)
                           : cc.srow_masks.data() + (p - 1) * static_cast<std::size_t>(W);
            if (!LaverTable::mask_has(m, table_image(b, lev, v))) return false;
        }
        if (u_.alphabet() > 1 &&
            !LaverTable::mask_has(tab.row_mask(table_image(a, lev, kAllOnes)),
                                  table_image(b, lev, kAllOnes)))
            return false;
    }
    // a | b iff ab = (aa)b: the quotient c with b = ac makes both sides
    // a(ac) and distributivity folds them together; conversely the equation
    // forces b into the image of left multiplication by a.
    TermId ab = u_.app(a, b);
    TermId aab = u_.app(u_.app(a, a), b);
    if (table_refutes(ab, aab)) return false;
    return compare_impl(ab, aab) == CompareOutcome::Equal;
}

TermId LdEngine::quotient(TermId a, TermId b) {
    last_steps_ = 0;
    if (!divides_impl(a, b)) throw NotDivisible("no left quotient exists");
    // Enumerate candidate quotients in canonical order; the divisibility
    // test above guarantees a witness class exists, so the first candidate
    // that verifies is a valid (smallest) representative.
    const std::uint32_t want_rdepth = u_.rdepth(b) - 1;
    const std::uint32_t size_cap = budget_.quotient_size_factor * u_.size(b);
    const std::uint32_t lev = refutation_level();
    const std::uint32_t nv = refutation_variants();
    const LaverTable& tab = LaverTable::level(lev);
    std::uint64_t scanned = 0;
    for (std::uint32_t s = 1; s <= size_cap; ++s) {
        if (scanned + term_layer_count(u_.alphabet(), s) > budget_.probe_tuples)
            throw BudgetExceeded("quotient candidate budget exhausted");
        for (TermId c : u_.enumerate(s)) {
            ++scanned;
            if (u_.rdepth(c) != want_rdepth) continue;
            bool pruned = false;
            for (std::uint32_t v = 0; v < nv && !pruned; ++v)
                if (tab.at(table_image(a, lev, v), table_image(c, lev, v)) !=
                    table_image(b, lev, v))
                    pruned = true;
            if (pruned) continue;
            try {
                if (equiv_impl(b, u_.app(a, c))) return c;
            } catch (const BudgetExceeded&) {
                // this candidate could not be settled; keep scanning
            }
        }
    }
    throw BudgetExceeded("quotient witness not found within the size bound");
}

std::pair<std::uint32_t, std::uint32_t> LdEngine::power_align(TermId t) {
    auto it = power_cache_.find(t);
    if (it != power_cache_.end()) return it->second;
    std::pair<std::uint32_t, std::uint32_t> res;
    if (u_.is_leaf(t)) {
        res = {0, 0};
    } else {
        const TermNode& nd = u_.node(t);
        // t = vw with v^(i) = x^(mv), w^(j) = x^(mw): raise both to the
        // common table power M, then vw absorbs into w's tower one step up:
        // (vw)^(k) = v w^(k) and x^(M) x^(M) = x^(M+1).
        auto fv = power_align(nd.left);
        auto fw = power_align(nd.right);
        std::uint32_t M = std::max(fv.second, fw.second);
        res = {fw.first + (M - fw.second), M + 1};
    }
    power_cache_.emplace(t, res);
    return res;
}

std::pair<std::uint32_t, std::uint32_t> LdEngine::common_power(TermId a, TermId b) {
    if (u_.alphabet() != 1)
        throw Error("common powers are defined over a single generator");
    last_steps_ = 0;
    auto fa = power_align(a);
    auto fb = power_align(b);
    std::uint32_t M = std::max(fa.second, fb.second);
    std::uint32_t na = fa.first + (M - fa.second);
    std::uint32_t nb = fb.first + (M - fb.second);
    TermId pa, pb;
    try {
        pa = u_.right_power(a, na, budget_.max_term_size);
        pb = u_.right_power(b, nb, budget_.max_term_size);
    } catch (const LimitExceeded&) {
        throw BudgetExceeded("common power verification exceeds the term size cap");
    }
    if (!equiv_impl(pa, pb))
        throw Error("internal error: common power pair failed verification");
    return {na, nb};
}

std::vector<TermId> LdEngine::square_roots(TermId t) {
    if (u_.alphabet() != 1)
        throw Error("square roots are searched over a single generator");
    last_steps_ = 0;
    std::vector<TermId> out;
    if (u_.rdepth(t) < 2) return out;  // generators have no square roots
    const std::uint32_t want_rdepth = u_.rdepth(t) - 1;
    const std::uint32_t lev = refutation_level();
    const std::uint32_t nv = refutation_variants();
    const LaverTable& tab = LaverTable::level(lev);
    std::uint64_t scanned = 0;
    for (std::uint32_t s = 1; s <= budget_.root_candidate_size; ++s) {
        if (scanned + term_layer_count(u_.alphabet(), s) > budget_.probe_tuples) break;
        for (TermId c : u_.enumerate(s)) {
            ++scanned;
            if (u_.rdepth(c) != want_rdepth) continue;
            bool pruned = false;
            for (std::uint32_t v = 0; v < nv && !pruned; ++v) {
                std::uint16_t img = table_image(c, lev, v);
                if (tab.at(img, img) != table_image(t, lev, v)) pruned = true;
            }
            if (pruned) continue;
            try {
                if (equiv_impl(u_.app(c, c), t)) out.push_back(c);
            } catch (const BudgetExceeded&) {
                // unsettled candidate: omit it; the result only ever lists
                // verified roots and completeness is not promised
            }
        }
    }
    return out;
}

std::optional<TermId> LdEngine::nth_root(TermId t, std::uint32_t m) {
    if (u_.alphabet() != 1)
        throw Error("power roots are searched over a single generator");
    if (m == 0) return t;
    last_steps_ = 0;
    if (u_.rdepth(t) <= m) return std::nullopt;  // roots sit m levels down
    const std::uint32_t want_rdepth = u_.rdepth(t) - m;
    const std::uint32_t want_head = u_.headgen(t);
    // A tower x^(n) pins the only possible exponent at n = rdepth - 1, and
    // a^(m) = x^(n) forces m < n unless a is the generator itself.
    bool skip_leaf_candidates = false;
    const std::uint32_t n = u_.rdepth(t) - 1;
    if (n <= 8) {
        bool tower = false;
        try {
            tower = equiv_impl(
                t, u_.right_power(u_.leaf(want_head), n, budget_.max_term_size));
        } catch (const BudgetExceeded&) {
        } catch (const LimitExceeded&) {
        }
        if (tower) {
            if (m == n) return u_.leaf(want_head);
            if (m > n) return std::nullopt;
            skip_leaf_candidates = true;
        }
    }
    const std::uint32_t lev = refutation_level();
    const std::uint32_t nv = refutation_variants();
    const LaverTable& tab = LaverTable::level(lev);
    std::uint64_t scanned = 0;
    for (std::uint32_t s = 1; s <= budget_.root_candidate_size; ++s) {
        if (scanned + term_layer_count(u_.alphabet(), s) > budget_.probe_tuples) break;
        for (TermId c : u_.enumerate(s)) {
            ++scanned;
            if (u_.rdepth(c) != want_rdepth) continue;
            if (skip_leaf_candidates && u_.is_leaf(c)) continue;
            // Iterated squaring in the table must match t's image.
            bool pruned = false;
            for (std::uint32_t v = 0; v < nv && !pruned; ++v) {
                std::uint16_t img = table_image(c, lev, v);
                for (std::uint32_t i = 0; i < m; ++i) img = tab.at(img, img);
                if (img != table_image(t, lev, v)) pruned = true;
            }
            if (pruned) continue;
            try {
                TermId p = u_.right_power(c, m, budget_.max_term_size);
                if (equiv_impl(p, t)) return c;
            } catch (const LimitExceeded&) {
                continue;  // candidate power outgrew the size cap; skip it
            } catch (const BudgetExceeded&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

std::vector<TermId> LdEngine::bounded_closure(TermId t, std::uint32_t size_cap,
                                              std::uint64_t node_budget, bool* complete) {
    std::vector<TermId> order;
    std::unordered_set<TermId> seen;
    bool full = true;
    seen.insert(t);
    order.push_back(t);
    std::size_t pos = 0;
    while (pos < order.size()) {
        TermId cur = order[pos++];
        std::vector<TermId> nbrs = forward_steps(cur);
        std::vector<TermId> back = backward_steps(cur);
        nbrs.insert(nbrs.end(), back.begin(), back.end());
        for (TermId n : nbrs) {
            if (u_.size(n) > size_cap) continue;
            if (!seen.insert(n).second) continue;
            if (order.size() >= node_budget) {
                full = false;
                break;
            }
            order.push_back(n);
        }
        if (!full) break;
    }
    if (complete) *complete = full;
    return order;
}

bool LdEngine::connected_within(TermId a, TermId b, std::uint32_t size_cap,
                                std::uint64_t node_budget) {
    if (a == b) return true;
    std::vector<TermId> order{a};
    std::unordered_set<TermId> seen{a};
    std::size_t pos = 0;
    while (pos < order.size()) {
        TermId cur = order[pos++];
        std::vector<TermId> nbrs = forward_steps(cur);
        std::vector<TermId> back = backward_steps(cur);
        nbrs.insert(nbrs.end(), back.begin(), back.end());
        for (TermId n : nbrs) {
            if (u_.size(n) > size_cap) continue;
            if (!seen.insert(n).second) continue;
            if (n == b) return true;
            if (order.size() >= node_budget)
                throw BudgetExceeded("closure node budget exhausted");
            order.push_back(n);
        }
    }
    return false;
}

}  // namespace lda
