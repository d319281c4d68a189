#include "lda/laver.hpp"

#include <memory>
#include <mutex>
#include <set>

#include "lda/errors.hpp"

namespace lda {

LaverTable::LaverTable(std::uint32_t n) : n_(n), N_(1u << n) {
    tab_.assign(static_cast<std::size_t>(N_) * N_, 0);
    auto cell = [this](std::uint32_t p, std::uint32_t q) -> std::uint16_t& {
        return tab_[(p - 1) * static_cast<std::size_t>(N_) + (q - 1)];
    };
    for (std::uint32_t q = 1; q <= N_; ++q) cell(N_, q) = static_cast<std::uint16_t>(q);
    for (std::uint32_t p = N_ - 1; p >= 1; --p) {
        cell(p, 1) = static_cast<std::uint16_t>(p + 1);
        // p*(q+1) = (p*q)*(p+1); every value in row p exceeds p, so the row
        // consulted on the right is always one built earlier.
        for (std::uint32_t q = 1; q < N_; ++q)
            cell(p, q + 1) = cell(cell(p, q), p + 1);
        if (p == 1) break;
    }

    words_ = (N_ + 63) / 64;
    row_masks_.assign(static_cast<std::size_t>(N_) * words_, 0);
    for (std::uint32_t p = 1; p <= N_; ++p) {
        std::uint64_t* m = row_masks_.data() + (p - 1) * static_cast<std::size_t>(words_);
        for (std::uint32_t q = 1; q <= N_; ++q) {
            const std::uint32_t v = at(p, q) - 1u;
            m[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }
}

const LaverTable& LaverTable::level(std::uint32_t n) {
    if (n == 0 || n > 10) throw LimitExceeded("table level " + std::to_string(n) + " outside 1..10");
    static std::mutex mu;
    static std::unique_ptr<LaverTable> cache[11];
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) cache[n].reset(new LaverTable(n));
    return *cache[n];
}

std::uint32_t LaverTable::row_period(std::uint32_t p) const {
    for (std::uint32_t d = 1; d <= N_; d *= 2) {
        bool ok = true;
        for (std::uint32_t q = 1; q <= N_ && ok; ++q)
            if (at(p, q) != at(p, (q - 1) % d + 1)) ok = false;
        if (ok) return d;
    }
    return N_;
}

bool LaverTable::left_distributive() const {
    for (std::uint32_t p = 1; p <= N_; ++p)
        for (std::uint32_t q = 1; q <= N_; ++q)
            for (std::uint32_t r = 1; r <= N_; ++r)
                if (at(p, at(q, r)) != at(at(p, q), at(p, r))) return false;
    return true;
}

bool LaverTable::projects_onto(const LaverTable& coarser) const {
    if (coarser.N_ * 2 != N_) return false;
    auto red = [&](std::uint32_t p) { return (p - 1) % coarser.N_ + 1; };
    for (std::uint32_t p = 1; p <= N_; ++p)
        for (std::uint32_t q = 1; q <= N_; ++q)
            if (red(at(p, q)) != coarser.at(red(p), red(q))) return false;
    return true;
}

std::string LaverTable::to_csv() const {
    std::string out;
    for (std::uint32_t p = 1; p <= N_; ++p) {
        for (std::uint32_t q = 1; q <= N_; ++q) {
            if (q > 1) out.push_back(',');
            out += std::to_string(at(p, q));
        }
        out.push_back('\n');
    }
    return out;
}

std::uint16_t LaverTable::eval(const TermUniverse& u, TermId t,
                               const std::vector<std::uint16_t>& assignment,
                               std::unordered_map<TermId, std::uint16_t>& memo) const {
    auto hit = memo.find(t);
    if (hit != memo.end()) return hit->second;
    std::vector<TermId> stack{t};
    while (!stack.empty()) {
        TermId cur = stack.back();
        if (memo.count(cur)) {
            stack.pop_back();
            continue;
        }
        if (u.is_leaf(cur)) {
            const std::uint32_t g = u.gen_of(cur);
            if (g >= assignment.size() || assignment[g] == 0 || assignment[g] > N_)
                throw Error("assignment missing generator " + TermUniverse::gen_name(g));
            memo[cur] = assignment[g];
            stack.pop_back();
            continue;
        }
        auto li = memo.find(u.left(cur));
        auto ri = memo.find(u.right(cur));
        if (li != memo.end() && ri != memo.end()) {
            memo[cur] = at(li->second, ri->second);
            stack.pop_back();
        } else {
            if (li == memo.end()) stack.push_back(u.left(cur));
            if (ri == memo.end()) stack.push_back(u.right(cur));
        }
    }
    return memo[t];
}

static void collect_gens(const TermUniverse& u, TermId t, std::set<std::uint32_t>& out) {
    std::vector<TermId> stack{t};
    std::set<TermId> seen;
    while (!stack.empty()) {
        TermId cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        if (u.is_leaf(cur)) {
            out.insert(u.gen_of(cur));
        } else {
            stack.push_back(u.left(cur));
            stack.push_back(u.right(cur));
        }
    }
}

std::optional<Refutation> refute_equiv(const TermUniverse& u, TermId a, TermId b,
                                       std::uint32_t max_level) {
    std::set<std::uint32_t> gens;
    collect_gens(u, a, gens);
    collect_gens(u, b, gens);
    std::vector<std::uint32_t> gl(gens.begin(), gens.end());
    for (std::uint32_t n = 1; n <= max_level; ++n) {
        const LaverTable& tab = LaverTable::level(n);
        const std::uint32_t N = tab.elements();
        // Odometer over assignments of the generators actually present.
        std::vector<std::uint16_t> choice(gl.size(), 1);
        while (true) {
            std::vector<std::uint16_t> assignment;
            std::uint32_t maxg = gl.empty() ? 0 : gl.back();
            assignment.assign(maxg + 1, 0);
            for (std::size_t i = 0; i < gl.size(); ++i) assignment[gl[i]] = choice[i];
            std::unordered_map<TermId, std::uint16_t> memo;
            if (tab.eval(u, a, assignment, memo) != tab.eval(u, b, assignment, memo))
                return Refutation{n, assignment};
            std::size_t i = 0;
            for (; i < choice.size(); ++i) {
                if (choice[i] < N) {
                    ++choice[i];
                    break;
                }
                choice[i] = 1;
            }
            if (i == choice.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace lda
