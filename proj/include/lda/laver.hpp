#pragma once

// Finite Laver tables: the unique left distributive structure on {1..2^n}
// with p * 1 = p + 1 (mod 2^n). Rows are built by the double recursion
// p * (q+1) = (p * q) * (p + 1), filling rows from 2^n downward; every value
// in row p exceeds p, so the recursion only consults finished rows.
//
// Each table is a homomorphic image of the free algebra on one generator
// (send x to any element), and reduction mod 2^n maps level n+1 onto level
// n. Evaluation therefore refutes LD-equality soundly: different images
// under any table and assignment prove two terms inequivalent. Equal images
// prove nothing.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lda/term.hpp"

namespace lda {

class LaverTable {
  public:
    // Tables are immutable and cached; levels above 10 are refused.
    static const LaverTable& level(std::uint32_t n);

    std::uint32_t level_index() const { return n_; }
    std::uint32_t elements() const { return N_; }

    // 1-based on both sides, matching the table convention.
    std::uint16_t at(std::uint32_t p, std::uint32_t q) const {
        return tab_[(p - 1) * static_cast<std::size_t>(N_) + (q - 1)];
    }

    // Bitmask (bit v-1 = element v) of the values in row p: the possible
    // images of p * c as c ranges over everything. Rows are sparse low in
    // the table (row 1 holds only the doubling pattern), so a product's
    // image missing from the row refutes one-step divisibility.
    const std::uint64_t* row_mask(std::uint32_t p) const {
        return row_masks_.data() + (p - 1) * static_cast<std::size_t>(words_);
    }

    std::uint32_t mask_words() const { return words_; }

    static bool mask_has(const std::uint64_t* m, std::uint32_t v) {
        return (m[(v - 1) >> 6] >> ((v - 1) & 63)) & 1;
    }

    // Least period of row p; always a power of two dividing 2^n.
    std::uint32_t row_period(std::uint32_t p) const;

    // Exhaustive check of p*(q*r) == (p*q)*(p*r).
    bool left_distributive() const;

    // Reduction mod 2^(n-1) is a homomorphism onto the previous level.
    bool projects_onto(const LaverTable& coarser) const;

    std::string to_csv() const;

    // Homomorphic image of t where generator g maps to assignment[g].
    // memo may be shared across calls with the same table and assignment.
    std::uint16_t eval(const TermUniverse& u, TermId t,
                       const std::vector<std::uint16_t>& assignment,
                       std::unordered_map<TermId, std::uint16_t>& memo) const;

  private:
    explicit LaverTable(std::uint32_t n);
    std::uint32_t n_;
    std::uint32_t N_;
    std::uint32_t words_;
    std::vector<std::uint16_t> tab_;
    std::vector<std::uint64_t> row_masks_;
};

struct Refutation {
    std::uint32_t level;
    std::vector<std::uint16_t> assignment;  // indexed by generator
};

// Search levels 1..max_level and all assignments of the generators that
// occur in u or v. A hit is a proof that u and v are not LD-equal.
std::optional<Refutation> refute_equiv(const TermUniverse& u, TermId a, TermId b,
                                       std::uint32_t max_level);

}  // namespace lda
