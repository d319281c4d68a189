#pragma once

// Interned store for application terms over a finite generator alphabet.
//
// Design notes:
//  - Every structurally distinct term is stored exactly once; a TermId names
//    it and id equality is literal term equality. Children are stored as ids,
//    so terms form a DAG and right powers stay cheap to build.
//  - size is the leaf count (size(g) = 1, size(uv) = size(u) + size(v));
//    rdepth is the right spine depth (rdepth(g) = 1, rdepth(uv) =
//    rdepth(v) + 1). headgen is the leftmost leaf's generator. All three are
//    cached on the node because the rewrite engine consults them constantly.
//  - enumerate(s) lists all terms of leaf count s in a fixed order: ascending
//    size, then lexicographic on the preorder traversal where generator
//    tokens sort before the application token. Every search in the library
//    that enumerates candidates draws from this order, which is what makes
//    results reproducible run to run.

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lda/errors.hpp"

namespace lda {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = 0;  // ids are 1-based; 0 means "absent"

struct TermNode {
    TermId left;           // kNoTerm for a leaf
    TermId right;          // kNoTerm for a leaf
    std::uint32_t gen;     // generator index when leaf
    std::uint32_t size;    // leaf count
    std::uint32_t rdepth;  // right spine depth
    std::uint32_t headgen; // generator at the leftmost leaf
};

class TermUniverse {
  public:
    explicit TermUniverse(std::uint32_t alphabet_size);

    std::uint32_t alphabet() const { return alphabet_; }

    TermId leaf(std::uint32_t gen);
    TermId app(TermId l, TermId r);

    const TermNode& node(TermId t) const { return nodes_[t]; }
    bool is_leaf(TermId t) const { return nodes_[t].left == kNoTerm; }
    TermId left(TermId t) const { return nodes_[t].left; }
    TermId right(TermId t) const { return nodes_[t].right; }
    std::uint32_t gen_of(TermId t) const { return nodes_[t].gen; }
    std::uint32_t size(TermId t) const { return nodes_[t].size; }
    std::uint32_t rdepth(TermId t) const { return nodes_[t].rdepth; }
    std::uint32_t headgen(TermId t) const { return nodes_[t].headgen; }
    std::size_t stored_terms() const { return nodes_.size() - 1; }

    // Left spine decomposition: t = args[0] applied to args[1] ... args[n-1]
    // reading the head leaf first, i.e. t = ((head * a1) * a2) ... The head
    // leaf is spine(t)[0].
    std::vector<TermId> spine(TermId t) const;

    // p^(0) = p, p^(n+1) = p^(n) p^(n). Throws LimitExceeded past max_size
    // leaves (the DAG sharing keeps memory flat, the cap guards callers that
    // go on to walk the tree).
    TermId right_power(TermId p, std::uint32_t n, std::uint64_t max_size);

    // Replace every occurrence of generator gen by r.
    TermId subst(TermId t, std::uint32_t gen, TermId r);

    // Grammar: term := atom { atom }; atom := generator | "(" term ")".
    // Whitespace and "*" separate atoms. Generators: x y z x3 x4 ...
    TermId parse(const std::string& text);
    std::string render(TermId t) const;
    static std::string gen_name(std::uint32_t gen);

    // All terms of leaf count exactly s, deterministic order (see notes).
    const std::vector<TermId>& enumerate(std::uint32_t s);
    // All terms of leaf count <= s, ascending size then preorder-lex.
    std::vector<TermId> universe(std::uint32_t max_s);

    // Preorder-lexicographic comparison (generator tokens before App token);
    // total order on all terms, used by enumeration and for tie-breaking.
    int preorder_cmp(TermId a, TermId b) const;

  private:
    std::uint32_t alphabet_;
    std::vector<TermNode> nodes_;
    std::vector<TermId> leaves_;
    std::unordered_map<std::uint64_t, TermId> intern_;
    std::vector<std::vector<TermId>> by_size_;
    mutable std::mutex mu_;

    TermId intern_app(TermId l, TermId r);
};

}  // namespace lda
