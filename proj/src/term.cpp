#include "lda/term.hpp"

#include <algorithm>
#include <cctype>

namespace lda {

TermUniverse::TermUniverse(std::uint32_t alphabet_size) : alphabet_(alphabet_size) {
    if (alphabet_ == 0) throw Error("alphabet must have at least one generator");
    nodes_.push_back(TermNode{});  // id 0 stays unused
    leaves_.reserve(alphabet_);
    for (std::uint32_t g = 0; g < alphabet_; ++g) {
        nodes_.push_back(TermNode{kNoTerm, kNoTerm, g, 1, 1, g});
        leaves_.push_back(static_cast<TermId>(nodes_.size() - 1));
    }
}

TermId TermUniverse::leaf(std::uint32_t gen) {
    if (gen >= alphabet_) throw Error("generator index " + std::to_string(gen) + " outside alphabet");
    return leaves_[gen];
}

TermId TermUniverse::intern_app(TermId l, TermId r) {
    const std::uint64_t key = (static_cast<std::uint64_t>(l) << 32) | r;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    const TermNode& nl = nodes_[l];
    const TermNode& nr = nodes_[r];
    TermNode n;
    n.left = l;
    n.right = r;
    n.gen = 0;
    n.size = nl.size + nr.size;
    n.rdepth = nr.rdepth + 1;
    n.headgen = nl.headgen;
    nodes_.push_back(n);
    const TermId id = static_cast<TermId>(nodes_.size() - 1);
    intern_.emplace(key, id);
    return id;
}

TermId TermUniverse::app(TermId l, TermId r) {
    if (l == kNoTerm || r == kNoTerm || l >= nodes_.size() || r >= nodes_.size())
        throw Error("app on invalid term id");
    return intern_app(l, r);
}

std::vector<TermId> TermUniverse::spine(TermId t) const {
    std::vector<TermId> out;
    TermId cur = t;
    while (!is_leaf(cur)) {
        out.push_back(nodes_[cur].right);
        cur = nodes_[cur].left;
    }
    out.push_back(cur);
    std::reverse(out.begin(), out.end());
    return out;
}

TermId TermUniverse::right_power(TermId p, std::uint32_t n, std::uint64_t max_size) {
    TermId cur = p;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t next_size = 2 * static_cast<std::uint64_t>(nodes_[cur].size);
        if (next_size > max_size)
            throw LimitExceeded("right power exceeds " + std::to_string(max_size) + " leaves");
        cur = app(cur, cur);
    }
    return cur;
}

TermId TermUniverse::subst(TermId t, std::uint32_t gen, TermId r) {
    std::unordered_map<TermId, TermId> memo;
    // Iterative post-order over the DAG; terms can be deep combs.
    std::vector<TermId> stack{t};
    while (!stack.empty()) {
        TermId cur = stack.back();
        if (memo.count(cur)) {
            stack.pop_back();
            continue;
        }
        if (is_leaf(cur)) {
            memo[cur] = (gen_of(cur) == gen) ? r : cur;
            stack.pop_back();
            continue;
        }
        TermId l = left(cur), rr = right(cur);
        auto li = memo.find(l), ri = memo.find(rr);
        if (li != memo.end() && ri != memo.end()) {
            memo[cur] = app(li->second, ri->second);
            stack.pop_back();
        } else {
            if (li == memo.end()) stack.push_back(l);
            if (ri == memo.end()) stack.push_back(rr);
        }
    }
    return memo[t];
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*')) ++pos;
    }
    bool done() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return s[pos];
    }
};

}  // namespace

static TermId parse_term(TermUniverse& u, Cursor& c);

static TermId parse_atom(TermUniverse& u, Cursor& c) {
    const char ch = c.peek();
    if (ch == '(') {
        const std::size_t open = c.pos;
        ++c.pos;
        TermId t = parse_term(u, c);
        if (c.done() || c.peek() != ')') throw ParseError("unclosed '('", open);
        ++c.pos;
        return t;
    }
    if (ch == 'y') { ++c.pos; return u.leaf(1); }
    if (ch == 'z') { ++c.pos; return u.leaf(2); }
    if (ch == 'x') {
        ++c.pos;
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            std::uint64_t idx = 0;
            const std::size_t start = c.pos;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
                idx = idx * 10 + static_cast<std::uint64_t>(c.s[c.pos] - '0');
                if (idx > 0xffffffffULL) throw ParseError("generator index overflow", start);
                ++c.pos;
            }
            return u.leaf(static_cast<std::uint32_t>(idx));
        }
        return u.leaf(0);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", c.pos);
}

static TermId parse_term(TermUniverse& u, Cursor& c) {
    if (c.done()) throw ParseError("empty term", c.pos);
    TermId acc = parse_atom(u, c);
    while (!c.done() && c.peek() != ')') {
        TermId next = parse_atom(u, c);
        acc = u.app(acc, next);
    }
    return acc;
}

TermId TermUniverse::parse(const std::string& text) {
    Cursor c{text};
    TermId t = parse_term(*this, c);
    if (!c.done()) throw ParseError("trailing input", c.pos);
    return t;
}

std::string TermUniverse::gen_name(std::uint32_t gen) {
    switch (gen) {
        case 0: return "x";
        case 1: return "y";
        case 2: return "z";
        default: return "x" + std::to_string(gen);
    }
}

std::string TermUniverse::render(TermId t) const {
    // Application is left associative, so only right children that are
    // applications need parentheses.
    std::string out;
    struct Item { TermId t; bool paren; };
    std::vector<Item> stack{{t, false}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.t == kNoTerm) {  // sentinel: emit ')'
            out.push_back(')');
            continue;
        }
        if (it.paren) out.push_back('(');
        if (is_leaf(it.t)) {
            out += gen_name(gen_of(it.t));
            if (it.paren) out.push_back(')');
            continue;
        }
        if (it.paren) stack.push_back(Item{kNoTerm, false});
        TermId r = right(it.t);
        stack.push_back(Item{r, !is_leaf(r)});
        stack.push_back(Item{left(it.t), false});
    }
    return out;
}

int TermUniverse::preorder_cmp(TermId a, TermId b) const {
    if (a == b) return 0;
    // Token streams compared lazily; identical shared subtrees skip in O(1).
    std::vector<TermId> sa{a}, sb{b};
    while (!sa.empty() && !sb.empty()) {
        TermId x = sa.back(), y = sb.back();
        sa.pop_back();
        sb.pop_back();
        if (x == y) continue;
        const bool lx = is_leaf(x), ly = is_leaf(y);
        if (lx && ly) {
            if (gen_of(x) != gen_of(y)) return gen_of(x) < gen_of(y) ? -1 : 1;
            continue;
        }
        if (lx != ly) return lx ? -1 : 1;  // generator token sorts before App
        sa.push_back(right(x));
        sa.push_back(left(x));
        sb.push_back(right(y));
        sb.push_back(left(y));
    }
    if (sa.empty() && sb.empty()) return 0;
    return sa.empty() ? -1 : 1;
}

const std::vector<TermId>& TermUniverse::enumerate(std::uint32_t s) {
    if (s == 0) throw Error("terms have at least one leaf");
    if (by_size_.size() <= s) by_size_.resize(s + 1);
    if (!by_size_[s].empty()) return by_size_[s];
    if (s == 1) {
        by_size_[1] = leaves_;
        return by_size_[1];
    }
    std::vector<TermId> out;
    for (std::uint32_t ls = 1; ls < s; ++ls) {
        const auto& lefts = enumerate(ls);
        const auto& rights = enumerate(s - ls);
        for (TermId l : lefts)
            for (TermId r : rights) out.push_back(app(l, r));
    }
    std::sort(out.begin(), out.end(), [this](TermId l, TermId r) { return preorder_cmp(l, r) < 0; });
    by_size_[s] = std::move(out);
    return by_size_[s];
}

std::vector<TermId> TermUniverse::universe(std::uint32_t max_s) {
    std::vector<TermId> out;
    for (std::uint32_t s = 1; s <= max_s; ++s) {
        const auto& v = enumerate(s);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace lda
