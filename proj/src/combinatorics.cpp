#include "vinc/combinatorics.hpp"

#include <numeric>
#include <sstream>

namespace vinc {

LabeledIntervalPartition::LabeledIntervalPartition(std::vector<Interval> blocks) : blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end());
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        const auto& b = blocks_[k];
        if (b.start < 1 || b.len < 1) throw std::invalid_argument("interval needs start >= 1 and len >= 1");
        if (k > 0 && blocks_[k - 1].last() >= b.start) throw std::invalid_argument("intervals overlap");
    }
}

int LabeledIntervalPartition::size() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.len;
    return n;
}

IntSet LabeledIntervalPartition::ground_set() const {
    IntSet out;
    out.reserve(static_cast<std::size_t>(size()));
    for (const auto& b : blocks_)
        for (int x = b.start; x <= b.last(); ++x) out.push_back(x);
    return out;
}

int LabeledIntervalPartition::block_of(int x) const {
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), x,
                               [](int v, const Interval& b) { return v < b.start; });
    if (it == blocks_.begin()) return -1;
    --it;
    return it->contains(x) ? static_cast<int>(it - blocks_.begin()) : -1;
}

std::string LabeledIntervalPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) os << ',';
        os << '{';
        for (int x = blocks_[k].start; x <= blocks_[k].last(); ++x) os << (x == blocks_[k].start ? "" : ",") << x;
        os << '}';
    }
    os << '}';
    return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
        size_ += p;
    }
}

std::string Composition::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts_[k]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.parts_ <=> b.parts_;
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    std::vector<char> seen(one_line_.size() + 1, 0);
    for (int v : one_line_) {
        if (v < 1 || static_cast<std::size_t>(v) > one_line_.size() || seen[v])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v] = 1;
    }
}

Permutation Permutation::from_digits(std::string_view digits) {
    std::vector<int> v;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit");
        v.push_back(c - '0');
    }
    return Permutation(std::move(v));
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    if (one_line_.empty()) return "()";
    std::string s;
    if (one_line_.size() <= 9) {
        for (int v : one_line_) s += static_cast<char>('0' + v);
        return s;
    }
    s = "(";
    for (std::size_t k = 0; k < one_line_.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(one_line_[k]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.one_line_.size() <=> b.one_line_.size(); c != 0) return c;
    return a.one_line_ <=> b.one_line_;
}

std::string to_string(PartialOrderResult r) {
    switch (r) {
        case PartialOrderResult::Less: return "Less";
        case PartialOrderResult::Equal: return "Equal";
        case PartialOrderResult::Greater: return "Greater";
        default: return "Incomparable";
    }
}

LabeledIntervalPartition cliques(std::span<const int> a) {
    IntSet s(a.begin(), a.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Interval> out;
    for (int x : s) {
        if (!out.empty() && out.back().last() + 1 == x)
            ++out.back().len;
        else
            out.push_back({x, 1});
    }
    return LabeledIntervalPartition(std::move(out));
}

LabeledIntervalPartition restrict(const LabeledIntervalPartition& i, std::span<const int> a) {
    IntSet s(a.begin(), a.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Interval> out;
    int prev = 0, prev_block = -1;
    for (int x : s) {
        int b = i.block_of(x);
        if (b < 0) continue;
        if (!out.empty() && prev + 1 == x && prev_block == b)
            ++out.back().len;
        else
            out.push_back({x, 1});
        prev = x;
        prev_block = b;
    }
    return LabeledIntervalPartition(std::move(out));
}

Composition standardize_partition(const LabeledIntervalPartition& i) {
    std::vector<int> parts;
    parts.reserve(i.block_count());
    for (const auto& b : i.blocks()) parts.push_back(b.len);
    return Composition(std::move(parts));
}

LabeledIntervalPartition glue(const LabeledIntervalPartition& i, const LabeledIntervalPartition& j) {
    std::vector<Interval> all(i.blocks());
    all.insert(all.end(), j.blocks().begin(), j.blocks().end());
    std::sort(all.begin(), all.end());
    std::vector<Interval> out;
    for (const auto& b : all) {
        // merge only on a shared element; adjacency alone keeps blocks apart
        if (!out.empty() && b.start <= out.back().last()) {
            int last = std::max(out.back().last(), b.last());
            out.back().len = last - out.back().start + 1;
        } else {
            out.push_back(b);
        }
    }
    return LabeledIntervalPartition(std::move(out));
}

bool refines(const LabeledIntervalPartition& fine, const LabeledIntervalPartition& coarse) {
    if (fine.ground_set() != coarse.ground_set()) return false;
    for (const auto& b : fine.blocks()) {
        int k = coarse.block_of(b.start);
        if (k < 0 || !coarse.blocks()[static_cast<std::size_t>(k)].contains(b.last())) return false;
    }
    return true;
}

PartialOrderResult compare(const LabeledIntervalPartition& i, const LabeledIntervalPartition& j) {
    if (i == j) return PartialOrderResult::Equal;
    if (refines(i, j)) return PartialOrderResult::Less;
    if (refines(j, i)) return PartialOrderResult::Greater;
    return PartialOrderResult::Incomparable;
}

std::optional<LabeledIntervalPartition> refine_to(const LabeledIntervalPartition& i, const Composition& s) {
    if (!is_finer_or_equal(s, standardize_partition(i))) return std::nullopt;
    IntSet g = i.ground_set();
    std::vector<Interval> out;
    std::size_t pos = 0;
    for (int p : s.parts()) {
        out.push_back({g[pos], p});
        pos += static_cast<std::size_t>(p);
    }
    return LabeledIntervalPartition(std::move(out));
}

LabeledIntervalPartition canonical_partition(const Composition& s) {
    std::vector<Interval> out;
    int start = 1;
    for (int p : s.parts()) {
        out.push_back({start, p});
        start += p;
    }
    return LabeledIntervalPartition(std::move(out));
}

Composition composition_concat(const Composition& s, const Composition& t) {
    std::vector<int> parts(s.parts());
    parts.insert(parts.end(), t.parts().begin(), t.parts().end());
    return Composition(std::move(parts));
}

bool is_finer_or_equal(const Composition& s, const Composition& t) {
    if (s.size() != t.size()) return false;
    // every cut of t must also be a cut of s
    std::size_t k = 0;
    int acc = 0;
    for (int p : t.parts()) {
        int target = acc + p;
        while (acc < target && k < s.parts().size()) acc += s.parts()[k++];
        if (acc != target) return false;
    }
    return true;
}

PartialOrderResult compare(const Composition& s, const Composition& t) {
    if (s == t) return PartialOrderResult::Equal;
    if (is_finer_or_equal(s, t)) return PartialOrderResult::Less;
    if (is_finer_or_equal(t, s)) return PartialOrderResult::Greater;
    return PartialOrderResult::Incomparable;
}

Composition composition_restriction(const Composition& s, std::span<const int> a) {
    std::vector<int> block(static_cast<std::size_t>(s.size()) + 1, -1);
    int x = 1;
    for (std::size_t k = 0; k < s.parts().size(); ++k)
        for (int r = 0; r < s.parts()[k]; ++r) block[static_cast<std::size_t>(x++)] = static_cast<int>(k);
    std::vector<int> parts;
    int prev = -10;
    for (int e : a) {
        if (e < 1 || e > s.size()) throw std::out_of_range("element outside composition ground set");
        if (!parts.empty() && e == prev + 1 && block[static_cast<std::size_t>(e)] == block[static_cast<std::size_t>(prev)])
            ++parts.back();
        else
            parts.push_back(1);
        prev = e;
    }
    return Composition(std::move(parts));
}

namespace {
void compositions_rec(int n, std::vector<int>& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 1; p <= n; ++p) {
        cur.push_back(p);
        compositions_rec(n - p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    compositions_rec(n, cur, out);
    return out;
}

std::vector<Composition> refinements_of(const Composition& t) {
    std::vector<Composition> out{Composition{}};
    for (int p : t.parts()) {
        std::vector<Composition> next;
        for (const auto& head : out)
            for (const auto& tail : compositions_of(p)) next.push_back(composition_concat(head, tail));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation restrict_permutation(const Permutation& sigma, std::span<const int> positions) {
    return subword_standardize<int>(std::span<const int>(sigma.one_line()), positions);
}

std::vector<Permutation> permutations_of(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

IntSet range_set(int lo, int hi) {
    IntSet out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

}  // namespace vinc
