#pragma once

// The Hopf algebra on vincular patterns (s, sigma) and the embeddings of
// compositions (psi) and permutations (phi) into it.

#include <string_view>

#include "vinc/partition_hopf.hpp"
#include "vinc/perm_hopf.hpp"

namespace vinc {

class VincularPattern {
public:
    VincularPattern() = default;
    /// Throws std::invalid_argument when the sizes differ.
    VincularPattern(Composition blocks, Permutation perm);

    /// `21|3`, `12|` (single block), `|` (empty); `10,2|1` once an entry exceeds 9.
    static VincularPattern parse(std::string_view text);

    const Composition& blocks() const { return blocks_; }
    const Permutation& perm() const { return perm_; }
    int size() const { return perm_.size(); }
    bool empty() const { return perm_.empty(); }

    std::string to_string() const;

    friend bool operator==(const VincularPattern&, const VincularPattern&) = default;
    /// Size, then permutation, then blocks.
    friend std::strong_ordering operator<=>(const VincularPattern& a, const VincularPattern& b);

private:
    Composition blocks_;
    Permutation perm_;
};

inline std::string basis_string(const VincularPattern& v) { return v.to_string(); }
inline std::string term_string(const VincularPattern& v) { return "(" + v.to_string() + ")"; }
inline int basis_size(const VincularPattern& v) { return v.size(); }

using VincComb = LinComb<VincularPattern>;
using VincTensor = Tensor2<VincularPattern, VincularPattern>;
using VincComb2 = LinComb<VincTensor>;

VincularPattern genconc(const VincularPattern& x, const VincularPattern& y);
VincComb genconc(const VincComb& x, const VincComb& y);

/// Split points that are block boundaries and where the permutation splits as alpha (.) beta.
std::vector<int> vincular_split_points(const VincularPattern& x);

/// The two halves of x at a split point from vincular_split_points.
std::pair<VincularPattern, VincularPattern> split_at(const VincularPattern& x, int cut);

VincComb2 deconcgen(const VincularPattern& x);
VincComb2 deconcgen(const VincComb& x);

VincComb2 coqsgen(const VincularPattern& x);
VincComb2 coqsgen(const VincComb& x);

VincComb qsgen(const VincularPattern& x, const VincularPattern& y, Enumeration mode = Enumeration::Interleave);
VincComb qsgen(const VincComb& x, const VincComb& y);

VincComb embed_psi(const Composition& s);
VincComb embed_psi(const PartComb& x);
VincularPattern embed_phi(const Permutation& sigma);
VincComb embed_phi(const PermComb& x);

Rational counit(const VincComb& x);
VincComb vinc_unit(const Rational& c);

}  // namespace vinc
