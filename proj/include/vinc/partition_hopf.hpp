#pragma once

// The concatenation / gluing-coproduct bialgebra on compositions and its dual
// quasi-shuffle / deconcatenation Hopf algebra.

#include "vinc/lincomb.hpp"

namespace vinc {

using PartComb = LinComb<Composition>;
using PartTensor = Tensor2<Composition, Composition>;
using PartComb2 = LinComb<PartTensor>;

PartComb conc_product(const PartComb& x, const PartComb& y);

/// Sum over covers A u A' = [n] and interval partitions I, I' of A, A' gluing to s.
PartComb2 coqspart(const Composition& s);
PartComb2 coqspart(const PartComb& x);

/// Dual of coqspart; commutative with unit [].
PartComb qspart(const Composition& s, const Composition& t);
PartComb qspart(const PartComb& x, const PartComb& y);

PartComb2 deconc(const Composition& s);
PartComb2 deconc(const PartComb& x);

/// coqspart restricted to disjoint covers.
PartComb2 shuffle_coproduct(const Composition& s);

/// <s (x) t, coqspart(g)>.
Integer section_coefficient(const Composition& s, const Composition& t, const Composition& g);

/// Every way to lay the blocks of s, in order, as disjoint intervals inside [n].
std::vector<LabeledIntervalPartition> block_placements(const Composition& s, int n);

Rational counit(const PartComb& x);
PartComb unit(const Rational& c);

}  // namespace vinc
