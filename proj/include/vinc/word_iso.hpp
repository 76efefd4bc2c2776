#pragma once

// Words on positive integers; Phi relabels a word n1...nk as the composition (n1,...,nk).

#include "vinc/partition_hopf.hpp"

namespace vinc {

class IntWord {
public:
    IntWord() = default;
    explicit IntWord(std::vector<int> letters);
    IntWord(std::initializer_list<int> letters) : IntWord(std::vector<int>(letters)) {}

    const std::vector<int>& letters() const { return comp_.parts(); }
    std::size_t length() const { return comp_.block_count(); }
    /// Sum of letters; the grading transported from compositions.
    int weight() const { return comp_.size(); }
    const Composition& as_composition() const { return comp_; }

    /// `1.3.2`; the empty word is `()`.
    std::string to_string() const;

    friend bool operator==(const IntWord&, const IntWord&) = default;
    friend auto operator<=>(const IntWord& a, const IntWord& b) { return a.comp_ <=> b.comp_; }

private:
    Composition comp_;
};

inline std::string basis_string(const IntWord& w) { return w.to_string(); }
inline int basis_size(const IntWord& w) { return w.weight(); }

using WordComb = LinComb<IntWord>;

Composition phi(const IntWord& w);
IntWord phi_inverse(const Composition& s);

IntWord word_concat(const IntWord& u, const IntWord& v);

WordComb qswrd(const IntWord& u, const IntWord& v);
WordComb qswrd(const WordComb& x, const WordComb& y);

}  // namespace vinc
