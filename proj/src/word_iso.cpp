#include "vinc/word_iso.hpp"

namespace vinc {

IntWord::IntWord(std::vector<int> letters) {
    for (int l : letters)
        if (l < 1) throw std::invalid_argument("word letters must be >= 1");
    comp_ = Composition(std::move(letters));
}

std::string IntWord::to_string() const {
    if (letters().empty()) return "()";
    std::string out;
    for (std::size_t k = 0; k < letters().size(); ++k) {
        if (k) out += '.';
        out += std::to_string(letters()[k]);
    }
    return out;
}

Composition phi(const IntWord& w) { return w.as_composition(); }

IntWord phi_inverse(const Composition& s) { return IntWord(s.parts()); }

IntWord word_concat(const IntWord& u, const IntWord& v) {
    return phi_inverse(composition_concat(phi(u), phi(v)));
}

WordComb qswrd(const IntWord& u, const IntWord& v) {
    WordComb out;
    for (const auto& [s, c] : qspart(phi(u), phi(v))) out.add(phi_inverse(s), c);
    return out;
}

WordComb qswrd(const WordComb& x, const WordComb& y) {
    return bilinear_extend<IntWord>(x, y, [](const IntWord& a, const IntWord& b) { return qswrd(a, b); });
}

}  // namespace vinc
