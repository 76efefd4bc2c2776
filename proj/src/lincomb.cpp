#include "vinc/lincomb.hpp"

namespace vinc {

std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace vinc
