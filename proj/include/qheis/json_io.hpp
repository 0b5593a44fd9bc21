#pragma once

#include <string>

#include "qheis/calculus.hpp"
#include "qheis/term.hpp"
#include "qheis/verify.hpp"

namespace qheis {

/// Order-stable JSON encodings. Rational parts are decimal strings so that
/// arbitrary-precision values survive unharmed.
std::string to_json(const Expression& e, int indent = -1);
std::string to_json(const PolyFunction& f, int indent = -1);
std::string to_json(const VerificationReport& r, int indent = -1);

}  // namespace qheis
