#pragma once

#include <string>

#include "qheis/calculus.hpp"
#include "qheis/term.hpp"

namespace qheis {

std::string render(const Generator& g);
std::string render(const Blade& b);
std::string render(const Scalar& s);
std::string render(const Expression& e);
std::string render(const PolyFunction& f);

}  // namespace qheis
