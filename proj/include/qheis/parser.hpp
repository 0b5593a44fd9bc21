#pragma once

#include <optional>
#include <string>

#include "qheis/calculus.hpp"
#include "qheis/rewrite.hpp"
#include "qheis/term.hpp"

namespace qheis {

/// Parse the expression grammar: generators `x[1] p[2] d[1] f f[1] df[1]
/// Df fD a b c d`, blades `E[1,2] be[1] E0`, tensor `ox`, juxtaposition or
/// `*` for products, `+`/`-`, scalar factors `3/2 i hbar q^-1 Q[1,2]`.
/// `ox` binds looser than juxtaposition, sums loosest. Blade indices are
/// validated against blade_dim.
Expression parse_expression(const std::string& text, int blade_dim = 3);

/// Parse the polynomial-function grammar: `x0^2*E[1] + x1*x2*E[2]`, with
/// optional exact scalar coefficients. The algebra defaults to Am with the
/// dimension inferred from the largest index unless given explicitly.
PolyFunction parse_polyfunction(const std::string& text, std::optional<Algebra> alg = {});

/// Parse a presentation file: one rule per line in the form
///   `x[j] ox x[k] | j<k -> q^-1 * (x[k] ox x[j])`
/// plus optional `param Q[j,k] = q|table|symbolic` binding lines and
/// `#` comments.
Presentation parse_presentation(const std::string& text, const std::string& name);

}  // namespace qheis
