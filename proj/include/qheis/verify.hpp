#pragma once

#include <string>
#include <vector>

#include "qheis/calculus.hpp"
#include "qheis/rewrite.hpp"

namespace qheis {

enum class SignConvention : std::uint8_t { AsPrinted, Unified };

struct VerifyConfig {
    QjkBinding qjk = QjkBinding::ToQ;
    SignConvention sign = SignConvention::AsPrinted;
};

struct RelationEntry {
    std::string label;
    std::vector<std::string> substitutions;
    Expression residual;

    bool zero() const { return residual.is_zero(); }
};

/// Outcome of one check: every relation instance that was replayed, with
/// the exact residual and the substitutions that produced it.
struct VerificationReport {
    std::string check;
    std::string config;
    std::vector<RelationEntry> entries;

    bool all_zero() const;
};

/// Substitute f := 1 (so both partials of f vanish) into the
/// function-deformed relation system and subtract the plain deformed
/// system, relation by relation, over the index instances (1,1) and (1,2).
/// The sign convention picks the printed sign of the i*hbar*delta*f term
/// (as-printed: minus) or flips it to match the plain system (unified).
VerificationReport verify_lemma_f1(const VerifyConfig& cfg);

/// Replay the non-monogenic relation set: each claimed relation is reduced
/// under the function-deformed system after the stated reconstructions
/// (xhat := e_j x_j and so on), with the proof's single-term reading of Df;
/// the full-sum reading is reported alongside.
VerificationReport verify_prop_nonmonogenic();

/// Set f := 0 in the momentum relations, substitute p := -i hbar d, and
/// reduce under the dual-plane system; also replays the non-monogenic
/// witness f = x1 e1, whose residual is the surviving Df term.
VerificationReport verify_theorem_monogenic();

/// Replay the bold-generator relation set over Bp with q_{jk} symbolic:
/// t3/t4 reduce to zero; t1a/t2a are replayed twice, with and without the
/// asserted auxiliary identity supplied as a rule.
VerificationReport verify_prop_bold();

/// The noncommutative determinant a*d - q*(c*b). Entries must be scalars,
/// single generators, or scalar multiples thereof.
Expression quantum_det(const Expression& a, const Expression& b, const Expression& c,
                       const Expression& d);
Expression quantum_det();

/// Transform the plane coordinates by the generic 2x2 matrix, impose the
/// plane relation on the images, reduce coordinate pairs, and return the
/// coefficient of each basis tensor (ordered (1,1), (1,2), (2,2)) as a
/// relation polynomial in the matrix entries.
std::vector<Expression> derive_plane_relations();

}  // namespace qheis
