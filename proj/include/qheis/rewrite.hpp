#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qheis/term.hpp"

namespace qheis {

enum class IndexCond : std::uint8_t { Any, Less, Greater, Equal, NotEqual };

/// One generator slot of a rule pattern: a kind plus either a variable
/// index (0 = j, 1 = k) or a fixed one.
struct PatternAtom {
    GenKind kind;
    bool is_var = true;
    int value = 0;
};

struct TemplateGen {
    GenKind kind;
    bool is_var = false;
    int value = 0;
};

/// One summand of a rule's right-hand side. The full coefficient is
/// base * Q[j,k]^qjk_pow * delta_{jk}, where Q resolves through the
/// presentation's binding and delta through the bound indices. `left`
/// joins the first slot at the redex, `right` the second (word rules use
/// only `left`).
struct TemplateTerm {
    Scalar base = Scalar::one();
    int qjk_pow = 0;
    bool delta = false;
    std::vector<TemplateGen> left;
    std::vector<TemplateGen> right;
};

/// Directed rule: an adjacent generator pair (within a word, or across the
/// tensor boundary when cross_slot) rewrites to the template sum whenever
/// the index condition holds.
struct RewriteRule {
    PatternAtom first;
    PatternAtom second;
    bool cross_slot = false;
    IndexCond cond = IndexCond::Any;
    std::vector<TemplateTerm> rhs;
};

/// How occurrences of the pairwise deformation parameter q_{jk} in rule
/// coefficients resolve at instantiation.
enum class QjkBinding : std::uint8_t {
    Symbolic,  // keep Q[j,k] as a named parameter
    ToQ,       // q_{jk} := q
    Table,     // q_{jk} := -1 for j != k, 0 for j = k
};

struct Presentation {
    std::string name;
    std::vector<RewriteRule> rules;
    QjkBinding binding = QjkBinding::Symbolic;
};

struct NormalizeOptions {
    std::uint64_t budget = 1'000'000;
};

/// Build a fully instantiated rule (fixed indices) whose right-hand side is
/// the given expression. The expression must be bladeless.
RewriteRule instance_rule(Generator g1, Generator g2, bool cross_slot, const Expression& rhs);

/// Rewrite to fixpoint: leftmost redex, first matching rule in presentation
/// order. Deterministic. Throws BudgetError past opts.budget applications.
Expression normalize(const Expression& e, const Presentation& p, NormalizeOptions opts = {});

/// normalize(lhs - rhs): empty iff the identity holds modulo p.
Expression check_identity(const Expression& lhs, const Expression& rhs, const Presentation& p,
                          NormalizeOptions opts = {});

struct CriticalPair {
    std::size_t rule_a;
    std::size_t rule_b;
    Expression overlap;
    Expression residual;
};

/// All one-step overlaps of rule left-hand sides over indices 1..max_index
/// (max 4), with the residual of the two fully normalized reducts.
std::vector<CriticalPair> critical_pairs(const Presentation& p, int max_index,
                                         NormalizeOptions opts = {});

/// Termination witness: the instantiated pair-rewrite graph over indices
/// 1..max_index is acyclic (every rewrite either shortens a term or moves
/// its contact pairs strictly down the graph).
bool terminates_on_pairs(const Presentation& p, int max_index);

std::vector<std::string> builtin_preset_names();
Presentation builtin_preset(const std::string& name);

/// Resolve against the builtin catalogue first, then as a file path.
Presentation load_presentation(const std::string& name_or_path);

/// Override the q_{jk} binding of a presentation (CLI --qjk flag).
Presentation with_binding(Presentation p, QjkBinding b);

}  // namespace qheis
