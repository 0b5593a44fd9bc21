#include "qheis/rewrite.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qheis/parser.hpp"

namespace qheis {

RewriteRule instance_rule(Generator g1, Generator g2, bool cross_slot, const Expression& rhs) {
    RewriteRule r;
    r.first = {g1.kind, false, g1.index};
    r.second = {g2.kind, false, g2.index};
    r.cross_slot = cross_slot;
    r.cond = IndexCond::Any;
    for (const auto& [key, coeff] : rhs.terms()) {
        if (key.blade) throw AlgebraError("rule right-hand sides must be bladeless");
        TemplateTerm t;
        t.base = coeff;
        for (const Generator& g : key.slot1) t.left.push_back({g.kind, false, g.index});
        if (key.slot2)
            for (const Generator& g : *key.slot2) t.right.push_back({g.kind, false, g.index});
        if (!cross_slot && !t.right.empty())
            throw AlgebraError("word rules cannot produce tensor terms");
        r.rhs.push_back(std::move(t));
    }
    return r;
}

namespace {

struct Bindings {
    int value[2] = {0, 0};
    bool bound[2] = {false, false};
};

bool match_atom(const PatternAtom& atom, const Generator& g, Bindings& b) {
    if (atom.kind != g.kind) return false;
    if (!atom.is_var) return atom.value == g.index;
    int v = atom.value;
    if (b.bound[v]) return b.value[v] == g.index;
    b.value[v] = g.index;
    b.bound[v] = true;
    return true;
}

bool cond_holds(IndexCond cond, int i1, int i2) {
    switch (cond) {
        case IndexCond::Any: return true;
        case IndexCond::Less: return i1 < i2;
        case IndexCond::Greater: return i1 > i2;
        case IndexCond::Equal: return i1 == i2;
        case IndexCond::NotEqual: return i1 != i2;
    }
    return false;
}

bool match_pair(const RewriteRule& rule, const Generator& g1, const Generator& g2, Bindings& b) {
    b = Bindings{};
    if (!match_atom(rule.first, g1, b)) return false;
    if (!match_atom(rule.second, g2, b)) return false;
    return cond_holds(rule.cond, g1.index, g2.index);
}

Generator instantiate_gen(const TemplateGen& g, const Bindings& b) {
    if (!g.is_var) return {g.kind, g.value};
    if (!b.bound[g.value]) throw AlgebraError("rule template references an unbound index variable");
    return {g.kind, b.value[g.value]};
}

// Resolve the scalar coefficient of one template term. nullopt: vanishes.
std::optional<Scalar> resolve_coeff(const TemplateTerm& t, const Bindings& b, QjkBinding binding) {
    Scalar c = t.base;
    if (t.delta) {
        if (!b.bound[0] || !b.bound[1])
            throw AlgebraError("delta in a rule without both index variables bound");
        if (b.value[0] != b.value[1]) return std::nullopt;
    }
    if (t.qjk_pow != 0) {
        if (!b.bound[0] || !b.bound[1])
            throw AlgebraError("Q[j,k] in a rule without both index variables bound");
        int j = b.value[0], k = b.value[1];
        switch (binding) {
            case QjkBinding::Symbolic:
                c = c * Scalar::qjk(j, k, t.qjk_pow);
                break;
            case QjkBinding::ToQ:
                c = c * Scalar::q(t.qjk_pow);
                break;
            case QjkBinding::Table:
                if (j == k) {
                    if (t.qjk_pow < 0)
                        throw DomainError("q_{jj} = 0 under the table binding; cannot invert");
                    return std::nullopt;
                }
                if (t.qjk_pow % 2 != 0) c = -c;
                break;
        }
    }
    if (c.is_zero()) return std::nullopt;
    return c;
}

struct Redex {
    TermKey key;
    Scalar coeff;
    std::size_t rule;
    int slot;         // 1 or 2 for word positions, 0 for the tensor boundary
    std::size_t pos;  // index of the pair's first generator (word positions)
    Bindings bind;
};

std::optional<Redex> find_redex(const Expression& e, const Presentation& p) {
    for (const auto& [key, coeff] : e.terms()) {
        // slot1 adjacencies, then the boundary, then slot2 adjacencies
        for (std::size_t i = 0; i + 1 < key.slot1.size(); ++i)
            for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
                const RewriteRule& r = p.rules[ri];
                if (r.cross_slot) continue;
                Bindings b;
                if (match_pair(r, key.slot1[i], key.slot1[i + 1], b))
                    return Redex{key, coeff, ri, 1, i, b};
            }
        if (key.slot2 && !key.slot1.empty() && !key.slot2->empty())
            for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
                const RewriteRule& r = p.rules[ri];
                if (!r.cross_slot) continue;
                Bindings b;
                if (match_pair(r, key.slot1.back(), key.slot2->front(), b))
                    return Redex{key, coeff, ri, 0, key.slot1.size() - 1, b};
            }
        if (key.slot2)
            for (std::size_t i = 0; i + 1 < key.slot2->size(); ++i)
                for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
                    const RewriteRule& r = p.rules[ri];
                    if (r.cross_slot) continue;
                    Bindings b;
                    if (match_pair(r, (*key.slot2)[i], (*key.slot2)[i + 1], b))
                        return Redex{key, coeff, ri, 2, i, b};
                }
    }
    return std::nullopt;
}

// The replacement expression for the redex's whole term.
Expression apply_redex(const Redex& rd, const Presentation& p) {
    const RewriteRule& rule = p.rules[rd.rule];
    Expression out;
    for (const TemplateTerm& t : rule.rhs) {
        std::optional<Scalar> c = resolve_coeff(t, rd.bind, p.binding);
        if (!c) continue;
        TermKey key;
        key.blade = rd.key.blade;
        if (rd.slot == 0) {
            Word w1(rd.key.slot1.begin(), rd.key.slot1.end() - 1);
            for (const TemplateGen& g : t.left) w1.push_back(instantiate_gen(g, rd.bind));
            Word w2;
            for (const TemplateGen& g : t.right) w2.push_back(instantiate_gen(g, rd.bind));
            w2.insert(w2.end(), rd.key.slot2->begin() + 1, rd.key.slot2->end());
            key.slot1 = std::move(w1);
            key.slot2 = std::move(w2);
        } else {
            const Word& w = rd.slot == 1 ? rd.key.slot1 : *rd.key.slot2;
            Word nw(w.begin(), w.begin() + rd.pos);
            for (const TemplateGen& g : t.left) nw.push_back(instantiate_gen(g, rd.bind));
            nw.insert(nw.end(), w.begin() + rd.pos + 2, w.end());
            if (rd.slot == 1) {
                key.slot1 = std::move(nw);
                key.slot2 = rd.key.slot2;
            } else {
                key.slot1 = rd.key.slot1;
                key.slot2 = std::move(nw);
            }
        }
        out.add_term(std::move(key), rd.coeff * *c);
    }
    return out;
}

}  // namespace

Expression normalize(const Expression& e, const Presentation& p, NormalizeOptions opts) {
    Expression cur = e;
    std::uint64_t steps = 0;
    for (;;) {
        auto rd = find_redex(cur, p);
        if (!rd) return cur;
        if (++steps > opts.budget)
            throw BudgetError("normalize exceeded its budget of " + std::to_string(opts.budget) +
                              " rule applications (non-terminating rule set?)");
        Expression removed;
        removed.add_term(rd->key, rd->coeff);
        cur = cur - removed + apply_redex(*rd, p);
    }
}

Expression check_identity(const Expression& lhs, const Expression& rhs, const Presentation& p,
                          NormalizeOptions opts) {
    return normalize(lhs - rhs, p, opts);
}

namespace {

struct Instance {
    std::size_t rule;
    Generator g1, g2;
    bool cross;
    Bindings bind;
};

int enum_bound(GenKind kind, int n) { return kind == GenKind::Entry ? std::min(n, 4) : n; }

std::vector<Instance> enumerate_instances(const Presentation& p, int n) {
    std::vector<Instance> out;
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const RewriteRule& r = p.rules[ri];
        auto candidates = [&](const PatternAtom& a) {
            std::vector<int> v;
            if (!a.is_var) {
                v.push_back(a.value);
            } else {
                for (int i = 1; i <= enum_bound(a.kind, n); ++i) v.push_back(i);
            }
            return v;
        };
        for (int i1 : candidates(r.first))
            for (int i2 : candidates(r.second)) {
                Generator g1{r.first.kind, i1}, g2{r.second.kind, i2};
                Bindings b;
                if (match_pair(r, g1, g2, b)) out.push_back({ri, g1, g2, r.cross_slot, b});
            }
    }
    return out;
}

Expression monomial_of(const std::optional<Blade>& blade, Word w1, std::optional<Word> w2) {
    Expression e;
    e.add_term(TermKey{blade, std::move(w1), std::move(w2)}, Scalar::one());
    return e;
}

Expression reduce_at(const Expression& mono, const Presentation& p, std::size_t rule, int slot,
                     std::size_t pos) {
    const auto& [key, coeff] = *mono.terms().begin();
    const Generator& g1 = slot == 0   ? key.slot1.back()
                          : slot == 1 ? key.slot1[pos]
                                      : (*key.slot2)[pos];
    const Generator& g2 = slot == 0   ? key.slot2->front()
                          : slot == 1 ? key.slot1[pos + 1]
                                      : (*key.slot2)[pos + 1];
    Bindings b;
    if (!match_pair(p.rules[rule], g1, g2, b))
        throw AlgebraError("internal: critical-pair reduct does not match");
    Redex rd{key, coeff, rule, slot, slot == 0 ? key.slot1.size() - 1 : pos, b};
    return apply_redex(rd, p);
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const Presentation& p, int max_index,
                                         NormalizeOptions opts) {
    if (max_index < 1 || max_index > 4)
        throw AlgebraError("critical-pair index bound must be between 1 and 4");
    std::vector<CriticalPair> out;
    auto insts = enumerate_instances(p, max_index);

    auto push = [&](std::size_t ra, std::size_t rb, const Expression& overlap, Expression red1,
                    Expression red2) {
        Expression residual = normalize(red1, p, opts) - normalize(red2, p, opts);
        out.push_back({ra, rb, overlap, std::move(residual)});
    };

    // Two rules matching the same pair instance.
    for (std::size_t i = 0; i < insts.size(); ++i)
        for (std::size_t j = i + 1; j < insts.size(); ++j) {
            const Instance &A = insts[i], &B = insts[j];
            if (A.g1 != B.g1 || A.g2 != B.g2 || A.cross != B.cross) continue;
            Expression overlap = A.cross ? monomial_of(std::nullopt, {A.g1}, Word{A.g2})
                                         : monomial_of(std::nullopt, {A.g1, A.g2}, std::nullopt);
            int slot = A.cross ? 0 : 1;
            push(A.rule, B.rule, overlap, reduce_at(overlap, p, A.rule, slot, 0),
                 reduce_at(overlap, p, B.rule, slot, 0));
        }

    // Word-word chains sharing the middle generator, and word-cross contacts.
    for (const Instance& A : insts)
        for (const Instance& B : insts) {
            if (A.g2 != B.g1) continue;
            if (!A.cross && !B.cross) {
                Expression overlap =
                    monomial_of(std::nullopt, {A.g1, A.g2, B.g2}, std::nullopt);
                push(A.rule, B.rule, overlap, reduce_at(overlap, p, A.rule, 1, 0),
                     reduce_at(overlap, p, B.rule, 1, 1));
            } else if (!A.cross && B.cross) {
                // [g1 g2] (x) [g3]
                Expression overlap = monomial_of(std::nullopt, {A.g1, A.g2}, Word{B.g2});
                push(A.rule, B.rule, overlap, reduce_at(overlap, p, A.rule, 1, 0),
                     reduce_at(overlap, p, B.rule, 0, 0));
            } else if (A.cross && !B.cross) {
                // [g1] (x) [g2 g3]
                Word tail;
                tail.push_back(A.g2);
                tail.push_back(B.g2);
                Expression overlap = monomial_of(std::nullopt, {A.g1}, std::move(tail));
                push(A.rule, B.rule, overlap, reduce_at(overlap, p, A.rule, 0, 0),
                     reduce_at(overlap, p, B.rule, 2, 0));
            }
        }
    return out;
}

bool terminates_on_pairs(const Presentation& p, int max_index) {
    auto insts = enumerate_instances(p, max_index);

    struct Node {
        bool cross;
        Generator g1, g2;
        auto operator<=>(const Node&) const = default;
    };
    std::map<Node, std::vector<Node>> edges;

    for (const Instance& inst : insts) {
        Node from{inst.cross, inst.g1, inst.g2};
        auto& outs = edges[from];
        for (const TemplateTerm& t : p.rules[inst.rule].rhs) {
            if (!resolve_coeff(t, inst.bind, p.binding)) continue;
            std::vector<Generator> left, right;
            for (const TemplateGen& g : t.left) left.push_back(instantiate_gen(g, inst.bind));
            for (const TemplateGen& g : t.right) right.push_back(instantiate_gen(g, inst.bind));
            for (std::size_t i = 0; i + 1 < left.size(); ++i)
                outs.push_back({false, left[i], left[i + 1]});
            for (std::size_t i = 0; i + 1 < right.size(); ++i)
                outs.push_back({false, right[i], right[i + 1]});
            if (inst.cross && !left.empty() && !right.empty())
                outs.push_back({true, left.back(), right.front()});
        }
    }

    // cycle detection (three colours)
    std::map<Node, int> colour;
    std::vector<std::pair<Node, std::size_t>> stack;
    for (const auto& [start, _] : edges) {
        if (colour[start] != 0) continue;
        stack.push_back({start, 0});
        colour[start] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            auto it = edges.find(node);
            std::size_t fan = it == edges.end() ? 0 : it->second.size();
            if (next >= fan) {
                colour[node] = 2;
                stack.pop_back();
                continue;
            }
            Node succ = it->second[next++];
            int c = colour[succ];
            if (c == 1) return false;
            if (c == 0) {
                colour[succ] = 1;
                stack.push_back({succ, 0});
            }
        }
    }
    return true;
}

// ------------------------------------------------------------------
// Builtin catalogue
// ------------------------------------------------------------------

namespace {

// Each preset encodes one relation system as printed, oriented one way.
const struct {
    const char* name;
    const char* text;
} kPresets[] = {
    {"manin-word",
     "# quantum plane, word form: descending coordinate pairs normalize\n"
     "x[j] x[k] | j>k -> q^-1 * (x[k] x[j])\n"},
    {"qplane",
     "# quantum plane on the twofold tensor space\n"
     "x[j] ox x[k] | j>k -> q * (x[k] ox x[j])\n"},
    {"dual-plane",
     "# dual plane of partial operators\n"
     "d[j] ox d[k] | j<k -> q^-1 * (d[k] ox d[j])\n"},
    {"qheis2",
     "# deformed Heisenberg algebra on the twofold tensor space\n"
     "x[j] ox x[k] | j<k -> q^-1 * (x[k] ox x[j])\n"
     "p[j] ox p[k] | j<k -> q^-1 * (p[k] ox p[j])\n"
     "x[j] ox p[k] | any -> q * (p[k] ox x[j]) + i*hbar*delta\n"},
    {"qheis-f",
     "# function-deformed Heisenberg algebra on the twofold tensor space\n"
     "x[j] ox x[k] | j<k -> q^-1 * (x[k] ox x[j])\n"
     "x[j] ox p[k] | any -> Q[j,k] * (p[k] ox x[j]) - i*hbar*delta*f\n"
     "p[j] ox p[k] | j<k -> q^-1 * (p[k] ox p[j]) - i*hbar*(df[j] ox p[k]) "
     "+ i*hbar*q^-1*(df[k] ox p[j])\n"},
    {"classical",
     "# commutator form at tensor degree 1\n"
     "x[j] x[k] | j>k -> x[k] x[j]\n"
     "p[j] x[k] | any -> x[k] p[j] - i*hbar*delta*f\n"
     "p[j] p[k] | j>k -> p[k] p[j] - i*hbar*(df[j] p[k]) + i*hbar*(df[k] p[j])\n"},
};

Presentation make_abcd_comm() {
    // commuting matrix entries: sort adjacent pairs alphabetically
    Presentation p;
    p.name = "abcd-comm";
    RewriteRule r;
    r.first = {GenKind::Entry, true, 0};
    r.second = {GenKind::Entry, true, 1};
    r.cross_slot = false;
    r.cond = IndexCond::Greater;
    TemplateTerm t;
    t.left = {{GenKind::Entry, true, 1}, {GenKind::Entry, true, 0}};
    r.rhs.push_back(std::move(t));
    p.rules.push_back(std::move(r));
    return p;
}

}  // namespace

std::vector<std::string> builtin_preset_names() {
    std::vector<std::string> names;
    for (const auto& p : kPresets) names.push_back(p.name);
    names.push_back("abcd-comm");
    return names;
}

Presentation builtin_preset(const std::string& name) {
    for (const auto& p : kPresets)
        if (name == p.name) return parse_presentation(p.text, p.name);
    if (name == "abcd-comm") return make_abcd_comm();
    throw NotFoundError("unknown preset '" + name + "'");
}

Presentation load_presentation(const std::string& name_or_path) {
    for (const auto& p : kPresets)
        if (name_or_path == p.name) return parse_presentation(p.text, p.name);
    if (name_or_path == "abcd-comm") return make_abcd_comm();
    std::ifstream in(name_or_path);
    if (!in)
        throw NotFoundError("no builtin preset or readable file named '" + name_or_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), name_or_path);
}

Presentation with_binding(Presentation p, QjkBinding b) {
    p.binding = b;
    return p;
}

}  // namespace qheis
