#include "qheis/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace qheis {

namespace {

enum class Tok : std::uint8_t {
    End, Int, Ident, LBracket, RBracket, Comma, Plus, Minus, Star, Caret,
    Slash, LParen, RParen, Pipe, Arrow, Ox, Less, Greater, Eq, BangEq,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << msg << " at line " << tok_.line << ", column " << tok_.col;
        if (tok_.kind != Tok::End) os << " (near '" << tok_.text << "')";
        throw ParseError(os.str(), tok_.line, tok_.col);
    }

    Token expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind) fail("expected " + what);
        return take();
    }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_];
                bump();
            }
            tok_ = {Tok::Int, std::move(num), tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                id += text_[pos_];
                bump();
            }
            tok_ = {id == "ox" ? Tok::Ox : Tok::Ident, std::move(id), tok_.line, tok_.col};
            return;
        }
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), tok_.line, tok_.col};
            bump();
        };
        switch (c) {
            case '[': single(Tok::LBracket); return;
            case ']': single(Tok::RBracket); return;
            case ',': single(Tok::Comma); return;
            case '+': single(Tok::Plus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '/': single(Tok::Slash); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            case '|': single(Tok::Pipe); return;
            case '<': single(Tok::Less); return;
            case '>': single(Tok::Greater); return;
            case '=': single(Tok::Eq); return;
            case '-':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                    bump();
                    bump();
                    tok_ = {Tok::Arrow, "->", tok_.line, tok_.col};
                } else {
                    single(Tok::Minus);
                }
                return;
            case '!':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                    bump();
                    bump();
                    tok_ = {Tok::BangEq, "!=", tok_.line, tok_.col};
                    return;
                }
                break;
            default:
                break;
        }
        std::ostringstream os;
        os << "unexpected character '" << c << "' at line " << line_ << ", column " << col_;
        throw ParseError(os.str(), line_, col_);
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

int parse_int(Lexer& lx) {
    Token t = lx.expect(Tok::Int, "an integer");
    return std::stoi(t.text);
}

int parse_exponent(Lexer& lx) {
    // after '^': optional '-', integer
    bool neg = false;
    if (lx.peek().kind == Tok::Minus) {
        lx.take();
        neg = true;
    }
    int v = parse_int(lx);
    return neg ? -v : v;
}

std::vector<int> parse_index_list(Lexer& lx) {
    lx.expect(Tok::LBracket, "'['");
    std::vector<int> idx;
    idx.push_back(parse_int(lx));
    while (lx.peek().kind == Tok::Comma) {
        lx.take();
        idx.push_back(parse_int(lx));
    }
    lx.expect(Tok::RBracket, "']'");
    return idx;
}

// ------------------------------------------------------------------
// Expression parser
// ------------------------------------------------------------------

class ExprParser {
public:
    ExprParser(Lexer& lx, int blade_dim) : lx_(lx), blade_dim_(blade_dim) {}

    Expression parse_sum() {
        bool neg = false;
        if (lx_.peek().kind == Tok::Minus) {
            lx_.take();
            neg = true;
        }
        Expression acc = parse_tensor_term();
        if (neg) acc = -acc;
        while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
            bool minus = lx_.take().kind == Tok::Minus;
            Expression t = parse_tensor_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

private:
    Expression parse_tensor_term() {
        Expression left = parse_product();
        if (lx_.peek().kind == Tok::Ox) {
            lx_.take();
            Expression right = parse_product();
            if (lx_.peek().kind == Tok::Ox) lx_.fail("tensor degree above 2 ('ox' chained)");
            return expr_tensor(left, right);
        }
        return left;
    }

    Expression parse_product() {
        Expression acc = parse_factor();
        for (;;) {
            Tok k = lx_.peek().kind;
            if (k == Tok::Star) {
                lx_.take();
                acc = acc * parse_factor();
            } else if (k == Tok::Int || k == Tok::Ident || k == Tok::LParen) {
                acc = acc * parse_factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Expression parse_factor() {
        const Token& t = lx_.peek();
        switch (t.kind) {
            case Tok::Int: {
                Token n = lx_.take();
                Int num(n.text);
                if (lx_.peek().kind == Tok::Slash) {
                    lx_.take();
                    Token d = lx_.expect(Tok::Int, "a denominator");
                    Int den(d.text);
                    if (den == 0) lx_.fail("zero denominator");
                    return Expression::from_scalar(Scalar::rational(Rational(num, den)));
                }
                return Expression::from_scalar(Scalar::rational(Rational(num)));
            }
            case Tok::LParen: {
                lx_.take();
                Expression inner = parse_sum();
                lx_.expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident:
                return parse_ident();
            default:
                lx_.fail("expected a factor");
        }
    }

    Expression parse_ident() {
        Token id = lx_.take();
        const std::string& s = id.text;
        auto maybe_pow = [&]() { return lx_.peek().kind == Tok::Caret ? (lx_.take(), parse_exponent(lx_)) : 1; };

        if (s == "i") return Expression::from_scalar(Scalar::i());
        if (s == "hbar") return Expression::from_scalar(Scalar::hbar(maybe_pow()));
        if (s == "q") return Expression::from_scalar(Scalar::q(maybe_pow()));
        if (s == "Q") {
            auto idx = parse_index_list(lx_);
            if (idx.size() != 2) lx_.fail("Q takes exactly two indices");
            return Expression::from_scalar(Scalar::qjk(idx[0], idx[1], maybe_pow()));
        }
        if (s == "E0") return Expression::one();
        if (s == "E" || s == "be") {
            auto idx = parse_index_list(lx_);
            Blade b{s == "E" ? AlgebraKind::Am : AlgebraKind::Bp, std::move(idx)};
            try {
                b.validate(blade_dim_);
            } catch (const AlgebraError& err) {
                throw ParseError(std::string(err.what()) + " at line " + std::to_string(id.line) +
                                     ", column " + std::to_string(id.col),
                                 id.line, id.col);
            }
            return Expression::blade(std::move(b));
        }
        if (s == "x" || s == "p" || s == "df") {
            auto idx = parse_index_list(lx_);
            if (idx.size() != 1) lx_.fail("'" + s + "' takes one index");
            GenKind k = s == "x" ? GenKind::Coordinate
                                 : (s == "p" ? GenKind::Momentum : GenKind::DFComp);
            return Expression::generator({k, idx[0]});
        }
        if (s == "d") {
            if (lx_.peek().kind == Tok::LBracket) {
                auto idx = parse_index_list(lx_);
                if (idx.size() != 1) lx_.fail("'d' takes one index");
                return Expression::generator({GenKind::Partial, idx[0]});
            }
            return Expression::generator(gen_entry('d'));
        }
        if (s == "f") {
            if (lx_.peek().kind == Tok::LBracket) {
                auto idx = parse_index_list(lx_);
                if (idx.size() != 1) lx_.fail("'f' takes one index");
                return Expression::generator({GenKind::FComp, idx[0]});
            }
            return Expression::generator(gen_f());
        }
        if (s == "Df") return Expression::generator(gen_Df());
        if (s == "fD") return Expression::generator(gen_fD());
        if (s == "a" || s == "b" || s == "c")
            return Expression::generator(gen_entry(s[0]));

        throw ParseError("unknown symbol '" + s + "' at line " + std::to_string(id.line) +
                             ", column " + std::to_string(id.col),
                         id.line, id.col);
    }

    Lexer& lx_;
    int blade_dim_;
};

// ------------------------------------------------------------------
// Polynomial-function parser
// ------------------------------------------------------------------

struct PfTerm {
    Scalar coeff = Scalar::one();
    std::map<int, int> coords;               // coordinate index -> exponent
    std::optional<Blade> blade;
};

class PolyParser {
public:
    explicit PolyParser(Lexer& lx) : lx_(lx) {}

    std::vector<std::pair<bool, PfTerm>> parse() {
        std::vector<std::pair<bool, PfTerm>> terms;
        bool neg = false;
        if (lx_.peek().kind == Tok::Minus) {
            lx_.take();
            neg = true;
        }
        terms.emplace_back(neg, parse_term());
        while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
            bool minus = lx_.take().kind == Tok::Minus;
            terms.emplace_back(minus, parse_term());
        }
        lx_.expect(Tok::End, "end of input");
        return terms;
    }

private:
    PfTerm parse_term() {
        PfTerm t;
        parse_factor(t);
        for (;;) {
            Tok k = lx_.peek().kind;
            if (k == Tok::Star) {
                lx_.take();
                parse_factor(t);
            } else if (k == Tok::Int || k == Tok::Ident) {
                parse_factor(t);
            } else {
                break;
            }
        }
        return t;
    }

    void parse_factor(PfTerm& t) {
        const Token& tok = lx_.peek();
        if (tok.kind == Tok::Int) {
            Token n = lx_.take();
            Int num(n.text);
            if (lx_.peek().kind == Tok::Slash) {
                lx_.take();
                Token d = lx_.expect(Tok::Int, "a denominator");
                Int den(d.text);
                if (den == 0) lx_.fail("zero denominator");
                t.coeff = t.coeff * Scalar::rational(Rational(num, den));
            } else {
                t.coeff = t.coeff * Scalar::rational(Rational(num));
            }
            return;
        }
        if (tok.kind != Tok::Ident) lx_.fail("expected a factor");
        Token id = lx_.take();
        const std::string& s = id.text;
        auto maybe_pow = [&]() { return lx_.peek().kind == Tok::Caret ? (lx_.take(), parse_exponent(lx_)) : 1; };

        if (s == "i") {
            t.coeff = t.coeff * Scalar::i();
            return;
        }
        if (s == "hbar") {
            t.coeff = t.coeff * Scalar::hbar(maybe_pow());
            return;
        }
        if (s == "q") {
            t.coeff = t.coeff * Scalar::q(maybe_pow());
            return;
        }
        if (s == "Q") {
            auto idx = parse_index_list(lx_);
            if (idx.size() != 2) lx_.fail("Q takes exactly two indices");
            t.coeff = t.coeff * Scalar::qjk(idx[0], idx[1], maybe_pow());
            return;
        }
        if (s == "E0" || s == "be0") {
            set_blade(t, Blade::unit(s == "E0" ? AlgebraKind::Am : AlgebraKind::Bp), id);
            return;
        }
        if (s == "E" || s == "be") {
            auto idx = parse_index_list(lx_);
            set_blade(t, Blade{s == "E" ? AlgebraKind::Am : AlgebraKind::Bp, std::move(idx)}, id);
            return;
        }
        // coordinates: x0, x1, ...
        if (s.size() >= 2 && s[0] == 'x' &&
            std::all_of(s.begin() + 1, s.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int j = std::stoi(s.substr(1));
            int e = 1;
            if (lx_.peek().kind == Tok::Caret) {
                lx_.take();
                e = parse_exponent(lx_);
                if (e < 0) lx_.fail("negative coordinate exponent");
            }
            t.coords[j] += e;
            return;
        }
        throw ParseError("unknown symbol '" + s + "' at line " + std::to_string(id.line) +
                             ", column " + std::to_string(id.col),
                         id.line, id.col);
    }

    void set_blade(PfTerm& t, Blade b, const Token& at) {
        if (t.blade) {
            // multiply the two blades
            Scalar sign;
            auto [sc, res] = blade_product(*t.blade, b);
            t.coeff = t.coeff * sc;
            t.blade = std::move(res);
            (void)sign;
        } else {
            t.blade = std::move(b);
        }
        (void)at;
    }

    Lexer& lx_;
};

}  // namespace

Expression parse_expression(const std::string& text, int blade_dim) {
    Lexer lx(text);
    if (lx.peek().kind == Tok::End) return Expression::zero();
    ExprParser p(lx, blade_dim);
    Expression e = p.parse_sum();
    lx.expect(Tok::End, "end of input");
    return e;
}

PolyFunction parse_polyfunction(const std::string& text, std::optional<Algebra> alg) {
    Lexer lx(text);
    if (lx.peek().kind == Tok::End) {
        return PolyFunction::zero(alg.value_or(Algebra{AlgebraKind::Am, 1}));
    }
    PolyParser p(lx);
    auto terms = p.parse();

    Algebra a = alg.value_or(Algebra{AlgebraKind::Am, 0});
    if (!alg) {
        int dim = 1;
        bool saw_bp = false, saw_am = false;
        for (const auto& [neg, t] : terms) {
            for (const auto& [j, e] : t.coords) dim = std::max(dim, j);
            if (t.blade) {
                (t.blade->alg == AlgebraKind::Bp ? saw_bp : saw_am) = true;
                for (int j : t.blade->indices) dim = std::max(dim, j);
            }
        }
        if (saw_bp && saw_am)
            throw ParseError("polynomial mixes Am and Bp blades", 1, 1);
        a = Algebra{saw_bp ? AlgebraKind::Bp : AlgebraKind::Am, dim};
    }

    PolyFunction f(a);
    for (const auto& [neg, t] : terms) {
        std::vector<int> exps(a.dim + 1, 0);
        for (const auto& [j, e] : t.coords) {
            if (j > a.dim)
                throw ParseError("coordinate x" + std::to_string(j) + " exceeds dimension " +
                                     std::to_string(a.dim),
                                 1, 1);
            exps[j] += e;
        }
        Blade b = t.blade.value_or(Blade::unit(a.kind));
        if (b.alg != a.kind) throw ParseError("blade algebra does not match the function's", 1, 1);
        Scalar c = neg ? -t.coeff : t.coeff;
        f.add_term(std::move(exps), Multivector::blade(a, std::move(b), std::move(c)));
    }
    return f;
}

// ------------------------------------------------------------------
// Presentation parser
// ------------------------------------------------------------------

namespace {

GenKind pattern_kind(const std::string& s, Lexer& lx) {
    if (s == "x") return GenKind::Coordinate;
    if (s == "p") return GenKind::Momentum;
    if (s == "d") return GenKind::Partial;
    if (s == "df") return GenKind::DFComp;
    if (s == "f") return GenKind::FComp;  // only with brackets; bare f handled separately
    lx.fail("unknown generator '" + s + "' in rule");
}

// var ids: 0 = j, 1 = k
std::optional<int> var_id(const std::string& s) {
    if (s == "j") return 0;
    if (s == "k") return 1;
    return std::nullopt;
}

struct RuleParser {
    Lexer& lx;

    // x[j], p[2], df[k], f, delta-free atoms
    TemplateGen parse_template_gen() {
        Token id = lx.expect(Tok::Ident, "a generator");
        const std::string& s = id.text;
        if (s == "f" && lx.peek().kind != Tok::LBracket) return {GenKind::FSym, false, 0};
        if (s == "Df") return {GenKind::DfLeft, false, 0};
        if (s == "fD") return {GenKind::DfRight, false, 0};
        GenKind kind = pattern_kind(s, lx);
        lx.expect(Tok::LBracket, "'['");
        TemplateGen g{kind, false, 0};
        if (lx.peek().kind == Tok::Ident) {
            auto v = var_id(lx.take().text);
            if (!v) lx.fail("index variable must be j or k");
            g.is_var = true;
            g.value = *v;
        } else {
            g.value = parse_int(lx);
        }
        lx.expect(Tok::RBracket, "']'");
        return g;
    }

    PatternAtom parse_pattern_atom() {
        TemplateGen g = parse_template_gen();
        return {g.kind, g.is_var, g.value};
    }

    IndexCond parse_cond() {
        if (lx.peek().kind == Tok::Ident && lx.peek().text == "any") {
            lx.take();
            return IndexCond::Any;
        }
        Token a = lx.expect(Tok::Ident, "an index variable");
        if (!var_id(a.text)) lx.fail("condition must compare j and k");
        Tok op = lx.take().kind;
        Token b = lx.expect(Tok::Ident, "an index variable");
        if (!var_id(b.text)) lx.fail("condition must compare j and k");
        bool forward = var_id(a.text) == 0;  // j <op> k
        switch (op) {
            case Tok::Less: return forward ? IndexCond::Less : IndexCond::Greater;
            case Tok::Greater: return forward ? IndexCond::Greater : IndexCond::Less;
            case Tok::Eq: return IndexCond::Equal;
            case Tok::BangEq: return IndexCond::NotEqual;
            default: lx.fail("expected one of < > = !=");
        }
    }

    // scalar factor handling within a template term
    bool try_scalar_factor(TemplateTerm& t) {
        const Token& tok = lx.peek();
        if (tok.kind == Tok::Int) {
            Token n = lx.take();
            Int num(n.text);
            if (lx.peek().kind == Tok::Slash) {
                lx.take();
                Token d = lx.expect(Tok::Int, "a denominator");
                t.base = t.base * Scalar::rational(Rational(num, Int(d.text)));
            } else {
                t.base = t.base * Scalar::rational(Rational(num));
            }
            return true;
        }
        if (tok.kind != Tok::Ident) return false;
        const std::string& s = tok.text;
        auto maybe_pow = [&]() { return lx.peek().kind == Tok::Caret ? (lx.take(), parse_exponent(lx)) : 1; };
        if (s == "i") {
            lx.take();
            t.base = t.base * Scalar::i();
            return true;
        }
        if (s == "hbar") {
            lx.take();
            t.base = t.base * Scalar::hbar(maybe_pow());
            return true;
        }
        if (s == "q") {
            lx.take();
            t.base = t.base * Scalar::q(maybe_pow());
            return true;
        }
        if (s == "delta") {
            lx.take();
            t.delta = true;
            return true;
        }
        if (s == "Q") {
            lx.take();
            lx.expect(Tok::LBracket, "'['");
            if (lx.peek().kind == Tok::Ident) {
                auto v1 = var_id(lx.take().text);
                lx.expect(Tok::Comma, "','");
                auto v2 = var_id(lx.expect(Tok::Ident, "an index variable").text);
                if (!v1 || !v2 || *v1 == *v2) lx.fail("Q pattern must use variables j,k");
                lx.expect(Tok::RBracket, "']'");
                t.qjk_pow += maybe_pow();
            } else {
                int j = parse_int(lx);
                lx.expect(Tok::Comma, "','");
                int k = parse_int(lx);
                lx.expect(Tok::RBracket, "']'");
                t.base = t.base * Scalar::qjk(j, k, maybe_pow());
            }
            return true;
        }
        return false;
    }

    // one additive term of the rhs template
    TemplateTerm parse_term() {
        TemplateTerm t;
        bool right_side = false;
        auto push = [&](TemplateGen g) { (right_side ? t.right : t.left).push_back(g); };
        bool expect_more = true;
        while (expect_more) {
            if (lx.peek().kind == Tok::LParen) {
                lx.take();
                // grouped atoms, possibly with an ox split
                while (lx.peek().kind != Tok::RParen) {
                    if (lx.peek().kind == Tok::Ox) {
                        if (right_side) lx.fail("tensor degree above 2 in rule template");
                        right_side = true;
                        lx.take();
                        continue;
                    }
                    if (!try_scalar_factor(t)) push(parse_template_gen());
                    if (lx.peek().kind == Tok::Star) lx.take();
                }
                lx.take();  // ')'
            } else if (lx.peek().kind == Tok::Ox) {
                if (right_side) lx.fail("tensor degree above 2 in rule template");
                right_side = true;
                lx.take();
            } else if (!try_scalar_factor(t)) {
                if (lx.peek().kind == Tok::Ident) {
                    push(parse_template_gen());
                } else {
                    lx.fail("expected a factor in rule template");
                }
            }
            Tok k = lx.peek().kind;
            if (k == Tok::Star) {
                lx.take();
                expect_more = true;
            } else {
                expect_more =
                    (k == Tok::Int || k == Tok::Ident || k == Tok::LParen || k == Tok::Ox);
            }
        }
        return t;
    }

    std::vector<TemplateTerm> parse_rhs() {
        std::vector<TemplateTerm> terms;
        bool neg = false;
        if (lx.peek().kind == Tok::Minus) {
            lx.take();
            neg = true;
        }
        TemplateTerm t = parse_term();
        if (neg) t.base = -t.base;
        terms.push_back(std::move(t));
        while (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
            bool minus = lx.take().kind == Tok::Minus;
            TemplateTerm u = parse_term();
            if (minus) u.base = -u.base;
            terms.push_back(std::move(u));
        }
        return terms;
    }

    RewriteRule parse_rule() {
        RewriteRule r;
        r.first = parse_pattern_atom();
        if (lx.peek().kind == Tok::Ox) {
            lx.take();
            r.cross_slot = true;
        }
        r.second = parse_pattern_atom();
        if (lx.peek().kind == Tok::Pipe) {
            lx.take();
            r.cond = parse_cond();
        }
        lx.expect(Tok::Arrow, "'->'");
        if (lx.peek().kind == Tok::Int && lx.peek().text == "0" /* rhs 0 */) {
            Token z = lx.take();
            if (lx.peek().kind == Tok::End) return r;  // empty rhs: the pair vanishes
            lx.fail("unexpected input after 0");
            (void)z;
        }
        r.rhs = parse_rhs();
        lx.expect(Tok::End, "end of rule");
        return r;
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text, const std::string& name) {
    Presentation p;
    p.name = name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        try {
            Lexer lx(line);
            if (lx.peek().kind == Tok::Ident && lx.peek().text == "param") {
                lx.take();
                Token q = lx.expect(Tok::Ident, "'Q'");
                if (q.text != "Q") lx.fail("only Q[j,k] bindings are supported");
                lx.expect(Tok::LBracket, "'['");
                lx.expect(Tok::Ident, "'j'");
                lx.expect(Tok::Comma, "','");
                lx.expect(Tok::Ident, "'k'");
                lx.expect(Tok::RBracket, "']'");
                lx.expect(Tok::Eq, "'='");
                Token v = lx.expect(Tok::Ident, "a binding (q, table, symbolic)");
                if (v.text == "q")
                    p.binding = QjkBinding::ToQ;
                else if (v.text == "table")
                    p.binding = QjkBinding::Table;
                else if (v.text == "symbolic")
                    p.binding = QjkBinding::Symbolic;
                else
                    lx.fail("unknown binding '" + v.text + "'");
                lx.expect(Tok::End, "end of line");
                continue;
            }
            RuleParser rp{lx};
            p.rules.push_back(rp.parse_rule());
        } catch (const ParseError& e) {
            throw ParseError("preset '" + name + "' line " + std::to_string(lineno) + ": " +
                                 e.what(),
                             lineno, e.column);
        }
    }
    return p;
}

}  // namespace qheis
