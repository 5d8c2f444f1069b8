#include "mtp/parser.hpp"

#include "mtp/errors.hpp"

#include <cctype>
#include <map>
#include <tuple>
#include <utility>

namespace mtp {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

constexpr unsigned kMaxExponent = 1000;

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '.') throw ParseError("decimal literals are not supported, write n/d", i);
            out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

bool is_trig(const std::string& name) { return name == "sin" || name == "cos"; }

// Sum of monomials keyed by (p, q, r), in order of first appearance.
class Expansion {
public:
    using Key = std::tuple<unsigned, unsigned, unsigned>;

    static Expansion constant(const Affine& a) {
        Expansion e;
        e.add({0, 0, 0}, a);
        return e;
    }
    static Expansion monomial(const Key& key) {
        Expansion e;
        e.add(key, {Rational(1), Rational(0)});
        return e;
    }

    void add(const Key& key, const Affine& alpha) {
        auto [it, inserted] = index_.emplace(key, items_.size());
        if (inserted)
            items_.emplace_back(key, alpha);
        else
            items_[it->second].second += alpha;
    }

    Expansion& operator+=(const Expansion& rhs) {
        for (const auto& [key, alpha] : rhs.items_) add(key, alpha);
        return *this;
    }

    Expansion negated() const {
        Expansion e;
        for (const auto& [key, alpha] : items_) e.add(key, -alpha);
        return e;
    }

    Expansion times(const Expansion& rhs, std::size_t pos, const std::string& param) const {
        Expansion e;
        for (const auto& [k1, a1] : items_) {
            for (const auto& [k2, a2] : rhs.items_) {
                if (!(a1.slope * a2.slope).is_zero())
                    throw ParseError("nonlinear use of parameter '" + param + "'", pos);
                Affine prod{a1.constant * a2.constant, a1.constant * a2.slope + a1.slope * a2.constant};
                e.add({std::get<0>(k1) + std::get<0>(k2), std::get<1>(k1) + std::get<1>(k2),
                       std::get<2>(k1) + std::get<2>(k2)},
                      prod);
            }
        }
        return e;
    }

    const std::vector<std::pair<Key, Affine>>& items() const { return items_; }

private:
    std::vector<std::pair<Key, Affine>> items_;
    std::map<Key, std::size_t> index_;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string variable, std::optional<std::string> param)
        : toks_(std::move(tokens)), var_(std::move(variable)), param_(std::move(param)) {}

    Expansion parse() {
        Expansion e = expr();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

    bool used_param() const { return used_param_; }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + (peek().kind == Tok::end ? " before end of input" : ""),
                             peek().pos);
        return take();
    }

    Expansion expr() {
        Expansion acc = signed_term();
        for (;;) {
            if (accept(Tok::plus))
                acc += term();
            else if (accept(Tok::minus))
                acc += term().negated();
            else
                return acc;
        }
    }

    Expansion signed_term() {
        if (accept(Tok::minus)) return term().negated();
        accept(Tok::plus);
        return term();
    }

    Expansion term() {
        Expansion acc = factor();
        while (peek().kind == Tok::star) {
            const std::size_t at = take().pos;
            acc = acc.times(factor(), at, param_name());
        }
        if (peek().kind == Tok::slash)
            throw ParseError("division is only allowed inside rational literals", peek().pos);
        return acc;
    }

    unsigned exponent() {
        if (!accept(Tok::caret)) return 1;
        const Token& t = expect(Tok::number, "a natural exponent");
        if (t.text.size() > 4 || std::stoul(t.text) > kMaxExponent)
            throw ParseError("exponent too large", t.pos);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Expansion power(const Expansion& base, unsigned n, std::size_t pos) {
        Expansion out = Expansion::constant({Rational(1), Rational(0)});
        for (unsigned i = 0; i < n; ++i) out = out.times(base, pos, param_name());
        return out;
    }

    Expansion factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                take();
                Rational value = Rational::parse(t.text);
                if (accept(Tok::slash)) {
                    const Token& d = expect(Tok::number, "a positive denominator");
                    Rational den = Rational::parse(d.text);
                    if (den.is_zero()) throw ParseError("zero denominator", d.pos);
                    value /= den;
                }
                return Expansion::constant({value, Rational(0)});
            }
            case Tok::lparen: {
                take();
                Expansion inner = expr();
                expect(Tok::rparen, "')'");
                return power(inner, exponent(), t.pos);
            }
            case Tok::ident: {
                take();
                if (peek().kind == Tok::lparen) {
                    if (!is_trig(t.text)) throw ParseError("unsupported function '" + t.text + "'", t.pos);
                    take();
                    const Token& arg = peek();
                    if (arg.kind != Tok::ident || arg.text != var_ || toks_[pos_ + 1].kind != Tok::rparen)
                        throw ParseError("argument of " + t.text + " must be the variable '" + var_ + "'", arg.pos);
                    take();
                    take();
                    const unsigned n = exponent();
                    return Expansion::monomial(t.text == "cos" ? Expansion::Key{0, n, 0} : Expansion::Key{0, 0, n});
                }
                if (is_trig(t.text)) throw ParseError("expected '(' after " + t.text, peek().pos);
                if (t.text == var_) return Expansion::monomial({exponent(), 0, 0});
                if (param_ && t.text == *param_) {
                    used_param_ = true;
                    const std::size_t at = peek().pos;
                    return power(Expansion::constant({Rational(0), Rational(1)}), exponent(), at);
                }
                throw ParseError("unknown identifier '" + t.text + "'", t.pos);
            }
            case Tok::end: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::string param_name() const { return param_ ? *param_ : "a"; }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string var_;
    std::optional<std::string> param_;
    bool used_param_ = false;
};

// Decides which identifier is the variable and which (if any) the parameter.
std::pair<std::string, std::optional<std::string>> resolve_names(const std::vector<Token>& toks,
                                                                 const ParseOptions& options) {
    std::optional<std::string> var = options.variable;
    std::optional<std::string> param = options.parameter;
    std::vector<const Token*> bare;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind != Tok::ident) continue;
        if (toks[i + 1].kind == Tok::lparen) {
            if (!is_trig(t.text)) throw ParseError("unsupported function '" + t.text + "'", t.pos);
            const Token& arg = toks[i + 2];
            if (arg.kind == Tok::ident && !var) var = arg.text;
            continue;
        }
        if (is_trig(t.text)) continue;
        if (i > 0 && toks[i - 1].kind == Tok::lparen && i > 1 && toks[i - 2].kind == Tok::ident &&
            is_trig(toks[i - 2].text))
            continue;
        bare.push_back(&t);
    }
    for (const Token* t : bare) {
        if (param && t->text == *param) continue;
        if (!var) {
            var = t->text;
            continue;
        }
        if (t->text == *var) continue;
        if (!param) {
            param = t->text;
            continue;
        }
        throw ParseError("unknown identifier '" + t->text + "' (one variable and one parameter at most)", t->pos);
    }
    if (param && var && *param == *var) throw ParseError("parameter and variable share the name '" + *var + "'", 0);
    return {var.value_or("x"), param};
}

}  // namespace

MtpExpr parse_expr(std::string_view text, const ParseOptions& options) {
    std::vector<Token> toks = tokenize(text);
    auto [var, param] = resolve_names(toks, options);
    Parser parser(std::move(toks), var, param);
    Expansion e = parser.parse();

    MtpExpr out;
    out.variable = var;
    if (param && (parser.used_param() || options.parameter)) out.param = Parameter{*param, std::nullopt, std::nullopt};
    for (const auto& [key, alpha] : e.items()) {
        const auto& [p, q, r] = key;
        out.terms.push_back({alpha, p, q, r});
    }
    return out;
}

}  // namespace mtp
