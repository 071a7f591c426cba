#include "rank2/textio.hpp"

#include <cctype>
#include <sstream>

namespace rank2 {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    std::size_t line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_ = Token{Token::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
            tok_.kind = Token::Number;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Token::Ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        switch (c) {
            case '+': tok_.kind = Token::Plus; break;
            case '-': tok_.kind = Token::Minus; break;
            case '*': tok_.kind = Token::Star; break;
            case '^': tok_.kind = Token::Caret; break;
            case '/': tok_.kind = Token::Slash; break;
            case '(': tok_.kind = Token::LParen; break;
            case ')': tok_.kind = Token::RParen; break;
            default:
                throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
        }
        tok_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token tok_{Token::End, "", 1, 1};
};

template <class P>
class PolyParser {
public:
    PolyParser(const std::string& src, const FieldSpec& field, const Alphabet& alphabet)
        : lex_(src), field_(field), alphabet_(alphabet) {}

    P parse() {
        P p = parse_poly();
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw ParseError(t.line, t.column, "trailing input after expression");
        return p;
    }

private:
    P parse_poly() {
        bool negate = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        P acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Plus) {
                lex_.take();
                acc = acc + parse_term();
            } else if (t.kind == Token::Minus) {
                lex_.take();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    P parse_term() {
        P acc = parse_factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    P parse_factor() {
        P base = parse_base();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Token::Number)
                throw ParseError(t.line, t.column, "expected a nonnegative integer exponent");
            base = base.power(std::stoull(t.text));
        }
        return base;
    }

    P parse_base() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number: {
                BigInt num(t.text);
                if (lex_.peek().kind == Token::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Token::Number)
                        throw ParseError(d.line, d.column, "expected an integer denominator");
                    BigInt den(d.text);
                    if (den == 0) throw ParseError(d.line, d.column, "zero denominator");
                    return P::constant(field_, alphabet_, Scalar::of_ratio(field_, num, den));
                }
                return P::constant(field_, alphabet_, Scalar::of_big(field_, num));
            }
            case Token::Ident: {
                auto idx = alphabet_.index_of(t.text);
                if (!idx) throw UnknownGenerator("'" + t.text + "' is not a generator");
                return P::generator(field_, alphabet_, *idx);
            }
            case Token::LParen: {
                P inner = parse_poly();
                Token close = lex_.take();
                if (close.kind != Token::RParen)
                    throw ParseError(close.line, close.column, "expected ')'");
                return inner;
            }
            default:
                throw ParseError(t.line, t.column, "expected a number, generator, or '('");
        }
    }

    Lexer lex_;
    FieldSpec field_;
    Alphabet alphabet_;
};

bool scalar_is_negative(const Scalar& c) {
    return c.field().is_rationals() && c.rational_value() < 0;
}

Scalar scalar_abs(const Scalar& c) { return scalar_is_negative(c) ? -c : c; }

std::string word_text(const Alphabet& a, const Word& w) {
    std::string out;
    for (std::uint32_t l : w.letters()) {
        if (!out.empty()) out += "*";
        out += a.name(l);
    }
    return out;
}

std::string monomial_text(const Alphabet& a, const ExpVec& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += a.name(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

// Shared term-list printer: monomials arrive deglex-descending.
std::string print_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        const bool neg = scalar_is_negative(coeff);
        const Scalar mag = scalar_abs(coeff);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

}  // namespace

NcPoly parse_ncpoly(const std::string& src, const FieldSpec& field, const Alphabet& alphabet) {
    return PolyParser<NcPoly>(src, field, alphabet).parse();
}

CPoly parse_cpoly(const std::string& src, const FieldSpec& field, const Alphabet& alphabet) {
    return PolyParser<CPoly>(src, field, alphabet).parse();
}

Scalar parse_scalar(const std::string& src, const FieldSpec& field) {
    std::string s = src;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto slash = s.find('/');
    try {
        BigInt num(slash == std::string::npos ? s : s.substr(0, slash));
        BigInt den(slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1)));
        if (neg) num = -num;
        return Scalar::of_ratio(field, num, den);
    } catch (const std::runtime_error&) {
        throw ParseError(1, 1, "invalid scalar '" + src + "'");
    }
}

std::string print_poly(const NcPoly& f) {
    std::vector<std::pair<std::string, Scalar>> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.emplace_back(word_text(f.alphabet(), it->first), it->second);
    return print_terms(terms);
}

std::string print_poly(const CPoly& f) {
    std::vector<std::pair<std::string, Scalar>> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.emplace_back(monomial_text(f.alphabet(), it->first), it->second);
    return print_terms(terms);
}

nlohmann::json poly_to_json(const NcPoly& f) {
    nlohmann::json j;
    j["field"] = f.field().to_string();
    j["ring"] = "free";
    j["generators"] = f.alphabet().names();
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        nlohmann::json word = nlohmann::json::array();
        for (std::uint32_t l : it->first.letters()) word.push_back(f.alphabet().name(l));
        terms.push_back({{"coeff", it->second.to_string()}, {"word", std::move(word)}});
    }
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json poly_to_json(const CPoly& f) {
    nlohmann::json j;
    j["field"] = f.field().to_string();
    j["ring"] = "comm";
    j["generators"] = f.alphabet().names();
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back(
            {{"coeff", it->second.to_string()}, {"exps", it->first.exponents()}});
    j["terms"] = std::move(terms);
    return j;
}

namespace {

FieldSpec field_from_json(const nlohmann::json& j) {
    const std::string f = j.at("field").get<std::string>();
    if (f == "Q") return FieldSpec::rationals();
    if (f.rfind("GF(", 0) == 0 && f.back() == ')')
        return FieldSpec::prime_field(std::stoull(f.substr(3, f.size() - 4)));
    throw ParseError(1, 1, "unknown field '" + f + "'");
}

Alphabet alphabet_from_json(const nlohmann::json& j) {
    return Alphabet(j.at("generators").get<std::vector<std::string>>());
}

}  // namespace

NcPoly ncpoly_from_json(const nlohmann::json& j) {
    if (j.at("ring").get<std::string>() != "free")
        throw ParseError(1, 1, "expected a free-algebra polynomial");
    FieldSpec field = field_from_json(j);
    Alphabet alphabet = alphabet_from_json(j);
    NcPoly out(field, alphabet);
    for (const auto& term : j.at("terms")) {
        std::vector<std::uint32_t> letters;
        for (const auto& name : term.at("word"))
            letters.push_back(
                static_cast<std::uint32_t>(alphabet.require_index(name.get<std::string>())));
        out.add_term(Word(std::move(letters)),
                     parse_scalar(term.at("coeff").get<std::string>(), field));
    }
    return out;
}

CPoly cpoly_from_json(const nlohmann::json& j) {
    if (j.at("ring").get<std::string>() != "comm")
        throw ParseError(1, 1, "expected a commutative polynomial");
    FieldSpec field = field_from_json(j);
    Alphabet alphabet = alphabet_from_json(j);
    CPoly out(field, alphabet);
    for (const auto& term : j.at("terms")) {
        auto exps = term.at("exps").get<std::vector<std::uint32_t>>();
        out.add_term(ExpVec(std::move(exps)),
                     parse_scalar(term.at("coeff").get<std::string>(), field));
    }
    return out;
}

}  // namespace rank2
