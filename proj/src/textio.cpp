#include "dspec/textio.hpp"

#include "dspec/error.hpp"

#include <cctype>
#include <sstream>

namespace dspec {

namespace {

enum class Tok {
    Ident,
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    StrictArrow,      // <-
    DefeasibleArrow,  // <~
    LBrace,
    RBrace,
    Semicolon,
    Less,
    Greater,
    End,
};

std::string_view tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Tilde: return "'~'";
    case Tok::StrictArrow: return "'<-'";
    case Tok::DefeasibleArrow: return "'<~'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semicolon: return "';'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourceLocation at;
};

class Lexer {
public:
    explicit Lexer(std::string_view text)
        : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            const SourceLocation at{line_, col_};
            if (i_ >= s_.size()) {
                out.push_back({Tok::End, {}, at});
                return out;
            }
            const char c = s_[i_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i_;
                while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
                out.push_back({Tok::Ident, std::string(s_.substr(i_, j - i_)), at});
                advance(j - i_);
                continue;
            }
            if (starts_with("\xC2\xAC")) {  // U+00AC NOT SIGN
                out.push_back({Tok::Tilde, "~", at});
                advance(2, 1);
                continue;
            }
            if (starts_with("\xE2\x9F\xB8")) {  // U+27F8 LONG LEFTWARDS DOUBLE ARROW
                out.push_back({Tok::StrictArrow, "<-", at});
                advance(3, 1);
                continue;
            }
            if (starts_with("<-")) {
                out.push_back({Tok::StrictArrow, "<-", at});
                advance(2);
                continue;
            }
            if (starts_with("<~")) {
                out.push_back({Tok::DefeasibleArrow, "<~", at});
                advance(2);
                continue;
            }
            Tok t;
            switch (c) {
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case ',': t = Tok::Comma; break;
            case '.': t = Tok::Dot; break;
            case '~': t = Tok::Tilde; break;
            case '{': t = Tok::LBrace; break;
            case '}': t = Tok::RBrace; break;
            case ';': t = Tok::Semicolon; break;
            case '<': t = Tok::Less; break;
            case '>': t = Tok::Greater; break;
            default: {
                std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "byte 0x" + hex(c);
                throw ParseError("unexpected character '" + shown + "'", at.line, at.column);
            }
            }
            out.push_back({t, std::string(1, c), at});
            advance(1);
        }
    }

private:
    static std::string hex(char c) {
        static const char* digits = "0123456789ABCDEF";
        const auto u = static_cast<unsigned char>(c);
        return {digits[u >> 4], digits[u & 15]};
    }

    bool starts_with(std::string_view p) const { return s_.substr(i_, p.size()) == p; }

    // Advances over `bytes` bytes spanning `columns` columns (one per byte by default).
    void advance(std::size_t bytes, std::size_t columns = 0) {
        i_ += bytes;
        col_ += columns ? columns : bytes;
    }

    void skip_space_and_comments() {
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (c == '\n') {
                ++i_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else if (c == '%') {
                while (i_ < s_.size() && s_[i_] != '\n') advance(1);
            } else {
                return;
            }
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

bool is_variable_name(const std::string& s) {
    return !s.empty() && (std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

class Parser {
public:
    explicit Parser(std::string_view text)
        : toks_(Lexer(text).run()) {}

    SpecDocument document() {
        SpecDocument doc;
        while (!at(Tok::End)) {
            const Token& kw = expect(Tok::Ident, "a statement keyword (fact, strict, defeasible or name)");
            if (kw.text == "name") {
                if (!doc.name.empty()) fail("duplicate name statement", kw.at);
                doc.name = expect(Tok::Ident, "a specification name").text;
            } else if (kw.text == "fact") {
                Literal head = literal();
                if (at(Tok::StrictArrow) || at(Tok::DefeasibleArrow))
                    fail("a fact has no body; use 'strict' or 'defeasible' for rules", peek().at);
                doc.declarations.push_back({Rule::fact(std::move(head)), kw.at});
            } else if (kw.text == "strict") {
                Literal head = literal();
                std::vector<Literal> body;
                if (accept(Tok::StrictArrow)) {
                    if (at(Tok::Dot)) fail("empty body after '<-'; write a body-less rule as 'strict h.'", peek().at);
                    body = this->body();
                } else if (at(Tok::DefeasibleArrow)) {
                    fail("'<~' in a strict rule; use 'defeasible'", peek().at);
                }
                doc.declarations.push_back({Rule::strict(std::move(head), std::move(body)), kw.at});
            } else if (kw.text == "defeasible") {
                Literal head = literal();
                if (at(Tok::StrictArrow)) fail("'<-' in a defeasible rule; use '<~'", peek().at);
                expect(Tok::DefeasibleArrow, "'<~' (a defeasible rule needs a body)");
                doc.declarations.push_back({Rule::defeasible(std::move(head), body()), kw.at});
            } else {
                fail("unknown statement '" + kw.text + "'", kw.at);
            }
            expect(Tok::Dot, "'.'");
        }
        return doc;
    }

    Literal whole_literal() {
        Literal l = literal();
        expect(Tok::End, "end of input");
        return l;
    }

    Rule whole_rule() {
        Rule r = rule();
        expect(Tok::End, "end of input");
        return r;
    }

    Argument argument() {
        expect(Tok::Less, "'<'");
        expect(Tok::LBrace, "'{'");
        std::vector<Rule> support;
        if (!accept(Tok::RBrace)) {
            do support.push_back(rule());
            while (accept(Tok::Semicolon));
            expect(Tok::RBrace, "';' or '}'");
        }
        expect(Tok::Comma, "','");
        Literal conclusion = literal();
        expect(Tok::Greater, "'>'");
        expect(Tok::End, "end of input");
        return {std::move(support), std::move(conclusion)};
    }

private:
    [[noreturn]] static void fail(const std::string& what, SourceLocation at) {
        throw ParseError(what, at.line, at.column);
    }

    const Token& peek() const { return toks_[pos_]; }
    bool at(Tok t) const { return peek().kind == t; }

    bool accept(Tok t) {
        if (!at(t)) return false;
        ++pos_;
        return true;
    }

    const Token& expect(Tok t, std::string_view what) {
        if (!at(t)) {
            const Token& got = peek();
            std::string shown = got.kind == Tok::End ? std::string(tok_name(got.kind)) : "'" + got.text + "'";
            fail("expected " + std::string(what) + ", found " + shown, got.at);
        }
        return toks_[pos_++];
    }

    Term term() {
        const Token& t = expect(Tok::Ident, "a constant or variable");
        return is_variable_name(t.text) ? Term::variable(t.text) : Term::constant(t.text);
    }

    Literal literal() {
        const bool negated = accept(Tok::Tilde);
        const Token& p = expect(Tok::Ident, "a predicate");
        if (is_variable_name(p.text)) fail("predicate '" + p.text + "' must start with a lowercase letter", p.at);
        Literal l{{p.text, {}}, negated};
        if (accept(Tok::LParen)) {
            do l.atom.args.push_back(term());
            while (accept(Tok::Comma));
            expect(Tok::RParen, "',' or ')'");
        }
        return l;
    }

    std::vector<Literal> body() {
        std::vector<Literal> out;
        do out.push_back(literal());
        while (accept(Tok::Comma));
        return out;
    }

    Rule rule() {
        Literal head = literal();
        if (accept(Tok::StrictArrow)) return Rule::strict(std::move(head), body());
        if (accept(Tok::DefeasibleArrow)) return Rule::defeasible(std::move(head), body());
        return Rule::fact(std::move(head));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void check_arity_located(const SpecDocument& doc) {
    std::map<std::string, std::size_t> seen;
    auto visit = [&](const Literal& l, SourceLocation at) {
        auto [it, inserted] = seen.emplace(l.atom.predicate, l.atom.arity());
        if (!inserted && it->second != l.atom.arity())
            throw ArityError("predicate '" + l.atom.predicate + "' used with arity " + std::to_string(l.atom.arity()) +
                                 " and " + std::to_string(it->second),
                             at.line, at.column);
    };
    for (const auto& d : doc.declarations) {
        visit(d.rule.head, d.location);
        for (const auto& b : d.rule.body) visit(b, d.location);
    }
}

} // namespace

Specification SpecDocument::specification() const {
    Specification spec;
    for (const auto& d : declarations) spec.add(d.rule);
    return spec;
}

SpecDocument parse_document(std::string_view text) {
    SpecDocument doc = Parser(text).document();
    check_arity_located(doc);
    return doc;
}

Specification parse_spec(std::string_view text) { return parse_document(text).specification(); }

std::string render_spec(const Specification& spec, const std::string& name) {
    std::ostringstream out;
    if (!name.empty()) out << "name " << name << ".\n";
    for (const auto& r : spec.facts()) out << "fact " << r << ".\n";
    for (const auto& r : spec.general()) out << "strict " << r << ".\n";
    for (const auto& r : spec.defeasible()) out << "defeasible " << r << ".\n";
    return out.str();
}

std::string render_document(const SpecDocument& doc) { return render_spec(doc.specification(), doc.name); }

Literal parse_literal(std::string_view text) { return Parser(text).whole_literal(); }

Rule parse_rule(std::string_view text) { return Parser(text).whole_rule(); }

Argument parse_argument_syntax(std::string_view text) { return Parser(text).argument(); }

Argument parse_argument(std::string_view text, const Program& program) {
    Argument a = parse_argument_syntax(text);
    return make_argument(program, std::move(a.support), std::move(a.conclusion));
}

std::string render_argument(const Argument& arg) {
    std::string out = "<{";
    for (std::size_t i = 0; i < arg.support.size(); ++i) {
        if (i) out += "; ";
        out += to_string(arg.support[i]);
    }
    out += "}, " + to_string(arg.conclusion) + ">";
    return out;
}

std::string_view render_outcome(Outcome o) {
    switch (o) {
    case Outcome::MoreSpecific: return "<";
    case Outcome::LessSpecific: return ">";
    case Outcome::Equivalent: return "~=";
    case Outcome::Incomparable: return "##";
    }
    return "?";
}

std::string_view outcome_word(Outcome o) {
    switch (o) {
    case Outcome::MoreSpecific: return "more specific";
    case Outcome::LessSpecific: return "less specific";
    case Outcome::Equivalent: return "equivalent";
    case Outcome::Incomparable: return "incomparable";
    }
    return "?";
}

std::optional<Outcome> parse_outcome(std::string_view s) {
    for (Outcome o : {Outcome::MoreSpecific, Outcome::LessSpecific, Outcome::Equivalent, Outcome::Incomparable})
        if (s == render_outcome(o) || s == outcome_word(o)) return o;
    return std::nullopt;
}

} // namespace dspec
