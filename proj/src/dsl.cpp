#include "oppositio/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace oppositio {

namespace {

struct Token {
    enum Kind { Ident, Symbol, End } kind = End;
    std::string text;
    SourcePosition pos;
};

// Shared lexer for both file formats. Structure files allow '.' and '-'
// inside identifiers ('-' only when followed by an identifier character,
// so arrows still lex as symbols).
class Lexer {
public:
    Lexer(std::string_view text, bool dotted_idents)
        : text_(text), dotted_(dotted_idents) {
        advance();
    }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    SourcePosition position() const { return pos_; }

private:
    static bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
    bool ident_char(unsigned char c, unsigned char lookahead) const {
        if (std::isalnum(c) || c == '_') return true;
        if (!dotted_) return false;
        // '.' and '-' join identifiers only when another identifier
        // character follows, so "a." and "a->b" still split.
        return (c == '.' || c == '-') && (std::isalnum(lookahead) || lookahead == '_');
    }

    void skip_blanks() {
        while (at_ < text_.size()) {
            const char c = text_[at_];
            if (c == '#') {
                while (at_ < text_.size() && text_[at_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[at_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++at_;
    }

    void advance() {
        skip_blanks();
        current_.pos = pos_;
        if (at_ >= text_.size()) {
            current_ = {Token::End, "end of input", pos_};
            return;
        }
        const unsigned char c = static_cast<unsigned char>(text_[at_]);
        if (ident_start(c)) {
            std::string ident;
            while (at_ < text_.size()) {
                const unsigned char cur = static_cast<unsigned char>(text_[at_]);
                const unsigned char la =
                    at_ + 1 < text_.size() ? static_cast<unsigned char>(text_[at_ + 1]) : 0;
                if (!(ident_start(cur) || ident_char(cur, la))) break;
                ident += static_cast<char>(cur);
                bump();
            }
            current_ = {Token::Ident, std::move(ident), current_.pos};
            return;
        }
        // Two-character symbols first.
        static const char* two[] = {"->", "=>", "~>"};
        for (const char* sym : two) {
            if (text_.substr(at_, 2) == sym) {
                bump();
                bump();
                current_ = {Token::Symbol, sym, current_.pos};
                return;
            }
        }
        if (text_.substr(at_, 3) == "<->") {
            bump();
            bump();
            bump();
            current_ = {Token::Symbol, "<->", current_.pos};
            return;
        }
        static const std::string singles = ".,:~>{}";
        if (singles.find(static_cast<char>(c)) != std::string::npos) {
            bump();
            current_ = {Token::Symbol, std::string(1, static_cast<char>(c)), current_.pos};
            return;
        }
        std::ostringstream found;
        if (std::isprint(c))
            found << "'" << static_cast<char>(c) << "'";
        else
            found << "byte 0x" << std::hex << static_cast<int>(c);
        throw ParseError(current_.pos, "a token", found.str());
    }

    std::string_view text_;
    bool dotted_;
    std::size_t at_ = 0;
    SourcePosition pos_;
    Token current_;
};

std::string quoted(const Token& t) {
    return t.kind == Token::End ? t.text : "'" + t.text + "'";
}

Token expect_symbol(Lexer& lx, const std::string& sym) {
    if (lx.peek().kind != Token::Symbol || lx.peek().text != sym)
        throw ParseError(lx.peek().pos, "'" + sym + "'", quoted(lx.peek()));
    return lx.next();
}

Token expect_ident(Lexer& lx, const std::string& what) {
    if (lx.peek().kind != Token::Ident)
        throw ParseError(lx.peek().pos, what, quoted(lx.peek()));
    return lx.next();
}

bool at_symbol(const Lexer& lx, const std::string& sym) {
    return lx.peek().kind == Token::Symbol && lx.peek().text == sym;
}

Literal parse_literal(Lexer& lx) {
    bool negated = false;
    if (at_symbol(lx, "~")) {
        lx.next();
        negated = true;
    }
    Token atom = expect_ident(lx, "an atom");
    return {atom.text, negated};
}

}  // namespace

DefeasibleTheory parse_theory(std::string_view text) {
    Lexer lx(text, /*dotted_idents=*/false);
    DefeasibleTheory theory;

    struct SupStmt {
        std::string stronger, weaker;
        SourcePosition stronger_pos, weaker_pos;
    };
    std::vector<SupStmt> sups;
    std::map<std::string, SourcePosition> rule_ids;

    while (lx.peek().kind != Token::End) {
        Token head = expect_ident(lx, "a statement ('fact', 'sup' or a rule id)");
        if (head.text == "fact" && !at_symbol(lx, ":")) {
            theory.facts.insert(parse_literal(lx));
            expect_symbol(lx, ".");
        } else if (head.text == "sup" && !at_symbol(lx, ":")) {
            SupStmt s;
            Token stronger = expect_ident(lx, "a rule id");
            s.stronger = stronger.text;
            s.stronger_pos = stronger.pos;
            expect_symbol(lx, ">");
            Token weaker = expect_ident(lx, "a rule id");
            s.weaker = weaker.text;
            s.weaker_pos = weaker.pos;
            expect_symbol(lx, ".");
            sups.push_back(std::move(s));
        } else {
            if (rule_ids.count(head.text))
                throw SemanticError(head.pos, "duplicate rule id '" + head.text + "'");
            rule_ids.emplace(head.text, head.pos);
            expect_symbol(lx, ":");
            Rule rule;
            rule.id = head.text;
            while (!at_symbol(lx, "->") && !at_symbol(lx, "=>") && !at_symbol(lx, "~>")) {
                if (!rule.body.empty()) expect_symbol(lx, ",");
                rule.body.push_back(parse_literal(lx));
            }
            Token arrow = lx.next();
            rule.kind = arrow.text == "->"   ? RuleKind::Strict
                        : arrow.text == "=>" ? RuleKind::Defeasible
                                             : RuleKind::Defeater;
            rule.head = parse_literal(lx);
            expect_symbol(lx, ".");
            theory.rules.push_back(std::move(rule));
        }
    }

    // Resolve superiority after the whole file so rule order does not matter.
    for (const auto& s : sups) {
        if (!rule_ids.count(s.stronger))
            throw SemanticError(s.stronger_pos, "unknown rule id '" + s.stronger + "' in sup");
        if (!rule_ids.count(s.weaker))
            throw SemanticError(s.weaker_pos, "unknown rule id '" + s.weaker + "' in sup");
        theory.superiority.insert({s.stronger, s.weaker});
        // Incremental cycle check: reject as soon as a pair closes a loop.
        std::vector<std::string> stack{s.weaker};
        std::set<std::string> seen;
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            if (v == s.stronger)
                throw SemanticError(s.stronger_pos,
                                    "superiority cycle through '" + s.stronger + "'");
            if (!seen.insert(v).second) continue;
            for (const auto& [a, b] : theory.superiority)
                if (a == v) stack.push_back(b);
        }
    }
    return theory;
}

OppositionStructure parse_structure(std::string_view text) {
    Lexer lx(text, /*dotted_idents=*/true);

    Token kw = expect_ident(lx, "'structure'");
    if (kw.text != "structure")
        throw ParseError(kw.pos, "'structure'", quoted(kw));

    OppositionStructure s;
    s.name = expect_ident(lx, "a structure name").text;

    std::map<std::string, SourcePosition> declared;  // judgment name -> decl site
    auto declare = [&](const std::string& j, SourcePosition pos) {
        if (declared.count(j))
            throw SemanticError(pos, "duplicate judgment '" + j + "'");
        declared.emplace(j, pos);
    };

    struct RelStmt {
        RelationKind kind;
        std::string from, to;
        std::string arrow;
        SourcePosition pos;       // the kind token
        SourcePosition from_pos;
        SourcePosition to_pos;
    };
    std::vector<RelStmt> rels;

    while (lx.peek().kind != Token::End) {
        Token stmt = expect_ident(lx, "'level', 'judgment' or 'relation'");
        if (stmt.text == "level") {
            Level lv;
            lv.name = expect_ident(lx, "a level name").text;
            expect_symbol(lx, "{");
            Token yes = expect_ident(lx, "'yes'");
            if (yes.text != "yes") throw ParseError(yes.pos, "'yes'", quoted(yes));
            expect_symbol(lx, ":");
            Token pos_tok = expect_ident(lx, "a judgment name");
            lv.positive = pos_tok.text;
            expect_symbol(lx, ",");
            Token no = expect_ident(lx, "'no'");
            if (no.text != "no") throw ParseError(no.pos, "'no'", quoted(no));
            expect_symbol(lx, ":");
            Token neg_tok = expect_ident(lx, "a judgment name");
            lv.negative = neg_tok.text;
            expect_symbol(lx, "}");
            if (lv.positive == lv.negative)
                throw SemanticError(neg_tok.pos,
                                    "level '" + lv.name + "' pairs '" + lv.positive +
                                        "' with itself");
            declare(lv.positive, pos_tok.pos);
            declare(lv.negative, neg_tok.pos);
            s.levels.push_back(std::move(lv));
        } else if (stmt.text == "judgment") {
            Token j = expect_ident(lx, "a judgment name");
            declare(j.text, j.pos);
            s.free_judgments.push_back(j.text);
        } else if (stmt.text == "relation") {
            Token kind_tok = expect_ident(lx, "a relation kind");
            RelStmt r;
            r.pos = kind_tok.pos;
            if (kind_tok.text == "subalternation") r.kind = RelationKind::Subalternation;
            else if (kind_tok.text == "contrariety") r.kind = RelationKind::Contrariety;
            else if (kind_tok.text == "subcontrariety") r.kind = RelationKind::Subcontrariety;
            else if (kind_tok.text == "contradiction") r.kind = RelationKind::Contradiction;
            else
                throw ParseError(kind_tok.pos,
                                 "'subalternation', 'contrariety', 'subcontrariety' or "
                                 "'contradiction'",
                                 quoted(kind_tok));
            Token from_tok = expect_ident(lx, "a judgment or level.yes/no path");
            r.from = from_tok.text;
            r.from_pos = from_tok.pos;
            if (at_symbol(lx, "->") || at_symbol(lx, "<->")) {
                r.arrow = lx.next().text;
            } else {
                throw ParseError(lx.peek().pos, "'->' or '<->'", quoted(lx.peek()));
            }
            Token to_tok = expect_ident(lx, "a judgment or level.yes/no path");
            r.to = to_tok.text;
            r.to_pos = to_tok.pos;
            rels.push_back(std::move(r));
        } else {
            throw ParseError(stmt.pos, "'level', 'judgment' or 'relation'", quoted(stmt));
        }
    }

    // Relations may reference statements that come later in the file, so
    // resolve them once everything is declared.
    auto resolve = [&](const std::string& endpoint, SourcePosition pos) -> std::string {
        if (declared.count(endpoint)) return endpoint;
        auto dot = endpoint.rfind('.');
        if (dot != std::string::npos) {
            const std::string level_name = endpoint.substr(0, dot);
            const std::string side = endpoint.substr(dot + 1);
            for (const auto& lv : s.levels) {
                if (lv.name != level_name) continue;
                if (side == "yes") return lv.positive;
                if (side == "no") return lv.negative;
            }
        }
        throw SemanticError(pos, "unknown judgment '" + endpoint + "'");
    };

    for (const auto& r : rels) {
        if (r.kind == RelationKind::Subalternation && r.arrow != "->")
            throw SemanticError(r.pos, "subalternation is directed; use '->'");
        if (r.kind != RelationKind::Subalternation && r.arrow != "<->")
            throw SemanticError(r.pos, std::string(to_string(r.kind)) +
                                           " is symmetric; use '<->'");
        RelationEdge e;
        e.kind = r.kind;
        e.from = resolve(r.from, r.from_pos);
        e.to = resolve(r.to, r.to_pos);
        if (e.from == e.to)
            throw SemanticError(r.to_pos, "relation endpoints must differ");
        s.edges.push_back(std::move(e));
    }

    try {
        s.validate();
    } catch (const Error& e) {
        throw SemanticError(lx.position(), e.what());
    }
    return s;
}

std::string print_theory(const DefeasibleTheory& t) {
    std::ostringstream out;
    for (const auto& f : t.facts) out << "fact " << f.str() << ".\n";
    auto rules = t.rules;
    std::sort(rules.begin(), rules.end(),
              [](const Rule& a, const Rule& b) { return a.id < b.id; });
    for (const auto& r : rules) {
        out << r.id << ":";
        for (std::size_t i = 0; i < r.body.size(); ++i)
            out << (i ? ", " : " ") << r.body[i].str();
        out << " " << arrow_of(r.kind) << " " << r.head.str() << ".\n";
    }
    for (const auto& [a, b] : t.superiority) out << "sup " << a << " > " << b << ".\n";
    return out.str();
}

std::string print_structure(const OppositionStructure& s) {
    std::ostringstream out;
    out << "structure " << s.name << "\n";
    for (const auto& lv : s.levels)
        out << "level " << lv.name << " { yes: " << lv.positive << ", no: " << lv.negative
            << " }\n";
    for (const auto& j : s.free_judgments) out << "judgment " << j << "\n";
    for (const auto& e : s.edges)
        out << "relation " << to_string(e.kind) << " " << e.from
            << (e.kind == RelationKind::Subalternation ? " -> " : " <-> ") << e.to << "\n";
    return out.str();
}

}  // namespace oppositio
