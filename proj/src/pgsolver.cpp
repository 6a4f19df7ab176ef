/*
 * Copyright 2026 The qpg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <qpg/pgsolver.hpp>

#include <charconv>
#include <sstream>
#include <unordered_map>

namespace qpg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

enum class Tok { Number, Word, String, Semicolon, Comma, End };

struct Token
{
    Tok kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    const Token& peek()
    {
        if (!have_) {
            current_ = scan();
            have_ = true;
        }
        return current_;
    }

    Token next()
    {
        Token t = peek();
        have_ = false;
        return t;
    }

private:
    void advance()
    {
        if (text_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }

    void skip_blank()
    {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token scan()
    {
        skip_blank();
        const std::size_t line = line_, col = col_, start = pos_;
        if (pos_ >= text_.size()) return {Tok::End, {}, line, col};

        char c = text_[pos_];
        if (c == ';') {
            advance();
            return {Tok::Semicolon, text_.substr(start, 1), line, col};
        }
        if (c == ',') {
            advance();
            return {Tok::Comma, text_.substr(start, 1), line, col};
        }
        if (c == '"') {
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
                advance();
            }
            if (pos_ >= text_.size()) throw ParseError(line, col, "unterminated string");
            advance();
            return {Tok::String, text_.substr(start, pos_ - start), line, col};
        }
        if (c >= '0' && c <= '9') {
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') advance();
            return {Tok::Number, text_.substr(start, pos_ - start), line, col};
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (!((d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') || (d >= '0' && d <= '9') || d == '_')) break;
                advance();
            }
            return {Tok::Word, text_.substr(start, pos_ - start), line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token current_{Tok::End, {}, 0, 0};
    bool have_ = false;
};

std::uint64_t
to_number(const Token& t)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        throw ParseError(t.line, t.column, "number out of range: " + std::string(t.text));
    }
    return value;
}

const char*
describe(Tok k)
{
    switch (k) {
    case Tok::Number: return "number";
    case Tok::Word: return "word";
    case Tok::String: return "string";
    case Tok::Semicolon: return "';'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
    }
    return "token";
}

std::uint64_t
expect_number(Lexer& lex, const char* what)
{
    Token t = lex.next();
    if (t.kind != Tok::Number) {
        throw ParseError(t.line, t.column, std::string("expected ") + what + ", found " + describe(t.kind));
    }
    return to_number(t);
}

void
expect_semicolon(Lexer& lex)
{
    Token t = lex.next();
    if (t.kind != Tok::Semicolon) {
        throw ParseError(t.line, t.column, std::string("expected ';', found ") + describe(t.kind));
    }
}

struct PendingEdge
{
    std::uint64_t target;
    std::size_t line;
    std::size_t column;
};

} // namespace

ParsedGame
parse_pgsolver_with_ids(std::string_view text)
{
    Lexer lex(text);

    if (lex.peek().kind == Tok::Word) {
        Token w = lex.next();
        if (w.text != "parity") throw ParseError(w.line, w.column, "unknown header '" + std::string(w.text) + "'");
        expect_number(lex, "maximum vertex id");
        expect_semicolon(lex);
    }

    std::vector<std::uint64_t> ids;
    std::vector<std::uint64_t> raw_priority;
    std::vector<Player> owner;
    std::vector<std::vector<PendingEdge>> pending;
    std::unordered_map<std::uint64_t, Vertex> index;

    while (lex.peek().kind != Tok::End) {
        const Token id_tok = lex.peek();
        const std::uint64_t id = expect_number(lex, "vertex id");
        if (index.contains(id)) {
            throw ParseError(id_tok.line, id_tok.column, "duplicate vertex id " + std::to_string(id));
        }
        const std::uint64_t prio = expect_number(lex, "priority");
        const Token owner_tok = lex.peek();
        const std::uint64_t own = expect_number(lex, "owner");
        if (own > 1) throw ParseError(owner_tok.line, owner_tok.column, "owner must be 0 or 1");

        std::vector<PendingEdge> succ;
        if (lex.peek().kind != Tok::Number) {
            const Token& t = lex.peek();
            throw ParseError(t.line, t.column, "vertex " + std::to_string(id) + " has no successors");
        }
        while (true) {
            Token t = lex.next();
            succ.push_back({to_number(t), t.line, t.column});
            if (lex.peek().kind != Tok::Comma) break;
            lex.next();
            if (lex.peek().kind != Tok::Number) {
                const Token& bad = lex.peek();
                throw ParseError(bad.line, bad.column, std::string("expected successor id, found ") + describe(bad.kind));
            }
        }
        if (lex.peek().kind == Tok::String) lex.next();
        expect_semicolon(lex);

        index.emplace(id, static_cast<Vertex>(ids.size()));
        ids.push_back(id);
        raw_priority.push_back(prio);
        owner.push_back(own == 0 ? Player::Even : Player::Odd);
        pending.push_back(std::move(succ));
    }

    if (ids.empty()) {
        const Token& t = lex.peek();
        throw ParseError(t.line, t.column, "game has no vertices");
    }

    std::vector<std::vector<Vertex>> successors(ids.size());
    for (std::size_t v = 0; v < ids.size(); v++) {
        for (const auto& e : pending[v]) {
            auto it = index.find(e.target);
            if (it == index.end()) {
                throw ParseError(e.line, e.column, "vertex " + std::to_string(ids[v])
                                                       + " has undeclared successor " + std::to_string(e.target));
            }
            successors[v].push_back(it->second);
        }
    }

    auto norm = normalize_priorities(raw_priority);
    return {GameGraph(std::move(norm.priorities), std::move(owner), std::move(successors), norm.d), std::move(ids)};
}

GameGraph
parse_pgsolver(std::string_view text)
{
    return parse_pgsolver_with_ids(text).game;
}

std::string
serialize_pgsolver(const GameGraph& g)
{
    std::ostringstream out;
    out << "parity " << g.vertex_count() - 1 << ";\n";
    for (Vertex v = 0; v < g.vertex_count(); v++) {
        out << v << ' ' << g.priority(v) << ' ' << (g.owner(v) == Player::Even ? 0 : 1) << ' ';
        bool first = true;
        for (Vertex w : g.successors(v)) {
            if (!first) out << ',';
            out << w;
            first = false;
        }
        out << ";\n";
    }
    return out.str();
}

} // namespace qpg
