/*
 * Copyright 2026 The pgpart Authors
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

#include "pgpart/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace pgpart {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
      column_(column)
{
}

namespace {

enum class Tok { Int, Ident, Comma, Semi, Colon, String, End };

struct Token
{
    Tok kind;
    std::string text;
    std::uint64_t value = 0;
    std::size_t line = 0;
    std::size_t column = 0;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    const Token& peek()
    {
        if (!ahead_) ahead_ = lex();
        return *ahead_;
    }

    Token next()
    {
        Token t = peek();
        ahead_.reset();
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& what) { throw ParseError(what, at.line, at.column); }

    Token expect(Tok kind, const char* what)
    {
        Token t = next();
        if (t.kind != kind) fail(t, std::string("syntax error: expected ") + what + describe(t));
        return t;
    }

    std::uint64_t expect_int(const char* what) { return expect(Tok::Int, what).value; }

    static std::string describe(const Token& t)
    {
        switch (t.kind) {
        case Tok::End: return " but reached end of input";
        case Tok::Comma: return " but found ','";
        case Tok::Semi: return " but found ';'";
        case Tok::Colon: return " but found ':'";
        default: return " but found '" + t.text + "'";
        }
    }

private:
    Token lex()
    {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        const char c = text_[pos_];
        if (c == ',' || c == ';' || c == ':') {
            t.kind = c == ',' ? Tok::Comma : c == ';' ? Tok::Semi : Tok::Colon;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        if (c == '"') {
            t.kind = Tok::String;
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
                t.text.push_back(text_[pos_]);
                advance();
            }
            if (pos_ >= text_.size()) throw ParseError("syntax error: unterminated string", t.line, t.column);
            advance();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                t.text.push_back(text_[pos_]);
                advance();
            }
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
            if (ec != std::errc()) throw ParseError("integer out of range", t.line, t.column);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (!std::isalnum(static_cast<unsigned char>(d)) && d != '-' && d != '_') break;
                t.text.push_back(d);
                advance();
            }
            return t;
        }
        throw ParseError(std::string("syntax error: unexpected character '") + c + "'", t.line, t.column);
    }

    void skip_space()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    std::optional<Token> ahead_;
};

Game
parse_body(Lexer& lex, GameKind kind, std::uint64_t max_id, std::size_t k)
{
    constexpr auto kMaxVertices = std::uint64_t{std::numeric_limits<VertexId>::max()};
    const Token header_end = lex.expect(Tok::Semi, "';' after header");
    if (max_id >= kMaxVertices) lex.fail(header_end, "max vertex id too large");
    const std::size_t n = static_cast<std::size_t>(max_id) + 1;

    if (lex.peek().kind == Tok::Ident && lex.peek().text == "start") {
        lex.next();
        lex.expect_int("start vertex");
        lex.expect(Tok::Semi, "';'");
    }

    std::vector<Player> owners(n, Player::P0);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<std::vector<Priority>> prio(k, std::vector<Priority>(n, 0));
    std::vector<std::string> names(n);
    std::vector<char> declared(n, 0);
    bool any_name = false;

    while (lex.peek().kind != Tok::End) {
        const Token id_tok = lex.expect(Tok::Int, "vertex id");
        if (id_tok.value >= n) lex.fail(id_tok, "vertex id " + id_tok.text + " exceeds declared max-id");
        const auto v = static_cast<VertexId>(id_tok.value);
        if (declared[v]) lex.fail(id_tok, "duplicate vertex id " + id_tok.text);
        declared[v] = 1;

        std::vector<Priority> ps;
        Token p_tok = lex.expect(Tok::Int, "priority");
        const Token first_p = p_tok;
        for (;;) {
            if (p_tok.value > std::numeric_limits<Priority>::max()) lex.fail(p_tok, "priority too large");
            ps.push_back(static_cast<Priority>(p_tok.value));
            if (lex.peek().kind != Tok::Comma) break;
            lex.next();
            p_tok = lex.expect(Tok::Int, "priority");
        }
        if (ps.size() != k) {
            lex.fail(first_p, "dimension mismatch: vertex " + id_tok.text + " has " + std::to_string(ps.size()) +
                                  " priorities, expected " + std::to_string(k));
        }
        for (std::size_t l = 0; l < k; ++l) prio[l][v] = ps[l];

        const Token owner_tok = lex.expect(Tok::Int, "owner");
        if (owner_tok.value > 1) lex.fail(owner_tok, "owner must be 0 or 1");
        owners[v] = player(static_cast<int>(owner_tok.value));

        if (lex.peek().kind == Tok::Int) {
            for (;;) {
                const Token s = lex.expect(Tok::Int, "successor");
                if (s.value >= n) lex.fail(s, "successor " + s.text + " of vertex " + id_tok.text + " out of range");
                succ[v].push_back(static_cast<VertexId>(s.value));
                if (lex.peek().kind != Tok::Comma) break;
                lex.next();
            }
        }
        if (lex.peek().kind == Tok::String) {
            names[v] = lex.next().text;
            any_name = true;
        }
        lex.expect(Tok::Semi, "';'");
        if (succ[v].empty()) lex.fail(id_tok, "vertex " + id_tok.text + " is deadlocked (no successor)");
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (!declared[v]) throw ParseError("missing declaration of vertex " + std::to_string(v), 0, 0);
    }

    Game g;
    g.kind = kind;
    g.arena = GameArena(std::move(owners), succ, any_name ? std::move(names) : std::vector<std::string>{});
    g.profile = PriorityProfile(std::move(prio));
    return g;
}

Game
parse_with(std::string_view text, std::optional<GameKind> want)
{
    Lexer lex(text);
    const Token kw = lex.expect(Tok::Ident, "header keyword");
    GameKind kind;
    if (kw.text == "parity") {
        kind = GameKind::Parity;
    } else if (kw.text == "generalized-parity") {
        kind = GameKind::Generalized;
    } else {
        lex.fail(kw, "unknown header '" + kw.text + "'");
    }
    if (want && *want != kind) {
        lex.fail(kw, std::string("expected a '") + (*want == GameKind::Parity ? "parity" : "generalized-parity") +
                         "' header");
    }
    const std::uint64_t max_id = lex.expect_int("max vertex id");
    std::size_t k = 1;
    if (kind == GameKind::Generalized) {
        const Token kt = lex.expect(Tok::Int, "dimension count");
        if (kt.value == 0 || kt.value > 64) lex.fail(kt, "dimension count must be in 1..64");
        k = static_cast<std::size_t>(kt.value);
    }
    return parse_body(lex, kind, max_id, k);
}

void
write_ids(std::ostream& os, const std::vector<VertexId>& ids)
{
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
}

std::vector<VertexId>
parse_id_list(Lexer& lex)
{
    std::vector<VertexId> ids;
    if (lex.peek().kind != Tok::Int) return ids;
    for (;;) {
        const Token t = lex.expect(Tok::Int, "vertex id");
        ids.push_back(static_cast<VertexId>(t.value));
        if (lex.peek().kind != Tok::Comma) break;
        lex.next();
    }
    return ids;
}

} // namespace

Game
parse_parity(std::string_view text)
{
    return parse_with(text, GameKind::Parity);
}

Game
parse_generalized(std::string_view text)
{
    return parse_with(text, GameKind::Generalized);
}

Game
parse_game(std::string_view text)
{
    return parse_with(text, std::nullopt);
}

Game
load_game(const std::filesystem::path& path, std::optional<GameKind> kind)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    Game game = parse_with(buf.str(), std::nullopt);
    if (kind && *kind != game.kind) {
        if (*kind == GameKind::Parity && game.profile.dimensions() != 1)
            throw std::invalid_argument(path.string() + ": a game with " + std::to_string(game.profile.dimensions()) +
                                        " priority functions cannot be read as a parity game");
        game.kind = *kind;
    }
    return game;
}

std::string
serialize(const Game& game)
{
    const auto& a = game.arena;
    const auto& prof = game.profile;
    const std::size_t n = a.vertex_count();
    if (game.kind == GameKind::Parity && prof.dimensions() != 1) {
        throw std::invalid_argument("a parity game must have exactly one priority function");
    }
    std::ostringstream os;
    const std::size_t max_id = n == 0 ? 0 : n - 1;
    if (game.kind == GameKind::Parity) {
        os << "parity " << max_id << ";\n";
    } else {
        os << "generalized-parity " << max_id << ' ' << prof.dimensions() << ";\n";
    }
    for (VertexId v = 0; v < n; ++v) {
        os << v << ' ';
        for (std::size_t l = 0; l < prof.dimensions(); ++l) {
            if (l) os << ',';
            os << prof.priority(v, l);
        }
        os << ' ' << index(a.owner(v)) << ' ';
        auto s = a.successors(v);
        write_ids(os, std::vector<VertexId>(s.begin(), s.end()));
        if (!a.name(v).empty()) {
            os << " \"";
            for (char c : a.name(v)) {
                if (c == '"' || c == '\\') os << '\\';
                os << c;
            }
            os << '"';
        }
        os << ";\n";
    }
    return os.str();
}

std::string
format_regions(const SolveResult& result, bool with_unsolved)
{
    std::ostringstream os;
    os << "REGION 0:";
    if (!result.win0.empty()) os << ' ';
    write_ids(os, result.win0.to_vector());
    os << "\nREGION 1:";
    if (!result.win1.empty()) os << ' ';
    write_ids(os, result.win1.to_vector());
    os << '\n';
    if (with_unsolved) {
        os << "UNSOLVED:";
        if (!result.unsolved.empty()) os << ' ';
        write_ids(os, result.unsolved.to_vector());
        os << '\n';
    }
    return os.str();
}

RegionReport
parse_regions(std::string_view text)
{
    Lexer lex(text);
    RegionReport report;
    bool seen0 = false;
    bool seen1 = false;
    while (lex.peek().kind != Tok::End) {
        const Token kw = lex.expect(Tok::Ident, "REGION or UNSOLVED");
        if (kw.text == "REGION") {
            const Token which = lex.expect(Tok::Int, "player");
            if (which.value > 1) lex.fail(which, "player must be 0 or 1");
            lex.expect(Tok::Colon, "':'");
            auto& seen = which.value == 0 ? seen0 : seen1;
            if (seen) lex.fail(kw, "duplicate REGION " + which.text);
            seen = true;
            (which.value == 0 ? report.win0 : report.win1) = parse_id_list(lex);
        } else if (kw.text == "UNSOLVED") {
            lex.expect(Tok::Colon, "':'");
            if (report.unsolved) lex.fail(kw, "duplicate UNSOLVED");
            report.unsolved = parse_id_list(lex);
        } else {
            lex.fail(kw, "unknown region keyword '" + kw.text + "'");
        }
    }
    if (!seen0 || !seen1) throw ParseError("region report needs both REGION 0 and REGION 1", 0, 0);
    return report;
}

} // namespace pgpart
