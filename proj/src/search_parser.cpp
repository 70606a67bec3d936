#include "kgetool/search_parser.hpp"

#include <cctype>
#include <optional>

#include "kgetool/errors.hpp"

namespace kgetool {

namespace {

constexpr std::string_view kAnchor = "KG.search(";
constexpr std::string_view kTokenStoppers = ",=[]()'\" \t\r\n";

struct Cursor {
    const std::string& text;
    std::size_t pos;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

// Bare token: maximal run of characters excluding delimiters and whitespace.
// Quoted token: content between matching single or double quotes, verbatim.
std::optional<std::string> read_token(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.text.size()) return std::nullopt;
    char q = c.text[c.pos];
    if (q == '\'' || q == '"') {
        auto close = c.text.find(q, c.pos + 1);
        if (close == std::string::npos) return std::nullopt;
        std::string token = c.text.substr(c.pos + 1, close - c.pos - 1);
        c.pos = close + 1;
        if (token.empty()) return std::nullopt;
        return token;
    }
    std::size_t end = c.pos;
    while (end < c.text.size() && kTokenStoppers.find(c.text[end]) == std::string_view::npos) {
        ++end;
    }
    if (end == c.pos) return std::nullopt;
    std::string token = c.text.substr(c.pos, end - c.pos);
    c.pos = end;
    return token;
}

bool read_keyword(Cursor& c, std::string_view keyword) {
    auto saved = c.pos;
    auto token = read_token(c);
    if (token && iequals(*token, keyword)) return true;
    c.pos = saved;
    return false;
}

// Parses the expression body right after the anchor. On success returns the
// path and leaves the cursor past the closing parenthesis.
std::optional<RelationPath> parse_expression(Cursor& c) {
    if (!read_keyword(c, "start")) return std::nullopt;
    if (!c.eat('=')) return std::nullopt;
    auto start = read_token(c);
    if (!start) return std::nullopt;
    if (!c.eat(',')) return std::nullopt;
    if (!read_keyword(c, "path")) return std::nullopt;
    if (!c.eat('=')) return std::nullopt;
    if (!c.eat('[')) return std::nullopt;
    std::vector<std::string> relations;
    while (true) {
        auto rel = read_token(c);
        if (!rel) return std::nullopt;
        relations.push_back(std::move(*rel));
        if (c.eat(',')) continue;
        if (c.eat(']')) break;
        return std::nullopt;
    }
    if (!c.eat(')')) return std::nullopt;
    return RelationPath{std::move(*start), std::move(relations)};
}

}  // namespace

ParseOutcome parse_kg_search(const std::string& text) {
    std::vector<RelationPath> searches;
    bool saw_anchor = false;
    std::size_t scan = 0;
    while (true) {
        auto at = text.find(kAnchor, scan);
        if (at == std::string::npos) break;
        saw_anchor = true;
        Cursor c{text, at + kAnchor.size()};
        if (auto path = parse_expression(c)) {
            searches.push_back(std::move(*path));
            scan = c.pos;
        } else {
            scan = at + 1;
        }
    }
    if (searches.empty()) {
        return FormatError{text, saw_anchor ? "malformed KG.search expression"
                                            : "no KG.search expression found"};
    }
    return ParsedSearches{std::move(searches), text};
}

namespace {

std::string render_token(const std::string& token) {
    if (token.empty()) throw ConfigError("cannot render empty token");
    if (token.find_first_of(kTokenStoppers) == std::string::npos) return token;
    if (token.find('"') == std::string::npos) return '"' + token + '"';
    if (token.find('\'') == std::string::npos) return '\'' + token + '\'';
    throw ConfigError("token mixes both quote characters: " + token);
}

}  // namespace

std::string render_kg_search(const RelationPath& path) {
    if (path.relations.empty()) throw ConfigError("relation path must be non-empty");
    std::string out = "KG.search(Start=";
    out += render_token(path.start);
    out += ", Path=[";
    for (std::size_t i = 0; i < path.relations.size(); ++i) {
        if (i) out += ", ";
        out += render_token(path.relations[i]);
    }
    out += "])";
    return out;
}

}  // namespace kgetool
