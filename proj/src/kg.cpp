#include "kgetool/kg.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kgetool/errors.hpp"

namespace kgetool {

namespace {

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

Triple make_checked_triple(std::string h, std::string r, std::string t, const std::string& where) {
    Triple triple{trim(h), trim(r), trim(t)};
    if (triple.head.empty() || triple.relation.empty() || triple.tail.empty()) {
        throw ParseError("triple with empty field at " + where);
    }
    return triple;
}

}  // namespace

KnowledgeGraph KnowledgeGraph::from_triples(std::vector<Triple> triples) {
    KnowledgeGraph kg;
    for (auto& t : triples) {
        t.head = trim(t.head);
        t.relation = trim(t.relation);
        t.tail = trim(t.tail);
        if (t.head.empty() || t.relation.empty() || t.tail.empty()) {
            throw ConfigError("triple with empty field: [" + t.head + ", " + t.relation + ", " +
                              t.tail + "]");
        }
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    for (const auto& t : triples) {
        kg.relation_vocab_.insert(t.relation);
        kg.entity_set_.insert(t.head);
        kg.entity_set_.insert(t.tail);
    }
    kg.triples_ = std::move(triples);
    return kg;
}

KnowledgeGraph KnowledgeGraph::parse(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    std::vector<Triple> triples;
    if (first != std::string::npos && content[first] == '[') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("triple file is not valid JSON: ") + e.what());
        }
        if (!doc.is_array()) throw ParseError("triple file must be a JSON array");
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const auto& row = doc[i];
            if (!row.is_array() || row.size() != 3 || !row[0].is_string() ||
                !row[1].is_string() || !row[2].is_string()) {
                throw ParseError("row " + std::to_string(i) +
                                 ": expected a 3-element string array");
            }
            triples.push_back(make_checked_triple(row[0].get<std::string>(),
                                                  row[1].get<std::string>(),
                                                  row[2].get<std::string>(),
                                                  "row " + std::to_string(i)));
        }
    } else {
        std::istringstream in(content);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (trim(line).empty()) continue;
            auto tab1 = line.find('\t');
            auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
            if (tab1 == std::string::npos || tab2 == std::string::npos ||
                line.find('\t', tab2 + 1) != std::string::npos) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected exactly three tab-separated fields");
            }
            triples.push_back(make_checked_triple(line.substr(0, tab1),
                                                  line.substr(tab1 + 1, tab2 - tab1 - 1),
                                                  line.substr(tab2 + 1),
                                                  "line " + std::to_string(lineno)));
        }
    }
    return from_triples(std::move(triples));
}

KnowledgeGraph KnowledgeGraph::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open triple file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::span<const Triple> KnowledgeGraph::out_edges(std::string_view entity) const {
    auto lo = std::lower_bound(triples_.begin(), triples_.end(), entity,
                               [](const Triple& t, std::string_view e) { return t.head < e; });
    auto hi = std::upper_bound(lo, triples_.end(), entity,
                               [](std::string_view e, const Triple& t) { return e < t.head; });
    return {&*lo, static_cast<std::size_t>(hi - lo)};
}

bool KnowledgeGraph::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<GroundedPath> ground_exact(const KnowledgeGraph& kg, const RelationPath& path) {
    if (path.relations.empty()) throw ConfigError("relation path must be non-empty");
    std::vector<GroundedPath> results;
    std::vector<Triple> chain;
    // DFS over sorted out-edges yields results in lexicographic link order.
    auto walk = [&](auto&& self, const std::string& entity, std::size_t depth) -> void {
        if (depth == path.relations.size()) {
            results.push_back(GroundedPath{chain});
            return;
        }
        for (const auto& edge : kg.out_edges(entity)) {
            if (edge.relation != path.relations[depth]) continue;
            chain.push_back(edge);
            self(self, edge.tail, depth + 1);
            chain.pop_back();
        }
    };
    walk(walk, path.start, 0);
    return results;
}

std::set<std::string> entities_of(std::span<const GroundedPath> paths) {
    std::set<std::string> out;
    for (const auto& p : paths) {
        for (const auto& link : p.links) {
            out.insert(link.head);
            out.insert(link.tail);
        }
    }
    return out;
}

std::set<std::string> entities_of_links(const std::set<Triple>& links) {
    std::set<std::string> out;
    for (const auto& link : links) {
        out.insert(link.head);
        out.insert(link.tail);
    }
    return out;
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(" \t\r\n\"") != std::string::npos;
}

std::string document_field(const std::string& field) {
    if (!needs_quoting(field)) return field;
    if (field.find('"') != std::string::npos) {
        throw ConfigError("cannot render field containing a double quote: " + field);
    }
    return '"' + field + '"';
}

}  // namespace

std::string render_document_text(const Triple& t) {
    return document_field(t.head) + ' ' + document_field(t.relation) + ' ' +
           document_field(t.tail) + '.';
}

Triple parse_document_text(const std::string& text) {
    if (text.empty() || text.back() != '.') {
        throw ParseError("document text must end with '.': " + text);
    }
    std::string body = text.substr(0, text.size() - 1);
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] == ' ') {
            ++i;
            continue;
        }
        if (body[i] == '"') {
            auto close = body.find('"', i + 1);
            if (close == std::string::npos) throw ParseError("unterminated quote: " + text);
            fields.push_back(body.substr(i + 1, close - i - 1));
            i = close + 1;
        } else {
            auto end = body.find(' ', i);
            if (end == std::string::npos) end = body.size();
            fields.push_back(body.substr(i, end - i));
            i = end;
        }
    }
    if (fields.size() != 3) {
        throw ParseError("document text must contain exactly three fields: " + text);
    }
    return Triple{fields[0], fields[1], fields[2]};
}

std::vector<Document> links_to_documents(const KnowledgeGraph& kg) {
    std::vector<Document> docs;
    docs.reserve(kg.edge_count());
    std::size_t i = 0;
    for (const auto& t : kg.triples()) {
        char id[16];
        std::snprintf(id, sizeof id, "d%04zu", i++);
        docs.push_back(Document{id, render_document_text(t), t});
    }
    return docs;
}

}  // namespace kgetool
