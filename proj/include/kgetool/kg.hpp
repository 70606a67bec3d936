#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kgetool {

/// One directed labeled edge. Identifiers are opaque, case-sensitive strings.
struct Triple {
    std::string head;
    std::string relation;
    std::string tail;

    auto operator<=>(const Triple&) const = default;
};

/// An ungrounded query: start entity plus an ordered relation sequence.
/// Relations may name identifiers that do not exist in any graph.
struct RelationPath {
    std::string start;
    std::vector<std::string> relations;

    bool operator==(const RelationPath&) const = default;
};

/// A concrete edge chain: links[i].tail == links[i+1].head, every link in the KG.
struct GroundedPath {
    std::vector<Triple> links;

    auto operator<=>(const GroundedPath&) const = default;
};

/// Immutable triple store with an adjacency index keyed by head entity.
/// All accessors are pure reads; instances are safe to share across threads.
class KnowledgeGraph {
  public:
    KnowledgeGraph() = default;

    /// Builds from an arbitrary triple list. Duplicates collapse, indices are
    /// derived. Throws ConfigError on a triple with an empty field.
    static KnowledgeGraph from_triples(std::vector<Triple> triples);

    /// Parses a triple file body. Two accepted forms: a JSON array of
    /// 3-element string arrays, or one tab-separated triple per line.
    /// Throws ParseError with line/position on malformed rows.
    static KnowledgeGraph parse(const std::string& content);

    static KnowledgeGraph load_file(const std::string& path);

    /// Triples in lexicographic (head, relation, tail) order.
    std::span<const Triple> triples() const { return triples_; }

    /// All outgoing edges of an entity, sorted. Empty for unknown entities.
    std::span<const Triple> out_edges(std::string_view entity) const;

    bool contains(const Triple& t) const;

    const std::set<std::string>& relation_vocab() const { return relation_vocab_; }
    const std::set<std::string>& entity_set() const { return entity_set_; }

    std::size_t node_count() const { return entity_set_.size(); }
    std::size_t edge_count() const { return triples_.size(); }
    std::size_t edge_type_count() const { return relation_vocab_.size(); }

  private:
    std::vector<Triple> triples_;  // sorted, duplicate-free
    std::set<std::string> relation_vocab_;
    std::set<std::string> entity_set_;
};

/// All full-length groundings of `path` in `kg`, in lexicographic link order.
/// Branches when one head offers several tails for the same relation.
/// An ungroundable path (including an unknown start entity) yields an empty
/// result, not an error.
std::vector<GroundedPath> ground_exact(const KnowledgeGraph& kg, const RelationPath& path);

/// Union of all heads and tails across all links.
std::set<std::string> entities_of(std::span<const GroundedPath> paths);

/// Heads and tails of a flat link set.
std::set<std::string> entities_of_links(const std::set<Triple>& links);

/// One-sentence rendering of a triple, used by the document-retrieval baseline.
struct Document {
    std::string id;
    std::string text;
    Triple source_triple;
};

/// "<head> <relation> <tail>."  Fields containing whitespace or a quote are
/// double-quoted so that distinct triples always render to distinct texts.
std::string render_document_text(const Triple& t);

/// Inverse of render_document_text. Throws ParseError on anything else.
Triple parse_document_text(const std::string& text);

/// One document per triple, ids stable in triple order.
std::vector<Document> links_to_documents(const KnowledgeGraph& kg);

}  // namespace kgetool
