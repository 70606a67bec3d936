#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "kgetool/kg.hpp"

namespace kgetool {

struct SimilarityConfig {
    std::string backend = "lexical";  // lexical | vector_file | remote_embedding
    std::string vector_file;          // vector_file backend
    std::string url;                  // remote_embedding: full endpoint URL
    std::string model;                // remote_embedding
    bool deunderscore = false;        // score "prefer_food" as "prefer food"
    int retries = 3;
    int backoff_ms = 250;
};

struct ScoredCandidate {
    std::string text;
    double score;
};

/// Deterministic text scorer behind a ranked top-k contract.
///
/// top_k returns exactly min(k, |candidates|) items sorted by non-increasing
/// score, ties broken by lexicographic candidate order. For a fixed backend
/// state the ranking is reproducible across calls, which makes
/// top_k(..., k) a prefix of top_k(..., k+1).
class SimilarityProvider {
  public:
    virtual ~SimilarityProvider() = default;

    std::vector<ScoredCandidate> top_k(const std::string& query,
                                       std::span<const std::string> candidates, int k);

  protected:
    /// Scores aligned with `candidates`. Inputs arrive already de-underscored
    /// when the config asks for it.
    virtual std::vector<double> score_all(const std::string& query,
                                          std::span<const std::string> candidates) = 0;

    explicit SimilarityProvider(bool deunderscore) : deunderscore_(deunderscore) {}

  private:
    bool deunderscore_;
};

/// Character-trigram Jaccard similarity. Offline and fully deterministic;
/// the default backend so the whole suite runs without a network.
class LexicalProvider final : public SimilarityProvider {
  public:
    explicit LexicalProvider(bool deunderscore = false) : SimilarityProvider(deunderscore) {}

    static double trigram_jaccard(const std::string& a, const std::string& b);

  protected:
    std::vector<double> score_all(const std::string& query,
                                  std::span<const std::string> candidates) override;
};

/// Cosine similarity over vectors loaded from a JSON map {text: [floats]}.
/// Vectors are unit-normalized at ingestion. A text without a vector is a
/// hard error, never a silent zero.
class VectorFileProvider final : public SimilarityProvider {
  public:
    VectorFileProvider(const std::string& path, bool deunderscore = false);

  protected:
    std::vector<double> score_all(const std::string& query,
                                  std::span<const std::string> candidates) override;

  private:
    const std::vector<double>& vector_for(const std::string& text) const;
    std::map<std::string, std::vector<double>> vectors_;
};

/// Cosine similarity over embeddings fetched from a remote endpoint
/// (POST {"input": [...], "model": ...} -> {"data":[{"embedding":[...]}...]},
/// bearer token from KGETOOL_EMBED_API_KEY). Embeddings are cached per text;
/// warming the cache never changes rankings.
class RemoteEmbeddingProvider final : public SimilarityProvider {
  public:
    explicit RemoteEmbeddingProvider(const SimilarityConfig& cfg);

  protected:
    std::vector<double> score_all(const std::string& query,
                                  std::span<const std::string> candidates) override;

  private:
    void ensure_cached(const std::vector<std::string>& texts);

    SimilarityConfig cfg_;
    std::mutex cache_mutex_;
    std::map<std::string, std::vector<double>> cache_;
};

std::unique_ptr<SimilarityProvider> make_similarity_provider(const SimilarityConfig& cfg);

/// Ranks documents by text similarity to the query and returns the top n.
/// Returned documents keep their source triples so retrieval results can be
/// re-transformed into links.
std::vector<Document> retrieve_documents(SimilarityProvider& provider, const std::string& query,
                                         std::span<const Document> docs, int n);

}  // namespace kgetool
