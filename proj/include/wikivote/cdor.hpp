#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wikivote/extract.hpp"

namespace wikivote {

// Search query of one to three distinct concept surfaces.
struct Query {
  std::vector<std::string> terms;
  std::vector<ConceptClass> source_classes;  // parallel to terms
};

struct SearchResult {
  int rank = 0;  // 1 = best
  std::string title;
  std::string snippet;
  std::string url;  // empty for offline backends
};

// The accepted rank prefix of a result list: open resources judged to
// duplicate the record's content.
struct CdorSet {
  std::string record_id;
  std::vector<SearchResult> results;  // exactly ranks 1..cutoff_rank
  int cutoff_rank = 0;
};

// Retrieval abstraction. Implementations return at most k results,
// rank-ascending from 1, deterministically for a given corpus.
class SearchBackend {
 public:
  virtual ~SearchBackend() = default;

  virtual std::vector<SearchResult> search(const std::vector<std::string>& terms, int k) = 0;

  // Replay adapters key recorded results by record id; the default ignores
  // the id and delegates to search().
  virtual std::vector<SearchResult> search_for(const std::string& record_id,
                                               const std::vector<std::string>& terms, int k);
};

// Builds the query from an extraction-ordered concept list: the top person,
// top location, and top other proper noun, topped up to three terms with
// further other proper nouns, then persons, then locations. Throws
// NoClassifiedConceptsError when no concept is classified.
Query construct_query(const std::vector<Concept>& concepts);

// Scans results from the deepest rank toward rank 1 and cuts at the first
// result whose title and snippet jointly contain every query term
// word-bounded, case-insensitively. When no result qualifies, or the cut
// falls above default_cdors, the top min(default_cdors, size) results are
// kept instead. Throws EmptyResultsError on an empty list.
CdorSet select_cdors(std::string record_id, const std::vector<SearchResult>& results,
                     const Query& query, int default_cdors = 5);

// Runs concept extraction over every accepted result's title and snippet.
// Returns unique concepts in first-occurrence order.
std::vector<Concept> harvest_enrichment(const CdorSet& cdors, const KnowledgeBase& kb,
                                        const ClassifierRules& rules);

// Deterministic search over a corpus file of `doc_id<TAB>title<TAB>body`
// lines. Documents are scored by distinct query terms present, then total
// term frequency, then ascending doc id; the snippet is a window of +/-10
// tokens around the first term hit in the body.
class OfflineBackend : public SearchBackend {
 public:
  explicit OfflineBackend(const std::string& corpus_path);

  std::vector<SearchResult> search(const std::vector<std::string>& terms, int k) override;

 private:
  struct Doc {
    std::string id;
    std::string title;
    std::string body;
    std::string searchable;  // lowercased title + " " + body
  };

  std::vector<Doc> docs_;
};

// Replays a recorded result cache. Results are keyed by record id, so the
// query-only entry point finds nothing.
class FixtureBackend : public SearchBackend {
 public:
  explicit FixtureBackend(const std::string& cache_path);

  std::vector<SearchResult> search(const std::vector<std::string>& terms, int k) override;
  std::vector<SearchResult> search_for(const std::string& record_id,
                                       const std::vector<std::string>& terms, int k) override;

 private:
  std::map<std::string, std::vector<SearchResult>> by_record_;
};

// Parses "offline:<corpus-path>" or "fixture:<cache-path>". The "live:"
// scheme is reserved for an external engine adapter and is not built in.
std::unique_ptr<SearchBackend> make_backend(const std::string& spec);

// Cache format, one accepted result per line:
//   record_id<TAB>rank<TAB>title<TAB>snippet<TAB>url
void append_cdor_cache(std::ostream& out, const CdorSet& cdors);
std::map<std::string, std::vector<SearchResult>> load_cdor_cache(const std::string& path);

}  // namespace wikivote
