#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wikivote/kb.hpp"

namespace wikivote {

// A short text record: user-visible title plus tag phrases.
struct Record {
  std::string id;
  std::string title;
  std::vector<std::string> tags;
  std::optional<std::string> label;  // gold category, when known
};

enum class ConceptClass { person, location, other_proper_noun, unclassified };

std::string_view to_string(ConceptClass c);

// A concept matched in text, with its resolved sense and heuristic class.
struct Concept {
  std::string surface;  // normalized matched form
  Sense sense;
  ConceptClass cls = ConceptClass::unclassified;
  int word_count = 0;
  int wikic_count = 0;
};

// Term lists for the person/location/other heuristic. Terms are lowercase; a
// term matches when it occurs word-bounded inside any category string of a
// sense. Person takes precedence over location, location over other.
struct ClassifierRules {
  std::vector<std::string> person_terms;
  std::vector<std::string> location_terms;
  std::vector<std::string> other_terms;

  static const ClassifierRules& defaults();
};

// Override file: three lines "person:", "location:", "other:", each followed
// by comma-separated terms. '#' comments and blank lines are ignored.
ClassifierRules load_rules(const std::string& path);

// A dictionary hit over a token stream; [begin, end) are token indices.
struct Match {
  std::string surface;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Greedy left-to-right scan: at each position the longest window (up to
// kb.max_concept_words tokens) whose normalized join is a dictionary key is
// emitted, and the scan resumes after it. Matches never overlap; tokens not
// covered by any key are skipped.
std::vector<Match> longest_match(const std::vector<std::string>& tokens, const KnowledgeBase& kb);

// Picks the sense whose category set overlaps most with the context
// concepts' categories (exact string matches). Ties prefer the larger
// category set, then the lexicographically smaller canonical title.
Sense disambiguate(const std::vector<Sense>& senses, const std::vector<Concept>& context);

ConceptClass classify_concept(const Sense& sense, const ClassifierRules& rules);

// Orders concepts of one class by descending word count, then descending
// category count, then ascending surface.
std::vector<Concept> rank_within_class(std::vector<Concept> concepts);

// Resolves and classifies unique surfaces in their given order: unambiguous
// senses first, then ambiguous ones against the unambiguous context.
// Surfaces absent from the dictionary are dropped.
std::vector<Concept> resolve_surfaces(const std::vector<std::string>& surfaces,
                                      const KnowledgeBase& kb,
                                      const ClassifierRules& rules);

// Per-record extraction: matches the title and each tag independently,
// deduplicates by surface, resolves and classifies, then orders by class
// block (person, location, other, unclassified), ranked within each block.
std::vector<Concept> extract_concepts(const Record& record,
                                      const KnowledgeBase& kb,
                                      const ClassifierRules& rules);

// Corpus format, one record per line:
//   id<TAB>label-or-dash<TAB>title<TAB>tag1|tag2|...
// Record ids must be unique; '-' marks an unlabeled record.
std::vector<Record> load_records(const std::string& path);

}  // namespace wikivote
