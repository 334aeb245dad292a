#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wikivote {

// One meaning of a concept surface form: the article it resolves to and the
// category strings attached to that article.
struct Sense {
  std::string canonical_title;
  std::set<std::string> wikics;  // category strings, original casing

  friend bool operator==(const Sense&, const Sense&) = default;
};

// Immutable dictionary mapping normalized surface forms (lowercase,
// single-space separated) to their senses. Safe to share across threads once
// loaded.
struct KnowledgeBase {
  std::unordered_map<std::string, std::vector<Sense>> concepts;
  int max_concept_words = 0;  // longest key, in words
};

// Flat-file format, one sense per line:
//   surface<TAB>canonical_title<TAB>category1|category2|...
// The category field may be empty; lines starting with '#' are comments.
// Duplicate (surface, canonical_title) pairs merge by unioning categories.
// Throws MalformedLineError on bad lines and EmptyKbError when nothing loads.
KnowledgeBase load_kb(const std::string& path);

// Canonical serialization: surfaces sorted, senses sorted by title, category
// sets in their natural order. Loading the output reproduces the same
// concept map.
void save_kb(const KnowledgeBase& kb, std::ostream& out);

// Senses for a surface form, normalized before lookup. Empty when absent.
const std::vector<Sense>& lookup(const KnowledgeBase& kb, std::string_view surface);

}  // namespace wikivote
