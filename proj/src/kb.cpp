#include "wikivote/kb.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <utility>

#include "wikivote/errors.hpp"
#include "wikivote/text.hpp"

namespace wikivote {

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open concept dictionary: " + path);

  KnowledgeBase kb;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw MalformedLineError(path, line_no, "expected surface<TAB>title<TAB>categories");
    std::string surface = normalize_surface(fields[0]);
    if (surface.empty()) throw MalformedLineError(path, line_no, "empty surface form");
    const std::string& title = fields[1];
    if (title.empty()) throw MalformedLineError(path, line_no, "empty canonical title");

    std::set<std::string> wikics;
    for (const auto& w : split(fields[2], '|'))
      if (!w.empty()) wikics.insert(w);

    auto& senses = kb.concepts[surface];
    const auto it = std::find_if(senses.begin(), senses.end(),
                                 [&](const Sense& s) { return s.canonical_title == title; });
    if (it == senses.end())
      senses.push_back(Sense{title, std::move(wikics)});
    else
      it->wikics.insert(wikics.begin(), wikics.end());
  }
  if (kb.concepts.empty()) throw EmptyKbError(path);

  for (auto& [surface, senses] : kb.concepts) {
    std::sort(senses.begin(), senses.end(),
              [](const Sense& a, const Sense& b) { return a.canonical_title < b.canonical_title; });
    kb.max_concept_words =
        std::max(kb.max_concept_words, static_cast<int>(word_count(surface)));
  }
  return kb;
}

void save_kb(const KnowledgeBase& kb, std::ostream& out) {
  std::vector<const std::string*> keys;
  keys.reserve(kb.concepts.size());
  for (const auto& entry : kb.concepts) keys.push_back(&entry.first);
  std::sort(keys.begin(), keys.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });

  for (const std::string* key : keys) {
    for (const Sense& s : kb.concepts.at(*key)) {
      out << *key << '\t' << s.canonical_title << '\t';
      bool first = true;
      for (const auto& w : s.wikics) {
        if (!first) out << '|';
        out << w;
        first = false;
      }
      out << '\n';
    }
  }
}

const std::vector<Sense>& lookup(const KnowledgeBase& kb, std::string_view surface) {
  static const std::vector<Sense> kEmpty;
  const auto it = kb.concepts.find(normalize_surface(surface));
  return it == kb.concepts.end() ? kEmpty : it->second;
}

}  // namespace wikivote
