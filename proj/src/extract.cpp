#include "wikivote/extract.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "wikivote/errors.hpp"
#include "wikivote/text.hpp"

namespace wikivote {

namespace {

int class_order(ConceptClass c) {
  switch (c) {
    case ConceptClass::person: return 0;
    case ConceptClass::location: return 1;
    case ConceptClass::other_proper_noun: return 2;
    case ConceptClass::unclassified: return 3;
  }
  return 3;
}

// Longer, better-connected surfaces carry more information.
bool more_discriminative(const Concept& a, const Concept& b) {
  if (a.word_count != b.word_count) return a.word_count > b.word_count;
  if (a.wikic_count != b.wikic_count) return a.wikic_count > b.wikic_count;
  return a.surface < b.surface;
}

Concept make_concept(const std::string& surface, Sense sense, const ClassifierRules& rules) {
  Concept c;
  c.surface = surface;
  c.word_count = static_cast<int>(word_count(surface));
  c.wikic_count = static_cast<int>(sense.wikics.size());
  c.cls = classify_concept(sense, rules);
  c.sense = std::move(sense);
  return c;
}

// Unique match surfaces from a set of text fields, first occurrence first.
std::vector<std::string> matched_surfaces(const std::vector<const std::string*>& fields,
                                          const KnowledgeBase& kb) {
  std::vector<std::string> surfaces;
  std::unordered_set<std::string> seen;
  for (const std::string* text : fields) {
    const auto tokens = tokenize(*text);
    for (auto& m : longest_match(tokens, kb))
      if (seen.insert(m.surface).second) surfaces.push_back(std::move(m.surface));
  }
  return surfaces;
}

}  // namespace

std::string_view to_string(ConceptClass c) {
  switch (c) {
    case ConceptClass::person: return "person";
    case ConceptClass::location: return "location";
    case ConceptClass::other_proper_noun: return "other";
    case ConceptClass::unclassified: return "unclassified";
  }
  return "unclassified";
}

const ClassifierRules& ClassifierRules::defaults() {
  static const ClassifierRules kDefaults{
      // person
      {"births", "characters"},
      // location
      {"cities", "countries", "geography of", "states of", "regions of", "provinces of",
       "museums in", "landmarks in", "capitals in", "islands of", "boroughs of", "stadiums",
       "airports", "locations", "geography stubs", "places"},
      // other proper noun
      {"companies", "vehicles", "devices", "established in", "games", "establishments",
       "venues", "inc.", "songs", "films", "services", "television series", "websites",
       "cartoons", "books", "incidents", "novels", "albums", "agents", "teams", "brands",
       "cameras", "shows", "magazines", "awards", "graphics", "inventions", "drugs", "sports",
       "introductions", "genres", "occupations", "foods", "articles"}};
  return kDefaults;
}

ClassifierRules load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rules file: " + path);

  ClassifierRules rules;
  bool seen_person = false, seen_location = false, seen_other = false;
  std::string line;
  std::size_t line_no = 0;

  const auto parse_terms = [](std::string_view rest) {
    std::vector<std::string> terms;
    for (const auto& piece : split(rest, ',')) {
      std::string term = normalize_surface(piece);
      if (!term.empty()) terms.push_back(std::move(term));
    }
    return terms;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const std::string_view view(line);
    if (view.rfind("person:", 0) == 0) {
      if (seen_person) throw MalformedLineError(path, line_no, "duplicate person: line");
      rules.person_terms = parse_terms(view.substr(7));
      seen_person = true;
    } else if (view.rfind("location:", 0) == 0) {
      if (seen_location) throw MalformedLineError(path, line_no, "duplicate location: line");
      rules.location_terms = parse_terms(view.substr(9));
      seen_location = true;
    } else if (view.rfind("other:", 0) == 0) {
      if (seen_other) throw MalformedLineError(path, line_no, "duplicate other: line");
      rules.other_terms = parse_terms(view.substr(6));
      seen_other = true;
    } else {
      throw MalformedLineError(path, line_no, "expected person:, location: or other: line");
    }
  }
  if (!seen_person || !seen_location || !seen_other)
    throw Error("rules file must define person:, location: and other: lines: " + path);
  return rules;
}

std::vector<Match> longest_match(const std::vector<std::string>& tokens, const KnowledgeBase& kb) {
  std::vector<Match> out;
  const std::size_t n = tokens.size();
  const std::size_t max_w = kb.max_concept_words > 0
                                ? static_cast<std::size_t>(kb.max_concept_words)
                                : 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t matched = 0;
    std::string matched_key;
    for (std::size_t w = std::min(max_w, n - i); w >= 1; --w) {
      std::string key;
      for (std::size_t t = i; t < i + w; ++t) {
        if (t > i) key.push_back(' ');
        key += tokens[t];
      }
      key = normalize_surface(key);
      if (kb.concepts.find(key) != kb.concepts.end()) {
        matched = w;
        matched_key = std::move(key);
        break;
      }
    }
    if (matched > 0) {
      out.push_back(Match{std::move(matched_key), i, i + matched});
      i += matched;
    } else {
      ++i;
    }
  }
  return out;
}

Sense disambiguate(const std::vector<Sense>& senses, const std::vector<Concept>& context) {
  std::set<std::string> ctx;
  for (const Concept& c : context) ctx.insert(c.sense.wikics.begin(), c.sense.wikics.end());

  const Sense* best = nullptr;
  std::size_t best_overlap = 0;
  for (const Sense& s : senses) {
    std::size_t overlap = 0;
    for (const auto& w : s.wikics) overlap += ctx.count(w);
    if (best == nullptr) {
      best = &s;
      best_overlap = overlap;
      continue;
    }
    const bool wins =
        overlap > best_overlap ||
        (overlap == best_overlap &&
         (s.wikics.size() > best->wikics.size() ||
          (s.wikics.size() == best->wikics.size() && s.canonical_title < best->canonical_title)));
    if (wins) {
      best = &s;
      best_overlap = overlap;
    }
  }
  if (best == nullptr) throw Error("disambiguate called with no senses");
  return *best;
}

ConceptClass classify_concept(const Sense& sense, const ClassifierRules& rules) {
  std::vector<std::string> lowered;
  lowered.reserve(sense.wikics.size());
  for (const auto& w : sense.wikics) lowered.push_back(to_lower(w));

  const auto any_hit = [&](const std::vector<std::string>& terms) {
    for (const auto& term : terms)
      for (const auto& w : lowered)
        if (contains_term(w, term)) return true;
    return false;
  };
  if (any_hit(rules.person_terms)) return ConceptClass::person;
  if (any_hit(rules.location_terms)) return ConceptClass::location;
  if (any_hit(rules.other_terms)) return ConceptClass::other_proper_noun;
  return ConceptClass::unclassified;
}

std::vector<Concept> rank_within_class(std::vector<Concept> concepts) {
  std::sort(concepts.begin(), concepts.end(), more_discriminative);
  return concepts;
}

std::vector<Concept> resolve_surfaces(const std::vector<std::string>& surfaces,
                                      const KnowledgeBase& kb, const ClassifierRules& rules) {
  struct Item {
    const std::string* surface;
    const std::vector<Sense>* senses;
  };
  std::vector<Item> items;
  items.reserve(surfaces.size());
  for (const auto& surface : surfaces) {
    const auto& senses = lookup(kb, surface);
    if (!senses.empty()) items.push_back(Item{&surface, &senses});
  }

  // Unambiguous senses resolve first and become the disambiguation context.
  std::unordered_map<std::string, Concept> resolved;
  std::vector<Concept> context;
  for (const Item& item : items) {
    if (item.senses->size() == 1) {
      Concept c = make_concept(*item.surface, item.senses->front(), rules);
      context.push_back(c);
      resolved.emplace(*item.surface, std::move(c));
    }
  }
  for (const Item& item : items) {
    if (item.senses->size() > 1)
      resolved.emplace(*item.surface,
                       make_concept(*item.surface, disambiguate(*item.senses, context), rules));
  }

  std::vector<Concept> out;
  out.reserve(items.size());
  for (const Item& item : items) out.push_back(resolved.at(*item.surface));
  return out;
}

std::vector<Concept> extract_concepts(const Record& record, const KnowledgeBase& kb,
                                      const ClassifierRules& rules) {
  std::vector<const std::string*> fields;
  fields.push_back(&record.title);
  for (const auto& tag : record.tags) fields.push_back(&tag);

  auto concepts = resolve_surfaces(matched_surfaces(fields, kb), kb, rules);
  std::sort(concepts.begin(), concepts.end(), [](const Concept& a, const Concept& b) {
    const int ca = class_order(a.cls);
    const int cb = class_order(b.cls);
    if (ca != cb) return ca < cb;
    return more_discriminative(a, b);
  });
  return concepts;
}

std::vector<Record> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open records file: " + path);

  std::vector<Record> records;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto fields = split(line, '\t');
    // The tags column may be omitted entirely for tagless records.
    if (fields.size() != 4 && fields.size() != 3)
      throw MalformedLineError(path, line_no, "expected id<TAB>label<TAB>title<TAB>tags");
    Record r;
    r.id = fields[0];
    if (r.id.empty()) throw MalformedLineError(path, line_no, "empty record id");
    if (!ids.insert(r.id).second)
      throw MalformedLineError(path, line_no, "duplicate record id: " + r.id);
    if (fields[1].empty())
      throw MalformedLineError(path, line_no, "empty label field; use '-' for unlabeled");
    if (fields[1] != "-") r.label = fields[1];
    r.title = fields[2];
    if (fields.size() == 4)
      for (auto& tag : split(fields[3], '|'))
        if (!tag.empty()) r.tags.push_back(std::move(tag));
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace wikivote
