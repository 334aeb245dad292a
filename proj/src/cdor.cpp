#include "wikivote/cdor.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <unordered_set>
#include <utility>

#include "wikivote/errors.hpp"
#include "wikivote/text.hpp"

namespace wikivote {

namespace {

// Cache fields are tab-separated lines; strip characters that would break
// the framing.
std::string sanitize_field(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out;
}

int parse_rank(const std::string& path, std::size_t line_no, std::string_view field) {
  int value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size() || value < 1)
    throw MalformedLineError(path, line_no, "bad rank field");
  return value;
}

}  // namespace

std::vector<SearchResult> SearchBackend::search_for(const std::string&,
                                                    const std::vector<std::string>& terms,
                                                    int k) {
  return search(terms, k);
}

Query construct_query(const std::vector<Concept>& concepts) {
  std::vector<const Concept*> persons, locations, others;
  for (const Concept& c : concepts) {
    switch (c.cls) {
      case ConceptClass::person: persons.push_back(&c); break;
      case ConceptClass::location: locations.push_back(&c); break;
      case ConceptClass::other_proper_noun: others.push_back(&c); break;
      case ConceptClass::unclassified: break;
    }
  }
  if (persons.empty() && locations.empty() && others.empty())
    throw NoClassifiedConceptsError();

  Query q;
  const auto add = [&q](const Concept* c) {
    q.terms.push_back(c->surface);
    q.source_classes.push_back(c->cls);
  };
  if (!persons.empty()) add(persons.front());
  if (!locations.empty()) add(locations.front());
  if (!others.empty()) add(others.front());
  for (std::size_t i = 1; q.terms.size() < 3 && i < others.size(); ++i) add(others[i]);
  for (std::size_t i = 1; q.terms.size() < 3 && i < persons.size(); ++i) add(persons[i]);
  for (std::size_t i = 1; q.terms.size() < 3 && i < locations.size(); ++i) add(locations[i]);
  return q;
}

CdorSet select_cdors(std::string record_id, const std::vector<SearchResult>& results,
                     const Query& query, int default_cdors) {
  if (results.empty()) throw EmptyResultsError(record_id);
  for (std::size_t i = 0; i < results.size(); ++i)
    if (results[i].rank != static_cast<int>(i) + 1)
      throw Error("search results must be ranked 1..m without gaps");

  std::vector<std::string> terms;
  terms.reserve(query.terms.size());
  for (const auto& t : query.terms) terms.push_back(to_lower(t));

  int cutoff = 0;
  for (std::size_t i = results.size(); i-- > 0;) {
    const std::string text = to_lower(results[i].title + " " + results[i].snippet);
    if (contains_all_terms(text, terms)) {
      cutoff = results[i].rank;
      break;
    }
  }
  const int m = static_cast<int>(results.size());
  if (cutoff < default_cdors) cutoff = std::min(default_cdors, m);

  CdorSet set;
  set.record_id = std::move(record_id);
  set.results.assign(results.begin(), results.begin() + cutoff);
  set.cutoff_rank = cutoff;
  return set;
}

std::vector<Concept> harvest_enrichment(const CdorSet& cdors, const KnowledgeBase& kb,
                                        const ClassifierRules& rules) {
  std::vector<std::string> surfaces;
  std::unordered_set<std::string> seen;
  const auto scan = [&](const std::string& text) {
    const auto tokens = tokenize(text);
    for (auto& m : longest_match(tokens, kb))
      if (seen.insert(m.surface).second) surfaces.push_back(std::move(m.surface));
  };
  for (const SearchResult& r : cdors.results) {
    scan(r.title);
    scan(r.snippet);
  }
  return resolve_surfaces(surfaces, kb, rules);
}

OfflineBackend::OfflineBackend(const std::string& corpus_path) {
  std::ifstream in(corpus_path);
  if (!in) throw Error("cannot open corpus file: " + corpus_path);

  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw MalformedLineError(corpus_path, line_no, "expected doc_id<TAB>title<TAB>body");
    if (fields[0].empty()) throw MalformedLineError(corpus_path, line_no, "empty doc id");
    if (!ids.insert(fields[0]).second)
      throw MalformedLineError(corpus_path, line_no, "duplicate doc id: " + fields[0]);

    Doc d;
    d.id = fields[0];
    d.title = fields[1];
    d.body = fields[2];
    d.searchable = to_lower(d.title + " " + d.body);
    docs_.push_back(std::move(d));
  }
}

std::vector<SearchResult> OfflineBackend::search(const std::vector<std::string>& terms, int k) {
  if (k < 1) return {};

  std::vector<std::string> lowered;
  lowered.reserve(terms.size());
  for (const auto& t : terms) {
    std::string lowered_term = to_lower(t);
    if (!lowered_term.empty()) lowered.push_back(std::move(lowered_term));
  }
  if (lowered.empty()) return {};

  struct Scored {
    const Doc* doc;
    std::size_t distinct;
    std::size_t tf;
  };
  std::vector<Scored> scored;
  for (const Doc& d : docs_) {
    std::size_t distinct = 0;
    std::size_t tf = 0;
    for (const auto& t : lowered) {
      const std::size_t c = count_term(d.searchable, t);
      if (c > 0) {
        ++distinct;
        tf += c;
      }
    }
    if (distinct > 0) scored.push_back(Scored{&d, distinct, tf});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.distinct != b.distinct) return a.distinct > b.distinct;
    if (a.tf != b.tf) return a.tf > b.tf;
    return a.doc->id < b.doc->id;
  });
  if (scored.size() > static_cast<std::size_t>(k)) scored.resize(k);

  std::vector<SearchResult> out;
  out.reserve(scored.size());
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const Doc& d = *scored[i].doc;

    // Snippet: +/-10 whitespace chunks around the first term hit in the body.
    const std::string body_lower = to_lower(d.body);
    std::size_t first = std::string::npos;
    for (const auto& t : lowered) first = std::min(first, find_term(body_lower, t));

    struct Chunk {
      std::size_t begin;
      std::size_t end;
    };
    std::vector<Chunk> chunks;
    for (std::size_t p = 0; p < d.body.size();) {
      while (p < d.body.size() && std::isspace(static_cast<unsigned char>(d.body[p]))) ++p;
      std::size_t q = p;
      while (q < d.body.size() && !std::isspace(static_cast<unsigned char>(d.body[q]))) ++q;
      if (q > p) chunks.push_back(Chunk{p, q});
      p = q;
    }
    std::size_t center = 0;
    if (first != std::string::npos) {
      for (std::size_t c = 0; c < chunks.size(); ++c)
        if (chunks[c].begin <= first && first < chunks[c].end) {
          center = c;
          break;
        }
    }
    const std::size_t from = center >= 10 ? center - 10 : 0;
    const std::size_t to = std::min(chunks.size(), center + 11);
    std::string snippet;
    for (std::size_t c = from; c < to; ++c) {
      if (!snippet.empty()) snippet.push_back(' ');
      snippet.append(d.body, chunks[c].begin, chunks[c].end - chunks[c].begin);
    }

    out.push_back(SearchResult{static_cast<int>(i) + 1, d.title, std::move(snippet), ""});
  }
  return out;
}

FixtureBackend::FixtureBackend(const std::string& cache_path)
    : by_record_(load_cdor_cache(cache_path)) {}

std::vector<SearchResult> FixtureBackend::search(const std::vector<std::string>&, int) {
  return {};
}

std::vector<SearchResult> FixtureBackend::search_for(const std::string& record_id,
                                                     const std::vector<std::string>&, int k) {
  const auto it = by_record_.find(record_id);
  if (it == by_record_.end() || k < 1) return {};
  const std::size_t take = std::min<std::size_t>(k, it->second.size());
  return std::vector<SearchResult>(it->second.begin(), it->second.begin() + take);
}

std::unique_ptr<SearchBackend> make_backend(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("backend spec must look like offline:<corpus> or fixture:<cache>: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "offline") return std::make_unique<OfflineBackend>(arg);
  if (kind == "fixture") return std::make_unique<FixtureBackend>(arg);
  if (kind == "live")
    throw Error("live search backend is not built in; use offline:<corpus> or fixture:<cache>");
  throw Error("unknown backend kind: " + kind);
}

void append_cdor_cache(std::ostream& out, const CdorSet& cdors) {
  for (const SearchResult& r : cdors.results)
    out << sanitize_field(cdors.record_id) << '\t' << r.rank << '\t' << sanitize_field(r.title)
        << '\t' << sanitize_field(r.snippet) << '\t' << sanitize_field(r.url) << '\n';
}

std::map<std::string, std::vector<SearchResult>> load_cdor_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open result cache: " + path);

  std::map<std::string, std::vector<SearchResult>> by_record;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto fields = split(line, '\t');
    if (fields.size() != 5)
      throw MalformedLineError(path, line_no,
                               "expected record_id<TAB>rank<TAB>title<TAB>snippet<TAB>url");
    if (fields[0].empty()) throw MalformedLineError(path, line_no, "empty record id");
    SearchResult r;
    r.rank = parse_rank(path, line_no, fields[1]);
    r.title = fields[2];
    r.snippet = fields[3];
    r.url = fields[4];
    by_record[fields[0]].push_back(std::move(r));
  }
  for (auto& [record_id, results] : by_record) {
    std::sort(results.begin(), results.end(),
              [](const SearchResult& a, const SearchResult& b) { return a.rank < b.rank; });
    for (std::size_t i = 0; i < results.size(); ++i)
      if (results[i].rank != static_cast<int>(i) + 1)
        throw Error("cached results for record " + record_id + " are not ranked 1..m: " + path);
  }
  return by_record;
}

}  // namespace wikivote
