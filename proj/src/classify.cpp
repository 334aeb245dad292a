#include "wikivote/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>
#include <utility>

#include "wikivote/errors.hpp"
#include "wikivote/log.hpp"
#include "wikivote/text.hpp"

namespace wikivote {

namespace {

bool is_stopword(std::string_view w) {
  static constexpr std::string_view kStopwords[] = {"in", "of", "the", "by", "from", "to",
                                                    "at", "on", "for", "and", "a",  "an"};
  for (const auto s : kStopwords)
    if (w == s) return true;
  return false;
}

double parse_double(const std::string& path, std::size_t line_no, std::string_view field) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw MalformedLineError(path, line_no, "bad numeric field");
  return value;
}

std::size_t parse_index(const std::string& path, std::size_t line_no, std::string_view field,
                        std::size_t n) {
  std::size_t value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size() || value >= n)
    throw MalformedLineError(path, line_no, "bad category index");
  return value;
}

}  // namespace

std::vector<std::string> expand_ewikic(std::string_view wikic) {
  std::vector<std::string> out;
  out.push_back(to_lower(wikic));
  const auto tokens = tokenize(out.front());
  for (const auto& tok : tokens) {
    if (is_stopword(tok)) continue;
    if (std::find(out.begin(), out.end(), tok) == out.end()) out.push_back(tok);
  }
  return out;
}

EWikiCBag bag_of_record(const std::vector<Concept>& concepts) {
  EWikiCBag bag;
  for (const Concept& c : concepts)
    for (const auto& wikic : c.sense.wikics)
      for (auto& token : expand_ewikic(wikic)) {
        ++bag.counts[std::move(token)];
        ++bag.total;
      }
  return bag;
}

int VotingModel::category_index(std::string_view name) const {
  for (std::size_t i = 0; i < categories.size(); ++i)
    if (categories[i] == name) return static_cast<int>(i);
  return -1;
}

VotingModel train(std::vector<LabeledConcepts> corpus, const std::vector<std::string>& categories,
                  double alpha) {
  if (corpus.empty()) throw EmptyCorpusError();
  if (categories.size() < 2) throw Error("voting needs at least two categories");
  if (!(alpha > 0.0)) throw Error("smoothing alpha must be positive");

  const std::size_t n = categories.size();
  std::unordered_map<std::string_view, std::size_t> cat_index;
  for (std::size_t i = 0; i < n; ++i)
    if (!cat_index.emplace(categories[i], i).second)
      throw Error("duplicate category: " + categories[i]);

  // Canonical accumulation order, independent of caller ordering.
  std::sort(corpus.begin(), corpus.end(),
            [](const LabeledConcepts& a, const LabeledConcepts& b) {
              return a.record_id < b.record_id;
            });

  std::vector<std::size_t> per_category(n, 0);
  std::map<std::string, std::vector<double>> proximity;
  for (const LabeledConcepts& rec : corpus) {
    const auto it = cat_index.find(rec.label);
    if (it == cat_index.end())
      throw Error("record " + rec.record_id + " has unknown label: " + rec.label);
    ++per_category[it->second];

    const EWikiCBag bag = bag_of_record(rec.concepts);
    if (bag.total == 0) continue;
    const double denom = bag.total;
    for (const auto& [token, count] : bag.counts) {
      auto& row = proximity[token];
      if (row.empty()) row.assign(n, 0.0);
      row[it->second] += count / denom;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (per_category[i] == 0) log_warn("category has no training records: " + categories[i]);

  VotingModel model;
  model.categories = categories;
  model.smoothing_alpha = alpha;
  for (auto& [token, prox] : proximity) {
    TokenVotes tv;
    tv.proximity = std::move(prox);
    double mass = 0.0;
    double smoothed_mass = 0.0;
    for (const double p : tv.proximity) {
      mass += p;
      smoothed_mass += p + alpha;
    }
    tv.normalized.resize(n);
    tv.entropy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      tv.normalized[i] = (tv.proximity[i] + alpha) / smoothed_mass;
      tv.entropy -= tv.normalized[i] * std::log2(tv.normalized[i]);
    }
    tv.votes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Every stored token has positive mass; the smoothed row is the 0/0
      // fallback only.
      const double share = mass > 0.0 ? tv.proximity[i] / mass : tv.normalized[i];
      tv.votes[i] = share / tv.entropy;
    }
    model.tokens.emplace(token, std::move(tv));
  }
  return model;
}

std::vector<double> score(const EWikiCBag& bag, const VotingModel& model) {
  std::vector<double> scores(model.categories.size(), 0.0);
  for (const auto& [token, count] : bag.counts) {
    const auto it = model.tokens.find(token);
    if (it == model.tokens.end()) continue;
    for (std::size_t i = 0; i < scores.size(); ++i)
      scores[i] += count * it->second.votes[i];
  }
  return scores;
}

Prediction predict(std::string record_id, const std::vector<Concept>& concepts,
                   const VotingModel& model) {
  Prediction p;
  p.record_id = std::move(record_id);
  p.scores = score(bag_of_record(concepts), model);

  bool any_evidence = false;
  for (const double s : p.scores)
    if (s != 0.0) any_evidence = true;
  if (any_evidence) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.scores.size(); ++i)
      if (p.scores[i] > p.scores[best]) best = i;
    p.predicted = model.categories[best];
  }
  return p;
}

EvalResult evaluate_map(const std::vector<Prediction>& predictions,
                        const std::vector<std::string>& golds,
                        const std::vector<std::string>& categories) {
  if (predictions.size() != golds.size())
    throw Error("predictions and gold labels differ in length");
  if (predictions.empty()) throw NoGoldLabelsError();
  for (const auto& g : golds)
    if (std::find(categories.begin(), categories.end(), g) == categories.end())
      throw Error("gold label not among model categories: " + g);
  for (const auto& p : predictions)
    if (p.scores.size() != categories.size())
      throw Error("prediction score width differs from category count");

  EvalResult result;
  double ap_sum = 0.0;
  std::size_t ap_count = 0;
  std::vector<std::size_t> order(predictions.size());
  for (std::size_t i = 0; i < categories.size(); ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (predictions[a].scores[i] != predictions[b].scores[i])
        return predictions[a].scores[i] > predictions[b].scores[i];
      return predictions[a].record_id < predictions[b].record_id;
    });

    CategoryAp cap;
    cap.category = categories[i];
    double hits = 0.0;
    double precision_sum = 0.0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (golds[order[pos]] == categories[i]) {
        hits += 1.0;
        precision_sum += hits / static_cast<double>(pos + 1);
      }
    }
    cap.positives = static_cast<int>(hits);
    if (cap.positives > 0) {
      cap.ap = precision_sum / hits;
      ap_sum += cap.ap;
      ++ap_count;
    }
    result.per_category.push_back(std::move(cap));
  }
  if (ap_count == 0) throw NoGoldLabelsError();
  result.map = ap_sum / static_cast<double>(ap_count);
  return result;
}

void save_model(const VotingModel& model, std::ostream& out) {
  out << "wikivote-model v1\tn=" << model.categories.size() << "\talpha="
      << double_to_string(model.smoothing_alpha) << '\n';
  out << "categories";
  for (const auto& c : model.categories) out << '\t' << c;
  out << '\n';
  for (const auto& [token, tv] : model.tokens)
    for (std::size_t i = 0; i < model.categories.size(); ++i)
      out << token << '\t' << i << '\t' << double_to_string(tv.proximity[i]) << '\t'
          << double_to_string(tv.normalized[i]) << '\t' << double_to_string(tv.entropy) << '\t'
          << double_to_string(tv.votes[i]) << '\n';
}

VotingModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);

  std::string line;
  std::size_t line_no = 0;

  // Header: wikivote-model v1<TAB>n=<count><TAB>alpha=<value>
  if (!std::getline(in, line)) throw Error("model file is empty: " + path);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto fields = split(line, '\t');
  if (fields.size() != 3 || fields[0] != "wikivote-model v1" ||
      fields[1].rfind("n=", 0) != 0 || fields[2].rfind("alpha=", 0) != 0)
    throw MalformedLineError(path, line_no, "bad model header");
  const std::size_t n = parse_index(path, line_no, std::string_view(fields[1]).substr(2),
                                    std::numeric_limits<std::size_t>::max());
  const double alpha = parse_double(path, line_no, std::string_view(fields[2]).substr(6));

  VotingModel model;
  model.smoothing_alpha = alpha;

  if (!std::getline(in, line)) throw Error("model file has no category line: " + path);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  fields = split(line, '\t');
  if (fields.size() != n + 1 || fields[0] != "categories")
    throw MalformedLineError(path, line_no, "bad category line");
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].empty()) throw MalformedLineError(path, line_no, "empty category name");
    model.categories.push_back(fields[i]);
  }

  std::map<std::string, std::set<std::size_t>> filled;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    fields = split(line, '\t');
    if (fields.size() != 6)
      throw MalformedLineError(path, line_no,
                               "expected token<TAB>index<TAB>proximity<TAB>normalized"
                               "<TAB>entropy<TAB>vote");
    if (fields[0].empty()) throw MalformedLineError(path, line_no, "empty token");
    const std::size_t idx = parse_index(path, line_no, fields[1], n);
    if (!filled[fields[0]].insert(idx).second)
      throw MalformedLineError(path, line_no, "duplicate row for token " + fields[0]);

    auto& tv = model.tokens[fields[0]];
    if (tv.proximity.empty()) {
      tv.proximity.assign(n, 0.0);
      tv.normalized.assign(n, 0.0);
      tv.votes.assign(n, 0.0);
    }
    tv.proximity[idx] = parse_double(path, line_no, fields[2]);
    tv.normalized[idx] = parse_double(path, line_no, fields[3]);
    tv.entropy = parse_double(path, line_no, fields[4]);
    tv.votes[idx] = parse_double(path, line_no, fields[5]);
  }
  for (const auto& [token, indices] : filled)
    if (indices.size() != n)
      throw Error("model file " + path + " has incomplete rows for token: " + token);
  return model;
}

}  // namespace wikivote
