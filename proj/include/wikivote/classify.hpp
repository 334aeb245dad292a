#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wikivote/extract.hpp"

namespace wikivote {

// Multiset of enriched category tokens for one record.
struct EWikiCBag {
  std::map<std::string, int> counts;
  int total = 0;  // sum of multiplicities
};

// The lowercased full category string plus each of its lowercased
// non-stopword words, duplicates removed, order preserved.
std::vector<std::string> expand_ewikic(std::string_view wikic);

// Expands every category of every concept. A token's multiplicity counts how
// many (concept, category) expansions produced it.
EWikiCBag bag_of_record(const std::vector<Concept>& concepts);

// Voting rows for one token, parallel to the model's category list.
struct TokenVotes {
  std::vector<double> proximity;   // summed per-record-normalized frequency
  std::vector<double> normalized;  // smoothed proximity row, sums to 1
  std::vector<double> votes;       // entropy-damped proximity share
  double entropy = 0.0;            // of the smoothed row, in bits
};

struct VotingModel {
  std::vector<std::string> categories;
  std::map<std::string, TokenVotes> tokens;
  double smoothing_alpha = 0.01;

  int category_index(std::string_view name) const;  // -1 when absent
};

// A record reduced to its label and extracted concepts.
struct LabeledConcepts {
  std::string record_id;
  std::string label;
  std::vector<Concept> concepts;
};

// Builds the voting tables. Each record contributes its bag, normalized by
// the bag total, to its label's proximity column. The normalized row adds
// Laplace smoothing alpha so entropy is finite and positive; votes divide
// the unsmoothed proximity share by that entropy. Records are accumulated in
// record-id order, so any permutation of the corpus trains the identical
// model. Throws EmptyCorpusError on an empty corpus; requires two or more
// categories (a single category makes every entropy zero and votes
// undefined).
VotingModel train(std::vector<LabeledConcepts> corpus,
                  const std::vector<std::string>& categories, double alpha = 0.01);

// Per-category sum of multiplicity-weighted votes. Tokens outside the model
// vocabulary contribute nothing.
std::vector<double> score(const EWikiCBag& bag, const VotingModel& model);

struct Prediction {
  std::string record_id;
  std::vector<double> scores;            // per category
  std::optional<std::string> predicted;  // empty: no vocabulary overlap
};

// Argmax over scores, ties to the lowest category index. `predicted` is left
// empty when every score is exactly zero, rather than defaulting silently.
Prediction predict(std::string record_id, const std::vector<Concept>& concepts,
                   const VotingModel& model);

struct CategoryAp {
  std::string category;
  int positives = 0;
  double ap = 0.0;  // meaningful when positives > 0
};

struct EvalResult {
  std::vector<CategoryAp> per_category;
  double map = 0.0;  // mean over categories with at least one gold member
};

// Ranks records per category by that category's score, descending, ties by
// ascending record id, and averages precision at each gold member. golds is
// parallel to predictions. Categories with no gold member are skipped by the
// mean; NoGoldLabelsError when nothing can be scored.
EvalResult evaluate_map(const std::vector<Prediction>& predictions,
                        const std::vector<std::string>& golds,
                        const std::vector<std::string>& categories);

// Versioned tab-separated text format. Values are written in shortest
// round-trip decimal form, so a reload reproduces every stored double
// bit-exactly.
void save_model(const VotingModel& model, std::ostream& out);
VotingModel load_model(const std::string& path);

}  // namespace wikivote
