#include "wikivote/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wikivote/cdor.hpp"
#include "wikivote/classify.hpp"
#include "wikivote/errors.hpp"
#include "wikivote/extract.hpp"
#include "wikivote/io.hpp"
#include "wikivote/kb.hpp"
#include "wikivote/log.hpp"
#include "wikivote/text.hpp"

namespace wikivote {

namespace {

void require(const std::string& value, const char* flag, const char* command) {
  if (value.empty())
    throw Error(std::string(flag) + " is required for " + command);
}

ClassifierRules load_rules_or_defaults(const PipelineConfig& cfg) {
  if (cfg.rules_path.empty()) return ClassifierRules::defaults();
  return load_rules(cfg.rules_path);
}

std::unique_ptr<SearchBackend> backend_for(const PipelineConfig& cfg, const char* command) {
  require(cfg.backend_spec, "--backend", command);
  return make_backend(cfg.backend_spec);
}

// Reproduces extraction order over a merged concept list: class blocks in
// person, location, other, unclassified order, ranked within each block.
std::vector<Concept> order_by_class(const std::vector<Concept>& concepts) {
  std::vector<Concept> out;
  out.reserve(concepts.size());
  for (const ConceptClass cls : {ConceptClass::person, ConceptClass::location,
                                 ConceptClass::other_proper_noun, ConceptClass::unclassified}) {
    std::vector<Concept> block;
    for (const Concept& c : concepts)
      if (c.cls == cls) block.push_back(c);
    for (Concept& c : rank_within_class(std::move(block))) out.push_back(std::move(c));
  }
  return out;
}

// rc: the record's own concepts. ec: those plus concepts harvested from the
// record's accepted search results; records the backend cannot enrich
// (no classified concept to query with, or an empty result list) keep their
// raw concepts.
std::vector<Concept> concepts_for(const Record& record, const KnowledgeBase& kb,
                                  const ClassifierRules& rules, const PipelineConfig& cfg,
                                  SearchBackend* backend) {
  std::vector<Concept> concepts = extract_concepts(record, kb, rules);
  if (cfg.mode == Mode::rc) return concepts;

  try {
    const Query query = construct_query(concepts);
    const auto results = backend->search_for(record.id, query.terms, cfg.top_k);
    const CdorSet cdors = select_cdors(record.id, results, query, cfg.default_cdors);

    std::unordered_set<std::string> seen;
    for (const Concept& c : concepts) seen.insert(c.surface);
    for (Concept& c : harvest_enrichment(cdors, kb, rules))
      if (seen.insert(c.surface).second) concepts.push_back(std::move(c));
    return order_by_class(concepts);
  } catch (const NoClassifiedConceptsError&) {
    log_debug("record " + record.id + " has no classified concept; not enriched");
  } catch (const EmptyResultsError&) {
    log_debug("record " + record.id + " got no search results; not enriched");
  }
  return concepts;
}

std::vector<std::string> sorted_unique_labels(const std::vector<Record>& records,
                                              const char* command) {
  std::set<std::string> labels;
  for (const Record& r : records) {
    if (!r.label) throw Error("record " + r.id + " is unlabeled; " + command + " needs labels");
    labels.insert(*r.label);
  }
  return {labels.begin(), labels.end()};
}

void check_labels_known(const std::vector<Record>& records, const VotingModel& model) {
  for (const Record& r : records)
    if (r.label && model.category_index(*r.label) < 0)
      throw Error("record " + r.id + " is labeled '" + *r.label +
                  "', which the model was not trained on");
}

}  // namespace

void validate(const PipelineConfig& cfg) {
  if (cfg.default_cdors < 1) throw Error("--default-cdors must be at least 1");
  if (cfg.top_k < cfg.default_cdors) throw Error("--top-k must be at least --default-cdors");
  if (!(cfg.alpha > 0.0)) throw Error("--alpha must be positive");
}

void run_build_kb(const PipelineConfig& cfg) {
  validate(cfg);
  require(cfg.kb_path, "--kb", "build-kb");
  require(cfg.out_path, "--out", "build-kb");

  const KnowledgeBase kb = load_kb(cfg.kb_path);
  log_info("loaded " + std::to_string(kb.concepts.size()) + " concept surfaces");
  write_file_atomic(cfg.out_path, [&](std::ostream& out) { save_kb(kb, out); });
}

void run_extract(const PipelineConfig& cfg) {
  validate(cfg);
  require(cfg.kb_path, "--kb", "extract");
  require(cfg.records_path, "--records", "extract");
  require(cfg.out_path, "--out", "extract");

  const KnowledgeBase kb = load_kb(cfg.kb_path);
  const ClassifierRules rules = load_rules_or_defaults(cfg);
  const std::vector<Record> records = load_records(cfg.records_path);
  std::unique_ptr<SearchBackend> backend;
  if (cfg.mode == Mode::ec) backend = backend_for(cfg, "extract --mode ec");

  write_file_atomic(cfg.out_path, [&](std::ostream& out) {
    for (const Record& record : records) {
      out << record.id;
      for (const Concept& c : concepts_for(record, kb, rules, cfg, backend.get()))
        out << '\t' << to_string(c.cls) << ':' << c.surface;
      out << '\n';
    }
  });
}

void run_collect(const PipelineConfig& cfg) {
  validate(cfg);
  require(cfg.kb_path, "--kb", "collect");
  require(cfg.records_path, "--records", "collect");
  require(cfg.out_path, "--out", "collect");

  const KnowledgeBase kb = load_kb(cfg.kb_path);
  const ClassifierRules rules = load_rules_or_defaults(cfg);
  const std::vector<Record> records = load_records(cfg.records_path);
  const auto backend = backend_for(cfg, "collect");

  std::vector<CdorSet> collected;
  std::vector<std::string> skipped;
  for (const Record& record : records) {
    try {
      const Query query = construct_query(extract_concepts(record, kb, rules));
      const auto results = backend->search_for(record.id, query.terms, cfg.top_k);
      collected.push_back(select_cdors(record.id, results, query, cfg.default_cdors));
    } catch (const NoClassifiedConceptsError&) {
      log_warn("record " + record.id + " has no classified concept; skipped");
      skipped.push_back(record.id);
    } catch (const EmptyResultsError&) {
      log_warn("record " + record.id + " got no search results; skipped");
      skipped.push_back(record.id);
    }
  }

  write_file_atomic(cfg.out_path, [&](std::ostream& out) {
    for (const CdorSet& cdors : collected) append_cdor_cache(out, cdors);
  });
  write_file_atomic(cfg.out_path + ".skipped", [&](std::ostream& out) {
    for (const std::string& id : skipped) out << id << '\n';
  });
  log_info("collected results for " + std::to_string(collected.size()) + " records, skipped " +
           std::to_string(skipped.size()));
}

void run_train(const PipelineConfig& cfg) {
  validate(cfg);
  require(cfg.kb_path, "--kb", "train");
  require(cfg.records_path, "--records", "train");
  require(cfg.model_path, "--model", "train");

  const KnowledgeBase kb = load_kb(cfg.kb_path);
  const ClassifierRules rules = load_rules_or_defaults(cfg);
  const std::vector<Record> records = load_records(cfg.records_path);
  std::unique_ptr<SearchBackend> backend;
  if (cfg.mode == Mode::ec) backend = backend_for(cfg, "train --mode ec");

  const std::vector<std::string> categories = sorted_unique_labels(records, "train");
  std::vector<LabeledConcepts> corpus;
  corpus.reserve(records.size());
  for (const Record& record : records)
    corpus.push_back({record.id, *record.label, concepts_for(record, kb, rules, cfg, backend.get())});

  const VotingModel model = train(std::move(corpus), categories, cfg.alpha);
  log_info("trained on " + std::to_string(records.size()) + " records, " +
           std::to_string(model.tokens.size()) + " vocabulary tokens");
  write_file_atomic(cfg.model_path, [&](std::ostream& out) { save_model(model, out); });
}

namespace {

std::vector<Prediction> predict_records(const PipelineConfig& cfg, const VotingModel& model,
                                        const std::vector<Record>& records, const char* command) {
  const KnowledgeBase kb = load_kb(cfg.kb_path);
  const ClassifierRules rules = load_rules_or_defaults(cfg);
  std::unique_ptr<SearchBackend> backend;
  if (cfg.mode == Mode::ec)
    backend = backend_for(cfg, (std::string(command) + " --mode ec").c_str());

  std::vector<Prediction> predictions;
  predictions.reserve(records.size());
  for (const Record& record : records)
    predictions.push_back(
        predict(record.id, concepts_for(record, kb, rules, cfg, backend.get()), model));
  return predictions;
}

}  // namespace

void run_predict(const PipelineConfig& cfg) {
  validate(cfg);
  require(cfg.kb_path, "--kb", "predict");
  require(cfg.records_path, "--records", "predict");
  require(cfg.model_path, "--model", "predict");
  require(cfg.out_path, "--out", "predict");

  const VotingModel model = load_model(cfg.model_path);
  const std::vector<Record> records = load_records(cfg.records_path);
  check_labels_known(records, model);
  const auto predictions = predict_records(cfg, model, records, "predict");

  write_file_atomic(cfg.out_path, [&](std::ostream& out) {
    for (const Prediction& p : predictions) {
      out << p.record_id << '\t' << (p.predicted ? *p.predicted : "-") << '\t';
      for (std::size_t i = 0; i < p.scores.size(); ++i) {
        if (i > 0) out << ',';
        out << double_to_string(p.scores[i]);
      }
      out << '\n';
    }
  });
}

void run_eval(const PipelineConfig& cfg, std::ostream& report) {
  validate(cfg);
  require(cfg.kb_path, "--kb", "eval");
  require(cfg.records_path, "--records", "eval");
  require(cfg.model_path, "--model", "eval");

  const VotingModel model = load_model(cfg.model_path);
  const std::vector<Record> records = load_records(cfg.records_path);
  std::vector<std::string> golds;
  golds.reserve(records.size());
  for (const Record& r : records) {
    if (!r.label) throw Error("record " + r.id + " is unlabeled; eval needs gold labels");
    golds.push_back(*r.label);
  }
  check_labels_known(records, model);

  const auto predictions = predict_records(cfg, model, records, "eval");
  const EvalResult result = evaluate_map(predictions, golds, model.categories);

  std::ostringstream text;
  text << std::fixed << std::setprecision(6);
  for (const CategoryAp& cap : result.per_category) {
    text << "AP\t" << cap.category << '\t';
    if (cap.positives > 0)
      text << cap.ap;
    else
      text << '-';
    text << '\n';
  }
  text << "MAP\t" << result.map << '\n';

  report << text.str();
  if (!cfg.out_path.empty())
    write_file_atomic(cfg.out_path, [&](std::ostream& out) { out << text.str(); });
}

}  // namespace wikivote
