#pragma once

#include <iosfwd>
#include <string>

namespace wikivote {

// rc scores raw record concepts only; ec unions in concepts harvested from
// the record's accepted search results.
enum class Mode { rc, ec };

struct PipelineConfig {
  std::string kb_path;
  std::string rules_path;    // empty: built-in defaults
  std::string records_path;
  std::string backend_spec;  // required by collect and by ec mode
  std::string model_path;
  std::string out_path;
  Mode mode = Mode::rc;
  int top_k = 20;        // results requested per query
  int default_cdors = 5; // fallback prefix when no result qualifies
  double alpha = 0.01;   // voting model smoothing
};

// Enforces top_k >= default_cdors >= 1 and alpha > 0.
void validate(const PipelineConfig& cfg);

// Each command loads its inputs fully before writing, and writes atomically,
// so a failing run produces no partial output. Reruns on unchanged inputs
// are byte-identical.
void run_build_kb(const PipelineConfig& cfg);
void run_extract(const PipelineConfig& cfg);
void run_collect(const PipelineConfig& cfg);  // also writes <out>.skipped
void run_train(const PipelineConfig& cfg);
void run_predict(const PipelineConfig& cfg);
void run_eval(const PipelineConfig& cfg, std::ostream& report);

}  // namespace wikivote
