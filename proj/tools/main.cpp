#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wikivote/pipeline.hpp"

namespace {

struct Cli {
  wikivote::PipelineConfig cfg;
  std::string mode = "rc";
};

void add_common(CLI::App& cmd, Cli& cli) {
  cmd.add_option("--kb", cli.cfg.kb_path, "Concept dictionary file");
  cmd.add_option("--rules", cli.cfg.rules_path,
                 "Person/location/other term lists (default: built-in)");
  cmd.add_option("--records", cli.cfg.records_path, "Record corpus file");
  cmd.add_option("--backend", cli.cfg.backend_spec,
                 "Search backend, offline:<docs-file> or fixture:<cache-file>");
  cmd.add_option("--model", cli.cfg.model_path, "Voting model file");
  cmd.add_option("--out", cli.cfg.out_path, "Output file");
  cmd.add_option("--mode", cli.mode, "Concept source: rc (record only) or ec (enriched)")
      ->check(CLI::IsMember({"rc", "ec"}));
  cmd.add_option("--top-k", cli.cfg.top_k, "Search results requested per query")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--default-cdors", cli.cfg.default_cdors,
                 "Accepted result count when no result repeats the full query")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--alpha", cli.cfg.alpha, "Voting model smoothing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept extraction, open-resource enrichment, and voting categorization"};
  app.require_subcommand(1);

  Cli cli;
  CLI::App* build_kb = app.add_subcommand("build-kb", "Normalize a concept dictionary");
  CLI::App* extract = app.add_subcommand("extract", "List each record's concepts");
  CLI::App* collect = app.add_subcommand("collect", "Record accepted search results per record");
  CLI::App* train = app.add_subcommand("train", "Fit the voting model on labeled records");
  CLI::App* predict = app.add_subcommand("predict", "Score and label records with a model");
  CLI::App* eval = app.add_subcommand("eval", "Report per-category AP and MAP");
  for (CLI::App* cmd : {build_kb, extract, collect, train, predict, eval}) add_common(*cmd, cli);

  CLI11_PARSE(app, argc, argv);
  cli.cfg.mode = cli.mode == "ec" ? wikivote::Mode::ec : wikivote::Mode::rc;

  try {
    if (build_kb->parsed()) wikivote::run_build_kb(cli.cfg);
    if (extract->parsed()) wikivote::run_extract(cli.cfg);
    if (collect->parsed()) wikivote::run_collect(cli.cfg);
    if (train->parsed()) wikivote::run_train(cli.cfg);
    if (predict->parsed()) wikivote::run_predict(cli.cfg);
    if (eval->parsed()) wikivote::run_eval(cli.cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
