#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wikivote {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A line of an input file violates its format.
class MalformedLineError : public Error {
 public:
  MalformedLineError(const std::string& path, std::size_t line_no, const std::string& reason)
      : Error(path + ":" + std::to_string(line_no) + ": " + reason), line_no_(line_no) {}

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

// The dictionary file contained no concept entries.
class EmptyKbError : public Error {
 public:
  explicit EmptyKbError(const std::string& path)
      : Error("no concepts loaded from " + path) {}
};

// A record has no person/location/other concept to build a query from.
class NoClassifiedConceptsError : public Error {
 public:
  explicit NoClassifiedConceptsError(const std::string& record_id = "")
      : Error(record_id.empty() ? std::string("no classified concepts")
                                : "no classified concepts for record " + record_id) {}
};

// The search backend returned zero results.
class EmptyResultsError : public Error {
 public:
  explicit EmptyResultsError(const std::string& record_id = "")
      : Error(record_id.empty() ? std::string("empty search results")
                                : "empty search results for record " + record_id) {}
};

// Training was requested on an empty corpus.
class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("training corpus is empty") {}
};

// Evaluation had no gold labels to rank against.
class NoGoldLabelsError : public Error {
 public:
  NoGoldLabelsError() : Error("no gold labels to evaluate against") {}
};

}  // namespace wikivote
