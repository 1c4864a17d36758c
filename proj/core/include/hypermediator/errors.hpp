#pragma once

#include <stdexcept>
#include <string>

namespace hypermediator {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConceptId : public Error {
 public:
  using Error::Error;
};

/// The corpus directory holds no article files.
class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class UnknownConcept : public Error {
 public:
  explicit UnknownConcept(const std::string& concept_id)
      : Error("unknown concept: " + concept_id), concept_(concept_id) {}

  const std::string& concept_id() const noexcept { return concept_; }

 private:
  std::string concept_;
};

/// A record entry refers to a fragment that no longer exists in the corpus.
class StaleEntry : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a site bundle failed.
class BundleError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermediator
