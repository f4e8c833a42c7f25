#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qs/repn.hpp"

namespace qs::suite {

struct CorpusEntry {
  std::string name;
  QuiverPtr quiver;
};

// Every *.quiver file directly inside dir, sorted by file name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct Failure {
  std::string quiver;
  std::string check;
  std::uint64_t seed = 0;  // reruns the failing trial
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::vector<Failure> failures;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coxeter", "moment", "functor", "orbit", "regularize"};
  return names;
}

// suite is one of suite_names() or "all"; throws UnknownSuite.
std::vector<SuiteResult> run_suite(const std::vector<CorpusEntry>& corpus, std::string_view suite, std::uint64_t seed,
                                   std::size_t trials);

// Seed of trial t of a suite on corpus entry e.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite, std::size_t entry, std::size_t trial);

}  // namespace qs::suite
