#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mlms::acceptance {

struct Result {
  std::string id;      // AC1 .. AC12
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

struct Options {
  std::string fixtures_dir;
};

// Criteria in order AC1..AC12; `on_result` is called as each one finishes.
std::vector<Result> run_all(const Options& options, const std::function<void(const Result&)>& on_result = {});

Result truth_tables();
Result worked_examples(const Options& options);
Result interpretation_values();
Result lattice_laws();
Result logic_profiles();
Result lemma_suite();
Result axiom_k();
Result axioms_t_and_4();
Result necessitation_failure(const Options& options);
Result duality();
Result euclidean_suite(const Options& options);
Result cross_oracle();

std::string format_line(const Result& r);

}  // namespace mlms::acceptance
