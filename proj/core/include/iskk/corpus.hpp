#pragma once

// The built-in acceptance corpus: eight criteria, each a report with its
// wall time. Time budgets are part of the checks.

#include "iskk/report.hpp"

#include <string>
#include <vector>

namespace iskk {

  struct Criterion {
    int         id = 0;
    std::string title;
    Report      report{""};
    double      seconds = 0;

    bool passed() const {
      return report.passed();
    }
  };

  inline constexpr int criterion_count = 8;

  // Throws MalformedInput for an id outside 1..8. Criterion 8 reruns 1..7.
  Criterion run_criterion(int id, unsigned seed = 0);

  // Criteria 1..8 in order; criterion 8 reuses the timings of this run.
  std::vector<Criterion> run_corpus(unsigned seed = 0);

  // Builder specs of the semigroups swept by the corpus.
  std::vector<std::string> const& corpus_semigroups();

}  // namespace iskk
