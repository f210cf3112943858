#pragma once

#include <string>
#include <vector>

#include "jperf/core.hpp"

namespace testing {

inline jperf::Instance make_instance(const std::vector<std::vector<double>>& rows,
                                     std::vector<double> a1 = {}, std::vector<double> a2 = {}) {
  const std::size_t n = rows.size();
  if (a1.empty()) a1.assign(n, 100.0);
  if (a2.empty()) a2 = a1;
  std::vector<jperf::Journal> journals;
  for (std::size_t i = 0; i < n; ++i) {
    journals.push_back({"j" + std::to_string(i + 1), "", a1[i], a2[i]});
  }
  return jperf::validate(jperf::JournalSet(std::move(journals)),
                         jperf::CitationMatrix::from_rows(rows));
}

}  // namespace testing
