#ifndef PITLAB_REPORT_HPP
#define PITLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pitlab/pit.hpp"

namespace pitlab {

// Line-oriented key=value report. Identical inputs yield byte-identical
// output; timing is the caller's business and is appended last when wanted.
class RunReport {
 public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, long value) { add(std::move(key), std::to_string(value)); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

uint64_t fnv1a64(const std::string& bytes);
std::string hex64(uint64_t v);

const char* status_name(VerdictStatus s);

// Shared rendering for verdicts: verdict=, certificate=, payload lines,
// info lines, then one line per diagnostic.
void render_verdict(RunReport& rep, const Verdict& v);

// Exit-code contract: 0 ZERO, 1 NONZERO, 2 usage/parse, 3 resource.
int verdict_exit_code(VerdictStatus s);

}  // namespace pitlab

#endif  // PITLAB_REPORT_HPP
