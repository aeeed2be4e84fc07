// Acceptance runner: one line per criterion. Exit status 0 iff every failing
// criterion is listed with --known-fail and failed only through documented
// deviations; the FAIL line is still printed for those.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  dilink::acceptance::Config config;
  std::vector<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-fail" && i + 1 < argc) {
      known.push_back(std::atoi(argv[++i]));
    } else {
      config.cli_path = arg;
    }
  }
  int unexpected = 0;
  dilink::acceptance::run_all(config, [&](const dilink::acceptance::CriterionResult& r) {
    std::cout << dilink::acceptance::format_line(r) << std::endl;
    const bool listed = std::find(known.begin(), known.end(), r.id) != known.end();
    if (!r.passed && !(listed && r.deviation_only)) ++unexpected;
    if (r.passed && listed) std::cout << "note: criterion " << r.id << " is listed as known-fail but passed" << std::endl;
  });
  if (!known.empty()) {
    std::cout << "known deviations:";
    for (int id : known) std::cout << " " << id;
    std::cout << std::endl;
  }
  return unexpected == 0 ? 0 : 1;
}
