#pragma once
#include <functional>
#include <string>
#include <vector>

#include "nekrasov/json_io.hpp"

namespace nekrasov {

struct SelftestItem {
  std::string name;
  Json inputs;
  Json value, target;
  bool pass = false;
};

// Names of the battery entries, in report order.
std::vector<std::string> selftest_names();
SelftestItem run_selftest_item(const std::string& name);

// Runs every entry (spread over the configured worker threads) and collects a report that does not
// depend on the thread count.
Json run_selftest(const std::vector<std::string>& only = {});

}  // namespace nekrasov
