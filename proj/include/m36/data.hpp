#pragma once

// Data files compiled into the library.

#include <string_view>

namespace m36::data {

/// data/table1.csv: product,value.
std::string_view table1_csv();
/// data/canonical_baseline.json.
std::string_view canonical_baseline_json();

}  // namespace m36::data
