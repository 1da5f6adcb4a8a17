#include <stdexcept>
#include <string>

#include "credal/chain_spec.hpp"

namespace credal::fixtures {

namespace {

// Mirrors fixtures/example1.json.
constexpr std::string_view kExample1 = R"({
  "states": ["1", "2", "3"],
  "initial": {
    "lower": [0.33, 0.25, 0.25],
    "upper": [0.38, 0.38, 0.42]
  },
  "transition": {
    "lower": [
      [0.33, 0.33, 0.0],
      [0.33, 0.17, 0.25],
      [0.0, 0.5, 0.42]
    ],
    "upper": [
      [0.67, 0.67, 0.0],
      [0.58, 0.42, 0.5],
      [0.0, 0.58, 0.5]
    ]
  }
}
)";

// Mirrors fixtures/example52.json.
constexpr std::string_view kExample52 = R"({
  "states": ["1", "2", "3"],
  "initial": {
    "lower": [0.32, 0.21, 0.28],
    "upper": [0.42, 0.38, 0.42]
  },
  "transition": {
    "lower": [
      [0.32, 0.36, 0.0],
      [0.36, 0.19, 0.24],
      [0.0, 0.5, 0.4]
    ],
    "upper": [
      [0.64, 0.68, 0.0],
      [0.57, 0.38, 0.45],
      [0.04, 0.56, 0.46]
    ]
  }
}
)";

}  // namespace

std::string_view text(std::string_view name) {
    if (name == "example1") return kExample1;
    if (name == "example52") return kExample52;
    throw std::invalid_argument("unknown fixture: " + std::string(name) +
                                " (expected example1 or example52)");
}

ChainSpec load(std::string_view name) {
    return parse_chain_spec_text(std::string(text(name)));
}

}  // namespace credal::fixtures
