#pragma once

// Vendored nlohmann/json. ordered_json keeps object keys in insertion order
// so serialized reports read naturally and stay byte-stable across runs.
#include <json.hpp>

namespace lrc {
using Json = nlohmann::ordered_json;
}
