#pragma once

#if __has_include("json.hpp")
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

namespace hclkit {
using json = nlohmann::json;
}
