#pragma once

#include "hclkit/analysis.hpp"
#include "hclkit/color.hpp"
#include "hclkit/cvd.hpp"
#include "hclkit/error.hpp"
#include "hclkit/hex.hpp"
#include "hclkit/manip.hpp"
#include "hclkit/palettes.hpp"
#include "hclkit/registry.hpp"
#include "hclkit/service.hpp"
#include "hclkit/svg.hpp"
