#pragma once

#include "json.hpp"

#include "exactdual/extended.hpp"
#include "exactdual/matrix.hpp"
#include "exactdual/vcsp.hpp"

namespace exactdual::cli {

using json = nlohmann::ordered_json;

// Exact values leave the program as strings so no precision is lost.
json to_json(const Rat& r);
json to_json(const Ext& e);
json to_json(const NNRat& r);
json to_json(std::span<const Rat> v);
json to_json(std::span<const Ext> v);
json to_json(std::span<const NNRat> v);
json to_json(const QMat& A);
json to_json(const EMat& A);
json to_json(const Optimum& o);
json to_json(const BlpLegend& legend);

}  // namespace exactdual::cli
