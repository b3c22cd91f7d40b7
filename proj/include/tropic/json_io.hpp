#pragma once

#include <optional>
#include <set>
#include <string>

#include "tropic/polytope.hpp"
#include "tropic/slopes.hpp"
#include "tropic/sphdual.hpp"

namespace tropic::json_io {

// All functions return compact single-line JSON with a fixed key order.

/// {"dim", "empty", "vertices"}
std::string polytope_json(const polytope::LatticePolytope& p);

/// {"dim", "full_sphere", ["outer"], ["warning"], "cells": [{"eq", "ineq"}]}
std::string complex_json(const sphdual::SphericalComplex& c, std::optional<bool> outer = std::nullopt,
                         std::optional<std::string> warning = std::nullopt);

/// {"h", "coordinates", "slopes"}; slopes are listed only for h = 1.
std::string slopes_json(std::size_t h, const std::set<slopes::BoundaryCurveCoordinate>& coordinates);

/// {"error", "message", ["position"]}
std::string error_json(const std::string& kind, const std::string& message,
                       std::optional<std::size_t> position = std::nullopt);

} // namespace tropic::json_io
