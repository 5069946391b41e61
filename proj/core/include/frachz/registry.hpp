// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "frachz/controllers.hpp"

namespace frachz {

/// One published tuning result: a (process, structure) pair with its
/// reported minimum cost and parameter values, kept as printed.
struct PublishedRow {
  std::string_view plant;  // preset name
  Structure structure;
  std::string_view j_min_text;
  std::vector<std::string_view> value_text;  // parameter_names() order

  double j_min() const;
  ControllerSpec spec() const;
};

/// The 15 published rows, grouped by structure then process.
const std::vector<PublishedRow>& published_rows();

const PublishedRow& published_row(std::string_view plant, Structure s);

}  // namespace frachz
