// Copyright 2026 The frachz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frachz/registry.hpp"

#include <stdexcept>
#include <string>

namespace frachz {

namespace {

double parse(std::string_view text) { return std::stod(std::string(text)); }

using S = Structure;

}  // namespace

double PublishedRow::j_min() const { return parse(j_min_text); }

ControllerSpec PublishedRow::spec() const {
  std::vector<double> v;
  for (auto t : value_text) v.push_back(parse(t));
  return ControllerSpec::from_vector(structure, v);
}

const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows = {
      // K_e, K_d, K_PI, K_PD, lambda, mu
      {"gp1", S::kFuzzyPID, "38.20247",
       {"0.887976", "0.63353", "1.417276", "0.820367", "0.959188", "0.994714"}},
      {"gp2", S::kFuzzyPID, "7.630405",
       {"0.098897", "0.102872", "0.728721", "0.787448", "0.998849", "0.992102"}},
      {"gp3", S::kFuzzyPID, "39.6631",
       {"0.666385", "0.214853", "0.801473", "0.321055", "0.998524", "0.288179"}},
      // K_e1, K_d1, K_PI, K_e2, K_d2, K_PD, lambda, mu
      {"gp1", S::kFuzzyPIplusPD, "38.17563",
       {"0.957059", "0.74568", "1.506117", "0.725838", "0.872039", "0.882793",
        "0.932188", "0.982342"}},
      {"gp2", S::kFuzzyPIplusPD, "3.752172",
       {"0.177834", "0.016532", "0.636613", "0.299998", "0.765192", "0.287097",
        "0.976782", "0.810926"}},
      {"gp3", S::kFuzzyPIplusPD, "39.64602",
       {"0.848295", "0.209849", "0.843522", "0.295589", "0.209216", "0.487242",
        "0.971632", "0.436048"}},
      // K_e, K_d1, K_p, K_d2, K_i, lambda, mu1, mu2
      {"gp1", S::kFuzzyPplusID, "38.1687",
       {"0.339126", "0.81547", "0.594271", "1.924765", "1.806937", "0.882179",
        "0.973166", "0.177353"}},
      {"gp2", S::kFuzzyPplusID, "3.631472",
       {"0.007836", "0.288275", "0.650441", "0.131799", "0.17253", "0.973567",
        "0.769968", "0.05902"}},
      {"gp3", S::kFuzzyPplusID, "39.69599",
       {"0.64044", "0.094509", "0.301722", "0.161946", "0.657659", "0.972741",
        "0.998061", "0.00964"}},
      // K_e, K_d1, K_PI, K_d2, lambda, mu1, mu2
      {"gp1", S::kFuzzyPIplusD, "38.21658",
       {"0.658696", "0.328859", "2.02627", "1.314265", "0.883782", "0.707495",
        "0.432665"}},
      {"gp2", S::kFuzzyPIplusD, "6.67324",
       {"0.435695", "0.240776", "0.379578", "0.314335", "0.873519", "0.59048",
        "0.753619"}},
      {"gp3", S::kFuzzyPIplusD, "39.89151",
       {"0.712596", "0.20361", "1.06411", "0.220181", "0.940606", "0.607729",
        "0.429407"}},
      // K_e, K_d, K_i, K_PD, lambda, mu
      {"gp1", S::kFuzzyPDplusI, "38.22424",
       {"0.207274", "0.59619", "0.639649", "1.039919", "0.983022", "0.599213"}},
      {"gp2", S::kFuzzyPDplusI, "3.297377",
       {"0.056807", "0.211725", "0.113836", "0.828508", "0.989822", "0.723279"}},
      {"gp3", S::kFuzzyPDplusI, "39.67555",
       {"0.344379", "0.5251", "0.626799", "0.33055", "0.96105", "0.28574"}},
  };
  return rows;
}

const PublishedRow& published_row(std::string_view plant, Structure s) {
  for (const auto& row : published_rows()) {
    if (row.plant == plant && row.structure == s) return row;
  }
  throw std::invalid_argument("no published row for " + std::string(plant) +
                              " / " + std::string(structure_tag(s)));
}

}  // namespace frachz
