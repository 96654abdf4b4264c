#pragma once

#include <json.hpp>

#include "wq/series.hpp"
#include "wq/supermodule.hpp"
#include "wq/uh.hpp"
#include "wq/wgen.hpp"

namespace wq {

using Json = nlohmann::ordered_json;

// Canonical forms: scalars as {"re":"p/q","im":"r/s"}, polynomials and U(h)
// elements as ordered term lists, matrices dense with scalar literals.

Json to_json(const GaussianRational& v);
GaussianRational gauss_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json to_json(const UhElement& u);
UhElement uh_from_json(const Json& j);

Json to_json(const WGenSet& g);
WGenSet wgens_from_json(const Json& j);

Json to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);

Json to_json(const SuperModule& m);
SuperModule module_from_json(const Json& j);

Json scalar_list_json(std::span<const GaussianRational> values);
std::vector<GaussianRational> scalar_list_from_json(const Json& j);

/// Comma-separated list in the CLI scalar grammar.
std::vector<GaussianRational> parse_scalar_list(const std::string& text);

}  // namespace wq
