#pragma once

#include "quantplan/plan_optimizer.hpp"
#include "quantplan/price_quality.hpp"
#include "quantplan/sim_verify.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace quantplan {

using Json = nlohmann::ordered_json;

/// Fixed CSV number format: 12 significant digits, '.' separator.
std::string format_number(double value);

Json to_json(const FunctionalPoint& point);
Json to_json(const SamplingPlan& plan);
Json to_json(const SimReport& report);
Json to_json(const CombinedPlan& combined);

FunctionalPoint point_from_json(const Json& j);
/// Accepts a bare plan object or a document with a "plan" member.
SamplingPlan plan_from_json(const Json& j);

/// Header `N,r,J2,J,dt_s`, LF line endings.
std::string sweep_csv(std::span<const FunctionalPoint> points);
/// Header `t,v_est,exact,residual`, LF line endings.
std::string residual_csv(std::span<const ResidualSample> samples);

} // namespace quantplan
