#include "quantplan/serialize.hpp"

#include "quantplan/error.hpp"

#include <cstdio>

namespace quantplan {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Json to_json(const FunctionalPoint& p) {
    return Json{{"n", p.n}, {"r", p.r}, {"j2", p.j2}, {"j", p.j}, {"dt_s", p.dt_s}};
}

Json to_json(const SamplingPlan& plan) {
    Json sweep = Json::array();
    for (const auto& p : plan.sweep)
        sweep.push_back(to_json(p));
    return Json{{"order_k", plan.order_k},   {"f_s_hz", plan.f_s_hz},
                {"f_p_hz", plan.f_p_hz},     {"n_opt", plan.n_opt},
                {"f_o_hz", plan.f_o_hz},     {"k_d", plan.k_d},
                {"f2_min_hz", plan.f2_min_hz}, {"r_at_opt", plan.r_at_opt},
                {"j_at_opt", plan.j_at_opt}, {"sweep", std::move(sweep)}};
}

Json to_json(const SimReport& r) {
    return Json{{"r_empirical", r.r_empirical}, {"r_model", r.r_model}, {"x", r.x}, {"gap", r.gap}};
}

Json to_json(const CombinedPlan& c) { return Json{{"f_o_hz", c.f_o_hz}, {"k_d", c.k_d}}; }

FunctionalPoint point_from_json(const Json& j) {
    try {
        return {j.at("n").get<int>(), j.at("r").get<double>(), j.at("j2").get<double>(),
                j.at("j").get<double>(), j.at("dt_s").get<double>()};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed sweep point: ") + e.what());
    }
}

SamplingPlan plan_from_json(const Json& j) {
    const Json& obj = (j.is_object() && j.contains("plan")) ? j.at("plan") : j;
    try {
        SamplingPlan plan;
        plan.order_k = obj.at("order_k").get<int>();
        plan.f_s_hz = obj.at("f_s_hz").get<double>();
        plan.f_p_hz = obj.at("f_p_hz").get<double>();
        plan.n_opt = obj.at("n_opt").get<int>();
        plan.f_o_hz = obj.at("f_o_hz").get<double>();
        plan.k_d = obj.at("k_d").get<int>();
        plan.f2_min_hz = obj.at("f2_min_hz").get<double>();
        plan.r_at_opt = obj.at("r_at_opt").get<double>();
        plan.j_at_opt = obj.at("j_at_opt").get<double>();
        for (const auto& p : obj.at("sweep"))
            plan.sweep.push_back(point_from_json(p));
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed sampling plan: ") + e.what());
    }
}

std::string sweep_csv(std::span<const FunctionalPoint> points) {
    std::string out = "N,r,J2,J,dt_s\n";
    for (const auto& p : points) {
        out += std::to_string(p.n);
        for (double v : {p.r, p.j2, p.j, p.dt_s}) {
            out += ',';
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

std::string residual_csv(std::span<const ResidualSample> samples) {
    std::string out = "t,v_est,exact,residual\n";
    for (const auto& s : samples) {
        out += format_number(s.t) + ',' + format_number(s.v_est) + ',' +
               format_number(s.exact) + ',' + format_number(s.residual) + '\n';
    }
    return out;
}

} // namespace quantplan
