#ifndef MULTICURVE_JSON_IO_HPP
#define MULTICURVE_JSON_IO_HPP

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "multiplier.hpp"

namespace multicurve {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::int64_t to_int64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw error(errc::internal_error, "integer too large for JSON output: " + v.str());
    return static_cast<std::int64_t>(v);
}

inline Json json_vec(const Vec3& v) {
    return Json::array({to_int64(v[0]), to_int64(v[1]), to_int64(v[2])});
}

} // namespace detail

inline Json to_json(const CurveAnalysis& ca) {
    Json j;
    j["n"] = detail::json_vec(ca.spec.n);
    j["generators"] = Json::array();
    for (const auto& g : ca.generators)
        j["generators"].push_back(Json{{"u", detail::json_vec(g.lead)},
                                       {"v", detail::json_vec(g.trail)},
                                       {"order", detail::to_int64(g.order)}});
    j["tau"] = Json::array();
    for (const auto& e : ca.tau.generators())
        j["tau"].push_back(detail::json_vec(e));
    j["newton_facets"] = Json::array();
    for (const auto& f : ca.newton.facets)
        j["newton_facets"].push_back(
            Json{{"a", detail::json_vec(f.a)}, {"b", detail::to_int64(f.b)}});
    j["corollary_path"] = ca.corollary_path;
    j["G"] = Json::array();
    for (const auto& dd : ca.G)
        j["G"].push_back(Json{{"m", detail::json_vec(dd.m)},
                              {"w", detail::to_int64(dd.w)},
                              {"ord_f1", detail::to_int64(dd.ord_f1)},
                              {"k_m", detail::to_int64(dd.k)}});
    j["lct"] = to_string(ca.lct);
    return j;
}

inline Json to_json(const JumpReport& rep) {
    Json j;
    j["candidates"] = Json::array();
    for (const auto& c : rep.candidates)
        j["candidates"].push_back(to_string(c));
    j["verified"] = Json::array();
    for (const auto& v : rep.verified)
        j["verified"].push_back(to_string(v));
    j["witnesses"] = Json::array();
    for (const auto& w : rep.witnesses)
        j["witnesses"].push_back(to_string(w));
    j["degree_bound"] = detail::to_int64(rep.degree_bound);
    return j;
}

inline Json to_json(const GeneratorReport& rep) {
    Json j;
    j["generators"] = Json::array();
    for (const auto& g : rep.generators)
        j["generators"].push_back(to_string(g));
    j["degree_bound"] = detail::to_int64(rep.degree_bound);
    j["stabilized"] = rep.stabilized;
    return j;
}

} // namespace multicurve

#endif
