#include "indpoly/json_io.hpp"

#include "indpoly/expr.hpp"

namespace indpoly {

std::string dec(long long v) { return std::to_string(v); }

std::string dec(const BigInt& v) { return v.get_str(); }

Json poly_to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& s : p.to_strings()) a.push_back(s);
    return a;
}

namespace {

Json opt_dec(const std::optional<int>& v) {
    return v ? Json(dec(*v)) : Json(nullptr);
}

Json index_list(const std::vector<int>& xs) {
    Json a = Json::array();
    for (int x : xs) a.push_back(dec(x));
    return a;
}

}  // namespace

Json shape_to_json(const ShapeReport& s) {
    Json j;
    j["unimodal"] = s.unimodal;
    j["dip_index"] = opt_dec(s.dip_index);
    j["log_concave"] = s.log_concave;
    j["lc_violation_index"] = opt_dec(s.lc_violation_index);
    j["modes"] = index_list(s.modes);
    j["real_rooted"] = s.real_rooted ? Json(*s.real_rooted) : Json(nullptr);
    return j;
}

Json wellcover_to_json(const WellCoverReport& r) {
    Json j;
    j["alpha"] = dec(r.alpha);
    j["omega"] = dec(r.omega);
    j["well_covered"] = r.well_covered;
    j["very_well_covered"] = r.very_well_covered;
    j["girth"] = r.girth ? Json(dec(*r.girth)) : Json("acyclic");
    j["pendant_matching"] = r.pendant_matching;
    if (r.witness) {
        Json w;
        w["set_a"] = index_list(r.witness->first);
        w["set_b"] = index_list(r.witness->second);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["rule"] = cert_rule_name(c.rule);
    j["conclusion"] = cert_conclusion_name(c.conclusion);
    j["facts"] = c.facts;
    Json kids = Json::array();
    for (const auto& ch : c.children) kids.push_back(certificate_to_json(ch));
    j["children"] = kids;
    return j;
}

namespace {

Json window_list(const std::vector<std::pair<long long, long long>>& ws) {
    Json a = Json::array();
    for (const auto& [lo, hi] : ws) a.push_back(Json::array({dec(lo), dec(hi)}));
    return a;
}

}  // namespace

Json windows_to_json(const ScanWindows& w) {
    Json j;
    j["non_unimodal"] = window_list(w.non_unimodal);
    j["non_log_concave"] = window_list(w.non_log_concave);
    return j;
}

Json family_to_json(const FamilyReport& r) {
    Json j;
    j["family"] = r.name;
    Json params;
    for (const auto& [k, v] : r.params) params[k] = dec(v);
    j["params"] = params;
    j["expression"] = r.expr ? Json(render_expr(r.expr)) : Json(nullptr);
    j["polynomial"] = poly_to_json(r.poly);
    j["shape"] = shape_to_json(r.shape);
    j["well_covered"] = r.well_covered ? Json(*r.well_covered) : Json(nullptr);
    j["alpha"] = dec(r.alpha);
    j["connected"] = r.connected;
    j["note"] = r.note;
    return j;
}

}  // namespace indpoly
