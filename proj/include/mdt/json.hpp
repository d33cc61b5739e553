#pragma once

#include "mdt/quiver.hpp"
#include "mdt/series.hpp"
#include "mdt/verify.hpp"

#include <json.hpp>

namespace mdt {

using nlohmann::json;

/// {"num": [[exp, "coeff"], ...], "den": [...]}, exponents ascending,
/// coefficients as decimal strings
inline json to_json(const VPoly& p) {
    json arr = json::array();
    for (auto& [e, c] : p.c) arr.push_back(json::array({e, c.str()}));
    return arr;
}

inline VPoly vpoly_from_json(const json& j) {
    VPoly p;
    for (const auto& t : j) {
        Int c(t.at(1).get<std::string>());
        if (c != 0) p.c[t.at(0).get<int>()] = c;
    }
    return p;
}

inline json to_json(const MotiveRat& m) {
    return json{{"num", to_json(m.num)}, {"den", to_json(m.den)}};
}

inline MotiveRat motive_from_json(const json& j) {
    return MotiveRat(vpoly_from_json(j.at("num")), vpoly_from_json(j.at("den")));
}

/// {"vars": [...], "cap": D, "terms": [{"exp": [...], "coeff": ...}]}
inline json to_json(const Series& s, const std::vector<std::string>& vars) {
    json terms = json::array();
    std::vector<const std::pair<const Expo, MotiveRat>*> ts;
    for (auto& kv : s.terms()) ts.push_back(&kv);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        int da = expo_total(a->first), db = expo_total(b->first);
        return da != db ? da < db : a->first < b->first;
    });
    for (auto* kv : ts)
        terms.push_back(json{{"exp", kv->first}, {"coeff", to_json(kv->second)}});
    return json{{"vars", vars}, {"cap", s.cap()}, {"terms", terms}};
}

inline Series series_from_json(const json& j) {
    int nvars = static_cast<int>(j.at("vars").size());
    Series s(nvars, j.at("cap").get<int>());
    for (const auto& t : j.at("terms"))
        s.add_term(t.at("exp").get<std::vector<int>>(), motive_from_json(t.at("coeff")));
    return s;
}

inline std::vector<std::string> y_vars(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

inline std::vector<std::string> st_vars(int n) {
    std::vector<std::string> v = {"s"};
    for (int i = 1; i < n; ++i) v.push_back("T" + std::to_string(i));
    return v;
}

inline json to_json(const Quiver& q) {
    json arrows = json::array();
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        arrows.push_back(json{{"name", q.arrows[a].name},
                              {"src", q.arrows[a].src},
                              {"dst", q.arrows[a].dst},
                              {"in_cut", static_cast<bool>(q.in_cut[a])}});
    auto path_names = [&](const Path& p) {
        json names = json::array();
        for (int a : p) names.push_back(q.arrows[a].name);
        return names;
    };
    json rels = json::array();
    for (const Relation& r : q.relations)
        rels.push_back(json{{"arrow", q.arrows[r.arrow].name},
                            {"plus", path_names(r.plus)},
                            {"minus", path_names(r.minus)}});
    return json{{"vertices", q.n}, {"arrows", arrows}, {"relations", rels}};
}

inline json to_json(const CheckResult& r) {
    return json{{"check", r.check},     {"model", r.model},   {"detail", r.detail},
                {"expected", r.expected}, {"actual", r.actual}, {"status", r.status},
                {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace mdt
