#pragma once

#include <fstream>

#include <json.hpp>

#include "pif/audit.hpp"
#include "pif/core.hpp"
#include "pif/groupfair.hpp"
#include "pif/optimizer.hpp"

namespace pif {

using nlohmann::json;

inline json to_json(const Allocation& a) { return json(a.probs); }

inline json to_json(const Policy& pi) {
  json alloc = json::object();
  for (const auto& [id, a] : pi.alloc) alloc[std::to_string(id)] = a.probs;
  return json{{"alloc", alloc}};
}

inline json to_json(const PreferenceRelation& rel) {
  json j;
  if (const auto* eu = std::get_if<ExpectedUtility>(&rel)) {
    j["type"] = "expected_utility";
    j["u"] = eu->u;
  } else if (const auto* sd = std::get_if<StochasticDominance>(&rel)) {
    j["type"] = "stochastic_dominance";
    j["u"] = sd->u;
    j["M"] = sd->upper_bound;
  } else if (const auto* br = std::get_if<BinaryRanking>(&rel)) {
    j["type"] = "binary_ranking";
    j["favored"] = br->favored;
  } else {
    j["type"] = "trivial";
  }
  return j;
}

inline json to_json(const Instance& inst) {
  json j;
  j["outcomes"] = json::array();
  for (const auto& o : inst.outcomes) j["outcomes"].push_back({{"id", o.id}, {"label", o.label}});
  j["individuals"] = json::array();
  for (const auto& i : inst.individuals)
    j["individuals"].push_back({{"id", i.id}, {"label", i.label}, {"weight", i.weight}});
  j["metrics"] = json::array();
  for (const auto& m : inst.metrics) j["metrics"].push_back(m.dist);
  j["divergence"] = "tv";
  json prefs = json::object();
  for (const auto& [id, rel] : inst.preferences) prefs[std::to_string(id)] = to_json(rel);
  j["preferences"] = prefs;
  return j;
}

inline json to_json(const BinaryClassifier& h) {
  json labels = json::object();
  for (const auto& [id, l] : h.labels) labels[std::to_string(id)] = l;
  return json{{"labels", labels}};
}

inline json to_json(const GroupSpec& g) {
  return json{{"S", std::vector<int>(g.s.begin(), g.s.end())}};
}

inline json to_json(const PairVerdict& v) {
  json j{{"i", v.i}, {"j", v.j}, {"satisfied", v.satisfied}};
  if (v.witness) j["witness"] = v.witness->probs;
  if (v.violation)
    j["violation"] = {{"lhs", v.violation->lhs}, {"rhs", v.violation->rhs},
                      {"kind", v.violation->kind}};
  return j;
}

inline json to_json(const AuditReport& rep) {
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) verdicts.push_back(to_json(v));
  return json{{"notion", to_string(rep.notion)}, {"overall", rep.overall},
              {"verdicts", verdicts}};
}

inline json to_json(const OptResult& r) {
  return json{{"policy", to_json(r.policy)},
              {"objective_value", r.objective_value},
              {"welfare", r.welfare},
              {"family", to_string(r.family)},
              {"status", lp::to_string(r.status)}};
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) {
  fail(Errc::ParseError, "malformed input: " + what);
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace detail

inline Allocation allocation_from_json(const json& j) {
  return detail::guarded([&] { return Allocation(j.get<std::vector<double>>()); });
}

inline PreferenceRelation preference_from_json(const json& j) {
  return detail::guarded([&]() -> PreferenceRelation {
    const std::string type = j.at("type").get<std::string>();
    if (type == "expected_utility") return ExpectedUtility{j.at("u").get<std::vector<double>>()};
    if (type == "stochastic_dominance") {
      StochasticDominance sd;
      sd.u = j.at("u").get<std::vector<double>>();
      sd.upper_bound = j.count("M") ? j.at("M").get<double>()
                                    : (sd.u.empty() ? 1.0 : *std::max_element(sd.u.begin(),
                                                                              sd.u.end()));
      return sd;
    }
    if (type == "trivial") return TrivialReflexive{};
    if (type == "binary_ranking") return BinaryRanking{j.at("favored").get<int>()};
    detail::parse_fail("unknown preference type: " + type);
  });
}

inline Instance instance_from_json(const json& j) {
  Instance inst = detail::guarded([&] {
    Instance out;
    for (const auto& o : j.at("outcomes"))
      out.outcomes.push_back({o.at("id").get<int>(), o.value("label", std::string{})});
    for (const auto& i : j.at("individuals"))
      out.individuals.push_back({i.at("id").get<int>(), i.value("label", std::string{}),
                                 i.value("weight", 1.0)});
    for (const auto& m : j.at("metrics")) {
      Metric metric;
      metric.dist = m.get<std::vector<std::vector<double>>>();
      out.metrics.push_back(std::move(metric));
    }
    const std::string div = j.at("divergence").get<std::string>();
    if (div != "tv") detail::parse_fail("unknown divergence: " + div);
    out.divergence = DivergenceKind::TotalVariation;
    for (const auto& [key, val] : j.at("preferences").items())
      out.preferences[std::stoi(key)] = preference_from_json(val);
    return out;
  });
  inst.validate();
  return inst;
}

inline Policy policy_from_json(const json& j) {
  return detail::guarded([&] {
    Policy pi;
    for (const auto& [key, val] : j.at("alloc").items())
      pi.alloc[std::stoi(key)] = Allocation(val.get<std::vector<double>>());
    return pi;
  });
}

inline BinaryClassifier classifier_from_json(const json& j) {
  return detail::guarded([&] {
    BinaryClassifier h;
    for (const auto& [key, val] : j.at("labels").items())
      h.labels[std::stoi(key)] = val.get<int>();
    return h;
  });
}

inline GroupSpec group_from_json(const json& j) {
  return detail::guarded([&] {
    GroupSpec g;
    for (const auto& id : j.at("S")) g.s.insert(id.get<int>());
    return g;
  });
}

inline Objective objective_from_json(const json& j) {
  return detail::guarded([&] {
    const std::string sense = j.value("sense", std::string{"maximize"});
    if (sense != "maximize" && sense != "minimize")
      detail::parse_fail("unknown sense: " + sense);
    return Objective::custom(j.at("weights").get<std::vector<std::vector<double>>>(),
                             sense == "maximize" ? lp::Sense::Maximize : lp::Sense::Minimize);
  });
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    detail::parse_fail(std::string(e.what()) + " in " + path);
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace pif
