#include "ekr/report_io.hpp"

#include <limits>

namespace ekr {

Json count_json(const BigCount &x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max())
    return x.convert_to<std::uint64_t>();
  return to_string(x);
}

Json family_json(const Family &f) {
  Json out = Json::array();
  for (const auto &s : f)
    out.push_back(s.to_vector());
  return out;
}

Json to_json(const EkrReport &rep) {
  Json j;
  j["r"] = rep.r;
  j["verdict"] = to_string(rep.verdict);
  j["max_star_vertex"] = rep.max_star_vertex;
  j["max_star_size"] = count_json(rep.max_star_size);
  j["max_intersecting_size"] = count_json(rep.max_intersecting_size);
  j["witness"] = family_json(rep.witness);
  j["nodes_explored"] = rep.nodes_explored;
  return j;
}

Json to_json(const HkReport &rep) {
  Json j;
  j["r"] = rep.r;
  j["best_vertex"] = rep.best_vertex;
  j["best_is_leaf"] = rep.best_is_leaf;
  Json per = Json::array();
  for (const auto &c : rep.per_vertex)
    per.push_back(count_json(c));
  j["per_vertex"] = per;
  return j;
}

Json to_json(const PeelReport &rep) {
  Json j;
  j["t"] = rep.t;
  j["threshold"] = rep.threshold;
  j["removed"] = rep.removed;
  j["removal_degrees"] = rep.removal_degrees;
  j["residual_order"] = rep.residual.order();
  j["residual_max_degree"] = rep.residual.max_degree();
  j["residual_vertices"] = rep.residual_original;
  return j;
}

namespace {

std::string_view part_name(SpiderOrderPart p) {
  switch (p) {
  case SpiderOrderPart::CenterBelowLeaf: return "center";
  case SpiderOrderPart::LegBelowLeaf: return "leg";
  case SpiderOrderPart::LeafChain: return "leaves";
  }
  return "?";
}

} // namespace

Json to_json(const SpiderOrderReport &rep) {
  Json j;
  j["r"] = rep.r;
  j["holds"] = rep.holds();
  Json per = Json::array();
  for (const auto &c : rep.per_vertex)
    per.push_back(count_json(c));
  j["per_vertex"] = per;
  Json bad = Json::array();
  for (const auto &v : rep.violations)
    bad.push_back({{"part", part_name(v.part)},
                   {"leg_position", v.leg_position},
                   {"vertex", v.vertex},
                   {"leaf", v.leaf},
                   {"lhs", count_json(v.lhs)},
                   {"rhs", count_json(v.rhs)}});
  j["violations"] = bad;
  return j;
}

Json to_json(const Applicability &a) {
  Json j;
  j["theorem"] = to_string(a.theorem);
  j["applicable"] = a.applicable;
  Json values = Json::object();
  for (const auto &[name, value] : a.values)
    values[name] = value.convert_to<double>();
  j["values"] = values;
  j["reason"] = a.reason;
  return j;
}

Json to_json(const SearchSummary &s, SearchKind kind) {
  Json j;
  j["kind"] = kind == SearchKind::Hk ? "hk" : "ekr";
  j["instances"] = s.instances;
  j["checks"] = s.checks;
  j["budget_skipped"] = s.budget_skipped;
  Json found = Json::array();
  for (const auto &f : s.findings) {
    Json item;
    item["n"] = f.n;
    item["r"] = f.r;
    item["graph6"] = f.graph6;
    item["certificate"] = f.certificate;
    item["report"] = kind == SearchKind::Hk ? to_json(f.hk) : to_json(f.ekr);
    found.push_back(item);
  }
  j["findings"] = found;
  return j;
}

} // namespace ekr
