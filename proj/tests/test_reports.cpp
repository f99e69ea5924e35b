#include "ekr/report_io.hpp"

#include <doctest.h>

using namespace ekr;

TEST_CASE("counts switch to strings past 64 bits") {
  CHECK(count_json(BigCount(21)) == Json(21));
  BigCount big = binom(120, 60);
  Json j = count_json(big);
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == to_string(big));
  CHECK(count_json(BigCount(std::numeric_limits<std::uint64_t>::max())).is_number_unsigned());
}

TEST_CASE("EKR report schema is frozen") {
  EkrReport rep = max_intersecting_family(generate("spider:2,2,2"), 2);
  Json j = to_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"r", "verdict", "max_star_vertex", "max_star_size",
                                         "max_intersecting_size", "witness", "nodes_explored"});
  CHECK(j["verdict"] == "ekr");
  CHECK(j["max_star_size"] == 5);
  CHECK(j["witness"].size() == 5);
  CHECK(j["witness"][0].is_array());
  // same input, same bytes
  CHECK(to_json(max_intersecting_family(generate("spider:2,2,2"), 2)).dump() == j.dump());
}

TEST_CASE("HK, peel, spider-order and hypothesis reports") {
  Json hk = to_json(is_r_hk(generate("spider:1,2,2"), 2));
  CHECK(hk["best_is_leaf"] == true);
  CHECK(hk["per_vertex"] == Json::array({2, 4, 3, 4, 3, 4}));

  Json peel_json = to_json(peel(generate("star:9"), 6));
  CHECK(peel_json["t"] == 1);
  CHECK(peel_json["removed"] == Json::array({0}));
  CHECK(peel_json["residual_max_degree"] == 0);

  Json so = to_json(spider_order_check(SpiderSpec({2, 2, 2}), 2));
  CHECK(so["holds"] == true);
  CHECK(so["violations"].empty());

  BoundQuery q;
  q.n = 16;
  q.r = 2;
  Json h = to_json(hypothesis(TheoremId::T5, q));
  CHECK(h["theorem"] == "T5");
  CHECK(h["applicable"] == true);
  CHECK(h["values"]["r_threshold"].get<double>() == doctest::Approx(2.9836).epsilon(1e-4));
}

TEST_CASE("search summary") {
  TreeSearchOptions opt;
  opt.kind = SearchKind::Ekr;
  opt.r_min = opt.r_max = 2;
  Json j = to_json(search_catalog({generate("kpartite:3,3")}, opt), SearchKind::Ekr);
  CHECK(j["kind"] == "ekr");
  CHECK(j["instances"] == 1);
  REQUIRE(j["findings"].size() == 1);
  CHECK(j["findings"][0]["report"]["verdict"] == "not_ekr");
  CHECK(j["findings"][0]["graph6"] == emit_graph6(generate("kpartite:3,3")));
}
