#include "ekr/error.hpp"
#include "ekr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ekr {

namespace {

std::vector<long> parse_numbers(std::string_view args, std::string_view spec) {
  std::vector<long> out;
  if (args.empty())
    throw Error(ErrorKind::BadGeneratorArgument, "missing parameters in '" + std::string(spec) + "'");
  std::size_t start = 0;
  while (start <= args.size()) {
    std::size_t comma = args.find(',', start);
    std::string_view tok = args.substr(start, comma == std::string_view::npos ? args.npos : comma - start);
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::BadGeneratorArgument,
                  "bad number '" + std::string(tok) + "' in '" + std::string(spec) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

void require_order(long n) {
  if (n > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "generated order " + std::to_string(n));
}

long single(const std::vector<long> &nums, std::string_view spec, long min_value) {
  if (nums.size() != 1 || nums[0] < min_value)
    throw Error(ErrorKind::BadGeneratorArgument, "expected one value >= " +
                                                     std::to_string(min_value) + " in '" +
                                                     std::string(spec) + "'");
  return nums[0];
}

Graph tristar(int depth, std::string label) {
  const int tree_size = (1 << (depth + 1)) - 1;
  const int n = 1 + 3 * tree_size;
  std::vector<Edge> edges;
  for (int t = 0; t < 3; ++t) {
    const int base = 1 + t * tree_size;
    edges.emplace_back(0, base);
    // heap numbering inside each complete binary tree
    for (int i = 1; i < tree_size; ++i)
      edges.emplace_back(base + (i - 1) / 2, base + i);
  }
  return Graph(n, edges, std::move(label));
}

} // namespace

Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::UnknownGenerator, "expected kind:params, got '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  const auto nums = parse_numbers(spec.substr(colon + 1), spec);
  const std::string label(spec);

  if (kind == "empty") {
    long n = single(nums, spec, 1);
    require_order(n);
    return Graph(static_cast<int>(n), std::span<const Edge>{}, label);
  }
  if (kind == "path") {
    long n = single(nums, spec, 1);
    require_order(n);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
      edges.emplace_back(i, i + 1);
    return Graph(static_cast<int>(n), edges, label);
  }
  if (kind == "cycle") {
    long n = single(nums, spec, 3);
    require_order(n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      edges.emplace_back(i, static_cast<int>((i + 1) % n));
    return Graph(static_cast<int>(n), edges, label);
  }
  if (kind == "star") {
    long k = single(nums, spec, 1);
    require_order(k + 1);
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i)
      edges.emplace_back(0, i);
    return Graph(static_cast<int>(k + 1), edges, label);
  }
  if (kind == "spider") {
    if (nums.size() < 3)
      throw Error(ErrorKind::BadGeneratorArgument,
                  "spider needs at least 3 legs, got " + std::to_string(nums.size()));
    long total = 1;
    for (long l : nums) {
      if (l < 1)
        throw Error(ErrorKind::BadGeneratorArgument, "spider leg length must be >= 1");
      total += l;
      require_order(total);
    }
    std::vector<int> legs(nums.begin(), nums.end());
    Graph g = SpiderSpec(legs).graph();
    return Graph(g.order(), g.edges(), label);
  }
  if (kind == "kpartite") {
    long total = 0;
    for (long p : nums) {
      if (p < 1)
        throw Error(ErrorKind::BadGeneratorArgument, "part sizes must be >= 1");
      total += p;
      require_order(total);
    }
    std::vector<int> part_of;
    for (std::size_t p = 0; p < nums.size(); ++p)
      part_of.insert(part_of.end(), nums[p], static_cast<int>(p));
    std::vector<Edge> edges;
    for (int u = 0; u < total; ++u)
      for (int v = u + 1; v < total; ++v)
        if (part_of[u] != part_of[v])
          edges.emplace_back(u, v);
    return Graph(static_cast<int>(total), edges, label);
  }
  if (kind == "tristar") {
    long h = single(nums, spec, 0);
    if (h > 5 || 1 + 3 * ((1L << (h + 1)) - 1) > kMaxVertices)
      throw Error(ErrorKind::TooManyVertices, "tristar depth " + std::to_string(h));
    return tristar(static_cast<int>(h), label);
  }
  throw Error(ErrorKind::UnknownGenerator, "unknown generator kind '" + std::string(kind) + "'");
}

std::vector<int> spider_order(std::span<const int> legs) {
  std::vector<int> perm(legs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    const bool odd_a = legs[a] % 2 != 0, odd_b = legs[b] % 2 != 0;
    if (odd_a != odd_b)
      return odd_a;
    return odd_a ? legs[a] < legs[b] : legs[a] > legs[b];
  });
  return perm;
}

SpiderSpec::SpiderSpec(std::vector<int> legs) : legs_(std::move(legs)) {
  if (legs_.size() < 3)
    throw Error(ErrorKind::BadGeneratorArgument,
                "a spider needs at least 3 legs, got " + std::to_string(legs_.size()));
  n_ = 1;
  for (int l : legs_) {
    if (l < 1)
      throw Error(ErrorKind::BadGeneratorArgument, "spider leg length must be >= 1");
    leg_start_.push_back(n_);
    n_ += l;
  }
  if (n_ > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "spider order " + std::to_string(n_));
  order_ = spider_order(legs_);
}

int SpiderSpec::leg_vertex(int leg, int offset) const {
  if (leg < 0 || leg >= leg_count() || offset < 1 || offset > legs_[leg])
    throw Error(ErrorKind::VertexOutOfRange,
                "leg " + std::to_string(leg) + " offset " + std::to_string(offset));
  return leg_start_[leg] + offset - 1;
}

Graph SpiderSpec::graph() const {
  std::vector<Edge> edges;
  for (int i = 0; i < leg_count(); ++i) {
    edges.emplace_back(0, leg_vertex(i, 1));
    for (int j = 1; j < legs_[i]; ++j)
      edges.emplace_back(leg_vertex(i, j), leg_vertex(i, j + 1));
  }
  std::string label = "spider:";
  for (std::size_t i = 0; i < legs_.size(); ++i)
    label += (i ? "," : "") + std::to_string(legs_[i]);
  return Graph(n_, edges, label);
}

} // namespace ekr
