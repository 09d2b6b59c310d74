#include "pairwalk/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairwalk {

WeightedGraph attach(const AttachmentPlan& plan) {
  const Cluster& cl = plan.cluster;
  const int c = static_cast<int>(cl.members.size());
  if (plan.inner.order() != c)
    throw std::invalid_argument("inner graph order must equal cluster size");

  std::vector<int> embed = plan.embedding;
  if (embed.empty()) embed = cl.members;
  if (static_cast<int>(embed.size()) != c)
    throw std::invalid_argument("embedding length must equal cluster size");
  std::vector<int> sorted = embed;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != cl.members)
    throw std::invalid_argument("embedding must be a bijection onto C");

  WeightedGraph out = plan.base;
  for (const Edge& e : plan.inner.edges()) {
    int u = embed[e.u], v = embed[e.v];
    if (out.has_edge(u, v))
      throw std::invalid_argument("inner edge collides with a base edge");
    out.add_edge(u, v, e.w);
  }
  return out;
}

WeightedGraph attach(const WeightedGraph& base, const Cluster& cluster,
                     const WeightedGraph& inner) {
  return attach(AttachmentPlan{base, cluster, inner, {}});
}

WeightedGraph complement(const WeightedGraph& g) {
  if (!g.is_unweighted())
    throw std::invalid_argument("complement is defined for unweighted graphs");
  const int n = g.order();
  WeightedGraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h,
                   const std::vector<double>& cross_weights) {
  const int ng = g.order(), nh = h.order();
  if (!cross_weights.empty() &&
      static_cast<int>(cross_weights.size()) != ng)
    throw std::invalid_argument("cross weight list must match base order");
  WeightedGraph out(ng + nh);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.w);
  for (const Edge& e : h.edges()) out.add_edge(ng + e.u, ng + e.v, e.w);
  for (int u = 0; u < ng; ++u) {
    double w = cross_weights.empty() ? 1.0 : cross_weights[u];
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v, w);
  }
  return out;
}

WeightedGraph sequential_join(const std::vector<WeightedGraph>& parts) {
  if (parts.empty())
    throw std::invalid_argument("sequential join needs at least one part");
  int total = 0;
  for (const WeightedGraph& p : parts) total += p.order();
  WeightedGraph out(total);
  int offset = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    for (const Edge& e : parts[k].edges())
      out.add_edge(offset + e.u, offset + e.v, e.w);
    if (k + 1 < parts.size()) {
      int next = offset + parts[k].order();
      for (int u = 0; u < parts[k].order(); ++u)
        for (int v = 0; v < parts[k + 1].order(); ++v)
          out.add_edge(offset + u, next + v);
    }
    offset += parts[k].order();
  }
  return out;
}

WeightedGraph cartesian(const WeightedGraph& g1, const WeightedGraph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  WeightedGraph out(n1 * n2);
  for (const Edge& e : g1.edges())
    for (int j = 0; j < n2; ++j)
      out.add_edge(product_index(e.u, j, n2), product_index(e.v, j, n2), e.w);
  for (const Edge& e : g2.edges())
    for (int i = 0; i < n1; ++i)
      out.add_edge(product_index(i, e.u, n2), product_index(i, e.v, n2), e.w);
  return out;
}

namespace {

void require_connected(const WeightedGraph& g, const char* what) {
  if (!g.is_connected())
    throw std::invalid_argument(std::string(what) +
                                " requires a connected base graph");
}

void copy_into(WeightedGraph& out, const WeightedGraph& h, int offset) {
  for (const Edge& e : h.edges())
    out.add_edge(offset + e.u, offset + e.v, e.w);
}

}  // namespace

WeightedGraph vertex_corona(const WeightedGraph& g, const WeightedGraph& h) {
  require_connected(g, "vertex corona");
  const int n = g.order(), c = h.order();
  WeightedGraph out(n * (1 + c));
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.w);
  for (int i = 0; i < n; ++i) {
    int base = corona_copy_index(n, c, i, 0);
    copy_into(out, h, base);
    for (int j = 0; j < c; ++j) out.add_edge(i, base + j);
  }
  return out;
}

WeightedGraph edge_corona(const WeightedGraph& g, const WeightedGraph& h) {
  require_connected(g, "edge corona");
  const int n = g.order(), c = h.order();
  const auto& ge = g.edges();
  WeightedGraph out(n + static_cast<int>(ge.size()) * c);
  for (const Edge& e : ge) out.add_edge(e.u, e.v, e.w);
  for (size_t i = 0; i < ge.size(); ++i) {
    int base = corona_copy_index(n, c, static_cast<int>(i), 0);
    copy_into(out, h, base);
    for (int j = 0; j < c; ++j) {
      out.add_edge(ge[i].u, base + j);
      out.add_edge(ge[i].v, base + j);
    }
  }
  return out;
}

WeightedGraph neighborhood_corona(const WeightedGraph& g,
                                  const WeightedGraph& h) {
  require_connected(g, "neighborhood corona");
  const int n = g.order(), c = h.order();
  WeightedGraph out(n * (1 + c));
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.w);
  for (int i = 0; i < n; ++i) {
    int base = corona_copy_index(n, c, i, 0);
    copy_into(out, h, base);
    for (int v : g.neighbors(i))
      for (int j = 0; j < c; ++j) out.add_edge(v, base + j);
  }
  return out;
}

WeightedGraph blow_up(const WeightedGraph& g, int c,
                      const std::vector<WeightedGraph>& inner) {
  const int n = g.order();
  if (c < 1) throw std::invalid_argument("blow-up size must be positive");
  if (static_cast<int>(inner.size()) != n)
    throw std::invalid_argument("need one inner graph per base vertex");
  for (const WeightedGraph& h : inner)
    if (h.order() != c)
      throw std::invalid_argument("inner graph order must equal blow-up size");

  WeightedGraph out(n * c);
  for (const Edge& e : g.edges())
    for (int a = 0; a < c; ++a)
      for (int b = 0; b < c; ++b)
        out.add_edge(e.u * c + a, e.v * c + b, e.w);
  for (int i = 0; i < n; ++i) copy_into(out, inner[i], i * c);
  return out;
}

WeightedGraph lexicographic(const WeightedGraph& g, const WeightedGraph& h) {
  return blow_up(g, h.order(),
                 std::vector<WeightedGraph>(g.order(), h));
}

WeightedGraph complete_minus_matching(int n, int m) {
  if (m < 1) throw std::invalid_argument("matching size must be at least 1");
  if (n < 2 * m)
    throw std::invalid_argument("matching does not fit in the complete graph");
  WeightedGraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool matched = (v == u + 1) && (u % 2 == 0) && (v < 2 * m);
      if (!matched) out.add_edge(u, v);
    }
  return out;
}

WeightedGraph complete_minus_cycle(int n, int k) {
  if (k < 2) throw std::invalid_argument("cycle exponent must be at least 2");
  const int len = 1 << k;
  if (n < len)
    throw std::invalid_argument("cycle does not fit in the complete graph");
  WeightedGraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool on_cycle = (u < len && v < len) &&
                      ((v - u == 1) || (u == 0 && v == len - 1));
      if (!on_cycle) out.add_edge(u, v);
    }
  return out;
}

}  // namespace pairwalk
