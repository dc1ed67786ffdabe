#include "treejac/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "treejac/error.hpp"

namespace treejac {

std::size_t CurveGraph::component_index(std::string_view id) const {
  auto it = component_lookup_.find(std::string(id));
  if (it == component_lookup_.end()) throw Error(ErrorKind::UnknownComponent, "no component '" + std::string(id) + "'");
  return it->second;
}

std::size_t CurveGraph::node_index(std::string_view id) const {
  auto it = node_lookup_.find(std::string(id));
  if (it == node_lookup_.end()) throw Error(ErrorKind::UnknownNode, "no node '" + std::string(id) + "'");
  return it->second;
}

Subcurve CurveGraph::subcurve(std::span<const std::string> ids) const {
  Subcurve d;
  for (const auto& id : ids) {
    std::size_t i = component_index(id);
    if (d.contains(i)) throw Error(ErrorKind::DuplicateId, "component '" + id + "' listed twice");
    d.insert(i);
  }
  return d;
}

Subcurve CurveGraph::subcurve(std::initializer_list<std::string_view> ids) const {
  std::vector<std::string> v(ids.begin(), ids.end());
  return subcurve(v);
}

NodeSet CurveGraph::node_set(std::span<const std::string> ids) const {
  NodeSet s;
  for (const auto& id : ids) {
    std::size_t e = node_index(id);
    if (s.contains(e)) throw Error(ErrorKind::DuplicateId, "node '" + id + "' listed twice");
    s.insert(e);
  }
  return s;
}

std::vector<std::string> CurveGraph::ids(Subcurve d) const {
  std::vector<std::string> out;
  d.for_each([&](std::size_t i) { out.push_back(components_.at(i).id); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> CurveGraph::node_ids(NodeSet s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t e) { out.push_back(nodes_.at(e).id); });
  std::sort(out.begin(), out.end());
  return out;
}

CurveGraph CurveGraph::with_polarization(std::span<const std::int64_t> h) const {
  if (h.size() != components_.size())
    throw Error(ErrorKind::InvalidArgument, "polarization has " + std::to_string(h.size()) + " entries, curve has " +
                                                std::to_string(components_.size()) + " components");
  CurveGraph out = *this;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 1)
      throw Error(ErrorKind::NonPositivePolarization,
                  "component '" + components_[i].id + "' has h = " + std::to_string(h[i]));
    out.components_[i].h = h[i];
  }
  return out;
}

CurveGraph validate_curve(CurveDescription raw) {
  const std::size_t n = raw.components.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "curve has no components");
  if (n > Subcurve::kCapacity)
    throw Error(ErrorKind::InvalidArgument, "at most " + std::to_string(Subcurve::kCapacity) + " components supported");

  CurveGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    const Component& c = raw.components[i];
    if (c.id.empty()) throw Error(ErrorKind::InvalidArgument, "component with empty id");
    if (c.genus < 0) throw Error(ErrorKind::InvalidArgument, "component '" + c.id + "' has negative genus");
    if (c.h < 1)
      throw Error(ErrorKind::NonPositivePolarization, "component '" + c.id + "' has h = " + std::to_string(c.h));
    if (!g.component_lookup_.emplace(c.id, i).second)
      throw Error(ErrorKind::DuplicateId, "component id '" + c.id + "' is not unique");
  }

  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  g.adjacency_.resize(n);
  for (std::size_t e = 0; e < raw.nodes.size(); ++e) {
    const NodePoint& p = raw.nodes[e];
    if (p.id.empty()) throw Error(ErrorKind::InvalidArgument, "node with empty id");
    if (!g.node_lookup_.emplace(p.id, e).second)
      throw Error(ErrorKind::DuplicateId, "node id '" + p.id + "' is not unique");
    auto lookup = [&](const std::string& cid) {
      auto it = g.component_lookup_.find(cid);
      if (it == g.component_lookup_.end())
        throw Error(ErrorKind::DanglingNodeReference, "node '" + p.id + "' joins unknown component '" + cid + "'");
      return it->second;
    };
    std::size_t a = lookup(p.joins.first);
    std::size_t b = lookup(p.joins.second);
    if (a == b) throw Error(ErrorKind::SelfLoop, "node '" + p.id + "' joins '" + p.joins.first + "' to itself");
    if (!seen_pairs.emplace(std::min(a, b), std::max(a, b)).second)
      throw Error(ErrorKind::CycleDetected, "node '" + p.id + "' repeats the pair ('" + p.joins.first + "', '" +
                                                p.joins.second + "')");
    g.endpoints_.emplace_back(a, b);
    g.adjacency_[a].push_back({e, b});
    g.adjacency_[b].push_back({e, a});
  }

  // Union-find: an edge closing a loop is a non-disconnecting node.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 0; e < g.endpoints_.size(); ++e) {
    auto [a, b] = g.endpoints_[e];
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) throw Error(ErrorKind::CycleDetected, "node '" + raw.nodes[e].id + "' closes a cycle");
    parent[ra] = rb;
  }
  if (g.endpoints_.size() != n - 1)
    throw Error(ErrorKind::DisconnectedCurve, "dual graph has " + std::to_string(n) + " components but " +
                                                  std::to_string(g.endpoints_.size()) + " nodes");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return raw.components[x].id < raw.components[y].id; });
  g.id_rank_.resize(n);
  for (std::size_t r = 0; r < n; ++r) g.id_rank_[order[r]] = r;

  g.components_ = std::move(raw.components);
  g.nodes_ = std::move(raw.nodes);
  return g;
}

std::int64_t polarization_degree(const CurveGraph& x, Subcurve d) noexcept {
  std::int64_t h = 0;
  d.for_each([&](std::size_t i) { h += x.components()[i].h; });
  return h;
}

NodeSet interior_nodes(const CurveGraph& x, Subcurve d) noexcept {
  NodeSet s;
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    auto [a, b] = x.endpoints(e);
    if (d.contains(a) && d.contains(b)) s.insert(e);
  }
  return s;
}

NodeSet boundary_nodes(const CurveGraph& x, Subcurve d) noexcept {
  NodeSet s;
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    auto [a, b] = x.endpoints(e);
    if (d.contains(a) != d.contains(b)) s.insert(e);
  }
  return s;
}

std::int64_t euler_char(const CurveGraph& x, Subcurve d) noexcept {
  std::int64_t chi = 0;
  d.for_each([&](std::size_t i) { chi += x.components()[i].euler_char(); });
  return chi - static_cast<std::int64_t>(interior_nodes(x, d).size());
}

std::vector<Subcurve> connected_parts(const CurveGraph& x, Subcurve d, NodeSet cut) {
  std::vector<Subcurve> parts;
  Subcurve remaining = d;
  while (!remaining.empty()) {
    std::size_t seed = remaining.members().front();
    Subcurve part = Subcurve::single(seed);
    std::vector<std::size_t> stack{seed};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& edge : x.adjacency(v)) {
        if (cut.contains(edge.node) || !d.contains(edge.neighbor) || part.contains(edge.neighbor)) continue;
        part.insert(edge.neighbor);
        stack.push_back(edge.neighbor);
      }
    }
    parts.push_back(part);
    remaining = remaining - part;
  }
  std::sort(parts.begin(), parts.end(), [&](Subcurve a, Subcurve b) { return x.ids(a) < x.ids(b); });
  return parts;
}

bool is_connected(const CurveGraph& x, Subcurve d) {
  if (d.empty()) return false;
  // On a forest the induced subgraph is connected iff it has |d| - 1 edges.
  return interior_nodes(x, d).size() + 1 == d.size();
}

bool canonical_less(const CurveGraph& x, Subcurve a, Subcurve b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return x.ids(a) < x.ids(b);
}

namespace {

void require_subcurve(const CurveGraph& x, Subcurve d) {
  if (d.empty()) throw Error(ErrorKind::EmptySubcurve, "subcurve has no components");
  if (!d.subset_of(x.all())) throw Error(ErrorKind::UnknownComponent, "subcurve refers to components outside the curve");
}

}  // namespace

SubcurveInvariants subcurve_invariants(const CurveGraph& x, Subcurve d) {
  require_subcurve(x, d);
  SubcurveInvariants inv;
  inv.h = polarization_degree(x, d);
  inv.chi = euler_char(x, d);
  inv.alpha = static_cast<std::int64_t>(boundary_nodes(x, d).size());
  inv.parts = connected_parts(x, d);
  return inv;
}

Subcurve complement(const CurveGraph& x, Subcurve d) {
  require_subcurve(x, d);
  Subcurve c = x.all() - d;
  if (c.empty()) throw Error(ErrorKind::FullCurve, "complement of the whole curve is empty");
  return c;
}

GlobalInvariants global_invariants(const CurveGraph& x) {
  GlobalInvariants g;
  g.chi = euler_char(x, x.all());
  g.genus = 1 - g.chi;
  g.h = polarization_degree(x, x.all());
  return g;
}

}  // namespace treejac
