#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treejac {

/// Set of small indices (< 64) packed into a machine word.
template <class Tag>
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr IndexSet() noexcept = default;
  constexpr explicit IndexSet(std::uint64_t bits) noexcept : bits_(bits) {}

  static constexpr IndexSet single(std::size_t i) noexcept { return IndexSet(std::uint64_t{1} << i); }
  static constexpr IndexSet first_n(std::size_t n) noexcept {
    return IndexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  [[nodiscard]] constexpr bool subset_of(IndexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(std::size_t i) noexcept { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) noexcept { bits_ &= ~(std::uint64_t{1} << i); }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept { return IndexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) noexcept = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) noexcept { return a.bits_ <=> b.bits_; }

  /// Members in increasing index order.
  [[nodiscard]] std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

struct ComponentTag {};
struct NodeTag {};

/// Subset of the irreducible components of one CurveGraph (by component index).
using Subcurve = IndexSet<ComponentTag>;
/// Subset of the intersection nodes of one CurveGraph (by node index).
using NodeSet = IndexSet<NodeTag>;

struct Component {
  std::string id;
  std::int64_t genus = 0;
  std::int64_t h = 1;  // degree of the induced polarization

  [[nodiscard]] std::int64_t euler_char() const noexcept { return 1 - genus; }
  friend bool operator==(const Component&, const Component&) = default;
};

struct NodePoint {
  std::string id;
  std::pair<std::string, std::string> joins;
  friend bool operator==(const NodePoint&, const NodePoint&) = default;
};

/// Unvalidated curve description as read from a file or built in code.
struct CurveDescription {
  std::vector<Component> components;
  std::vector<NodePoint> nodes;
  friend bool operator==(const CurveDescription&, const CurveDescription&) = default;
};

/// A validated generalized tree-like curve: its dual graph is a tree whose
/// vertices are the components and whose edges are the intersection nodes.
///
/// Component and node indices follow the order of the description.
class CurveGraph {
 public:
  struct Edge {
    std::size_t node;
    std::size_t neighbor;
  };

  [[nodiscard]] std::size_t num_components() const noexcept { return components_.size(); }
  [[nodiscard]] std::size_t num_nodes() const noexcept { return nodes_.size(); }
  [[nodiscard]] const Component& component(std::size_t i) const { return components_.at(i); }
  [[nodiscard]] const NodePoint& node(std::size_t e) const { return nodes_.at(e); }
  [[nodiscard]] const std::vector<Component>& components() const noexcept { return components_; }
  [[nodiscard]] const std::vector<NodePoint>& nodes() const noexcept { return nodes_; }

  /// Component indices joined by node e.
  [[nodiscard]] std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const { return endpoints_.at(e); }
  [[nodiscard]] const std::vector<Edge>& adjacency(std::size_t i) const { return adjacency_.at(i); }

  /// Throws Error(UnknownComponent).
  [[nodiscard]] std::size_t component_index(std::string_view id) const;
  /// Throws Error(UnknownNode).
  [[nodiscard]] std::size_t node_index(std::string_view id) const;

  [[nodiscard]] Subcurve all() const noexcept { return Subcurve::first_n(components_.size()); }
  [[nodiscard]] NodeSet all_nodes() const noexcept { return NodeSet::first_n(nodes_.size()); }

  /// Throws Error(UnknownComponent) / Error(DuplicateId).
  [[nodiscard]] Subcurve subcurve(std::span<const std::string> ids) const;
  [[nodiscard]] Subcurve subcurve(std::initializer_list<std::string_view> ids) const;
  [[nodiscard]] NodeSet node_set(std::span<const std::string> ids) const;

  /// Member ids sorted lexicographically.
  [[nodiscard]] std::vector<std::string> ids(Subcurve d) const;
  [[nodiscard]] std::vector<std::string> node_ids(NodeSet s) const;

  /// Lexicographic rank of each component id (0 = smallest id).
  [[nodiscard]] std::size_t id_rank(std::size_t i) const { return id_rank_.at(i); }

  /// Same graph with the polarization degrees replaced (same component order).
  /// Throws Error(NonPositivePolarization).
  [[nodiscard]] CurveGraph with_polarization(std::span<const std::int64_t> h) const;

  [[nodiscard]] CurveDescription description() const { return {components_, nodes_}; }

  friend CurveGraph validate_curve(CurveDescription raw);

  friend bool operator==(const CurveGraph& a, const CurveGraph& b) {
    return a.components_ == b.components_ && a.nodes_ == b.nodes_;
  }

 private:
  std::vector<Component> components_;
  std::vector<NodePoint> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<std::vector<Edge>> adjacency_;
  std::vector<std::size_t> id_rank_;
  std::unordered_map<std::string, std::size_t> component_lookup_;
  std::unordered_map<std::string, std::size_t> node_lookup_;
};

/// Checks the tree-like conditions and builds the graph.
/// Errors: DuplicateId, DanglingNodeReference, SelfLoop, CycleDetected,
/// DisconnectedCurve, InvalidArgument (genus < 0, empty ids, more than 64 components).
/// Non-positive polarization degrees raise NonPositivePolarization.
CurveGraph validate_curve(CurveDescription raw);

struct SubcurveInvariants {
  std::int64_t h = 0;      // h_D
  std::int64_t chi = 0;    // chi(O_D)
  std::int64_t alpha = 0;  // nodes joining D to its complement
  std::vector<Subcurve> parts;  // connected pieces, ordered by sorted member ids
};

/// Errors: EmptySubcurve, UnknownComponent (bits outside the curve).
SubcurveInvariants subcurve_invariants(const CurveGraph& x, Subcurve d);

/// Errors: FullCurve, EmptySubcurve.
Subcurve complement(const CurveGraph& x, Subcurve d);

struct GlobalInvariants {
  std::int64_t genus = 0;
  std::int64_t chi = 0;
  std::int64_t h = 0;
};

GlobalInvariants global_invariants(const CurveGraph& x);

// Unchecked building blocks used by the higher modules.
std::int64_t polarization_degree(const CurveGraph& x, Subcurve d) noexcept;
std::int64_t euler_char(const CurveGraph& x, Subcurve d) noexcept;
/// Nodes with both endpoints in d.
NodeSet interior_nodes(const CurveGraph& x, Subcurve d) noexcept;
/// Nodes with exactly one endpoint in d.
NodeSet boundary_nodes(const CurveGraph& x, Subcurve d) noexcept;
/// Connected pieces of the subgraph induced on d, with the nodes in `cut` removed.
std::vector<Subcurve> connected_parts(const CurveGraph& x, Subcurve d, NodeSet cut = {});
bool is_connected(const CurveGraph& x, Subcurve d);

/// Total order on subcurves: fewer components first, then sorted member ids
/// compared lexicographically.
bool canonical_less(const CurveGraph& x, Subcurve a, Subcurve b);

}  // namespace treejac
