#include "treejac/ordering.hpp"

#include <algorithm>
#include <utility>

#include "treejac/error.hpp"

namespace treejac {

AdmissibleOrdering::AdmissibleOrdering(Subcurve host, std::vector<std::size_t> sequence,
                                       std::vector<Attachment> attachments)
    : host_(host), sequence_(std::move(sequence)), attachments_(std::move(attachments)) {}

namespace {

void require_connected_host(const CurveGraph& x, Subcurve host) {
  if (host.empty()) throw Error(ErrorKind::EmptySubcurve, "ordering host has no components");
  if (!host.subset_of(x.all())) throw Error(ErrorKind::UnknownComponent, "ordering host is not a subcurve of the curve");
  if (!is_connected(x, host)) throw Error(ErrorKind::DisconnectedSubcurve, "ordering host is not connected");
}

void post_order(const CurveGraph& x, Subcurve host, std::size_t v, std::size_t parent_node, std::size_t parent,
                std::vector<std::size_t>& seq, std::vector<Attachment>& attachments, Subcurve& subtree) {
  std::vector<CurveGraph::Edge> children;
  for (const auto& edge : x.adjacency(v))
    if (edge.neighbor != parent && host.contains(edge.neighbor)) children.push_back(edge);
  std::sort(children.begin(), children.end(), [&](const auto& a, const auto& b) {
    return x.id_rank(a.neighbor) < x.id_rank(b.neighbor);
  });
  Subcurve mine = Subcurve::single(v);
  for (const auto& child : children) {
    Subcurve sub;
    post_order(x, host, child.neighbor, child.node, v, seq, attachments, sub);
    mine = mine | sub;
  }
  seq.push_back(v);
  if (parent_node != x.num_nodes()) attachments.push_back({mine, parent_node});
  subtree = mine;
}

}  // namespace

AdmissibleOrdering rooted_ordering(const CurveGraph& x, Subcurve host, std::size_t root) {
  require_connected_host(x, host);
  if (!host.contains(root)) throw Error(ErrorKind::InvalidArgument, "root is not a member of the host subcurve");
  std::vector<std::size_t> seq;
  std::vector<Attachment> attachments;
  Subcurve whole;
  post_order(x, host, root, x.num_nodes(), x.num_components(), seq, attachments, whole);
  return AdmissibleOrdering(host, std::move(seq), std::move(attachments));
}

AdmissibleOrdering canonical_ordering(const CurveGraph& x, Subcurve host) {
  require_connected_host(x, host);
  auto members = host.members();
  std::size_t root = *std::max_element(members.begin(), members.end(),
                                       [&](std::size_t a, std::size_t b) { return x.id_rank(a) < x.id_rank(b); });
  return rooted_ordering(x, host, root);
}

AdmissibleOrdering canonical_ordering(const CurveGraph& x) { return canonical_ordering(x, x.all()); }

AdmissibleOrdering verify_ordering(const CurveGraph& x, Subcurve host, std::span<const std::size_t> sequence) {
  require_connected_host(x, host);
  Subcurve listed;
  for (std::size_t c : sequence) {
    if (c >= x.num_components() || !host.contains(c) || listed.contains(c))
      throw Error(ErrorKind::InvalidArgument, "ordering is not a permutation of the host components");
    listed.insert(c);
  }
  if (listed != host) throw Error(ErrorKind::InvalidArgument, "ordering does not list every host component");

  const std::size_t r = sequence.size();
  std::vector<std::size_t> position(x.num_components(), 0);
  for (std::size_t i = 0; i < r; ++i) position[sequence[i]] = i + 1;
  const std::size_t last = sequence[r - 1];

  std::vector<Attachment> attachments;
  for (std::size_t i = 1; i < r; ++i) {
    const std::size_t ci = sequence[i - 1];
    auto pieces = connected_parts(x, host - Subcurve::single(ci));
    Subcurve rest;
    std::vector<std::vector<std::string>> violating;
    for (Subcurve piece : pieces) {
      if (piece.contains(last)) {
        rest = piece;
        continue;
      }
      bool later = false;
      piece.for_each([&](std::size_t c) { later = later || position[c] > i; });
      if (later) violating.push_back(x.ids(piece));
    }
    if (!violating.empty()) {
      std::string msg = "position " + std::to_string(i) + " (" + x.component(ci).id +
                        "): pieces of the host minus this component other than the one holding " +
                        x.component(last).id + " contain later components";
      throw NotAdmissibleError(i, std::move(violating), msg);
    }
    std::size_t node = x.num_nodes();
    for (const auto& edge : x.adjacency(ci))
      if (rest.contains(edge.neighbor)) node = edge.node;
    attachments.push_back({host - rest, node});
  }
  return AdmissibleOrdering(host, std::vector<std::size_t>(sequence.begin(), sequence.end()), std::move(attachments));
}

AdmissibleOrdering verify_ordering(const CurveGraph& x, Subcurve host, std::span<const std::string> sequence) {
  std::vector<std::size_t> seq;
  seq.reserve(sequence.size());
  for (const auto& id : sequence) seq.push_back(x.component_index(id));
  return verify_ordering(x, host, seq);
}

AdmissibleOrdering verify_ordering(const CurveGraph& x, std::span<const std::string> sequence) {
  return verify_ordering(x, x.all(), sequence);
}

const Attachment& attachment_data(const AdmissibleOrdering& ord, std::size_t i) {
  if (i < 1 || i >= ord.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "attachment index " + std::to_string(i) + " outside 1.." + std::to_string(ord.size() - 1));
  return ord.attachments()[i - 1];
}

std::vector<std::string> sequence_ids(const CurveGraph& x, const AdmissibleOrdering& ord) {
  std::vector<std::string> out;
  out.reserve(ord.size());
  for (std::size_t c : ord.sequence()) out.push_back(x.component(c).id);
  return out;
}

}  // namespace treejac
