#include "treejac/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treejac/error.hpp"

namespace treejac {

std::int64_t TorsionFreeProfile::total_degree() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0}) +
         static_cast<std::int64_t>(non_locally_free.size());
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Stable: return "Stable";
    case Status::StrictlySemistable: return "StrictlySemistable";
    case Status::Unstable: return "Unstable";
  }
  return "Unknown";
}

namespace {

std::int64_t restriction_degree_unchecked(const CurveGraph& x, const TorsionFreeProfile& p, Subcurve d) noexcept {
  std::int64_t deg = 0;
  d.for_each([&](std::size_t c) { deg += p.degrees[c]; });
  return deg + static_cast<std::int64_t>((interior_nodes(x, d) & p.non_locally_free).size());
}

void require_profile_shape(const CurveGraph& x, const TorsionFreeProfile& p) {
  if (p.degrees.size() != x.num_components())
    throw Error(ErrorKind::InvalidArgument, "profile lists " + std::to_string(p.degrees.size()) +
                                                " degrees for a curve with " + std::to_string(x.num_components()) +
                                                " components");
  if (!p.non_locally_free.subset_of(x.all_nodes()))
    throw Error(ErrorKind::UnknownNode, "profile refers to nodes outside the curve");
}

// Sign of mu(F^D) - mu(F) for the restriction F of p to the connected host W,
// both slopes taken with respect to the polarization restricted to W. The
// denominator h_W - h_D is positive, so this is the sign of
// h_D (d_W + chi_W) - h_W (d_D + chi_D).
int kernel_excess_sign(const CurveGraph& x, const TorsionFreeProfile& p, std::int64_t host_h, std::int64_t host_euler,
                       Subcurve d) noexcept {
  const std::int64_t hd = polarization_degree(x, d);
  const wide_int lhs = static_cast<wide_int>(hd) * host_euler;
  const wide_int rhs =
      static_cast<wide_int>(host_h) * (restriction_degree_unchecked(x, p, d) + euler_char(x, d));
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

struct ScanResult {
  Status status = Status::Stable;
  std::optional<Subcurve> witness;
};

// Kernel scan over every proper non-empty D of the host. When
// `want_witness` is false the scan stops at the first violation.
ScanResult scan_kernels(const CurveGraph& x, const TorsionFreeProfile& p, Subcurve host, bool want_witness) {
  const std::int64_t host_h = polarization_degree(x, host);
  const std::int64_t host_euler = restriction_degree_unchecked(x, p, host) + euler_char(x, host);
  ScanResult out;
  std::optional<Subcurve> equality;
  const std::uint64_t full = host.bits();
  for (std::uint64_t bits = (full - 1) & full; bits != 0; bits = (bits - 1) & full) {
    const Subcurve d(bits);
    int sign = kernel_excess_sign(x, p, host_h, host_euler, d);
    if (sign > 0) {
      if (!want_witness) return {Status::Unstable, std::nullopt};
      if (out.status != Status::Unstable || canonical_less(x, d, *out.witness)) out.witness = d;
      out.status = Status::Unstable;
    } else if (sign == 0 && out.status != Status::Unstable) {
      if (!equality || (want_witness && canonical_less(x, d, *equality))) equality = d;
    }
  }
  if (out.status != Status::Unstable && equality) {
    out.status = Status::StrictlySemistable;
    if (want_witness) out.witness = equality;
  }
  return out;
}

// Split rule for profiles that fail to be locally free somewhere: the sheaf is
// the direct sum of its restrictions to the pieces cut out by those nodes, and
// such a sum is semistable iff every summand is, with a common slope.
Status split_status(const CurveGraph& x, const TorsionFreeProfile& p) {
  const std::int64_t h = polarization_degree(x, x.all());
  const std::int64_t euler = p.total_degree() + euler_char(x, x.all());
  for (Subcurve piece : connected_parts(x, x.all(), p.non_locally_free)) {
    const std::int64_t euler_piece = restriction_degree_unchecked(x, p, piece) + euler_char(x, piece);
    if (static_cast<wide_int>(euler_piece) * h != static_cast<wide_int>(euler) * polarization_degree(x, piece))
      return Status::Unstable;
    if (piece.size() > 1 && scan_kernels(x, p, piece, false).status == Status::Unstable) return Status::Unstable;
  }
  return Status::StrictlySemistable;
}

Status status_only(const CurveGraph& x, const TorsionFreeProfile& p) {
  if (x.num_components() == 1) return Status::Stable;
  if (!p.is_line_bundle()) return split_status(x, p);
  return scan_kernels(x, p, x.all(), false).status;
}

void split_recursively(const CurveGraph& x, TorsionFreeProfile factor, Subcurve host, GradedDecomposition& out) {
  const std::int64_t host_degree = restriction_degree_unchecked(x, factor, host);
  const NodeSet inner = interior_nodes(x, host);

  auto cut = [&](std::size_t node) {
    const std::size_t a = x.endpoints(node).first;
    auto parts = connected_parts(x, host, NodeSet::single(node));
    Subcurve side_a = parts[0].contains(a) ? parts[0] : parts[1];
    return std::pair{side_a, host - side_a};
  };

  NodeSet singular = factor.non_locally_free & inner;
  if (!singular.empty()) {
    std::vector<std::size_t> nodes = singular.members();
    std::size_t node = *std::min_element(nodes.begin(), nodes.end(),
                                         [&](std::size_t u, std::size_t v) { return x.node(u).id < x.node(v).id; });
    auto [y, z] = cut(node);
    factor.non_locally_free.erase(node);
    const std::int64_t dy = restriction_degree_unchecked(x, factor, y);
    const std::int64_t dz = restriction_degree_unchecked(x, factor, z);
    out.splits.push_back({node, y, z, dy, dz, host_degree});
    split_recursively(x, factor, y, out);
    split_recursively(x, factor, z, out);
    return;
  }

  const std::int64_t host_h = polarization_degree(x, host);
  const std::int64_t host_euler = host_degree + euler_char(x, host);
  std::vector<std::size_t> nodes = inner.members();
  std::sort(nodes.begin(), nodes.end(), [&](std::size_t u, std::size_t v) { return x.node(u).id < x.node(v).id; });
  for (std::size_t node : nodes) {
    auto [side_a, side_b] = cut(node);
    for (auto [quotient, sub] : {std::pair{side_a, side_b}, std::pair{side_b, side_a}}) {
      if (kernel_excess_sign(x, factor, host_h, host_euler, quotient) != 0) continue;
      // F^Q lives on the other side and loses one degree where it met Q.
      auto [a, b] = x.endpoints(node);
      const std::size_t touch = sub.contains(a) ? a : b;
      TorsionFreeProfile kernel = factor;
      kernel.degrees[touch] -= 1;
      const std::int64_t dq = restriction_degree_unchecked(x, factor, quotient);
      const std::int64_t ds = restriction_degree_unchecked(x, kernel, sub);
      out.splits.push_back({node, quotient, sub, dq, ds, host_degree});
      split_recursively(x, factor, quotient, out);
      split_recursively(x, kernel, sub, out);
      return;
    }
  }
  host.for_each([&](std::size_t c) { out.pieces[c] = factor.degrees[c]; });
}

}  // namespace

std::int64_t restriction_degree(const CurveGraph& x, const TorsionFreeProfile& p, Subcurve d) {
  require_profile_shape(x, p);
  if (d.empty()) throw Error(ErrorKind::EmptySubcurve, "restriction to an empty subcurve");
  if (!d.subset_of(x.all())) throw Error(ErrorKind::UnknownComponent, "subcurve outside the curve");
  return restriction_degree_unchecked(x, p, d);
}

Rational kernel_slope(const DegreeContext& ctx, const TorsionFreeProfile& p, Subcurve d) {
  const CurveGraph& x = ctx.curve();
  const std::int64_t dd = restriction_degree(x, p, d);
  if (d == x.all()) throw Error(ErrorKind::FullCurve, "the kernel onto the whole curve is zero");
  const std::int64_t h = ctx.h();
  const std::int64_t hd = polarization_degree(x, d);
  const std::int64_t total = p.total_degree();
  return Rational(h * total - h * dd + hd * ctx.chi() - h * euler_char(x, d), h - hd);
}

StabilityVerdict check_semistability(const DegreeContext& ctx, const TorsionFreeProfile& p, bool with_graded) {
  const CurveGraph& x = ctx.curve();
  require_profile_shape(x, p);
  if (p.total_degree() != ctx.d())
    throw Error(ErrorKind::DegreeMismatch, "profile has total degree " + std::to_string(p.total_degree()) +
                                               ", expected " + std::to_string(ctx.d()));
  StabilityVerdict verdict;
  if (x.num_components() == 1) return verdict;

  const ScanResult scan = scan_kernels(x, p, x.all(), true);
  verdict.status = p.is_line_bundle() ? scan.status : split_status(x, p);
  if (verdict.status != scan.status)
    throw std::logic_error("direct-sum rule and kernel scan disagree on profile stability");
  verdict.witness = scan.witness;
  if (verdict.status == Status::StrictlySemistable && with_graded) verdict.graded = graded_by_splitting(ctx, p);
  return verdict;
}

GradedDecomposition graded_by_splitting(const DegreeContext& ctx, const TorsionFreeProfile& p) {
  const CurveGraph& x = ctx.curve();
  require_profile_shape(x, p);
  if (status_only(x, p) == Status::Unstable)
    throw Error(ErrorKind::InvalidArgument, "graded object requested for an unstable profile");
  GradedDecomposition out;
  out.pieces.assign(x.num_components(), 0);
  split_recursively(x, p, x.all(), out);
  return out;
}

std::vector<BoundEntry> bounds_check(const DegreeContext& ctx, const TorsionFreeProfile& p, BoundKind kind) {
  const CurveGraph& x = ctx.curve();
  require_profile_shape(x, p);
  std::vector<BoundEntry> out;
  const std::uint64_t full = x.all().bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const Subcurve d(bits);
    if (!is_connected(x, d)) continue;
    const std::int64_t dd = restriction_degree_unchecked(x, p, d);
    const Rational lower = ctx.threshold(d);
    const Rational upper = lower + Rational(static_cast<std::int64_t>(boundary_nodes(x, d).size()));
    const Rational deg(dd);
    const bool within = kind == BoundKind::Strict ? (lower < deg && deg < upper) : (lower <= deg && deg <= upper);
    out.push_back({d, dd, lower, upper, within});
  }
  std::sort(out.begin(), out.end(),
            [&](const BoundEntry& a, const BoundEntry& b) { return canonical_less(x, a.subcurve, b.subcurve); });
  return out;
}

bool profile_less(const CurveGraph& x, const TorsionFreeProfile& a, const TorsionFreeProfile& b) {
  if (a.non_locally_free.size() != b.non_locally_free.size())
    return a.non_locally_free.size() < b.non_locally_free.size();
  auto na = x.node_ids(a.non_locally_free), nb = x.node_ids(b.non_locally_free);
  if (na != nb) return na < nb;
  std::vector<std::size_t> order(x.num_components());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) { return x.id_rank(u) < x.id_rank(v); });
  for (std::size_t c : order)
    if (a.degrees[c] != b.degrees[c]) return a.degrees[c] < b.degrees[c];
  return false;
}

std::vector<TorsionFreeProfile> enumerate_profiles(const DegreeContext& ctx, ProfileKind kind,
                                                   const EnumerationOptions& options) {
  const CurveGraph& x = ctx.curve();
  const std::size_t n = x.num_components();
  if (n > options.max_components)
    throw Error(ErrorKind::ResourceCap, "enumeration is capped at " + std::to_string(options.max_components) +
                                            " components, curve has " + std::to_string(n));
  if (options.window < 0) throw Error(ErrorKind::InvalidArgument, "window must be non-negative");

  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    const Subcurve single = Subcurve::single(c);
    const Component& comp = x.component(c);
    const std::int64_t base = -comp.euler_char() + comp.h * ctx.t() + ctx.k(single).floor();
    lo[c] = base - options.window;
    hi[c] = base + static_cast<std::int64_t>(boundary_nodes(x, single).size()) + options.window;
  }

  std::vector<TorsionFreeProfile> out;
  const std::uint64_t node_sets = std::uint64_t{1} << x.num_nodes();
  TorsionFreeProfile candidate;
  candidate.degrees.assign(n, 0);
  for (std::uint64_t s = 0; s < node_sets; ++s) {
    candidate.non_locally_free = NodeSet(s);
    const std::int64_t line_total = ctx.d() - static_cast<std::int64_t>(candidate.non_locally_free.size());
    // odometer over the first n-1 components; the last one absorbs the remainder
    for (std::size_t c = 0; c + 1 < n; ++c) candidate.degrees[c] = lo[c];
    while (true) {
      std::int64_t partial = 0;
      for (std::size_t c = 0; c + 1 < n; ++c) partial += candidate.degrees[c];
      candidate.degrees[n - 1] = line_total - partial;
      if (candidate.degrees[n - 1] >= lo[n - 1] && candidate.degrees[n - 1] <= hi[n - 1]) {
        Status st = status_only(x, candidate);
        if (st == Status::Stable || (kind == ProfileKind::Semistable && st == Status::StrictlySemistable))
          out.push_back(candidate);
      }
      std::size_t c = 0;
      while (c + 1 < n && candidate.degrees[c] == hi[c]) {
        candidate.degrees[c] = lo[c];
        ++c;
      }
      if (c + 1 >= n) break;
      ++candidate.degrees[c];
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const TorsionFreeProfile& a, const TorsionFreeProfile& b) { return profile_less(x, a, b); });
  return out;
}

}  // namespace treejac
