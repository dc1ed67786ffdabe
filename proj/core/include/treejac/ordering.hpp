#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "treejac/curve.hpp"

namespace treejac {

struct Attachment {
  Subcurve subcurve;  // X_i
  std::size_t node;   // P_i, the only node joining X_i to the rest of the host
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// An ordering C_1..C_r of the components of a connected host subcurve such
/// that, for every i < r, every connected piece of host - C_i except the one
/// holding C_r consists of components placed before C_i.
///
/// Positions are 1-based in the public accessors, matching the usual C_i naming.
class AdmissibleOrdering {
 public:
  AdmissibleOrdering(Subcurve host, std::vector<std::size_t> sequence, std::vector<Attachment> attachments);

  [[nodiscard]] Subcurve host() const noexcept { return host_; }
  [[nodiscard]] std::size_t size() const noexcept { return sequence_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  /// Component at 1-based position i.
  [[nodiscard]] std::size_t at(std::size_t i) const { return sequence_.at(i - 1); }
  /// Attachments for positions 1..size()-1.
  [[nodiscard]] const std::vector<Attachment>& attachments() const noexcept { return attachments_; }

  friend bool operator==(const AdmissibleOrdering&, const AdmissibleOrdering&) = default;

 private:
  Subcurve host_;
  std::vector<std::size_t> sequence_;
  std::vector<Attachment> attachments_;
};

/// Post-order of the host's dual tree rooted at the component with the
/// lexicographically greatest id, children visited in increasing id order.
/// Errors: EmptySubcurve, DisconnectedSubcurve.
AdmissibleOrdering canonical_ordering(const CurveGraph& x, Subcurve host);
AdmissibleOrdering canonical_ordering(const CurveGraph& x);

/// Same traversal as canonical_ordering, rooted at `root` instead.
AdmissibleOrdering rooted_ordering(const CurveGraph& x, Subcurve host, std::size_t root);

/// Checks the admissibility condition position by position and computes the
/// attachments. Throws NotAdmissibleError at the first failing position;
/// InvalidArgument when `sequence` is not a permutation of the host.
AdmissibleOrdering verify_ordering(const CurveGraph& x, Subcurve host, std::span<const std::size_t> sequence);
AdmissibleOrdering verify_ordering(const CurveGraph& x, std::span<const std::string> sequence);
AdmissibleOrdering verify_ordering(const CurveGraph& x, Subcurve host, std::span<const std::string> sequence);

/// (X_i, P_i) for 1 <= i <= size()-1. Errors: IndexOutOfRange.
const Attachment& attachment_data(const AdmissibleOrdering& ord, std::size_t i);

std::vector<std::string> sequence_ids(const CurveGraph& x, const AdmissibleOrdering& ord);

}  // namespace treejac
