#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mixedwitt/mixed.hpp"

namespace mixedwitt {

// Signature maps of the mixed Witt ring of (Q, gamma).
//
// At each ordering P there are exactly two ring morphisms W~(Q, gamma) -> Z
// extending sign_P; they agree on W(K), vanish on one of the two hermitian
// parts and differ by a sign on the other. Which part survives depends on
// whether Q splits at P:
//
//   split P (X_1):     hermitian part -> 0, skew part carries the signature
//   nonsplit P (X_-1): skew part -> 0, hermitian part carries the signature
//
// Labels: at nonsplit P the map with <1>_gamma -> +2 is eta = +1 (canonical
// retraction). At split P no label is canonical, so a reference skew form R
// with nonzero signature at P is required, and eta = +1 is the map that makes
// the signature of R positive.

enum class Stratum { Split, Nonsplit };

struct OrderingPartition {
  std::vector<Ordering> x_plus;   // Q splits at P
  std::vector<Ordering> x_minus;  // Q ramifies at P

  Stratum stratum_of(const Ordering& P) const;
};

OrderingPartition partition_orderings(const QuaternionAlgebra& algebra);
Stratum stratum(const QuaternionAlgebra& algebra, const Ordering& P);

/// 2 * sum sign_P(ai), the eta = +1 signature at a nonsplit ordering.
/// Throws WrongStratum at split P.
int herm_signature_nonsplit(const HermitianDiagonal& h, const Ordering& P);

/// Signature of R itself at split P: sqrt(sign_P(R.R)) >= 0.
int reference_magnitude(const SkewHermitianDiagonal& ref, const Ordering& P);

/// eta = +1 signature of s at split P, normalized so that the reference is
/// positive: sign_P(R.s) / |sign_P(R)|. Throws WrongStratum or
/// DegenerateReference.
int skew_signature_with_reference(const SkewHermitianDiagonal& s, const Ordering& P,
                                  const SkewHermitianDiagonal& ref);
/// Single-entry reference: normalizes <ref> to +2.
int skew_signature_with_reference(const SkewHermitianDiagonal& s, const Ordering& P, const PureQuaternion& ref);

/// +1 if the references r and r' define the same eta = +1 map at P, -1 if
/// opposite: sign_P(<r>.<r'>) / 4.
int reference_relative_sign(const PureQuaternion& r, const PureQuaternion& r2, const Ordering& P);

/// Which reference skew form to use at each split ordering.
class ReferencePolicy {
 public:
  /// No references; only usable when no split ordering meets a skew part.
  ReferencePolicy() = default;
  /// One form used at every split ordering.
  static ReferencePolicy global(SkewHermitianDiagonal ref);
  static ReferencePolicy single(const PureQuaternion& ref);
  /// Explicit form per ordering index.
  static ReferencePolicy per_ordering(std::map<std::size_t, SkewHermitianDiagonal> refs);
  /// An independent single-entry reference at each split ordering. Labels at
  /// split orderings are then arbitrary; magnitudes and U(x) are not.
  static ReferencePolicy local_search(const QuaternionAlgebra& algebra);

  const SkewHermitianDiagonal* at(const Ordering& P) const;

 private:
  std::optional<SkewHermitianDiagonal> global_;
  std::map<std::size_t, SkewHermitianDiagonal> per_;
};

struct SignaturePair {
  int plus = 0;
  int minus = 0;

  int at(int eta) const { return eta > 0 ? plus : minus; }
  friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

/// (eta = +1, eta = -1) signatures of x at P. Throws MissingReference when P
/// is split, x has a skew part, and the policy has no reference at P.
SignaturePair signature_pair(const MixedElement& x, const Ordering& P, const ReferencePolicy& refs = {});

/// Orderings where the two signature maps differ on x.
std::vector<Ordering> principal_set(const MixedElement& x, const ReferencePolicy& refs = {});

/// A skew-hermitian form with nonzero signature at every split ordering,
/// plus the orderings where it is nonzero.
struct ReferenceForm {
  SkewHermitianDiagonal form;
  std::vector<std::size_t> nonzero_set;
};

inline constexpr std::size_t kDefaultReferenceBudget = 10000;

/// Deterministic search: the pool {i, j, k, i+-j, i+-k, j+-k}, then
/// x i + y j + w k with |x|, |y|, |w| <= 2, then rank-two sums of pool
/// elements. Throws SearchBudgetExceeded.
ReferenceForm find_reference(const QuaternionAlgebra& algebra, std::size_t budget = kDefaultReferenceBudget);

/// A choice of eta at each ordering of its domain, keyed by ordering index.
class PolarizationMap {
 public:
  PolarizationMap() = default;
  explicit PolarizationMap(std::map<std::size_t, int> labels);

  const std::map<std::size_t, int>& labels() const noexcept { return labels_; }
  std::optional<int> at(std::size_t index) const;
  bool contains(std::size_t index) const { return labels_.count(index) > 0; }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t size() const noexcept { return labels_.size(); }
  /// Throws InvalidArgument unless eta is +1 or -1.
  void set(std::size_t index, int eta);
  /// Total on all orderings of the field.
  bool is_global(const NumberField& field) const;
  /// The labels of both maps merged; throws DomainMismatch on overlap.
  PolarizationMap merged_with(const PolarizationMap& other) const;
  PolarizationMap opposite() const;

  friend bool operator==(const PolarizationMap&, const PolarizationMap&) = default;

 private:
  std::map<std::size_t, int> labels_;
};

/// s_x on U(x): the label whose signature of x is the larger one.
PolarizationMap principal_polarization(const MixedElement& x, const ReferencePolicy& refs = {});

/// P -> pol(P)-signature of x. Throws PartialPolarization if pol is not global.
std::map<std::size_t, int> total_signature(const MixedElement& x, const PolarizationMap& pol,
                                           const ReferencePolicy& refs = {});

/// Pointwise product f . s. Throws DomainMismatch when fn misses part of the
/// domain of pol.
PolarizationMap act_on_polarization(const std::map<std::size_t, int>& fn, const PolarizationMap& pol);

/// The automorphism induced by <a>_gamma: hermitian and skew entries scaled by a.
MixedElement standard_automorphism(const FieldElement& a, const MixedElement& x);
/// Orderings at which the standard automorphism by a swaps the two labels.
std::vector<std::size_t> swap_set(const FieldElement& a);

/// Covering polarization: the principal polarization of `split_cover` on the
/// split orderings joined with that of `nonsplit_cover` on the nonsplit ones.
/// Throws PartialPolarization if the union misses an ordering.
PolarizationMap assemble_global_polarization(const MixedElement& split_cover, const MixedElement& nonsplit_cover,
                                             const ReferencePolicy& refs);

/// Searches x1 + <lambda> x2 over a fixed pool of 20 small field elements for
/// an element with U = U(x1) u U(x2). Returns nothing if the pool fails.
std::optional<MixedElement> cover_union(const MixedElement& x1, const MixedElement& x2,
                                        const ReferencePolicy& refs = {});

/// A point of Spec W~(Q, gamma): the fundamental ideal, or the kernel of the
/// eta-signature at P reduced mod p (p = 0 or an odd prime).
struct SpectrumLabel {
  enum class Kind { Fundamental, Signature };
  Kind kind = Kind::Fundamental;
  std::size_t ordering = 0;
  Integer p = 0;
  int eta = 1;

  static SpectrumLabel fundamental() { return {}; }
  /// Throws InvalidArgument for p = 2 or p not prime, or eta not +-1.
  static SpectrumLabel signature(std::size_t ordering, const Integer& p, int eta);
  std::string to_string() const;
};

bool ideal_membership(const MixedElement& x, const SpectrumLabel& label, const ReferencePolicy& refs = {});

struct SpectrumReport {
  std::size_t ordering_count = 0;
  std::vector<Integer> primes;
  std::vector<SpectrumLabel> labels;
  /// Number of primes above I(K) (always 1) and above each I_{P,p}(K) (always 2).
  std::size_t fundamental_fiber = 1;
  std::vector<std::pair<SpectrumLabel, std::size_t>> fibers;  // (P, p) with eta unused -> size
  /// X~ = Spec_0: the p = 0 labels, two per ordering.
  std::vector<SpectrumLabel> xtilde;
  OrderingPartition partition;
};

/// Enumerates {I(Q, gamma)} u {I^eta_{P,p} : eta = +-1, p in {0} u primes}.
/// Throws InvalidArgument if a listed prime is 2 or composite.
SpectrumReport spectrum_report(const QuaternionAlgebra& algebra, const std::vector<Integer>& primes);

}  // namespace mixedwitt
