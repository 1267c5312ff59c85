#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "concord/feature_index.hpp"
#include "concord/labels.hpp"
#include "concord/lexicon.hpp"

namespace concord {

enum class MonotoneDirection : std::uint8_t { Ascending, Descending };

/// Ties one emission feature's five per-label weights to the ordinal scale:
/// ascending for positive-lexicon features, descending for negative ones.
struct ConstraintGroup {
  std::uint32_t feature_id = 0;
  std::string feature_name;
  MonotoneDirection direction = MonotoneDirection::Ascending;
};

/// Free variables behind one constrained feature: a base value and four
/// increment roots. Natural weights are
///   mu_j = base +/- sum_{i<=j} root_i^2   (j = 0..4, roots apply from j=1),
/// so adjacent gaps are exactly +/- root^2 and the space is unconstrained.
struct AuxParams {
  double base = 0.0;
  std::array<double, kNumLabels - 1> roots{};  // roots[i] drives gap j=i -> j=i+1
};

/// Maps aux variables to the five natural weights.
std::array<double, kNumLabels> reparameterize(const AuxParams& aux,
                                              MonotoneDirection dir);

/// Inverse on the monotone set: any monotone five-vector is representable
/// (base = first value, roots = sqrt of the gaps).
AuxParams reparameterize_inverse(std::span<const double, kNumLabels> natural,
                                 MonotoneDirection dir);

/// Chain rule: folds d(objective)/d(natural weights) into gradients with
/// respect to (base, roots).
void chain_gradient(const AuxParams& aux, MonotoneDirection dir,
                    std::span<const double, kNumLabels> natural_grad,
                    double& base_grad,
                    std::array<double, kNumLabels - 1>& root_grads);

/// One group per emission feature whose observation key exactly equals a
/// lexicon entry's canonical key; ascending for M_p, descending for M_n.
/// Features absent from the index are skipped. Output sorted by feature id.
std::vector<ConstraintGroup> build_constraints(const Lexicon& lexicon,
                                               const FeatureIndex& index);

struct MonotonicityViolation {
  std::string feature_name;
  OrdinalLabel lower = OrdinalLabel::NN;  // the pair (lower, next on scale)
  double gap = 0.0;                       // constraint slack; negative = violated
};

/// Checks every lexicon-bound emission column of `mu` (layout: feature-major,
/// mu[feature*5 + label]) against its direction. Exact comparisons.
std::vector<MonotonicityViolation> verify_monotonicity(
    std::span<const double> mu, const FeatureIndex& index,
    const Lexicon& lexicon);

}  // namespace concord
