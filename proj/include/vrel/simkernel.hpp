#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vrel/common.hpp"

namespace vrel {

enum class KernelKind { linear, rbf, shifted_cosine, softmax_triplet };

const char* to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& name);

struct KernelSpec {
  KernelKind kind = KernelKind::rbf;
  double gamma = 1.0;
  double sigma = 1.0;
  // The rbf exponent divides the plain distance by gamma*sigma^2; `squared`
  // switches to the squared distance for comparison runs.
  bool squared = false;
  bool normalize_inputs = false;

  void validate() const;
};

// Spec with per-kind conventions applied (cosine normalizes its inputs).
KernelSpec default_kernel(KernelKind kind);

struct TripletLossSpec {
  double margin = 0.2;
  double lambda = 0.0;

  void validate() const;
};

// Margins sit inside each kernel's output range; the norm penalty is only
// needed where embeddings can grow to force e^{-distance} toward zero.
TripletLossSpec default_loss(KernelKind kind);

double l2_distance(const Vector& p, const Vector& q);

// exp(-distance / (gamma * sigma^2)), or squared distance when spec.squared.
double rbf_similarity(const Vector& p, const Vector& q, const KernelSpec& spec);

// 0.5 + 0.5 * <p, q>, with l2 normalization applied first when requested.
// Throws DataError on a zero-norm input when normalization is requested.
double shifted_cosine(const Vector& p, const Vector& q, bool normalize_inputs = true);

// Pairwise kernel dispatch; softmax_triplet is three-argument and rejected here.
double kernel_eval(const KernelSpec& spec, const Vector& p, const Vector& q);

// (s_pos, s_neg) with a shared denominator, evaluated with max subtraction so
// large distances cannot underflow the pair independently.
std::pair<double, double> softmax_triplet_similarity(const Vector& p, const Vector& p_pos,
                                                     const Vector& p_neg);

// max(0, margin + s_neg - s_pos) + lambda * (|e_p| + |e_pos| + |e_neg|)
double triplet_loss(double s_pos, double s_neg, const Vector& e_p, const Vector& e_pos,
                    const Vector& e_neg, const TripletLossSpec& spec);

double hinge_term(double s_pos, double s_neg, double margin);

// Median pairwise distance over a seeded subsample of at most 1000 pairs.
// Falls back to 1.0 (with a stderr warning) when the sample is degenerate.
double estimate_sigma(const std::vector<Vector>& sample, std::uint64_t seed = 0x5eed);
double estimate_sigma(const Matrix& rows, std::uint64_t seed = 0x5eed);

}  // namespace vrel
