#include "vrel/simkernel.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "vrel/rng.hpp"

namespace vrel {

const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::linear: return "linear";
    case KernelKind::rbf: return "rbf";
    case KernelKind::shifted_cosine: return "cosine";
    case KernelKind::softmax_triplet: return "softmax";
  }
  return "?";
}

KernelKind kernel_kind_from_string(const std::string& name) {
  if (name == "linear") return KernelKind::linear;
  if (name == "rbf") return KernelKind::rbf;
  if (name == "cosine" || name == "shifted_cosine") return KernelKind::shifted_cosine;
  if (name == "softmax" || name == "softmax_triplet") return KernelKind::softmax_triplet;
  throw ConfigError("kernel", "unknown kernel '" + name + "'");
}

void KernelSpec::validate() const {
  if (kind == KernelKind::rbf) {
    if (!(gamma > 0.0)) throw ConfigError("gamma", "must be > 0 for the rbf kernel");
    if (!(sigma > 0.0)) throw ConfigError("sigma", "must be > 0 for the rbf kernel");
  }
}

KernelSpec default_kernel(KernelKind kind) {
  KernelSpec spec;
  spec.kind = kind;
  spec.normalize_inputs = (kind == KernelKind::shifted_cosine);
  return spec;
}

void TripletLossSpec::validate() const {
  if (margin < 0.0) throw ConfigError("margin", "must be >= 0");
  if (lambda < 0.0) throw ConfigError("lambda", "must be >= 0");
}

TripletLossSpec default_loss(KernelKind kind) {
  TripletLossSpec spec;
  switch (kind) {
    case KernelKind::rbf:
      spec.margin = 0.1;
      spec.lambda = 1e-4;
      break;
    case KernelKind::softmax_triplet:
      spec.margin = 0.2;
      spec.lambda = 1e-4;
      break;
    default:
      spec.margin = 0.2;
      spec.lambda = 0.0;
      break;
  }
  return spec;
}

namespace {

void check_same_length(const Vector& p, const Vector& q) {
  if (p.size() != q.size()) {
    throw DataError("vector length mismatch: " + std::to_string(p.size()) + " vs " +
                    std::to_string(q.size()));
  }
}

Vector normalized_or_throw(const Vector& v) {
  const double n = v.norm();
  if (n == 0.0) throw DataError("degenerate embedding: zero norm vector cannot be normalized");
  return v / n;
}

}  // namespace

double l2_distance(const Vector& p, const Vector& q) {
  check_same_length(p, q);
  return (p - q).norm();
}

double rbf_similarity(const Vector& p, const Vector& q, const KernelSpec& spec) {
  spec.validate();
  const double d = l2_distance(p, q);
  const double exponent = spec.squared ? d * d : d;
  return std::exp(-exponent / (spec.gamma * spec.sigma * spec.sigma));
}

double shifted_cosine(const Vector& p, const Vector& q, bool normalize_inputs) {
  check_same_length(p, q);
  if (normalize_inputs) {
    return 0.5 + 0.5 * normalized_or_throw(p).dot(normalized_or_throw(q));
  }
  return 0.5 + 0.5 * p.dot(q);
}

double kernel_eval(const KernelSpec& spec, const Vector& p, const Vector& q) {
  switch (spec.kind) {
    case KernelKind::linear:
      check_same_length(p, q);
      if (spec.normalize_inputs) return normalized_or_throw(p).dot(normalized_or_throw(q));
      return p.dot(q);
    case KernelKind::rbf:
      return rbf_similarity(p, q, spec);
    case KernelKind::shifted_cosine:
      return shifted_cosine(p, q, spec.normalize_inputs);
    case KernelKind::softmax_triplet:
      throw ConfigError("kernel", "softmax is triplet-only and has no pairwise form");
  }
  throw ConfigError("kernel", "unknown kernel kind");
}

std::pair<double, double> softmax_triplet_similarity(const Vector& p, const Vector& p_pos,
                                                     const Vector& p_neg) {
  const double a = -l2_distance(p, p_pos);
  const double b = -l2_distance(p, p_neg);
  const double m = std::max(a, b);
  const double ea = std::exp(a - m);
  const double eb = std::exp(b - m);
  const double denom = ea + eb;
  return {ea / denom, eb / denom};
}

double hinge_term(double s_pos, double s_neg, double margin) {
  return std::max(0.0, margin + s_neg - s_pos);
}

double triplet_loss(double s_pos, double s_neg, const Vector& e_p, const Vector& e_pos,
                    const Vector& e_neg, const TripletLossSpec& spec) {
  spec.validate();
  return hinge_term(s_pos, s_neg, spec.margin) +
         spec.lambda * (e_p.norm() + e_pos.norm() + e_neg.norm());
}

double estimate_sigma(const std::vector<Vector>& sample, std::uint64_t seed) {
  const std::size_t n = sample.size();
  if (n < 2) throw DataError("estimate_sigma needs at least 2 vectors");
  constexpr std::size_t kMaxPairs = 1000;
  std::vector<double> dists;
  const std::size_t total_pairs = n * (n - 1) / 2;
  if (total_pairs <= kMaxPairs) {
    dists.reserve(total_pairs);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) dists.push_back(l2_distance(sample[i], sample[j]));
  } else {
    Rng rng(seed);
    dists.reserve(kMaxPairs);
    while (dists.size() < kMaxPairs) {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      dists.push_back(l2_distance(sample[i], sample[j]));
    }
  }
  std::sort(dists.begin(), dists.end());
  const std::size_t m = dists.size();
  const double median =
      (m % 2 == 1) ? dists[m / 2] : 0.5 * (dists[m / 2 - 1] + dists[m / 2]);
  if (median == 0.0) {
    std::cerr << "warning: all sampled pairwise distances are zero; sigma falls back to 1.0\n";
    return 1.0;
  }
  return median;
}

double estimate_sigma(const Matrix& rows, std::uint64_t seed) {
  std::vector<Vector> sample;
  sample.reserve(static_cast<std::size_t>(rows.rows()));
  for (Index i = 0; i < rows.rows(); ++i) sample.push_back(rows.row(i).transpose());
  return estimate_sigma(sample, seed);
}

}  // namespace vrel
