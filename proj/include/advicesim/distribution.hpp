#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "advicesim/rng.hpp"
#include "advicesim/types.hpp"

namespace advicesim {

/// Sparse probability distribution over n-bit strings, addressed as
/// integers in [0, 2^n). Canonical form: entries sorted by index, no
/// zero-probability entries, total mass 1 within kNormalizationTol.
/// Immutable after construction; safe to share across threads.
class FiniteDistribution {
 public:
  static constexpr double kNormalizationTol = 1e-9;

  FiniteDistribution(int n, std::vector<std::pair<Index, double>> entries);

  static FiniteDistribution uniform(int n);
  static FiniteDistribution point_mass(int n, Index x);

  int width() const { return n_; }
  std::uint64_t domain() const { return domain_size(n_); }
  const std::vector<std::pair<Index, double>>& entries() const {
    return entries_;
  }
  std::size_t support_size() const { return entries_.size(); }

  /// Probability of x; 0 for indices outside the stored support.
  double prob(Index x) const;

  /// Total probability of a set of indices (duplicates counted once).
  double mass_of(const std::vector<Index>& sorted_unique) const;

  std::string to_json_string(int indent = -1) const;
  static FiniteDistribution from_json_string(const std::string& text);

  bool operator==(const FiniteDistribution&) const = default;

 private:
  int n_;
  std::vector<std::pair<Index, double>> entries_;
};

FiniteDistribution make_distribution(
    int n, std::vector<std::pair<Index, double>> entries);

struct SampleBatch {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<Index> indices;

  std::size_t size() const { return indices.size(); }
};

/// Inverse-CDF sampler: preparation linear in the support size, each
/// draw one binary search. Holds no mutable state; pass a generator.
class Sampler {
 public:
  explicit Sampler(const FiniteDistribution& dist);

  Index draw(rng::SplitMix64& gen) const { return support_[draw_slot(gen)]; }

  /// Position within the support array (ascending index order).
  std::size_t draw_slot(rng::SplitMix64& gen) const;

  const std::vector<Index>& support() const { return support_; }

 private:
  std::vector<Index> support_;
  std::vector<double> cdf_;
};

/// count i.i.d. draws; deterministic for fixed (dist, count, seed).
SampleBatch sample(const FiniteDistribution& dist, std::int64_t count,
                   std::uint64_t seed);

/// Histogram of count draws, aligned with dist.entries(). Equivalent to
/// tallying sample(...) but without materializing the batch.
std::vector<std::int64_t> sample_support_counts(const FiniteDistribution& dist,
                                                std::int64_t count,
                                                std::uint64_t seed);

/// Empirical distribution of a batch: entry(z) = count(z) / N.
FiniteDistribution empirical(const SampleBatch& batch);

/// Empirical distribution of count fresh draws (support-count fast path).
FiniteDistribution empirical_from_draws(const FiniteDistribution& dist,
                                        std::int64_t count,
                                        std::uint64_t seed);

/// Total variation: (1/2) sum_x |P1(x) - P2(x)| over the support union.
double tv_distance(const FiniteDistribution& d1, const FiniteDistribution& d2);

/// The conditional distribution given x is outside S: zero on S,
/// P(x)/P(not in S) elsewhere.
FiniteDistribution condition_outside(const FiniteDistribution& dist,
                                     std::vector<Index> s);

/// Seeded random distribution with the given support size; weights are
/// i.i.d. Exp(1) normalized. Deterministic in (n, support_size, seed).
FiniteDistribution random_distribution(int n, std::uint64_t support_size,
                                       std::uint64_t seed);

}  // namespace advicesim
