#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pencils/pencil.hpp"
#include "pencils/real.hpp"

namespace pencils {

struct SampleItem {
  Pencil pencil;
  Integer height;
  bool nondegenerate = false;
  /// Shortest-vector ratio sqrt(min (v,v)_H) / det(H)^(1/2n); zero for degenerate items.
  double ratio = 0;
  /// Iwasawa t-coordinates of the LLL-reduced covariant.
  std::vector<double> t;
  int real_roots = 0;
  bool det_identity = false;
};

struct SampleBatch {
  std::size_t n = 0;
  long box_bound = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<SampleItem> items;

  std::size_t nondegenerate_count() const;
};

/// Entries of A and B uniform in [-B, B]; item i depends only on (seed, i).
SampleBatch sample_pencils(std::size_t n, long box_bound, std::size_t count, std::uint64_t seed, long precision = 128);

struct FrequencyRow {
  double eps;
  double frequency;
  std::size_t count;
};
/// Fraction of nondegenerate items with shortest-vector ratio below each eps.
std::vector<FrequencyRow> small_vector_frequency(const SampleBatch& batch, const std::vector<double>& eps_list);

/// Nondegenerate items counted by m = (number of real roots) / 2.
std::map<int, std::size_t> component_histogram(const SampleBatch& batch);

struct DensityRow {
  double X;
  double fraction;
  std::size_t count;
};
/// Fraction of forms with integer coefficients in (-X, X) that lie in F_delta(X).
std::vector<DensityRow> density_trend(int n, double delta, const std::vector<double>& X_list,
                                      std::size_t samples_per_X, std::uint64_t seed);

}  // namespace pencils
