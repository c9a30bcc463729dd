#include "pencils/equidist.hpp"

#include <cmath>

#include "pencils/covariant.hpp"
#include "pencils/errors.hpp"
#include "pencils/heights.hpp"
#include "pencils/random.hpp"
#include "pencils/reduce.hpp"

namespace pencils {

namespace {

SampleItem sample_item(std::size_t n, long box, std::uint64_t seed, std::size_t index, long precision) {
  ItemRng rng(seed, index);
  IntMatrix a(n, n), b(n, n);
  for (IntMatrix* m : {&a, &b})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) (*m)(i, j) = (*m)(j, i) = rng.uniform(-box, box);
  SampleItem item;
  item.pencil = Pencil(a, b);
  BinaryForm f = invariant_form(item.pencil);
  item.height = height(f);
  item.nondegenerate = discriminant(f) != 0;
  if (!item.nondegenerate) return item;
  item.real_roots = real_root_count(f);
  GramMatrix h = reduction_covariant(item.pencil, precision);
  GramMatrix reduced = transform(h, lll_gram(h, Rational(1), precision));
  item.ratio = shortest_vector_ratio(reduced).to_double();
  for (const auto& t : iwasawa_coordinates(reduced).t) item.t.push_back(t.to_double());
  item.det_identity = det_identity_check(item.pencil, precision).agree;
  return item;
}

}  // namespace

std::size_t SampleBatch::nondegenerate_count() const {
  std::size_t c = 0;
  for (const auto& it : items) c += it.nondegenerate;
  return c;
}

SampleBatch sample_pencils(std::size_t n, long box_bound, std::size_t count, std::uint64_t seed, long precision) {
  if (n < 2) throw Error(ErrorKind::RangeError, "n must be at least 2");
  if (box_bound < 1) throw Error(ErrorKind::RangeError, "box bound must be positive");
  SampleBatch batch{n, box_bound, count, seed, {}};
  batch.items.reserve(count);
  for (std::size_t i = 0; i < count; ++i) batch.items.push_back(sample_item(n, box_bound, seed, i, precision));
  return batch;
}

std::vector<FrequencyRow> small_vector_frequency(const SampleBatch& batch, const std::vector<double>& eps_list) {
  const std::size_t total = batch.nondegenerate_count();
  if (total == 0) throw Error(ErrorKind::EmptyStatistics, "batch has no nondegenerate items");
  std::vector<FrequencyRow> rows;
  for (double eps : eps_list) {
    if (!(eps > 0)) throw Error(ErrorKind::RangeError, "eps must be positive");
    std::size_t hits = 0;
    for (const auto& it : batch.items) hits += it.nondegenerate && it.ratio < eps;
    rows.push_back({eps, static_cast<double>(hits) / static_cast<double>(total), hits});
  }
  return rows;
}

std::map<int, std::size_t> component_histogram(const SampleBatch& batch) {
  std::map<int, std::size_t> out;
  for (const auto& it : batch.items)
    if (it.nondegenerate) ++out[it.real_roots / 2];
  return out;
}

std::vector<DensityRow> density_trend(int n, double delta, const std::vector<double>& X_list,
                                      std::size_t samples_per_X, std::uint64_t seed) {
  std::vector<DensityRow> rows;
  if (samples_per_X == 0) return rows;
  for (std::size_t k = 0; k < X_list.size(); ++k) {
    const double X = X_list[k];
    const long bound = static_cast<long>(std::ceil(X)) - 1;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples_per_X; ++i) {
      ItemRng rng(splitmix64(seed + k), i);
      std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
      for (auto& v : c) v = rng.uniform(-bound, bound);
      hits += family_membership(BinaryForm(c), {X, delta});
    }
    rows.push_back({X, static_cast<double>(hits) / static_cast<double>(samples_per_X), hits});
  }
  return rows;
}

}  // namespace pencils
