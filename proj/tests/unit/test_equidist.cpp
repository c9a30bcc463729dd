#include <cmath>

#include "doctest.h"
#include "pencils/equidist.hpp"
#include "pencils/errors.hpp"
#include "support.hpp"

using namespace pencils;

TEST_CASE("sampling is reproducible") {
  CHECK(sample_pencils(4, 3, 0, 1).items.empty());
  SampleBatch a = sample_pencils(4, 3, 40, 12345), b = sample_pencils(4, 3, 40, 12345);
  REQUIRE(a.items.size() == 40);
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(a.items[i].pencil == b.items[i].pencil);
    CHECK(a.items[i].ratio == b.items[i].ratio);
    CHECK(a.items[i].t == b.items[i].t);
  }
  // Item i does not depend on how many items are drawn.
  SampleBatch c = sample_pencils(4, 3, 10, 12345);
  for (std::size_t i = 0; i < 10; ++i) CHECK(c.items[i].pencil == a.items[i].pencil);
  SampleBatch d = sample_pencils(4, 3, 10, 54321);
  CHECK_FALSE(d.items[0].pencil == a.items[0].pencil);
}

TEST_CASE("batch statistics") {
  SampleBatch batch = sample_pencils(4, 3, 300, 7);
  std::size_t degenerate = 0;
  for (const auto& it : batch.items) {
    degenerate += !it.nondegenerate;
    if (!it.nondegenerate) continue;
    CHECK(it.det_identity);
    CHECK(it.ratio > 0);
    CHECK(it.ratio <= std::pow(2.0, 0.25) + 1e-9);  // Hermite constant bound in dimension 4
    CHECK(it.t.size() == 4);
  }
  CHECK(degenerate < 15);
  auto rows = small_vector_frequency(batch, {2.0, 0.8, 0.5, 0.3, 0.05});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].frequency <= rows[i - 1].frequency);
  CHECK(rows.back().frequency < rows[1].frequency);
  auto hist = component_histogram(batch);
  std::size_t total = 0;
  for (const auto& [m, c] : hist) {
    CHECK(m >= 0);
    CHECK(m <= 2);
    total += c;
  }
  CHECK(total == batch.nondegenerate_count());
  CHECK(hist.size() == 3);
}

TEST_CASE("statistics edge cases") {
  SampleBatch empty = sample_pencils(4, 3, 0, 1);
  CHECK(component_histogram(empty).empty());
  try {
    small_vector_frequency(empty, {0.5});
    FAIL("expected EmptyStatistics");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyStatistics);
  }
  SampleBatch diag;
  diag.n = 4;
  for (long s = 1; s <= 5; ++s) {
    SampleItem it;
    it.pencil = testing::diagonal_pencil({1, 1, 1, 1}, {s, s + 1, -s, 7});
    it.nondegenerate = true;
    it.real_roots = 4;
    diag.items.push_back(it);
  }
  auto hist = component_histogram(diag);
  CHECK(hist.size() == 1);
  CHECK(hist[2] == 5);
}

TEST_CASE("density trend") {
  CHECK(density_trend(4, 0.3, {10, 1000}, 0, 1).empty());
  auto rows = density_trend(4, 0.3, {10, 1000}, 400, 5);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].fraction > rows[0].fraction);
  auto strict = density_trend(4, 0.0, {10, 1000}, 400, 5);
  CHECK(strict[0].fraction <= rows[0].fraction);
  CHECK(strict[1].fraction <= rows[1].fraction);
}
