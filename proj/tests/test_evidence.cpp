#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "relcalc/error.hpp"
#include "relcalc/evidence.hpp"
#include "test_helpers.hpp"

using namespace relcalc;
using testutil::error_code_of;

namespace {

Frame binary_frame() { return Frame::make({"FRIENDLY", "HOSTILE"}); }

MassFunction table1_mass() {
  const Frame frame = binary_frame();
  const std::vector<std::pair<SubsetMask, double>> entries{
      {frame.subset(std::vector<std::string>{"FRIENDLY"}), 0.2},
      {frame.subset(std::vector<std::string>{"HOSTILE"}), 0.5},
      {frame.full_set(), 0.3},
  };
  return MassFunction::make(frame, entries);
}

MassFunction random_mass(const Frame& frame, std::mt19937& rng) {
  const SubsetMask full = frame.full_set();
  std::uniform_int_distribution<int> count_dist(1, static_cast<int>(full));
  std::uniform_int_distribution<SubsetMask> subset_dist(1, full);
  std::uniform_real_distribution<double> value_dist(0.01, 1.0);
  const int count = count_dist(rng);
  std::vector<std::pair<SubsetMask, double>> entries;
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    entries.emplace_back(subset_dist(rng), value_dist(rng));
    total += entries.back().second;
  }
  for (auto& [subset, value] : entries) value /= total;
  return MassFunction::make(frame, entries);
}

}  // namespace

TEST_CASE("frame construction and subsets") {
  const Frame frame = Frame::make({"F", "N", "H"});
  CHECK(frame.size() == 3);
  CHECK(frame.full_set() == 0b111);
  CHECK(frame.subset(std::vector<std::string>{"H", "F"}) == 0b101);
  CHECK(frame.members(0b101) == std::vector<std::string>{"F", "H"});
  CHECK(error_code_of([&] { frame.subset(std::vector<std::string>{"X"}); }) ==
        errc::unknown_hypothesis);
  CHECK(error_code_of([] { Frame::make({}); }) == errc::validation_error);
  CHECK(error_code_of([] { Frame::make({"A", "A"}); }) == errc::validation_error);
  CHECK(error_code_of([] {
          Frame::make(std::vector<std::string>(17, "x"));
        }) == errc::validation_error);
}

TEST_CASE("make_mass validates and merges entries") {
  const Frame frame = binary_frame();
  CHECK(table1_mass().mass(0b01) == doctest::Approx(0.2));

  const std::vector<std::pair<SubsetMask, double>> vacuous{{frame.full_set(), 1.0}};
  CHECK(MassFunction::make(frame, vacuous).mass(0b11) == doctest::Approx(1.0));

  const std::vector<std::pair<SubsetMask, double>> short_sum{{0b01, 0.5}, {0b10, 0.4}};
  CHECK(error_code_of([&] { MassFunction::make(frame, short_sum); }) ==
        errc::not_normalized);

  const std::vector<std::pair<SubsetMask, double>> negative{{0b01, -0.2}, {0b10, 1.2}};
  CHECK(error_code_of([&] { MassFunction::make(frame, negative); }) == errc::negative_mass);

  const std::vector<std::pair<SubsetMask, double>> empty_set{{0, 0.5}, {0b11, 0.5}};
  CHECK(error_code_of([&] { MassFunction::make(frame, empty_set); }) == errc::empty_set_mass);

  const std::vector<std::pair<SubsetMask, double>> duplicated{{0b01, 0.4}, {0b01, 0.6}};
  CHECK(MassFunction::make(frame, duplicated).mass(0b01) == doctest::Approx(1.0));
}

TEST_CASE("belief and plausibility reproduce the two-nation table") {
  const MassFunction m = table1_mass();
  const SubsetMask friendly = 0b01, hostile = 0b10, whole = 0b11;
  CHECK(belief(m, friendly) == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(belief(m, hostile) == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(belief(m, whole) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(plausibility(m, friendly) == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(plausibility(m, hostile) == doctest::Approx(0.80).epsilon(1e-12));
  CHECK(plausibility(m, whole) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(error_code_of([&] { belief(m, 0b100); }) == errc::unknown_hypothesis);
}

TEST_CASE("combine_dempster has the vacuous mass as identity") {
  const MassFunction m = table1_mass();
  const MassFunction vac = MassFunction::vacuous(binary_frame());
  const MassFunction out = combine_dempster(vac, m);
  for (const auto& [subset, value] : m.masses()) {
    CHECK(out.mass(subset) == doctest::Approx(value).epsilon(1e-12));
  }
}

TEST_CASE("combine_dempster matches the derived two-observer example") {
  const Frame frame = binary_frame();
  const std::vector<std::pair<SubsetMask, double>> e1{{0b01, 0.6}, {0b11, 0.4}};
  const std::vector<std::pair<SubsetMask, double>> e2{{0b10, 0.5}, {0b11, 0.5}};
  const MassFunction m1 = MassFunction::make(frame, e1);
  const MassFunction m2 = MassFunction::make(frame, e2);
  const MassFunction out = combine_dempster(m1, m2);

  // Conflict K = 0.6 * 0.5 = 0.30; survivors renormalize by 0.7.
  CHECK(out.mass(0b01) == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
  CHECK(out.mass(0b10) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
  CHECK(out.mass(0b11) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));

  const auto reference = oracle::combine_enum(m1, m2);
  REQUIRE_FALSE(reference.total_conflict);
  for (const auto& [subset, value] : reference.masses) {
    CHECK(out.mass(subset) == doctest::Approx(value).epsilon(1e-12));
  }
}

TEST_CASE("combine_dempster detects total conflict and frame mismatch") {
  const Frame frame = binary_frame();
  const std::vector<std::pair<SubsetMask, double>> f_only{{0b01, 1.0}};
  const std::vector<std::pair<SubsetMask, double>> h_only{{0b10, 1.0}};
  const MassFunction dogmatic_f = MassFunction::make(frame, f_only);
  const MassFunction dogmatic_h = MassFunction::make(frame, h_only);
  CHECK(error_code_of([&] { combine_dempster(dogmatic_f, dogmatic_h); }) ==
        errc::total_conflict);

  const Frame other = Frame::make({"FRIENDLY", "NEUTRAL"});
  const std::vector<std::pair<SubsetMask, double>> entries{{0b11, 1.0}};
  const MassFunction different = MassFunction::make(other, entries);
  CHECK(error_code_of([&] { combine_dempster(dogmatic_f, different); }) ==
        errc::frame_mismatch);
}

TEST_CASE("ds_table reproduces the two-nation summary layout") {
  const BeliefSummary summary = ds_table(table1_mass());
  REQUIRE(summary.rows.size() == 3);
  CHECK(summary.rows[0].belief == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(summary.rows[0].plausibility == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(summary.rows[0].uncertainty == doctest::Approx(0.30).epsilon(1e-12));
  CHECK(summary.rows[1].belief == doctest::Approx(0.50).epsilon(1e-12));
  CHECK(summary.rows[1].plausibility == doctest::Approx(0.80).epsilon(1e-12));
  CHECK(summary.rows[2].belief == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(summary.rows[2].plausibility == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(summary.uncertainty_gap == doctest::Approx(0.30).epsilon(1e-12));

  const BeliefSummary vac = ds_table(MassFunction::vacuous(binary_frame()));
  CHECK(vac.rows[0].belief == 0.0);
  CHECK(vac.rows[0].plausibility == doctest::Approx(1.0));
  CHECK(vac.rows[1].belief == 0.0);
  CHECK(vac.rows[1].plausibility == doctest::Approx(1.0));
  CHECK(vac.uncertainty_gap == doctest::Approx(1.0));

  const std::vector<std::pair<SubsetMask, double>> dogmatic{{0b01, 1.0}};
  const BeliefSummary dog = ds_table(MassFunction::make(binary_frame(), dogmatic));
  CHECK(dog.rows[0].belief == doctest::Approx(1.0));
  CHECK(dog.rows[0].plausibility == doctest::Approx(1.0));
  CHECK(dog.rows[1].belief == 0.0);
  CHECK(dog.rows[1].plausibility == 0.0);
  CHECK(dog.uncertainty_gap == doctest::Approx(0.0));
}

TEST_CASE("randomized belief functions agree with subset enumeration") {
  std::mt19937 rng(424242);
  for (std::size_t frame_size : {2u, 3u}) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < frame_size; ++i) labels.push_back("H" + std::to_string(i));
    const Frame frame = Frame::make(labels);
    for (int iter = 0; iter < 250; ++iter) {
      const MassFunction m = random_mass(frame, rng);
      for (SubsetMask subset = 0; subset <= frame.full_set(); ++subset) {
        const double bel = belief(m, subset);
        const double pl = plausibility(m, subset);
        CHECK(std::abs(bel - oracle::belief_enum(m, subset)) < 1e-12);
        CHECK(std::abs(pl - oracle::plausibility_enum(m, subset)) < 1e-12);
        CHECK(bel <= pl + 1e-12);
        CHECK(pl <= 1.0 + 1e-12);
        const SubsetMask complement = frame.full_set() & ~subset;
        CHECK(pl == doctest::Approx(1.0 - belief(m, complement)).epsilon(1e-12));
        CHECK(belief(m, subset) + belief(m, complement) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("randomized combination is commutative and matches enumeration") {
  std::mt19937 rng(515151);
  const Frame frame = Frame::make({"F", "N", "H"});
  int combined = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const MassFunction a = random_mass(frame, rng);
    const MassFunction b = random_mass(frame, rng);
    const auto reference = oracle::combine_enum(a, b);
    if (reference.total_conflict) {
      CHECK(error_code_of([&] { combine_dempster(a, b); }) == errc::total_conflict);
      continue;
    }
    const MassFunction ab = combine_dempster(a, b);
    const MassFunction ba = combine_dempster(b, a);
    double total = 0.0;
    for (SubsetMask subset = 1; subset <= frame.full_set(); ++subset) {
      CHECK(std::abs(ab.mass(subset) - ba.mass(subset)) < 1e-12);
      const auto it = reference.masses.find(subset);
      const double expected = it == reference.masses.end() ? 0.0 : it->second;
      CHECK(std::abs(ab.mass(subset) - expected) < 1e-12);
      total += ab.mass(subset);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

    const MassFunction with_vacuous = combine_dempster(a, MassFunction::vacuous(frame));
    for (SubsetMask subset = 1; subset <= frame.full_set(); ++subset) {
      CHECK(std::abs(with_vacuous.mass(subset) - a.mass(subset)) < 1e-12);
    }
    ++combined;
  }
  CHECK(combined > 400);  // total conflict should be rare with these generators
}
