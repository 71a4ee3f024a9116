#include <random>

#include "doctest.h"
#include "relcalc/error.hpp"
#include "relcalc/opinion.hpp"
#include "test_helpers.hpp"

using namespace relcalc;
using testutil::error_code_of;

namespace {

MassFunction table1_mass() {
  const Frame frame = Frame::make({"FRIENDLY", "HOSTILE"});
  const std::vector<std::pair<SubsetMask, double>> entries{
      {0b01, 0.2}, {0b10, 0.5}, {0b11, 0.3}};
  return MassFunction::make(frame, entries);
}

Opinion random_opinion(std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double b = unit(rng), d = unit(rng), u = unit(rng);
  const double total = b + d + u;
  if (total == 0.0) return Opinion{0, 0, 1, unit(rng)};
  return make_opinion(b / total, d / total, 1.0 - b / total - d / total, unit(rng));
}

}  // namespace

TEST_CASE("make_opinion enforces the additivity constraint") {
  const Opinion truth = make_opinion(1, 0, 0, 0.5);
  CHECK(classify_opinion(truth).count(OpinionFlag::logic_true) == 1);
  const Opinion falsity = make_opinion(0, 1, 0, 0.5);
  CHECK(classify_opinion(falsity).count(OpinionFlag::logic_false) == 1);
  CHECK(error_code_of([] { make_opinion(0.5, 0.6, 0.2, 0.5); }) == errc::not_additive);
  CHECK(error_code_of([] { make_opinion(-0.1, 0.8, 0.3, 0.5); }) == errc::out_of_range);
  CHECK(error_code_of([] { make_opinion(0.5, 0.3, 0.2, 1.4); }) == errc::out_of_range);
}

TEST_CASE("classify_opinion reproduces the special cases") {
  const auto vacuous = classify_opinion(make_opinion(0, 0, 1, 0.7));
  CHECK(vacuous == std::set<OpinionFlag>{OpinionFlag::uncertain, OpinionFlag::vacuous});

  const auto dogmatic = classify_opinion(make_opinion(0.7, 0.3, 0, 0.5));
  CHECK(dogmatic == std::set<OpinionFlag>{OpinionFlag::dogmatic});

  const auto uncertain = classify_opinion(make_opinion(0.2, 0.5, 0.3, 0.5));
  CHECK(uncertain == std::set<OpinionFlag>{OpinionFlag::uncertain});

  const auto truth = classify_opinion(make_opinion(1, 0, 0, 0.5));
  CHECK(truth.count(OpinionFlag::logic_true) == 1);
  CHECK(truth.count(OpinionFlag::dogmatic) == 1);
}

TEST_CASE("projection is b + a*u") {
  CHECK(projection(make_opinion(0.2, 0.5, 0.3, 0.5)) == doctest::Approx(0.35).epsilon(1e-12));
  CHECK(projection(make_opinion(0.7, 0.3, 0, 0.9)) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(projection(make_opinion(0, 0, 1, 0.25)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("complement swaps polarity and inverts the base rate") {
  const Opinion o = make_opinion(0.2, 0.5, 0.3, 0.5);
  const Opinion c = complement(o);
  CHECK(c.belief == doctest::Approx(0.5));
  CHECK(c.disbelief == doctest::Approx(0.2));
  CHECK(c.uncertainty == doctest::Approx(0.3));
  CHECK(c.base_rate == doctest::Approx(0.5));

  const Opinion truth = make_opinion(1, 0, 0, 0.5);
  const Opinion negated = complement(truth);
  CHECK(classify_opinion(negated).count(OpinionFlag::logic_false) == 1);
}

TEST_CASE("opinion_from_mass bridges belief functions to opinions") {
  const MassFunction m = table1_mass();
  const Opinion o = opinion_from_mass(m, 0b01, 0.5);
  CHECK(o.belief == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(o.disbelief == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(o.uncertainty == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(o.base_rate == doctest::Approx(0.5));

  const MassFunction vac = MassFunction::vacuous(m.frame());
  const Opinion ignorance = opinion_from_mass(vac, 0b10, 0.25);
  CHECK(ignorance.belief == 0.0);
  CHECK(ignorance.disbelief == doctest::Approx(0.0));
  CHECK(ignorance.uncertainty == doctest::Approx(1.0));
  CHECK(ignorance.base_rate == doctest::Approx(0.25));

  const std::vector<std::pair<SubsetMask, double>> dogmatic{{0b01, 1.0}};
  const MassFunction certain = MassFunction::make(m.frame(), dogmatic);
  const Opinion sure = opinion_from_mass(certain, 0b01, 0.5);
  CHECK(sure.belief == doctest::Approx(1.0));
  CHECK(sure.uncertainty == doctest::Approx(0.0));

  CHECK(error_code_of([&] { opinion_from_mass(m, m.frame().full_set(), 0.5); }) ==
        errc::whole_frame);
  CHECK(error_code_of([&] { opinion_from_mass(m, 0, 0.5); }) == errc::unknown_hypothesis);
  CHECK(error_code_of([&] { opinion_from_mass(m, 0b01, 1.5); }) == errc::out_of_range);
}

TEST_CASE("default base rate is uniform over the frame") {
  CHECK(default_base_rate(Frame::make({"F", "H"})) == doctest::Approx(0.5));
  CHECK(default_base_rate(Frame::make({"f", "n", "h"})) == doctest::Approx(1.0 / 3));
}

TEST_CASE("randomized opinion identities") {
  std::mt19937 rng(676767);
  for (int iter = 0; iter < 500; ++iter) {
    const Opinion o = random_opinion(rng);
    CHECK(o.belief + o.disbelief + o.uncertainty == doctest::Approx(1.0).epsilon(1e-9));

    const Opinion c = complement(o);
    CHECK(c.belief + c.disbelief + c.uncertainty == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(projection(c) == doctest::Approx(1.0 - projection(o)).epsilon(1e-12));

    const Opinion cc = complement(c);
    CHECK(cc.belief == doctest::Approx(o.belief));
    CHECK(cc.disbelief == doctest::Approx(o.disbelief));
    CHECK(cc.uncertainty == doctest::Approx(o.uncertainty));
    CHECK(cc.base_rate == doctest::Approx(o.base_rate));

    // Projection stays inside [b, b + u].
    const double e = projection(o);
    CHECK(e >= o.belief - 1e-12);
    CHECK(e <= o.belief + o.uncertainty + 1e-12);
  }
}

TEST_CASE("projection is monotone in belief and base rate") {
  const Opinion low_b = make_opinion(0.1, 0.5, 0.4, 0.5);
  const Opinion high_b = make_opinion(0.3, 0.3, 0.4, 0.5);
  CHECK(projection(high_b) > projection(low_b));

  const Opinion low_a = make_opinion(0.2, 0.4, 0.4, 0.1);
  const Opinion high_a = make_opinion(0.2, 0.4, 0.4, 0.9);
  CHECK(projection(high_a) > projection(low_a));
}

TEST_CASE("randomized opinion_from_mass always yields a valid opinion") {
  std::mt19937 rng(787878);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Frame frame = Frame::make({"F", "N", "H"});
  for (int iter = 0; iter < 200; ++iter) {
    double a = unit(rng), b = unit(rng), c = unit(rng), d = unit(rng);
    const double total = a + b + c + d;
    const std::vector<std::pair<SubsetMask, double>> entries{
        {0b001, a / total}, {0b010, b / total}, {0b110, c / total}, {0b111, d / total}};
    const MassFunction m = MassFunction::make(frame, entries);
    for (SubsetMask h = 1; h < frame.full_set(); ++h) {
      const Opinion o = opinion_from_mass(m, h, 1.0 / 3);
      CHECK(o.belief + o.disbelief + o.uncertainty == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(o.belief >= -1e-12);
      CHECK(o.uncertainty >= -1e-12);
      CHECK(o.disbelief >= -1e-12);
    }
  }
}
