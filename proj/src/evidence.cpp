#include "relcalc/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

Frame Frame::make(std::vector<std::string> hypotheses) {
  if (hypotheses.empty()) {
    fail(errc::validation_error, "frame must contain at least one hypothesis");
  }
  if (hypotheses.size() > kMaxFrameSize) {
    std::ostringstream out;
    out << "frame has " << hypotheses.size() << " hypotheses, limit is " << kMaxFrameSize;
    fail(errc::validation_error, out.str());
  }
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    if (hypotheses[i].empty()) {
      fail(errc::validation_error, "frame labels must be non-empty");
    }
    for (std::size_t j = i + 1; j < hypotheses.size(); ++j) {
      if (hypotheses[i] == hypotheses[j]) {
        fail(errc::validation_error, "duplicate hypothesis label '" + hypotheses[i] + "'");
      }
    }
  }
  Frame frame;
  frame.labels_ = std::move(hypotheses);
  return frame;
}

SubsetMask Frame::subset(std::span<const std::string> hypotheses) const {
  SubsetMask mask = 0;
  for (const auto& label : hypotheses) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      fail(errc::unknown_hypothesis, "hypothesis '" + label + "' is not in the frame");
    }
    mask |= SubsetMask{1} << static_cast<std::size_t>(it - labels_.begin());
  }
  return mask;
}

std::vector<std::string> Frame::members(SubsetMask mask) const {
  std::vector<std::string> result;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (mask & (SubsetMask{1} << i)) result.push_back(labels_[i]);
  }
  return result;
}

MassFunction MassFunction::make(Frame frame,
                                std::span<const std::pair<SubsetMask, double>> entries) {
  std::map<SubsetMask, double> masses;
  for (const auto& [subset, value] : entries) {
    if (subset == 0) {
      fail(errc::empty_set_mass, "mass assigned to the empty set");
    }
    if (!frame.contains(subset)) {
      std::ostringstream out;
      out << "subset mask " << subset << " is not within the frame";
      fail(errc::unknown_hypothesis, out.str());
    }
    if (!std::isfinite(value) || value < 0.0) {
      std::ostringstream out;
      out << "mass " << value << " is negative";
      fail(errc::negative_mass, out.str());
    }
    masses[subset] += value;
  }
  double total = 0.0;
  for (const auto& [subset, value] : masses) total += value;
  if (std::abs(total - 1.0) > kTol) {
    std::ostringstream out;
    out << "masses sum to " << total << ", expected 1";
    fail(errc::not_normalized, out.str());
  }
  std::erase_if(masses, [](const auto& entry) { return entry.second == 0.0; });
  return MassFunction(std::move(frame), std::move(masses));
}

MassFunction MassFunction::vacuous(Frame frame) {
  const std::pair<SubsetMask, double> entry{frame.full_set(), 1.0};
  return make(std::move(frame), std::span(&entry, 1));
}

double MassFunction::mass(SubsetMask subset) const {
  auto it = masses_.find(subset);
  return it == masses_.end() ? 0.0 : it->second;
}

namespace {

void check_subset(const MassFunction& m, SubsetMask subset) {
  if (!m.frame().contains(subset)) {
    std::ostringstream out;
    out << "subset mask " << subset << " is not within the frame";
    fail(errc::unknown_hypothesis, out.str());
  }
}

}  // namespace

double belief(const MassFunction& m, SubsetMask subset) {
  check_subset(m, subset);
  double total = 0.0;
  for (const auto& [focal, value] : m.masses()) {
    if ((focal & subset) == focal) total += value;
  }
  return total;
}

double plausibility(const MassFunction& m, SubsetMask subset) {
  check_subset(m, subset);
  double total = 0.0;
  for (const auto& [focal, value] : m.masses()) {
    if ((focal & subset) != 0) total += value;
  }
  return total;
}

MassFunction combine_dempster(const MassFunction& a, const MassFunction& b) {
  if (!(a.frame() == b.frame())) {
    fail(errc::frame_mismatch, "mass functions are defined over different frames");
  }
  double conflict = 0.0;
  std::map<SubsetMask, double> numerator;
  for (const auto& [sa, va] : a.masses()) {
    for (const auto& [sb, vb] : b.masses()) {
      const SubsetMask meet = sa & sb;
      const double product = va * vb;
      if (meet == 0) {
        conflict += product;
      } else {
        numerator[meet] += product;
      }
    }
  }
  const double scale = 1.0 - conflict;
  if (scale <= kTol) {
    std::ostringstream out;
    out << "total conflict between the two mass functions (K = " << conflict << ")";
    fail(errc::total_conflict, out.str());
  }
  std::vector<std::pair<SubsetMask, double>> entries;
  entries.reserve(numerator.size());
  for (const auto& [subset, value] : numerator) {
    entries.emplace_back(subset, value / scale);
  }
  return MassFunction::make(a.frame(), entries);
}

BeliefSummary ds_table(const MassFunction& m) {
  BeliefSummary summary;
  double singleton_mass = 0.0;
  for (std::size_t i = 0; i < m.frame().size(); ++i) {
    const SubsetMask subset = m.frame().singleton(i);
    BeliefRow row;
    row.subset = subset;
    row.mass = m.mass(subset);
    row.belief = belief(m, subset);
    row.plausibility = plausibility(m, subset);
    row.uncertainty = row.plausibility - row.belief;
    singleton_mass += row.mass;
    summary.rows.push_back(row);
  }
  BeliefRow whole;
  whole.subset = m.frame().full_set();
  whole.mass = m.mass(whole.subset);
  whole.belief = belief(m, whole.subset);
  whole.plausibility = plausibility(m, whole.subset);
  whole.uncertainty = whole.plausibility - whole.belief;
  summary.rows.push_back(whole);
  summary.uncertainty_gap = 1.0 - singleton_mass;
  return summary;
}

}  // namespace relcalc
