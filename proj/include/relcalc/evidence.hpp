#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relcalc {

/// Subsets of a frame are bit-sets over the frame's hypothesis ordering.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxFrameSize = 16;

/// Finite frame of discernment: an ordered set of distinct hypothesis labels.
class Frame {
 public:
  static Frame make(std::vector<std::string> hypotheses);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  SubsetMask full_set() const { return (SubsetMask{1} << labels_.size()) - 1; }
  SubsetMask singleton(std::size_t index) const { return SubsetMask{1} << index; }

  /// Mask for the given hypothesis labels. Throws UnknownHypothesis.
  SubsetMask subset(std::span<const std::string> hypotheses) const;

  /// Labels of the hypotheses in `mask`, in frame order.
  std::vector<std::string> members(SubsetMask mask) const;

  bool contains(SubsetMask mask) const { return (mask & ~full_set()) == 0; }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Basic mass assignment over non-empty subsets of a frame. Masses are
/// nonnegative and sum to 1; zero entries are dropped.
class MassFunction {
 public:
  static MassFunction make(Frame frame,
                           std::span<const std::pair<SubsetMask, double>> entries);

  /// Total ignorance: all mass on the whole frame.
  static MassFunction vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  const std::map<SubsetMask, double>& masses() const { return masses_; }
  double mass(SubsetMask subset) const;

 private:
  MassFunction(Frame frame, std::map<SubsetMask, double> masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  Frame frame_;
  std::map<SubsetMask, double> masses_;
};

/// Total mass committed to subsets of `subset` (the lower probability bound).
double belief(const MassFunction& m, SubsetMask subset);

/// Total mass not contradicting `subset`: 1 - Bel(complement).
double plausibility(const MassFunction& m, SubsetMask subset);

/// Dempster's normalized combination of two independent mass functions over
/// the same frame. Throws FrameMismatch / TotalConflict.
MassFunction combine_dempster(const MassFunction& a, const MassFunction& b);

struct BeliefRow {
  SubsetMask subset = 0;
  double mass = 0.0;
  double belief = 0.0;
  double plausibility = 0.0;
  double uncertainty = 0.0;  // plausibility - belief
};

/// Belief/plausibility summary: one row per singleton hypothesis in frame
/// order, then one for the whole frame. `uncertainty_gap` is the mass not
/// committed to any single hypothesis.
struct BeliefSummary {
  std::vector<BeliefRow> rows;
  double uncertainty_gap = 0.0;
};

BeliefSummary ds_table(const MassFunction& m);

}  // namespace relcalc
