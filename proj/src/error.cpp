#include "relcalc/error.hpp"

namespace relcalc {

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::sum_not_one: return "SumNotOne";
    case errc::out_of_range: return "OutOfRange";
    case errc::mass_overflow: return "MassOverflow";
    case errc::out_of_scale: return "OutOfScale";
    case errc::not_normalized: return "NotNormalized";
    case errc::negative_mass: return "NegativeMass";
    case errc::empty_set_mass: return "EmptySetMass";
    case errc::unknown_hypothesis: return "UnknownHypothesis";
    case errc::total_conflict: return "TotalConflict";
    case errc::frame_mismatch: return "FrameMismatch";
    case errc::not_additive: return "NotAdditive";
    case errc::whole_frame: return "WholeFrame";
    case errc::zero_marginal: return "ZeroMarginal";
    case errc::impossible_posterior: return "ImpossiblePosterior";
    case errc::bad_partition: return "BadPartition";
    case errc::unknown_property: return "UnknownProperty";
    case errc::io_error: return "IoError";
    case errc::schema_error: return "SchemaError";
    case errc::validation_error: return "ValidationError";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace relcalc
