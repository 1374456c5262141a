#include "calab/error.hpp"

namespace calab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_a_subgroup: return "NotASubgroup";
    case Errc::not_normal: return "NotNormal";
    case Errc::memory_mismatch: return "MemoryMismatch";
    case Errc::asymptotic_mismatch: return "AsymptoticMismatch";
    case Errc::not_periodic: return "NotPeriodic";
    case Errc::memory_not_in_subgroup: return "MemoryNotInSubgroup";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_bijective: return "NotBijective";
    case Errc::not_surjective: return "NotSurjective";
    case Errc::correction_step_failed: return "CorrectionStepFailed";
    case Errc::inverse_bound_exceeded: return "InverseBoundExceeded";
    case Errc::dimension_bound: return "DimensionBound";
    case Errc::not_additive: return "NotAdditive";
    case Errc::no_stabilization: return "NoStabilization";
    case Errc::implication_violated: return "ImplicationViolated";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace calab
