#include "sslab/error.hpp"

namespace sslab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidParameter: return "invalid-parameter";
    case Errc::kParse: return "parse";
    case Errc::kCapExceeded: return "cap-exceeded";
    case Errc::kNoEdges: return "no-edges";
    case Errc::kNotConverged: return "not-converged";
    case Errc::kRegime: return "regime";
    case Errc::kPatternTooLarge: return "pattern-too-large";
    case Errc::kBudgetExceeded: return "budget-exceeded";
    case Errc::kNotBipartite: return "not-bipartite";
    case Errc::kDegenerate: return "degenerate";
    case Errc::kNotHeavy: return "not-heavy";
    case Errc::kTooDelocalized: return "too-delocalized";
    case Errc::kNotPartition: return "not-a-partition";
    case Errc::kEmptyMatrix: return "empty-matrix";
    case Errc::kInvariant: return "invariant-violated";
  }
  return "unknown";
}

}  // namespace sslab
