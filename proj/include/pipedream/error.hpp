#pragma once

#include <stdexcept>
#include <string>

namespace pipedream {

enum class errc {
  code_not_realizable,
  identity_has_no_descent,
  not_a_cover,
  delta_undefined,
  not_grassmannian,
  shape_mismatch,
  entry_exceeds_k,
  empty_tableau,
  dangling_strand,
  double_crossing,
  boundary_mismatch,
  not_plactic,
  chain_mismatch,
  no_preimage,
  no_expansion,
  descent_condition_violated,
  no_admissible_chain,
  class_overflow,
  bad_input,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::code_not_realizable: return "CodeNotRealizable";
    case errc::identity_has_no_descent: return "IdentityHasNoDescent";
    case errc::not_a_cover: return "NotACover";
    case errc::delta_undefined: return "DeltaUndefined";
    case errc::not_grassmannian: return "NotGrassmannian";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::entry_exceeds_k: return "EntryExceedsK";
    case errc::empty_tableau: return "EmptyTableau";
    case errc::dangling_strand: return "DanglingStrand";
    case errc::double_crossing: return "DoubleCrossing";
    case errc::boundary_mismatch: return "BoundaryMismatch";
    case errc::not_plactic: return "NotPlactic";
    case errc::chain_mismatch: return "ChainMismatch";
    case errc::no_preimage: return "NoPreimage";
    case errc::no_expansion: return "NoExpansion";
    case errc::descent_condition_violated: return "DescentConditionViolated";
    case errc::no_admissible_chain: return "NoAdmissibleChain";
    case errc::class_overflow: return "ClassOverflow";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace pipedream
