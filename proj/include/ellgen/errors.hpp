#pragma once

#include <stdexcept>
#include <string>

namespace ellgen {

enum class ErrorCode {
  kStructural,             // cap / variable-set mismatch between operands
  kNonUnit,                // inverse or root of a non-unit
  kDomain,                 // precondition on an argument violated
  kSchema,                 // malformed model / action / matrix document
  kDimensionMismatch,      // tangent data does not match cohomology dimension
  kZeroPairing,            // fundamental class pairs to zero
  kUnknownName,            // unknown builtin
  kUnsupported,            // operation not defined for this input style
  kAdmissibility,          // sample point makes a denominator vanish
  kEffectiveness,          // weight matrix not injective mod p
  kInternalInconsistency,  // two independent pipelines disagree
  kResourceCap,            // enumeration or order cap exceeded
};

const char* error_code_name(ErrorCode code);

// CLI exit-code contract: 2 input validation, 3 internal inconsistency,
// 4 resource cap.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ellgen
