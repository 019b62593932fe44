#ifndef PICARD_ERRORS_HPP
#define PICARD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace picard {

struct InputError : std::runtime_error {
  explicit InputError(const std::string &m) : std::runtime_error("input error: " + m) {}
};

struct UnsupportedField : std::runtime_error {
  explicit UnsupportedField(const std::string &m) : std::runtime_error("unsupported field: " + m) {}
};

struct FieldDegreeCapExceeded : std::runtime_error {
  explicit FieldDegreeCapExceeded(const std::string &m)
      : std::runtime_error("field degree cap exceeded: " + m) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string &m) : std::runtime_error("budget exceeded: " + m) {}
};

struct InconsistentCounts : std::runtime_error {
  explicit InconsistentCounts(const std::string &m)
      : std::runtime_error("inconsistent counts: " + m) {}
};

struct NotHomogeneous : InputError {
  explicit NotHomogeneous(const std::string &m) : InputError("not homogeneous: " + m) {}
};

struct BadAutomorphism : InputError {
  explicit BadAutomorphism(const std::string &m) : InputError("bad automorphism: " + m) {}
};

struct SingularBranchCurve : InputError {
  std::vector<std::string> witness; // projective coordinates, empty if none found
  std::string witness_field;        // minimal polynomial of the witness field, "" for Q
  explicit SingularBranchCurve(const std::string &m) : InputError("singular branch curve: " + m) {}
  SingularBranchCurve(const std::string &m, std::vector<std::string> w, std::string wf)
      : InputError("singular branch curve: " + m), witness(std::move(w)),
        witness_field(std::move(wf)) {}
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string &m) : std::logic_error("internal error: " + m) {}
};

constexpr int kDefaultMaxFieldDegree = 16;

} // namespace picard

#endif
