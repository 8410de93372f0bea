#pragma once

#include <stdexcept>
#include <string>

namespace eqehr {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct NotASublattice : Error {
  explicit NotASublattice(const std::string& m = "not a sublattice") : Error(m) {}
};
struct OrderExceeded : Error {
  explicit OrderExceeded(const std::string& m = "group closure exceeded max order") : Error(m) {}
};
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& m = "map is not invertible over Z") : Error(m) {}
};
struct NotFiniteOrder : Error {
  explicit NotFiniteOrder(const std::string& m = "element does not have finite order") : Error(m) {}
};
struct NotVirtualCharacter : Error {
  explicit NotVirtualCharacter(const std::string& m = "class function is not a virtual character") : Error(m) {}
};
struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& m = "not a subgroup") : Error(m) {}
};
struct TableInvalid : Error {
  explicit TableInvalid(const std::string& m = "character table failed verification") : Error(m) {}
};
struct TableUnavailable : Error {
  explicit TableUnavailable(const std::string& m = "no character table available for this group") : Error(m) {}
};
struct NotInvariant : Error {
  explicit NotInvariant(const std::string& m = "polytope is not invariant under the group") : Error(m) {}
};
struct NotSimplicial : Error {
  explicit NotSimplicial(const std::string& m = "cone is not simplicial") : Error(m) {}
};
struct NotSimplex : Error {
  explicit NotSimplex(const std::string& m = "polytope is not a simplex") : Error(m) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m = "dimension mismatch") : Error(m) {}
};
struct NotLatticePolytope : Error {
  explicit NotLatticePolytope(const std::string& m = "polytope is not a lattice polytope") : Error(m) {}
};
struct HypothesisFailed : Error {
  explicit HypothesisFailed(const std::string& m = "hypothesis not satisfied") : Error(m) {}
};
struct HypothesisViolated : Error {
  int step;
  explicit HypothesisViolated(int step_, const std::string& m) : Error(m), step(step_) {}
};
struct NotTranslative : Error {
  explicit NotTranslative(const std::string& m = "action is not translative") : Error(m) {}
};
struct NotStabilized : Error {
  explicit NotStabilized(const std::string& m = "element does not stabilize the cone") : Error(m) {}
};
struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& m = "precondition failed") : Error(m) {}
};
struct CheckFailed : Error {
  explicit CheckFailed(const std::string& m = "verification check failed") : Error(m) {}
};
struct InputError : Error {
  explicit InputError(const std::string& m) : Error(m) {}
};

}  // namespace eqehr
