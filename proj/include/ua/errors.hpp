#ifndef UA_ERRORS_HPP
#define UA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ua {

/// Base class for all library errors. Messages name the operation and the
/// failing precondition or witness.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UA_DEFINE_ERROR(Name)                 \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

UA_DEFINE_ERROR(AxiomViolation);
UA_DEFINE_ERROR(OrderLimitExceeded);
UA_DEFINE_ERROR(NotGenerated);
UA_DEFINE_ERROR(EmptySet);
UA_DEFINE_ERROR(TriangleViolation);
UA_DEFINE_ERROR(UnsupportedExponent);
UA_DEFINE_ERROR(GroupMismatch);
UA_DEFINE_ERROR(NegativeEntry);
UA_DEFINE_ERROR(NotUnitNorm);
UA_DEFINE_ERROR(TargetOutOfRange);
UA_DEFINE_ERROR(PreconditionViolated);
UA_DEFINE_ERROR(GeodesicNotFound);
UA_DEFINE_ERROR(AssertionFailed);
UA_DEFINE_ERROR(DegenerateInput);
UA_DEFINE_ERROR(DisconnectedSupport);
UA_DEFINE_ERROR(EigensolveFailure);
UA_DEFINE_ERROR(NoConvergence);
UA_DEFINE_ERROR(EntryOutOfRange);
UA_DEFINE_ERROR(FamilyMismatch);
UA_DEFINE_ERROR(SupportViolation);
UA_DEFINE_ERROR(EmptyFamilyMember);
UA_DEFINE_ERROR(DisjointSets);
UA_DEFINE_ERROR(AllZero);
UA_DEFINE_ERROR(ParseError);

#undef UA_DEFINE_ERROR

/// Følner search failure carrying the best ratio seen; evidence, not proof.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& msg, double best_ratio)
      : Error(msg), best_ratio_(best_ratio) {}
  double best_ratio() const { return best_ratio_; }

 private:
  double best_ratio_;
};

}  // namespace ua

#endif  // UA_ERRORS_HPP
