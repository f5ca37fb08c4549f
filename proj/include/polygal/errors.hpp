#ifndef POLYGAL_ERRORS_HPP
#define POLYGAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polygal {

// Base class for all library errors so callers can catch in one place.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ClosureExceedsCap : Error {
  explicit ClosureExceedsCap(const std::string& msg) : Error(msg) {}
};

struct NotEquivariant : Error {
  explicit NotEquivariant(const std::string& msg) : Error(msg) {}
};

struct NotInjective : Error {
  explicit NotInjective(const std::string& msg) : Error(msg) {}
};

struct PrimitiveNotTransitive : Error {
  explicit PrimitiveNotTransitive(const std::string& msg) : Error(msg) {}
};

struct NotTransitive : Error {
  explicit NotTransitive(const std::string& msg) : Error(msg) {}
};

struct NotKTransitive : Error {
  explicit NotKTransitive(const std::string& msg) : Error(msg) {}
};

struct EmbeddingNotFaithful : Error {
  explicit EmbeddingNotFaithful(const std::string& msg) : Error(msg) {}
};

struct EmbeddingNotMinimal : Error {
  explicit EmbeddingNotMinimal(const std::string& msg) : Error(msg) {}
};

struct SubgroupLatticeTooLarge : Error {
  explicit SubgroupLatticeTooLarge(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct NotSeparable : Error {
  explicit NotSeparable(const std::string& msg) : Error(msg) {}
};

struct DegreeTooLarge : Error {
  explicit DegreeTooLarge(const std::string& msg) : Error(msg) {}
};

struct WeightCollision : Error {
  explicit WeightCollision(const std::string& msg) : Error(msg) {}
};

struct MismatchedAction : Error {
  explicit MismatchedAction(const std::string& msg) : Error(msg) {}
};

struct GenerationFailed : Error {
  explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

}  // namespace polygal

#endif
