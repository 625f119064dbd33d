#ifndef SCHUBERT_ERRORS_HPP
#define SCHUBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schubert {

// Bad arguments: wrong ranges, malformed tuples, non-prime-power q, ...
// The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NotAPrimePower : public InvalidInput {
   public:
    explicit NotAPrimePower(long q)
        : InvalidInput("q = " + std::to_string(q) + " is not a prime power") {}
};

class RangeError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

class DivisionByZero : public InvalidInput {
   public:
    DivisionByZero() : InvalidInput("inverse of zero field element") {}
};

class RankDeficient : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

// A computation was refused because it would exceed a configured cap.
// Nothing is ever sampled or truncated instead. CLI exit code 3.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class FieldTooLarge : public BudgetExceeded {
   public:
    FieldTooLarge(long q, long bound)
        : BudgetExceeded("field size q = " + std::to_string(q) +
                         " exceeds bound " + std::to_string(bound)) {}
};

// CLI exit code 4.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace schubert

#endif
