#ifndef FDSRANK_COMMON_HPP_
#define FDSRANK_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdsrank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by every guarded computation instead of approximating. `projected`
// is the size the computation would have needed, rendered as text because
// it can exceed 64 bits.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::string what, std::string projected, std::string limit)
      : Error(what + ": projected size " + projected + " exceeds limit " + limit),
        projected_(std::move(projected)),
        limit_(std::move(limit)) {}

  const std::string& projected() const noexcept { return projected_; }
  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string projected_;
  std::string limit_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ShapeMismatch : public Error {
  using Error::Error;
};
class ValueOutOfRange : public Error {
  using Error::Error;
};
class LoopsPresent : public Error {
  using Error::Error;
};
class NotStronglyConnected : public Error {
  using Error::Error;
};
class AlphabetTooSmall : public Error {
  using Error::Error;
};
class EvenN : public Error {
  using Error::Error;
};
class BadPacking : public Error {
  using Error::Error;
};

// Caps for exact computations. All exhaustive routines refuse rather than
// approximate once a cap is hit.
struct Limits {
  std::uint64_t max_states = std::uint64_t{1} << 24;   // q^n for whole-space scans
  std::uint64_t max_functions = 100'000'000;           // enumerated systems
  int max_exact_n = 24;                                // FVS, packing, partition, profiles
  std::uint64_t max_cycles = 1'000'000;                // simple cycles enumerated
  std::uint64_t max_code_space = std::uint64_t{1} << 14;  // q^n for A(n,q,d)
  std::uint64_t exact_lp_columns = 10'000;             // rational LP threshold
  int max_entropy_n = 12;
  int exact_entropy_n = 8;

  // Defaults, with FDSRANK_MAX_FUNCS overriding the enumeration guard.
  static Limits from_env();
};

// a^b saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

}  // namespace fdsrank

#endif  // FDSRANK_COMMON_HPP_
