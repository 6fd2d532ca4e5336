#pragma once

#include <stdexcept>
#include <string>

namespace isopar {

// All recoverable failures are thrown as Error with a kind tag so the C API
// and the CLI can map them onto stable status / exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    parse,          // bad input text (position included in message)
    ring_mismatch,  // operands live in different rings
    mixed_extension,// two different sqrt(d) extensions in one computation
    budget,         // configured resource cap exceeded
    precondition,   // documented operation precondition violated
    unsupported,    // beyond desk-scale caps (vars, sizes, factorization)
    io,             // file load/save problems
    internal,       // invariant breakage: always a bug
  };

  Error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) {
  throw Error(k, msg);
}

// Resource caps. Every long-running algorithm checks these and throws
// Error::Kind::budget instead of thrashing.
struct Budget {
  long max_basis = 1000;     // Groebner basis size cap
  long max_degree = 64;      // degree cap for S-polynomials / reductions
  long max_pairs = 200000;   // Buchberger pair cap
  long max_points = 100000;  // candidate cap for structured point searches
};

}  // namespace isopar
