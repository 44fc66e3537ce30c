#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace hyperfuse::fusion {

// Binary integer operations admitted by the pipeline language.
enum class Fn2 { add, mul };

const char* fn2_name(Fn2 op);    // "add" / "mul"
const char* fn2_infix(Fn2 op);   // "+" / "*"

// Checked arithmetic; overflow is an error, never wraparound, so fused and
// naive evaluations can be compared exactly.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t apply_fn2(Fn2 op, std::int64_t a, std::int64_t b);

// Symbolic unary integer function. Compose keeps its raw shape (so parsed
// expressions round-trip); the engine simplifies through
// compose_simplified.
class ScalarFn {
 public:
  static ScalarFn identity();
  static ScalarFn sqr();
  static ScalarFn inc();
  static ScalarFn constant(std::int64_t k);
  static ScalarFn partial(Fn2 op, std::int64_t k);  // op(k, x)
  static ScalarFn composed(ScalarFn f, ScalarFn g);  // f . g, as written

  // f . g with identity elimination; right-then-left application order.
  static ScalarFn compose_simplified(ScalarFn f, ScalarFn g);

  bool is_identity() const;
  std::int64_t apply(std::int64_t x) const;

  // Concrete pipeline syntax: "sqr", "const 5", "sqr . inc".
  std::string print() const;
  // Haskell-flavoured application for derivation output: "sqr x", "x + 1".
  std::string print_applied(const std::string& arg) const;

  bool operator==(const ScalarFn& other) const;

 private:
  enum class Kind { identity, sqr, inc, constant, partial, compose };
  ScalarFn(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::int64_t k_ = 0;
  Fn2 op_ = Fn2::add;
  std::shared_ptr<const ScalarFn> lhs_;
  std::shared_ptr<const ScalarFn> rhs_;
};

}  // namespace hyperfuse::fusion
