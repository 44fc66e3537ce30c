#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "hyperfuse/deferred.hpp"
#include "hyperfuse/fuel.hpp"
#include "hyperfuse/lazy_fn.hpp"

namespace hyperfuse {

// The reference model: a hyperfunction from A to B is a closure that
// consumes the dual hyperfunction (from B to A) and yields a B. The type is
// recursive through the continuation parameter; nothing evaluates until a
// continuation is supplied.
template <class A, class B>
class ClosureHyper {
 public:
  using Continuation = ClosureHyper<B, A>;
  using Step = std::function<B(const Continuation&, const FuelMeter&)>;

  explicit ClosureHyper(Step step)
      : step_(std::make_shared<const Step>(std::move(step))) {}

  // One coroutine hand-off: costs one unit of fuel.
  B invoke_step(const Continuation& k, const FuelMeter& fuel) const {
    fuel.consume();
    return (*step_)(k, fuel);
  }

 private:
  std::shared_ptr<const Step> step_;
};

// Static interface of the closure model. The stream and machine models
// expose the same operations, so code over hyperfunctions is written once
// against a Model template parameter.
struct ClosureModel {
  static constexpr const char* name = "closure";

  template <class A, class B>
  using Of = ClosureHyper<A, B>;

  template <class A>
  static Of<A, A> identity() {
    // self k = k self
    return Of<A, A>([](const Of<A, A>& k, const FuelMeter& fuel) {
      return k.invoke_step(identity<A>(), fuel);
    });
  }

  template <class A, class B>
  static Of<A, B> lift(LazyFn<A, B> f) {
    // lift f, unrolled one invocation at a time: f applied to the deferred
    // hand-off of lift f to the continuation.
    return Of<A, B>([f](const Of<B, A>& k, const FuelMeter& fuel) {
      return f(Deferred<A>::lazy(
          [f, k, fuel]() { return k.invoke_step(lift<A, B>(f), fuel); }));
    });
  }

  template <class A, class B>
  static Of<A, B> push(LazyFn<A, B> f, Of<A, B> q) {
    return Of<A, B>([f, q](const Of<B, A>& k, const FuelMeter& fuel) {
      return f(Deferred<A>::lazy([k, q, fuel]() { return k.invoke_step(q, fuel); }));
    });
  }

  template <class Arg, class Res>
  static Of<Arg, Res> base(Res value) {
    // The continuation is never touched.
    return Of<Arg, Res>(
        [value](const Of<Res, Arg>&, const FuelMeter&) { return value; });
  }

  template <class A, class B, class C>
  static Of<A, C> compose(Of<B, C> f, Of<A, B> g) {
    return Of<A, C>([f, g](const Of<C, A>& k, const FuelMeter& fuel) {
      return f.invoke_step(compose<C, A, B>(g, k), fuel);
    });
  }

  template <class A, class B>
  static B invoke(const Of<A, B>& f, const Of<B, A>& k,
                  StepBudget budget = StepBudget{}) {
    FuelMeter fuel(budget);
    return f.invoke_step(k, fuel);
  }

  template <class A>
  static A run(const Of<A, A>& h, StepBudget budget = StepBudget{}) {
    FuelMeter fuel(budget);
    return h.invoke_step(identity<A>(), fuel);
  }
};

}  // namespace hyperfuse
