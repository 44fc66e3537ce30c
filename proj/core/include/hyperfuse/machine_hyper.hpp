#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>

#include "hyperfuse/deferred.hpp"
#include "hyperfuse/fuel.hpp"
#include "hyperfuse/lazy_fn.hpp"

namespace hyperfuse {

// The state-machine model: a hyperfunction as an anamorphism. A step
// function either finishes with a value or emits the next element function
// together with a successor state. The state type is erased; observers only
// see emitted functions and final values.
template <class A, class B>
class MachineHyper {
 public:
  using State = std::shared_ptr<const void>;

  struct Done {
    B value;
  };
  struct Emit {
    LazyFn<A, B> fn;
    State next;
  };
  using StepResult = std::variant<Done, Emit>;
  using StepFn = std::function<StepResult(const State&)>;

  MachineHyper(StepFn step, State seed)
      : step_(std::make_shared<const StepFn>(std::move(step))),
        seed_(std::move(seed)) {}

  StepResult step_at(const State& state) const { return (*step_)(state); }
  const State& seed() const { return seed_; }

  template <class T>
  static State box(T value) {
    return std::static_pointer_cast<const void>(
        std::make_shared<const T>(std::move(value)));
  }

  template <class T>
  static const T& unbox(const State& state) {
    return *static_cast<const T*>(state.get());
  }

 private:
  std::shared_ptr<const StepFn> step_;
  State seed_;
};

struct MachineModel {
  static constexpr const char* name = "machine";

  template <class A, class B>
  using Of = MachineHyper<A, B>;

  template <class A, class B>
  static Of<A, B> lift(LazyFn<A, B> f) {
    // Emits f forever. The seed is an inert unit value; the state of a
    // lifted function is never inspected.
    using M = Of<A, B>;
    return M([f](const typename M::State& u) ->
             typename M::StepResult { return typename M::Emit{f, u}; },
             M::template box<int>(0));
  }

  template <class A>
  static Of<A, A> identity() {
    return lift<A, A>(lazy_identity<A>());
  }

  template <class Arg, class Res>
  static Of<Arg, Res> base(Res value) {
    return lift<Arg, Res>(constant<Arg, Res>(std::move(value)));
  }

  // Option-wrapped state: the first step emits f, every later step
  // simulates q.
  template <class A, class B>
  static Of<A, B> push(LazyFn<A, B> f, Of<A, B> q) {
    using M = Of<A, B>;
    using Wrap = std::optional<typename M::State>;
    auto step = [f, q](const typename M::State& state) -> typename M::StepResult {
      const Wrap& w = M::template unbox<Wrap>(state);
      if (!w.has_value()) {
        return typename M::Emit{f, M::template box<Wrap>(Wrap{q.seed()})};
      }
      auto inner = q.step_at(*w);
      if (auto* done = std::get_if<typename M::Done>(&inner)) {
        return typename M::Done{done->value};
      }
      auto& emit = std::get<typename M::Emit>(inner);
      return typename M::Emit{emit.fn, M::template box<Wrap>(Wrap{emit.next})};
    };
    return M(step, M::template box<Wrap>(Wrap{}));
  }

  // Product-state machine. The left machine finishing wins outright; the
  // right machine finishing feeds its final value to the left's emission.
  template <class A, class B, class C>
  static Of<A, C> compose(Of<B, C> f, Of<A, B> g) {
    using M = Of<A, C>;
    using Lhs = Of<B, C>;
    using Rhs = Of<A, B>;
    using PairState = std::pair<typename Lhs::State, typename Rhs::State>;
    auto step = [f, g](const typename M::State& state) -> typename M::StepResult {
      const PairState& s = M::template unbox<PairState>(state);
      auto left = f.step_at(s.first);
      if (auto* ldone = std::get_if<typename Lhs::Done>(&left)) {
        return typename M::Done{ldone->value};
      }
      auto& lemit = std::get<typename Lhs::Emit>(left);
      auto right = g.step_at(s.second);
      if (auto* rdone = std::get_if<typename Rhs::Done>(&right)) {
        return typename M::Done{lemit.fn(Deferred<B>::ready(rdone->value))};
      }
      auto& remit = std::get<typename Rhs::Emit>(right);
      return typename M::Emit{
          compose_lazy(lemit.fn, remit.fn),
          M::template box<PairState>(PairState{lemit.next, remit.next})};
    };
    return M(step, M::template box<PairState>(PairState{f.seed(), g.seed()}));
  }

  template <class A>
  static A run(const Of<A, A>& m, StepBudget budget = StepBudget{}) {
    FuelMeter fuel(budget);
    return run_from(m, m.seed(), fuel);
  }

  template <class A, class B>
  static B invoke(const Of<A, B>& f, const Of<B, A>& k,
                  StepBudget budget = StepBudget{}) {
    FuelMeter fuel(budget);
    auto composed = compose<B, A, B>(f, k);
    return run_from(composed, composed.seed(), fuel);
  }

  // Emitted functions receive the continuation of the loop as a Deferred;
  // a machine that emits a constant therefore terminates the run no matter
  // what follows it.
  template <class A>
  static A run_from(const Of<A, A>& m, const typename Of<A, A>::State& state,
                    const FuelMeter& fuel) {
    fuel.consume();
    auto result = m.step_at(state);
    if (auto* done = std::get_if<typename Of<A, A>::Done>(&result)) {
      return done->value;
    }
    auto& emit = std::get<typename Of<A, A>::Emit>(result);
    auto next = emit.next;
    return emit.fn(Deferred<A>::lazy(
        [m, next, fuel]() { return run_from(m, next, fuel); }));
  }
};

// Countdown generator: given an abstract cons function and nil value, the
// machine counts w, w-1, ..., 1 and then finishes with nil. Nonpositive w
// finishes immediately.
struct DownGenerator {
  std::int64_t start;

  template <class R1, class R2, class Cons>
  MachineHyper<R1, R2> operator()(Cons cons, R2 nil) const {
    using M = MachineHyper<R1, R2>;
    auto step = [cons, nil](const typename M::State& state) ->
        typename M::StepResult {
      std::int64_t z = M::template unbox<std::int64_t>(state);
      if (z <= 0) return typename M::Done{nil};
      LazyFn<R1, R2> emit([cons, z](Deferred<R1> rest) { return cons(z, rest); });
      return typename M::Emit{emit, M::template box<std::int64_t>(z - 1)};
    };
    return M(step, M::template box<std::int64_t>(start));
  }
};

// Counting generator over the inclusive range [lo, hi].
struct UptoGenerator {
  std::int64_t lo;
  std::int64_t hi;

  template <class R1, class R2, class Cons>
  MachineHyper<R1, R2> operator()(Cons cons, R2 nil) const {
    using M = MachineHyper<R1, R2>;
    using Range = std::pair<std::int64_t, std::int64_t>;
    auto step = [cons, nil](const typename M::State& state) ->
        typename M::StepResult {
      const Range& r = M::template unbox<Range>(state);
      if (r.first > r.second) return typename M::Done{nil};
      std::int64_t i = r.first;
      LazyFn<R1, R2> emit([cons, i](Deferred<R1> rest) { return cons(i, rest); });
      return typename M::Emit{emit,
                              M::template box<Range>(Range{i + 1, r.second})};
    };
    return M(step, M::template box<Range>(Range{lo, hi}));
  }
};

inline DownGenerator down_gen(std::int64_t w) { return DownGenerator{w}; }
inline UptoGenerator upto_gen(std::int64_t a, std::int64_t b) {
  return UptoGenerator{a, b};
}

}  // namespace hyperfuse
