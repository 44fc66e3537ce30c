#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperfuse/fuel.hpp"
#include "hyperfuse/lazy_fn.hpp"

namespace hyperfuse {

// Operations derivable from the model primitives alone. These are written
// once against the Model interface (ClosureModel, StreamModel,
// MachineModel).

template <class Model, class A, class B>
B invoke(const typename Model::template Of<A, B>& f,
         const typename Model::template Of<B, A>& k,
         StepBudget budget = StepBudget{}) {
  return Model::template invoke<A, B>(f, k, budget);
}

// Probes a hyperfunction at one point: left inverse of lift.
template <class Model, class A, class B>
std::function<B(A)> project(typename Model::template Of<A, B> q,
                            StepBudget budget = StepBudget{}) {
  return [q, budget](A x) {
    return Model::template invoke<A, B>(q, Model::template base<B, A>(x), budget);
  };
}

// Contravariant in the argument side, covariant in the result side.
template <class Model, class A, class B, class A2, class B2>
typename Model::template Of<A2, B2> map_hyper(
    LazyFn<A2, A> r, LazyFn<B, B2> s, typename Model::template Of<A, B> h) {
  auto with_r = Model::template compose<A2, A, B>(h, Model::template lift<A2, A>(r));
  return Model::template compose<A2, B, B2>(Model::template lift<B, B2>(s), with_r);
}

// Finite chain of pushes over a base value; the only guaranteed-terminating
// shapes, used as observation probes.
template <class Model, class A>
typename Model::template Of<A, A> chain(const std::vector<LazyFn<A, A>>& heads,
                                        A base_value) {
  auto h = Model::template base<A, A>(base_value);
  for (auto it = heads.rbegin(); it != heads.rend(); ++it) {
    h = Model::template push<A, A>(*it, h);
  }
  return h;
}

// Hyperfunctions compared by observation only: equal when every probe
// produces the same result on both sides. Running out of fuel counts as a
// distinguishing observation only when exactly one side exhausts.
template <class Model>
bool observationally_equal(
    const typename Model::template Of<std::int64_t, std::int64_t>& x,
    const typename Model::template Of<std::int64_t, std::int64_t>& y,
    const std::vector<typename Model::template Of<std::int64_t, std::int64_t>>&
        probes,
    StepBudget budget = StepBudget{}) {
  for (const auto& probe : probes) {
    std::optional<std::int64_t> lhs, rhs;
    bool lhs_fuel = false, rhs_fuel = false;
    try {
      lhs = Model::template invoke<std::int64_t, std::int64_t>(x, probe, budget);
    } catch (const FuelExhausted&) {
      lhs_fuel = true;
    }
    try {
      rhs = Model::template invoke<std::int64_t, std::int64_t>(y, probe, budget);
    } catch (const FuelExhausted&) {
      rhs_fuel = true;
    }
    if (lhs_fuel != rhs_fuel) return false;
    if (!lhs_fuel && *lhs != *rhs) return false;
  }
  return true;
}

}  // namespace hyperfuse
