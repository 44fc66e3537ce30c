#pragma once

#include <functional>
#include <utility>

#include "hyperfuse/deferred.hpp"

namespace hyperfuse {

// An element function that receives its argument as a Deferred and chooses
// whether to force it. Every function stored inside a hyperfunction has this
// shape; it is what lets a constant head discard the rest of a coroutine.
template <class A, class B>
class LazyFn {
 public:
  explicit LazyFn(std::function<B(Deferred<A>)> fn) : fn_(std::move(fn)) {}

  B operator()(Deferred<A> arg) const { return fn_(std::move(arg)); }

 private:
  std::function<B(Deferred<A>)> fn_;
};

// Wraps an ordinary function; forces the argument exactly once.
template <class A, class B>
LazyFn<A, B> strict(std::function<B(const A&)> f) {
  return LazyFn<A, B>([f = std::move(f)](Deferred<A> d) { return f(d.force()); });
}

// Ignores the argument entirely.
template <class A, class B>
LazyFn<A, B> constant(B value) {
  return LazyFn<A, B>([value = std::move(value)](Deferred<A>) { return value; });
}

template <class A>
LazyFn<A, A> lazy_identity() {
  return strict<A, A>([](const A& x) { return x; });
}

// f after g, without forcing: g runs only if f demands its argument.
template <class A, class B, class C>
LazyFn<A, C> compose_lazy(LazyFn<B, C> f, LazyFn<A, B> g) {
  return LazyFn<A, C>([f = std::move(f), g = std::move(g)](Deferred<A> d) {
    return f(Deferred<B>::lazy([g, d]() { return g(d); }));
  });
}

}  // namespace hyperfuse
