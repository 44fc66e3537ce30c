#pragma once

#include <memory>
#include <utility>

#include "hyperfuse/deferred.hpp"
#include "hyperfuse/fuel.hpp"
#include "hyperfuse/lazy_fn.hpp"

namespace hyperfuse {

// The stream model: a hyperfunction as a productive, conceptually infinite
// stream of element functions. Heads are strict fields, tails deferred;
// "infinite" tails are self-replicating generator nodes rather than literal
// cycles.
template <class A, class B>
class StreamHyper {
 public:
  StreamHyper(LazyFn<A, B> head, Deferred<StreamHyper> tail);

  const LazyFn<A, B>& head() const;
  // Forces one node of the tail.
  StreamHyper tail() const;
  Deferred<StreamHyper> deferred_tail() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

template <class A, class B>
struct StreamHyper<A, B>::Node {
  LazyFn<A, B> head;
  Deferred<StreamHyper<A, B>> tail;
};

template <class A, class B>
StreamHyper<A, B>::StreamHyper(LazyFn<A, B> head, Deferred<StreamHyper> tail)
    : node_(std::make_shared<const Node>(Node{std::move(head), std::move(tail)})) {}

template <class A, class B>
const LazyFn<A, B>& StreamHyper<A, B>::head() const {
  return node_->head;
}

template <class A, class B>
StreamHyper<A, B> StreamHyper<A, B>::tail() const {
  return node_->tail.force();
}

template <class A, class B>
Deferred<StreamHyper<A, B>> StreamHyper<A, B>::deferred_tail() const {
  return node_->tail;
}

struct StreamModel {
  static constexpr const char* name = "stream";

  template <class A, class B>
  using Of = StreamHyper<A, B>;

  template <class A, class B>
  static Of<A, B> lift(LazyFn<A, B> f) {
    return Of<A, B>(f, Deferred<Of<A, B>>::lazy([f]() { return lift<A, B>(f); }));
  }

  template <class A>
  static Of<A, A> identity() {
    return lift<A, A>(lazy_identity<A>());
  }

  template <class A, class B>
  static Of<A, B> push(LazyFn<A, B> f, Of<A, B> q) {
    return Of<A, B>(std::move(f), Deferred<Of<A, B>>::ready(std::move(q)));
  }

  template <class Arg, class Res>
  static Of<Arg, Res> base(Res value) {
    return lift<Arg, Res>(constant<Arg, Res>(std::move(value)));
  }

  // Pointwise head composition; forces at most one node of each input per
  // node demanded of the output.
  template <class A, class B, class C>
  static Of<A, C> compose(Of<B, C> f, Of<A, B> g) {
    return Of<A, C>(compose_lazy(f.head(), g.head()),
                    Deferred<Of<A, C>>::lazy([f, g]() {
                      return compose<A, B, C>(f.tail(), g.tail());
                    }));
  }

  template <class A>
  static A run(const Of<A, A>& s, StepBudget budget = StepBudget{}) {
    FuelMeter fuel(budget);
    return run_metered(s, fuel);
  }

  // run is the primitive here; invoke is derived.
  template <class A, class B>
  static B invoke(const Of<A, B>& f, const Of<B, A>& k,
                  StepBudget budget = StepBudget{}) {
    FuelMeter fuel(budget);
    return run_metered(compose<B, A, B>(f, k), fuel);
  }

  template <class A>
  static A run_metered(const Of<A, A>& s, const FuelMeter& fuel) {
    fuel.consume();
    return s.head()(Deferred<A>::lazy([s, fuel]() {
      return run_metered(s.tail(), fuel);
    }));
  }
};

}  // namespace hyperfuse
