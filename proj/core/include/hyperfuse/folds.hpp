#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "hyperfuse/deferred.hpp"
#include "hyperfuse/fuel.hpp"
#include "hyperfuse/lazy_fn.hpp"
#include "hyperfuse/machine_hyper.hpp"

namespace hyperfuse {

// Cons function for a coroutining fold: combines one element with the
// deferred rest of the computation. A ConsFn may ignore the rest entirely,
// which is how nil-like behaviour is expressed.
template <class A, class B, class C>
using ConsFn = std::function<C(const A&, Deferred<B>)>;

// fold (x:xs) c n = c x << fold xs c n ; fold [] c n = base n
template <class Model, class A, class B, class C>
typename Model::template Of<B, C> fold(const std::vector<A>& xs,
                                       ConsFn<A, B, C> c, C n) {
  auto h = Model::template base<B, C>(std::move(n));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    const A& x = *it;
    h = Model::template push<B, C>(
        LazyFn<B, C>([c, x](Deferred<B> rest) { return c(x, std::move(rest)); }),
        std::move(h));
  }
  return h;
}

// foldr c n xs = run (fold xs c n)
template <class Model, class A, class B>
B foldr_via_hyper(ConsFn<A, B, B> c, B n, const std::vector<A>& xs,
                  StepBudget budget = StepBudget{}) {
  return Model::template run<B>(fold<Model, A, B, B>(xs, std::move(c), std::move(n)),
                                budget);
}

// The option-of-pair handshake exchanged between the two branches of a zip.
// present() never forces its deferred payload.
template <class Y, class Rest>
class ZipStep {
 public:
  static ZipStep absent() { return ZipStep{}; }
  static ZipStep present(Y y, Deferred<Rest> rest) {
    ZipStep z;
    z.slot_.emplace(std::move(y), std::move(rest));
    return z;
  }

  bool has_value() const { return slot_.has_value(); }
  const Y& value() const { return slot_->first; }
  const Deferred<Rest>& rest() const { return slot_->second; }

 private:
  ZipStep() = default;
  std::optional<std::pair<Y, Deferred<Rest>>> slot_;
};

// zip as two independent folds handed to each other as coroutining
// continuations. `first` forces the handshake (it has to see whether the
// other branch produced an element); `second` does not, so the usual
// non-strict behaviour of zip is preserved. Termination is therefore driven
// by whichever branch first stops answering, which is observable when the
// longer right list carries poisoned elements past the shorter length.
template <class Model, class A, class B>
std::vector<std::pair<A, B>> zip_h(const std::vector<A>& xs,
                                   const std::vector<B>& ys,
                                   StepBudget budget = StepBudget{}) {
  using Out = std::vector<std::pair<A, B>>;
  using Shake = ZipStep<B, Out>;

  ConsFn<A, Shake, Out> first = [](const A& x, Deferred<Shake> d) -> Out {
    const Shake& s = d.force();
    if (!s.has_value()) return {};
    Out out = s.rest().force();
    out.insert(out.begin(), {x, s.value()});
    return out;
  };
  ConsFn<B, Out, Shake> second = [](const B& y, Deferred<Out> rest) {
    return Shake::present(y, std::move(rest));
  };

  auto lhs = fold<Model, A, Shake, Out>(xs, first, Out{});
  auto rhs = fold<Model, B, Out, Shake>(ys, second, Shake::absent());
  return Model::template run<Out>(
      Model::template compose<Out, Shake, Out>(lhs, rhs), budget);
}

template <class Model>
std::vector<std::int64_t> zipw_h(
    std::function<std::int64_t(std::int64_t, std::int64_t)> f,
    const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
    StepBudget budget = StepBudget{}) {
  using Out = std::vector<std::int64_t>;
  using Shake = ZipStep<std::int64_t, Out>;

  ConsFn<std::int64_t, Shake, Out> first = [f](const std::int64_t& x,
                                               Deferred<Shake> d) -> Out {
    const Shake& s = d.force();
    if (!s.has_value()) return {};
    Out out = s.rest().force();
    out.insert(out.begin(), f(x, s.value()));
    return out;
  };
  ConsFn<std::int64_t, Out, Shake> second = [](const std::int64_t& y,
                                               Deferred<Out> rest) {
    return Shake::present(y, std::move(rest));
  };

  auto lhs = fold<Model, std::int64_t, Shake, Out>(xs, first, Out{});
  auto rhs = fold<Model, std::int64_t, Out, Shake>(ys, second, Shake::absent());
  return Model::template run<Out>(
      Model::template compose<Out, Shake, Out>(lhs, rhs), budget);
}

template <class Model>
class Generator;

template <class Model>
std::vector<std::int64_t> build(const Generator<Model>& g,
                                StepBudget budget = StepBudget{});

// A list producer abstracted over its constructors. Only the closed set of
// factories below can build one, which keeps generator bodies inside the
// push/base/compose fragment that the fusion law needs. Element type is
// fixed to int64 (the pipeline domain).
template <class Model>
class Generator {
 public:
  static Generator from_list(std::vector<std::int64_t> xs) {
    Generator g;
    g.node_ = std::make_shared<Node>(Node{Kind::list, std::move(xs), 0, 0,
                                          nullptr, nullptr, nullptr, nullptr});
    return g;
  }
  static Generator down(std::int64_t w) {
    Generator g;
    g.node_ = std::make_shared<Node>(
        Node{Kind::down, {}, w, 0, nullptr, nullptr, nullptr, nullptr});
    return g;
  }
  static Generator upto(std::int64_t a, std::int64_t b) {
    Generator g;
    g.node_ = std::make_shared<Node>(
        Node{Kind::upto, {}, a, b, nullptr, nullptr, nullptr, nullptr});
    return g;
  }
  static Generator mapped(std::function<std::int64_t(std::int64_t)> f,
                          Generator inner) {
    Generator g;
    g.node_ = std::make_shared<Node>(Node{Kind::mapped, {}, 0, 0, std::move(f),
                                          nullptr, inner.node_, nullptr});
    return g;
  }
  static Generator zipw(std::function<std::int64_t(std::int64_t, std::int64_t)> f,
                        Generator lhs, Generator rhs) {
    Generator g;
    g.node_ = std::make_shared<Node>(Node{Kind::zipw, {}, 0, 0, nullptr,
                                          std::move(f), lhs.node_, rhs.node_});
    return g;
  }

  // Hands the abstract cons/nil pair to the generator body. R1/R2 are the
  // carrier types chosen by the consumer; the body never inspects them.
  template <class R1, class R2>
  typename Model::template Of<R1, R2> instantiate(
      ConsFn<std::int64_t, R1, R2> cons, R2 nil,
      StepBudget budget = StepBudget{}) const {
    return instantiate_node<R1, R2>(*node_, std::move(cons), std::move(nil),
                                    budget);
  }

 private:
  enum class Kind { list, down, upto, mapped, zipw };
  struct Node {
    Kind kind;
    std::vector<std::int64_t> xs;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::function<std::int64_t(std::int64_t)> f;
    std::function<std::int64_t(std::int64_t, std::int64_t)> f2;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  template <class R1, class R2>
  static typename Model::template Of<R1, R2> instantiate_node(
      const Node& node, ConsFn<std::int64_t, R1, R2> cons, R2 nil,
      StepBudget budget) {
    switch (node.kind) {
      case Kind::list:
        return fold<Model, std::int64_t, R1, R2>(node.xs, cons, nil);
      case Kind::down:
        return range_chain<R1, R2>(node.a, 1, -1, cons, nil);
      case Kind::upto:
        return range_chain<R1, R2>(node.a, node.b, 1, cons, nil);
      case Kind::mapped: {
        auto f = node.f;
        ConsFn<std::int64_t, R1, R2> pre =
            [cons, f](const std::int64_t& x, Deferred<R1> rest) {
              return cons(f(x), std::move(rest));
            };
        return instantiate_node<R1, R2>(*node.lhs, pre, nil, budget);
      }
      case Kind::zipw: {
        // zipW over generator branches: materialize each branch, then run
        // the two folds against each other through the handshake protocol.
        using Shake = ZipStep<std::int64_t, R1>;
        auto f2 = node.f2;
        std::vector<std::int64_t> xs = build_node(*node.lhs, budget);
        std::vector<std::int64_t> ys = build_node(*node.rhs, budget);
        R2 nil_copy = nil;
        ConsFn<std::int64_t, Shake, R2> first =
            [cons, f2, nil_copy](const std::int64_t& x, Deferred<Shake> d) -> R2 {
          const Shake& s = d.force();
          if (!s.has_value()) return nil_copy;
          return cons(f2(x, s.value()), s.rest());
        };
        ConsFn<std::int64_t, R1, Shake> second =
            [](const std::int64_t& y, Deferred<R1> rest) {
              return Shake::present(y, std::move(rest));
            };
        auto lhs = fold<Model, std::int64_t, Shake, R2>(xs, first, nil);
        auto rhs =
            fold<Model, std::int64_t, R1, Shake>(ys, second, Shake::absent());
        return Model::template compose<R1, Shake, R2>(lhs, rhs);
      }
    }
    throw std::logic_error("unreachable generator kind");
  }

  // down/upto as an explicit chain of pushes; for the machine model this
  // would naturally be a state machine, but the chain is observationally
  // the same and keeps the generator body inside the abstract fragment.
  template <class R1, class R2>
  static typename Model::template Of<R1, R2> range_chain(
      std::int64_t from, std::int64_t to, std::int64_t step,
      ConsFn<std::int64_t, R1, R2> cons, R2 nil) {
    auto h = Model::template base<R1, R2>(nil);
    std::vector<std::int64_t> values;
    for (std::int64_t v = from; step > 0 ? v <= to : v >= to; v += step) {
      values.push_back(v);
    }
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      std::int64_t x = *it;
      h = Model::template push<R1, R2>(
          LazyFn<R1, R2>([cons, x](Deferred<R1> rest) { return cons(x, rest); }),
          std::move(h));
    }
    return h;
  }

  static std::vector<std::int64_t> build_node(const Node& node, StepBudget budget) {
    Generator g;
    g.node_ = std::make_shared<Node>(node);
    return build<Model>(g, budget);
  }

  Generator() = default;
  std::shared_ptr<const Node> node_;
};

// build g = run (g (:) [])
template <class Model>
std::vector<std::int64_t> build(const Generator<Model>& g, StepBudget budget) {
  using List = std::vector<std::int64_t>;
  ConsFn<std::int64_t, List, List> cons = [](const std::int64_t& x,
                                             Deferred<List> rest) {
    List out = rest.force();
    out.insert(out.begin(), x);
    return out;
  };
  auto h = g.template instantiate<List, List>(cons, List{}, budget);
  return Model::template run<List>(h, budget);
}

// ---- the combinator library -------------------------------------------

template <class Model>
std::vector<std::int64_t> down(std::int64_t n, StepBudget budget = StepBudget{}) {
  return build<Model>(Generator<Model>::down(n), budget);
}

template <class Model>
std::vector<std::int64_t> upto(std::int64_t i, std::int64_t j,
                               StepBudget budget = StepBudget{}) {
  return build<Model>(Generator<Model>::upto(i, j), budget);
}

// map f xs = build (\c n -> fold xs (c . f) n)
template <class Model>
std::vector<std::int64_t> map_c(std::function<std::int64_t(std::int64_t)> f,
                                std::vector<std::int64_t> xs,
                                StepBudget budget = StepBudget{}) {
  return build<Model>(Generator<Model>::mapped(
                          std::move(f), Generator<Model>::from_list(std::move(xs))),
                      budget);
}

// sum xs = run (fold xs (+) 0)
template <class Model>
std::int64_t sum_c(const std::vector<std::int64_t>& xs,
                   StepBudget budget = StepBudget{}) {
  ConsFn<std::int64_t, std::int64_t, std::int64_t> plus =
      [](const std::int64_t& x, Deferred<std::int64_t> rest) {
        return x + rest.force();
      };
  return foldr_via_hyper<Model, std::int64_t, std::int64_t>(plus, 0, xs, budget);
}

// reverse as a higher-order fold: the carrier is a function that receives
// the list built so far.
template <class Model, class A>
std::vector<A> reverse_c(const std::vector<A>& xs,
                         StepBudget budget = StepBudget{}) {
  using List = std::vector<A>;
  using Carrier = std::function<List(List)>;
  ConsFn<A, Carrier, Carrier> step = [](const A& x, Deferred<Carrier> k) {
    return Carrier([x, k](List p) {
      p.insert(p.begin(), x);
      return k.force()(std::move(p));
    });
  };
  Carrier done = foldr_via_hyper<Model, A, Carrier>(
      step, Carrier([](List p) { return p; }), xs, budget);
  return done(List{});
}

// foldl g z xs = (foldr (\x k w -> k (g w x)) id xs) z
template <class Model, class A, class B>
A foldl_c(std::function<A(A, B)> g, A z, const std::vector<B>& xs,
          StepBudget budget = StepBudget{}) {
  using Carrier = std::function<A(A)>;
  ConsFn<B, Carrier, Carrier> step = [g](const B& x, Deferred<Carrier> k) {
    return Carrier([g, x, k](A w) { return k.force()(g(std::move(w), x)); });
  };
  Carrier done = foldr_via_hyper<Model, B, Carrier>(
      step, Carrier([](A w) { return w; }), xs, budget);
  return done(std::move(z));
}

}  // namespace hyperfuse
