#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>

namespace hyperfuse {

// A suspended computation with call-by-need semantics: the producer runs at
// most once and the result is memoized. Copies share the memo cell. Values
// are confined to the thread that evaluates them; the memo write is not
// atomic.
template <class T>
class Deferred {
 public:
  static Deferred ready(T value) {
    Deferred d;
    d.cell_->memo.emplace(std::move(value));
    return d;
  }

  static Deferred lazy(std::function<T()> producer) {
    Deferred d;
    d.cell_->producer = std::move(producer);
    return d;
  }

  const T& force() const {
    if (!cell_->memo) {
      // Release the producer after the first force so long coroutine
      // spines do not retain their construction closures.
      auto make = std::move(cell_->producer);
      cell_->producer = nullptr;
      cell_->memo.emplace(make());
    }
    return *cell_->memo;
  }

  bool forced() const { return cell_->memo.has_value(); }

 private:
  struct Cell {
    mutable std::optional<T> memo;
    mutable std::function<T()> producer;
  };

  Deferred() : cell_(std::make_shared<Cell>()) {}

  std::shared_ptr<Cell> cell_;
};

}  // namespace hyperfuse
