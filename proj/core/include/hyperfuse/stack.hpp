#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <pthread.h>
#include <type_traits>
#include <utility>

namespace hyperfuse {

namespace detail {

struct StackTask {
  std::function<void()> body;
  std::exception_ptr error;
};

inline void* stack_task_entry(void* raw) {
  auto* task = static_cast<StackTask*>(raw);
  try {
    task->body();
  } catch (...) {
    task->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace detail

// Runs fn on a thread with a reserved stack of `bytes`. Deeply nested
// coroutine spines consume machine stack proportional to the step budget, so
// callers that evaluate with large budgets (the CLI, long benchmarks) route
// through here. Falls back to running in place when the reservation fails.
template <class Fn>
auto with_stack(std::size_t bytes, Fn&& fn) -> decltype(fn()) {
  using Result = decltype(fn());

  if constexpr (std::is_void_v<Result>) {
    detail::StackTask task;
    task.body = [&fn]() { fn(); };
    pthread_attr_t attr;
    if (pthread_attr_init(&attr) != 0) {
      fn();
      return;
    }
    pthread_attr_setstacksize(&attr, bytes);
    pthread_t thread;
    if (pthread_create(&thread, &attr, detail::stack_task_entry, &task) != 0) {
      pthread_attr_destroy(&attr);
      fn();
      return;
    }
    pthread_join(thread, nullptr);
    pthread_attr_destroy(&attr);
    if (task.error) std::rethrow_exception(task.error);
  } else {
    std::optional<Result> slot;
    detail::StackTask task;
    task.body = [&fn, &slot]() { slot.emplace(fn()); };
    pthread_attr_t attr;
    if (pthread_attr_init(&attr) != 0) return fn();
    pthread_attr_setstacksize(&attr, bytes);
    pthread_t thread;
    if (pthread_create(&thread, &attr, detail::stack_task_entry, &task) != 0) {
      pthread_attr_destroy(&attr);
      return fn();
    }
    pthread_join(thread, nullptr);
    pthread_attr_destroy(&attr);
    if (task.error) std::rethrow_exception(task.error);
    return std::move(*slot);
  }
}

}  // namespace hyperfuse
