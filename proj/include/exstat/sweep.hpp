#pragma once

#include <exception>
#include <vector>

namespace exstat {

/// Serial reference for map_parallel: fn applied to each item in order.
template <class Item, class Fn>
auto map_serial(const std::vector<Item>& items, Fn&& fn)
    -> std::vector<decltype(fn(items[0]))> {
  std::vector<decltype(fn(items[0]))> out;
  out.reserve(items.size());
  for (const Item& item : items) out.push_back(fn(item));
  return out;
}

/// OpenMP map over independent items. Results are positionally identical to
/// map_serial; the first exception thrown by any item is rethrown after the
/// parallel region joins.
template <class Item, class Fn>
auto map_parallel(const std::vector<Item>& items, Fn&& fn)
    -> std::vector<decltype(fn(items[0]))> {
  using Result = decltype(fn(items[0]));
  std::vector<Result> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(items.size()); ++i) {
    try {
      out[i] = fn(items[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace exstat
