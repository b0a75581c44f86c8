#pragma once

#include <optional>
#include <string>

namespace braidrep {

// Per-domain hooks used by the generic matrix code. Each entry type
// specializes this next to its own definition.
//
//   is_field       division by any nonzero element is defined
//   domain         short tag used in JSON encodings
//   is_zero(x)
//   try_div(a, b)  exact quotient a/b, or nullopt when b does not divide a
//   str(x)         canonical text rendering
template <class T>
struct entry_traits;

template <class T>
bool entry_is_zero(const T& x) {
  return entry_traits<T>::is_zero(x);
}

template <class T>
std::string entry_str(const T& x) {
  return entry_traits<T>::str(x);
}

}  // namespace braidrep
