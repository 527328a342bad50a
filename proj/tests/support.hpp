#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "zagreb/error.hpp"
#include "zagreb/graph.hpp"

namespace zagreb::testing {

// The code of the zagreb::Error thrown by fn; fails the test if none is.
template <class Fn>
ErrorCode error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no zagreb::Error thrown";
  return ErrorCode::kMalformed;
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace zagreb::testing
