#pragma once

#include <map>
#include <queue>
#include <vector>

#include "doctest.h"
#include "unitwist/coxeter.hpp"
#include "unitwist/error.hpp"

#define CHECK_ERROR_KIND(expr, expected_kind)                   \
  do {                                                          \
    bool caught_ = false;                                       \
    try {                                                       \
      (void)(expr);                                             \
    } catch (const unitwist::Error& e) {                        \
      caught_ = true;                                           \
      CHECK(e.kind() == (expected_kind));                       \
    }                                                           \
    CHECK_MESSAGE(caught_, "expected an error from " #expr);    \
  } while (0)

namespace testing {

// Word length of every element by breadth-first search on the Cayley graph.
inline std::map<unitwist::CoxElement, int> bfs_lengths(const unitwist::CoxeterSystem& sys) {
  std::map<unitwist::CoxElement, int> dist;
  std::queue<unitwist::CoxElement> todo;
  dist[sys.identity()] = 0;
  todo.push(sys.identity());
  while (!todo.empty()) {
    const auto w = todo.front();
    todo.pop();
    for (int s = 1; s <= sys.rank(); ++s) {
      const auto ws = sys.mul(w, sys.generator(s));
      if (dist.emplace(ws, dist[w] + 1).second) todo.push(ws);
    }
  }
  return dist;
}

inline std::vector<unitwist::CoxeterSystem> small_systems() {
  using unitwist::CoxeterSystem;
  return {CoxeterSystem::A(1), CoxeterSystem::A(2), CoxeterSystem::A(3), CoxeterSystem::B(2),
          CoxeterSystem::B(3), CoxeterSystem::I2(5), CoxeterSystem::I2(6)};
}

}  // namespace testing
