#pragma once
// Braid words for every prime knot up to 7 crossings plus a few links and
// split unions.  det is the verified link determinant |Delta(-1)|.

#include <string>
#include <vector>

#include "blowup/link_model.hpp"

namespace corpus {

struct Entry {
  std::string name;
  blowup::link::BraidWord braid;
  std::size_t components;
  long det;
};

inline const std::vector<Entry>& links() {
  static const std::vector<Entry> all = {
      {"0_1", {1, {}}, 1, 1},
      {"3_1", {2, {1, 1, 1}}, 1, 3},
      {"4_1", {3, {1, -2, 1, -2}}, 1, 5},
      {"5_1", {2, {1, 1, 1, 1, 1}}, 1, 5},
      {"5_2", {3, {1, 1, 1, 2, -1, 2}}, 1, 7},
      {"6_1", {4, {1, 1, 2, -1, -3, 2, -3}}, 1, 9},
      {"6_2", {3, {1, 1, 1, -2, 1, -2}}, 1, 11},
      {"6_3", {3, {1, 1, -2, 1, -2, -2}}, 1, 13},
      {"7_1", {2, {1, 1, 1, 1, 1, 1, 1}}, 1, 7},
      {"7_2", {4, {1, 1, 1, 2, -1, 2, 3, -2, 3}}, 1, 11},
      {"7_3", {3, {1, 1, 1, 1, 1, 2, -1, 2}}, 1, 13},
      {"7_4", {4, {1, 1, 2, -1, 2, 2, 3, -2, 3}}, 1, 15},
      {"7_5", {3, {1, 1, 1, 1, 2, -1, 2, 2}}, 1, 17},
      {"7_6", {4, {1, 1, -2, 1, 3, -2, 3}}, 1, 19},
      {"7_7", {4, {1, -2, 1, -2, 3, -2, 3}}, 1, 21},
      {"hopf", {2, {1, 1}}, 2, 2},
      {"T(2,4)", {2, {1, 1, 1, 1}}, 2, 4},
      {"whitehead", {3, {1, 1, -2, 1, -2}}, 2, 8},
      {"T(2,6)", {2, {1, 1, 1, 1, 1, 1}}, 2, 6},
      {"L7", {3, {1, 1, 1, 2, 2, 2, 2}}, 2, 12},
      {"borromean", {3, {1, -2, 1, -2, 1, -2}}, 3, 16},
      {"unlink2", {2, {}}, 2, 0},
      {"unlink3", {3, {}}, 3, 0},
      {"3_1+0_1", {3, {1, 1, 1}}, 2, 0},
      {"hopf+0_1", {3, {1, 1}}, 3, 0},
  };
  return all;
}

}  // namespace corpus
