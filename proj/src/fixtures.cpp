#include "e7/tables.hpp"

namespace e7 {

const std::vector<std::array<int, 7>>& phi1_reference() {
  static const std::vector<std::array<int, 7>> v = {
      {0, 0, 1, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 1, 1, 0},
      {0, 0, 1, 1, 1, 1, 1}, {0, 1, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 1, 1, 0},
      {0, 1, 1, 0, 1, 1, 1}, {0, 1, 1, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 1, 1},
      {0, 1, 1, 1, 1, 0, 1}, {0, 1, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 1, 1, 1},
      {1, 0, 0, 1, 0, 1, 1}, {1, 0, 0, 1, 1, 0, 1}, {1, 0, 0, 1, 1, 1, 0},
      {1, 0, 0, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 1}, {1, 0, 1, 1, 1, 0, 1},
      {1, 0, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 1, 1}, {1, 1, 0, 1, 0, 1, 0},
      {1, 1, 0, 1, 0, 1, 1}, {1, 1, 0, 1, 1, 0, 1}, {1, 1, 0, 1, 1, 1, 0},
      {1, 1, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 0, 1, 1, 0},
      {1, 1, 1, 0, 1, 1, 1}, {1, 1, 1, 1, 0, 1, 0}, {1, 1, 1, 1, 0, 1, 1},
      {1, 1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 0}};
  return v;
}

const std::vector<std::array<int, 7>>& certs_reference() {
  static const std::vector<std::array<int, 7>> v = {
      {0, 0, 0, 0, 0, 0, 2}, {0, 0, 0, 0, 0, 0, 4}, {0, 0, 0, 0, 0, 0, 6},
      {0, 0, 0, 0, 0, 1, 3}, {0, 0, 0, 0, 0, 1, 5}, {0, 0, 0, 0, 0, 1, 7},
      {0, 0, 0, 0, 0, 2, 4}, {0, 0, 0, 0, 0, 2, 6}, {0, 0, 0, 0, 0, 3, 7},
      {0, 0, 0, 0, 1, 0, 2}, {0, 0, 0, 0, 1, 0, 4}, {0, 0, 0, 0, 1, 0, 6},
      {0, 0, 0, 0, 1, 1, 3}, {0, 0, 0, 0, 1, 1, 5}, {0, 0, 0, 1, 0, 0, 6},
      {0, 0, 1, 0, 0, 0, 5}, {0, 1, 0, 0, 0, 0, 4}, {0, 1, 0, 0, 0, 0, 6},
      {1, 0, 0, 0, 0, 0, 3}, {1, 0, 0, 0, 0, 0, 5}, {1, 0, 0, 0, 0, 0, 7},
      {1, 0, 0, 0, 0, 1, 4}, {1, 0, 0, 0, 0, 1, 6}};
  return v;
}

const std::vector<std::pair<Rat, int>>& nu_stats_reference() {
  static const std::vector<std::pair<Rat, int>> v = {
      {rat(7), 1},      {rat(17, 2), 1},  {rat(10), 1},     {rat(21, 2), 1},
      {rat(12), 1},     {rat(25, 2), 1},  {rat(13), 1},     {rat(27, 2), 2},
      {rat(29, 2), 1},  {rat(17), 7},     {rat(35, 2), 4},  {rat(18), 3},
      {rat(25), 6},     {rat(51, 2), 1},  {rat(26), 4},     {rat(28), 3},
      {rat(29), 15},    {rat(59, 2), 4},  {rat(30), 8},     {rat(34), 4},
      {rat(42), 2},     {rat(52), 1},     {rat(107, 2), 7}, {rat(54), 8},
      {rat(73), 6},     {rat(147, 2), 1}, {rat(78), 7},     {rat(227, 2), 1},
      {rat(198), 1}};
  return v;
}

const std::array<int64_t, 15>& phi_counts_reference() {
  static const std::array<int64_t, 15> v = {0,     32,     1056,   8470,
                                            35765, 87593,  132922, 142493,
                                            122007, 89151, 55349,  30432,
                                            13410,  4494,  681};
  return v;
}

}  // namespace e7
