// Copyright 2026 The Fairgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairgame/catalog.h"

namespace fairgame::catalog {

Economy two_by_three() {
  return Economy({"1", "2"}, {{"a1", "a2"}, {"b1", "b2", "b3"}}, {0, 0},
                 {0, 5, 5,  //
                  2, 4, 4});
}

CustomTable two_by_three_unfair() {
  return {{{0, 0}, {2, 3}, {3, 2},  //
           {1, 1}, {3, 1}, {2, 2}}};
}

Game cycling_game() {
  return game_from_table({"1", "2"}, {{"c", "d"}, {"a", "b"}},
                         {{0, 4}, {3, 0},  //
                          {1, 0}, {0, 2}});
}

Economy dominated_equilibrium() {
  return Economy({"1", "2"}, {{"a1", "a2", "a3"}, {"b1", "b2", "b3", "b4"}},
                 {0, 0},
                 {0, 0, 12, 6,   //
                  13, 0, 2, 1,   //
                  3, 13, 7, 1});
}

Economy coordination() {
  return Economy({"1", "2"}, {{"c", "d"}, {"a", "b"}}, {0, 0},
                 {0, 0,  //
                  0, 2});
}

Economy monotone_f() {
  return Economy({"1", "2"}, {{"a1", "a2"}, {"b1", "b2"}}, {0, 0},
                 {0, 1,  //
                  2, 3});
}

CustomTable monotone_f_table() {
  return {{{0, 0}, {2, -1},  //
           {2, 0}, {1, 2}}};
}

Economy monotone_g() {
  return Economy({"1", "2"}, {{"a1", "a2"}, {"b1", "b2"}}, {0, 0},
                 {0, 1,  //
                  1, 3});
}

CustomTable monotone_g_table() {
  return {{{0, 0}, {2, -1},  //
           {2, -1}, {1, 2}}};
}

Game prisoners_dilemma() {
  return game_from_table({"1", "2"},
                         {{"Cooperate", "Defect"}, {"Cooperate", "Defect"}},
                         {{0, 0}, {-2, 1},  //
                          {1, -2}, {-1, -1}});
}

Economy tax_revenue() {
  // Profiles in index order: (a,a,a), (a,b,a), (b,a,a), (b,b,a), (c,a,a),
  // (c,b,a).
  return Economy({"1", "2", "3"}, {{"a", "b", "c"}, {"a", "b"}, {"a"}},
                 {0, 0, 0},
                 {0, 41175.5, 41175.5, 82351, 45015.5, 86191});
}

}  // namespace fairgame::catalog
