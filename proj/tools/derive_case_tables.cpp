// Copyright 2026 The grundy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Re-derives the P5-like case tables from the exact oracle and prints them
// next to the frozen copies. Exit status 1 if they differ.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "grundy/derivation.hpp"
#include "grundy/grundy.hpp"

int main(int argc, char** argv) {
  using namespace grundy;
  const unsigned max_gamma = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 3;
  bool same = true;
  for (P5Shape shape : {P5Shape::kP5, P5Shape::kC5, P5Shape::kP5Complement}) {
    std::cout << to_string(shape) << '\n';
    const auto derived = derive_case_table(shape, max_gamma);
    if (!derived) {
      std::cout << "  no cover found\n";
      same = false;
      continue;
    }
    for (const CaseTerm& t : derived->terms) std::cout << "  " << t.to_string() << '\n';
    auto a = derived->terms;
    auto b = case_table(shape).terms;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::cout << "  frozen table " << (a == b ? "matches" : "DIFFERS") << '\n';
    same &= a == b;
  }
  return same ? EXIT_SUCCESS : EXIT_FAILURE;
}
