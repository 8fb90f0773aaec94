// Copyright 2026 The ifsquant Authors.
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

#pragma once

#include <cstddef>
#include <iosfwd>

namespace ifsq::cli {

// Golden values, structural validation for n <= n_max, enumeration versus
// the binomial count for n <= min(n_max, 40), and exhaustive-search
// agreement for n <= min(n_max, 12). Prints one PASS/FAIL line per check and
// returns the number of failures.
std::size_t verify(std::size_t n_max, std::ostream& out);

}  // namespace ifsq::cli
