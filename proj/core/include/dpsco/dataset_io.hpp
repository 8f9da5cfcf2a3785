//
// Copyright 2026 The dpsco Authors
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
//

#ifndef DPSCO_DATASET_IO_HPP_
#define DPSCO_DATASET_IO_HPP_

#include <iosfwd>
#include <string>

#include "dpsco/problem.hpp"

namespace dpsco {

// Textual dataset format, replayable bit-for-bit:
//
//   dpsco-dataset-v1
//   n <n> m <m> d <d> seed <seed>
//   descriptor <token>
//   <n*m rows of d doubles, user-major, printed with %.17g>
void save_dataset(std::ostream& out, const Dataset& data);
Dataset load_dataset(std::istream& in);

void save_dataset_file(const std::string& path, const Dataset& data);
Dataset load_dataset_file(const std::string& path);

}  // namespace dpsco

#endif  // DPSCO_DATASET_IO_HPP_
