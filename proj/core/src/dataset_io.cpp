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

#include "dpsco/dataset_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpsco {

namespace {
constexpr char kMagic[] = "dpsco-dataset-v1";
}

void save_dataset(std::ostream& out, const Dataset& data) {
  out << kMagic << "\n";
  out << "n " << data.n() << " m " << data.m << " d " << data.d << " seed "
      << data.seed << "\n";
  out << "descriptor " << (data.descriptor.empty() ? "-" : data.descriptor)
      << "\n";
  char buf[40];
  for (const UserRecord& user : data.users) {
    for (const Vec& z : user.samples) {
      for (std::size_t k = 0; k < z.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", z[k]);
        if (k) out << ' ';
        out << buf;
      }
      out << "\n";
    }
  }
}

Dataset load_dataset(std::istream& in) {
  std::string magic;
  if (!std::getline(in, magic) || magic != kMagic) {
    throw std::runtime_error("load_dataset: bad magic line");
  }
  Dataset data;
  std::string key;
  int n = 0;
  in >> key >> n;
  if (key != "n") throw std::runtime_error("load_dataset: expected 'n'");
  in >> key >> data.m;
  if (key != "m") throw std::runtime_error("load_dataset: expected 'm'");
  in >> key >> data.d;
  if (key != "d") throw std::runtime_error("load_dataset: expected 'd'");
  in >> key >> data.seed;
  if (key != "seed") throw std::runtime_error("load_dataset: expected 'seed'");
  in >> key >> data.descriptor;
  if (key != "descriptor") {
    throw std::runtime_error("load_dataset: expected 'descriptor'");
  }
  if (n < 1 || data.m < 1 || data.d < 1) {
    throw std::runtime_error("load_dataset: invalid header counts");
  }
  data.users.resize(n);
  for (int i = 0; i < n; ++i) {
    data.users[i].samples.assign(data.m, Vec(data.d));
    for (int s = 0; s < data.m; ++s) {
      for (int k = 0; k < data.d; ++k) {
        if (!(in >> data.users[i].samples[s][k])) {
          throw std::runtime_error("load_dataset: truncated payload");
        }
      }
    }
  }
  return data;
}

void save_dataset_file(const std::string& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_dataset_file: cannot open " + path);
  save_dataset(out, data);
}

Dataset load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_dataset_file: cannot open " + path);
  return load_dataset(in);
}

}  // namespace dpsco
