// Copyright 2026 The Scisumm Authors
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

#include "scisumm/checkpoint.hpp"

#include <bit>
#include <cstring>

#include "scisumm/error.hpp"
#include "scisumm/util.hpp"

namespace scisumm::neural {

namespace {

constexpr char kMagic[8] = {'S', 'C', 'S', 'M', 'C', 'K', 'P', 'T'};
constexpr std::uint32_t kVersion = 1;

// Explicit little-endian encoding keeps files portable and byte-stable.
void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double d) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(d);
  put_u64(out, bits);
}

class Reader {
 public:
  explicit Reader(const std::string& data) : data_(data) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(uint_n(4)); }
  std::uint64_t u64() { return uint_n(8); }
  double f64() { return std::bit_cast<double>(u64()); }

  std::string bytes(std::size_t n) {
    need(n);
    std::string out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  std::uint64_t uint_n(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i]))
           << (8 * i);
    }
    pos_ += static_cast<std::size_t>(width);
    return v;
  }

  void need(std::size_t n) {
    if (pos_ + n > data_.size()) {
      throw Error(errc::io_error, "truncated checkpoint");
    }
  }

  const std::string& data_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  std::string out;
  out.append(kMagic, sizeof(kMagic));
  put_u32(out, kVersion);
  put_u32(out, 0);  // reserved

  put_u64(out, ckpt.config_json.size());
  out += ckpt.config_json;

  put_u64(out, ckpt.strings.size());
  for (const auto& s : ckpt.strings) {
    put_u64(out, s.size());
    out += s;
  }

  put_u64(out, ckpt.tensors.size());
  for (const auto& [name, tensor] : ckpt.tensors) {
    put_u64(out, name.size());
    out += name;
    put_u32(out, static_cast<std::uint32_t>(tensor.shape.size()));
    for (std::size_t d : tensor.shape) put_u64(out, d);
    for (double v : tensor.values) put_f64(out, v);
  }

  util::write_file(path, out);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  const std::string data = util::read_file(path);
  Reader reader(data);

  if (reader.bytes(sizeof(kMagic)) != std::string(kMagic, sizeof(kMagic))) {
    throw Error(errc::io_error, path.string() + " is not a checkpoint file");
  }
  std::uint32_t version = reader.u32();
  if (version != kVersion) {
    throw Error(errc::io_error,
                "unsupported checkpoint version " + std::to_string(version));
  }
  reader.u32();  // reserved

  Checkpoint ckpt;
  ckpt.config_json = reader.bytes(reader.u64());

  std::uint64_t string_count = reader.u64();
  ckpt.strings.reserve(string_count);
  for (std::uint64_t i = 0; i < string_count; ++i) {
    ckpt.strings.push_back(reader.bytes(reader.u64()));
  }

  std::uint64_t tensor_count = reader.u64();
  for (std::uint64_t i = 0; i < tensor_count; ++i) {
    std::string name = reader.bytes(reader.u64());
    std::uint32_t ndim = reader.u32();
    std::vector<std::size_t> shape;
    std::size_t total = 1;
    for (std::uint32_t d = 0; d < ndim; ++d) {
      shape.push_back(static_cast<std::size_t>(reader.u64()));
      total *= shape.back();
    }
    Tensor tensor;
    tensor.shape = std::move(shape);
    tensor.values.resize(total);
    for (std::size_t v = 0; v < total; ++v) tensor.values[v] = reader.f64();
    ckpt.tensors.emplace_back(std::move(name), std::move(tensor));
  }
  return ckpt;
}

}  // namespace scisumm::neural
