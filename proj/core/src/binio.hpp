// Copyright 2026 The KDP Authors
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

// Internal little-endian buffer codec shared by the KDPN / KDPW formats.
// Files are built fully in memory, CRC'd, then written in one shot so a
// failed save never leaves a half-written payload behind.

#ifndef KDP_SRC_BINIO_HPP_
#define KDP_SRC_BINIO_HPP_

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "kdp/crc32.hpp"
#include "kdp/error.hpp"

namespace kdp::binio {

class Writer {
 public:
  void u32(std::uint32_t v) { raw(&v, sizeof v); }
  void u64(std::uint64_t v) { raw(&v, sizeof v); }
  void f32(float v) { raw(&v, sizeof v); }
  void f32s(const float* p, std::size_t n) { raw(p, n * sizeof(float)); }
  void magic(const char m[4]) { raw(m, 4); }

  // appends the CRC of everything written so far
  void finish_with_crc() { u32(crc32(buf_.data(), buf_.size())); }

  void write_file(const std::filesystem::path& path) const {
    if (path.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + path.string());
    out.write(reinterpret_cast<const char*>(buf_.data()),
              static_cast<std::streamsize>(buf_.size()));
    if (!out) throw IoError("write failed: " + path.string());
  }

  const std::vector<std::uint8_t>& bytes() const { return buf_; }

 private:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + n);
  }
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  explicit Reader(std::vector<std::uint8_t> bytes) : buf_(std::move(bytes)) {}

  static Reader from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for read: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return Reader(std::move(bytes));
  }

  void expect_magic(const char m[4], const std::string& what) {
    if (remaining() < 4) throw TruncatedError(what + ": file shorter than magic");
    if (std::memcmp(buf_.data() + pos_, m, 4) != 0) {
      throw BadMagicError(what + ": bad magic");
    }
    pos_ += 4;
  }

  std::uint32_t u32(const std::string& what) {
    std::uint32_t v;
    take(&v, sizeof v, what);
    return v;
  }
  std::uint64_t u64(const std::string& what) {
    std::uint64_t v;
    take(&v, sizeof v, what);
    return v;
  }
  void f32s(float* p, std::size_t n, const std::string& what) {
    take(p, n * sizeof(float), what);
  }

  // verifies the trailing CRC against all bytes that precede it
  void check_crc(const std::string& what) {
    if (buf_.size() < pos_ + 4) {
      throw TruncatedError(what + ": truncated before CRC");
    }
    std::uint32_t stored;
    std::memcpy(&stored, buf_.data() + buf_.size() - 4, 4);
    const std::uint32_t actual = crc32(buf_.data(), buf_.size() - 4);
    if (stored != actual) throw CrcError(what + ": CRC mismatch");
  }

  std::size_t remaining() const { return buf_.size() - pos_; }

  // after all fields are consumed only the CRC word may remain
  void expect_end(const std::string& what) {
    if (remaining() != 4) throw IoError(what + ": unexpected trailing bytes");
  }

 private:
  void take(void* p, std::size_t n, const std::string& what) {
    if (remaining() < n + 4) {  // the trailing CRC must still fit
      throw TruncatedError(what + ": truncated payload");
    }
    std::memcpy(p, buf_.data() + pos_, n);
    pos_ += n;
  }

  std::vector<std::uint8_t> buf_;
  std::size_t pos_ = 0;
};

}  // namespace kdp::binio

#endif  // KDP_SRC_BINIO_HPP_
