#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zkfingpt {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);

/// Incremental hashing for large payloads (ledger files).
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::span<const uint8_t> data);
  Digest finalize();

 private:
  void* ctx_;
};

std::string hex_encode(std::span<const uint8_t> bytes);
std::vector<uint8_t> hex_decode(const std::string& hex);

}  // namespace zkfingpt
