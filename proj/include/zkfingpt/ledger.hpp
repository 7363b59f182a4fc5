#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zkfingpt/sha256.hpp"

namespace zkfingpt::ledger {

enum class PayloadType : uint8_t { Comm = 1, Proof = 2, Record = 3 };

const char* payload_type_name(PayloadType t);
PayloadType payload_type_from_name(const std::string& name);

struct LedgerEntry {
  uint64_t index = 0;
  Digest prev_hash{};     // genesis: 32 zero bytes
  Digest payload_hash{};  // SHA-256 of the payload bytes
  PayloadType payload_type = PayloadType::Record;
  uint64_t timestamp = 0;
  std::string payload_ref;  // content-addressed filename (hex hash + .bin)
  // H(prev || index || type || payload_hash || timestamp || ref)
  Digest entry_hash{};
};

Digest compute_entry_hash(const LedgerEntry& e);

/// Append-only hash-chained store: a directory of content-addressed payload
/// files plus a newline-delimited JSON index. Emulates the paper's blockchain
/// publication; a remote chain client would slot in behind this interface.
class Store {
 public:
  static Store open(const std::filesystem::path& dir);

  /// Writes the payload content-addressed and appends a chained entry.
  /// Single-writer: serialized via an exclusive lock on the index.
  LedgerEntry publish(std::span<const uint8_t> payload, PayloadType type);

  /// Returns the payload after re-verifying its hash; throws on missing
  /// index or integrity failure.
  std::pair<std::vector<uint8_t>, LedgerEntry> fetch(uint64_t index) const;

  /// Recomputes the whole chain and every payload hash.
  bool audit() const;

  std::vector<LedgerEntry> entries() const;
  size_t size() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  explicit Store(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::filesystem::path index_path() const { return dir_ / "index.ndjson"; }

  std::filesystem::path dir_;
};

}  // namespace zkfingpt::ledger
