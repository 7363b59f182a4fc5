#include "zkfingpt/ledger.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "zkfingpt/serialize.hpp"

namespace zkfingpt::ledger {

namespace {

using nlohmann::json;

Digest digest_from_hex(const std::string& hex) {
  const auto bytes = hex_decode(hex);
  if (bytes.size() != 32) throw std::runtime_error("ledger: bad hash length in index");
  Digest d{};
  std::copy(bytes.begin(), bytes.end(), d.begin());
  return d;
}

json entry_to_json(const LedgerEntry& e) {
  return json{{"index", e.index},
              {"prev_hash", hex_encode(e.prev_hash)},
              {"payload_hash", hex_encode(e.payload_hash)},
              {"payload_type", payload_type_name(e.payload_type)},
              {"timestamp", e.timestamp},
              {"payload_ref", e.payload_ref},
              {"entry_hash", hex_encode(e.entry_hash)}};
}

LedgerEntry entry_from_json(const json& j) {
  LedgerEntry e;
  e.index = j.at("index").get<uint64_t>();
  e.prev_hash = digest_from_hex(j.at("prev_hash").get<std::string>());
  e.payload_hash = digest_from_hex(j.at("payload_hash").get<std::string>());
  e.payload_type = payload_type_from_name(j.at("payload_type").get<std::string>());
  e.timestamp = j.at("timestamp").get<uint64_t>();
  e.payload_ref = j.at("payload_ref").get<std::string>();
  e.entry_hash = digest_from_hex(j.at("entry_hash").get<std::string>());
  return e;
}

/// flock-based exclusive lock; released on destruction.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) throw std::runtime_error("ledger: cannot open lock file");
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("ledger: cannot acquire lock");
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }

 private:
  int fd_ = -1;
};

}  // namespace

const char* payload_type_name(PayloadType t) {
  switch (t) {
    case PayloadType::Comm:
      return "comm";
    case PayloadType::Proof:
      return "proof";
    case PayloadType::Record:
      return "record";
  }
  throw std::invalid_argument("ledger: unknown payload type");
}

PayloadType payload_type_from_name(const std::string& name) {
  if (name == "comm") return PayloadType::Comm;
  if (name == "proof") return PayloadType::Proof;
  if (name == "record") return PayloadType::Record;
  throw std::runtime_error("ledger: unknown payload type name");
}

Digest compute_entry_hash(const LedgerEntry& e) {
  ByteWriter w;
  w.digest(e.prev_hash);
  w.u64be(e.index);
  w.u8(static_cast<uint8_t>(e.payload_type));
  w.digest(e.payload_hash);
  // timestamp and ref are covered too, so no index byte can drift silently
  w.u64be(e.timestamp);
  w.u32be(static_cast<uint32_t>(e.payload_ref.size()));
  w.bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(e.payload_ref.data()),
                                   e.payload_ref.size()));
  return sha256(w.data());
}

Store Store::open(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Store store(dir);
  if (!std::filesystem::exists(store.index_path())) {
    std::ofstream touch(store.index_path(), std::ios::app);
  }
  return store;
}

std::vector<LedgerEntry> Store::entries() const {
  std::vector<LedgerEntry> out;
  std::ifstream in(index_path());
  if (!in) throw std::runtime_error("ledger: missing index");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(entry_from_json(json::parse(line)));
  }
  return out;
}

size_t Store::size() const { return entries().size(); }

LedgerEntry Store::publish(std::span<const uint8_t> payload, PayloadType type) {
  FileLock lock(dir_ / ".lock");
  const auto existing = entries();

  LedgerEntry e;
  e.index = existing.size();
  e.prev_hash = existing.empty() ? Digest{} : existing.back().entry_hash;
  e.payload_hash = sha256(payload);
  e.payload_type = type;
  e.timestamp = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  e.payload_ref = hex_encode(e.payload_hash) + ".bin";
  e.entry_hash = compute_entry_hash(e);

  write_file(dir_ / e.payload_ref, payload);
  std::ofstream out(index_path(), std::ios::app);
  if (!out) throw std::runtime_error("ledger: cannot append to index");
  out << entry_to_json(e).dump() << "\n";
  if (!out) throw std::runtime_error("ledger: short index write");
  return e;
}

std::pair<std::vector<uint8_t>, LedgerEntry> Store::fetch(uint64_t index) const {
  const auto all = entries();
  if (index >= all.size()) throw std::out_of_range("ledger: no such index");
  const LedgerEntry& e = all[index];
  auto payload = read_file(dir_ / e.payload_ref);
  if (sha256(payload) != e.payload_hash) {
    throw std::runtime_error("ledger: payload integrity failure at index " +
                             std::to_string(index));
  }
  return {std::move(payload), e};
}

bool Store::audit() const {
  std::vector<LedgerEntry> all;
  try {
    all = entries();
  } catch (const std::exception&) {
    return false;
  }
  Digest prev{};
  for (size_t i = 0; i < all.size(); ++i) {
    const LedgerEntry& e = all[i];
    if (e.index != i) return false;
    if (e.prev_hash != prev) return false;
    if (compute_entry_hash(e) != e.entry_hash) return false;
    try {
      const auto payload = read_file(dir_ / e.payload_ref);
      if (sha256(payload) != e.payload_hash) return false;
    } catch (const std::exception&) {
      return false;
    }
    prev = e.entry_hash;
  }
  return true;
}

}  // namespace zkfingpt::ledger
