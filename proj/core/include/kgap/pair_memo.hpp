#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace kgap {

/// Append-only memo of boolean results keyed by ordered pairs of ids.
///
/// Ids below 2^20 live in lazily allocated 64x64 pages of 2-bit cells and are
/// read and written without locks. Writes are idempotent: a key is only ever
/// stored with one value, so racing writers agree. Larger ids fall back to a
/// mutex-guarded hash map.
class PairMemo {
 public:
  PairMemo();
  ~PairMemo();
  PairMemo(const PairMemo&) = delete;
  PairMemo& operator=(const PairMemo&) = delete;

  std::optional<bool> get(std::uint32_t a, std::uint32_t b) const;
  void put(std::uint32_t a, std::uint32_t b, bool value);

 private:
  static constexpr std::size_t kBlockBits = 6;
  static constexpr std::size_t kBlock = std::size_t{1} << kBlockBits;
  static constexpr std::size_t kDenseBits = 20;
  static constexpr std::size_t kBlocks = std::size_t{1} << (kDenseBits - kBlockBits);
  static constexpr std::size_t kWordsPerPage = kBlock * kBlock * 2 / 64;

  struct Page {
    std::atomic<std::uint64_t> words[kWordsPerPage];
  };
  struct Row {
    std::atomic<Page*> pages[kBlocks];
  };

  Page* page(std::uint32_t a, std::uint32_t b, bool create) const;

  std::unique_ptr<std::atomic<Row*>[]> rows_;
  mutable std::mutex overflow_mutex_;
  std::unordered_map<std::uint64_t, bool> overflow_;
};

}  // namespace kgap
