#include "kgap/pair_memo.hpp"

namespace kgap {

PairMemo::PairMemo() : rows_(new std::atomic<Row*>[kBlocks]()) {}

PairMemo::~PairMemo() {
  for (std::size_t r = 0; r < kBlocks; ++r) {
    Row* row = rows_[r].load(std::memory_order_relaxed);
    if (row == nullptr) continue;
    for (std::size_t p = 0; p < kBlocks; ++p) delete row->pages[p].load(std::memory_order_relaxed);
    delete row;
  }
}

PairMemo::Page* PairMemo::page(std::uint32_t a, std::uint32_t b, bool create) const {
  std::atomic<Row*>& row_slot = rows_[a >> kBlockBits];
  Row* row = row_slot.load(std::memory_order_acquire);
  if (row == nullptr) {
    if (!create) return nullptr;
    auto* fresh = new Row();
    if (row_slot.compare_exchange_strong(row, fresh, std::memory_order_acq_rel)) {
      row = fresh;
    } else {
      delete fresh;
    }
  }
  std::atomic<Page*>& page_slot = row->pages[b >> kBlockBits];
  Page* pg = page_slot.load(std::memory_order_acquire);
  if (pg == nullptr) {
    if (!create) return nullptr;
    auto* fresh = new Page();
    if (page_slot.compare_exchange_strong(pg, fresh, std::memory_order_acq_rel)) {
      pg = fresh;
    } else {
      delete fresh;
    }
  }
  return pg;
}

std::optional<bool> PairMemo::get(std::uint32_t a, std::uint32_t b) const {
  if ((a >> kDenseBits) != 0 || (b >> kDenseBits) != 0) {
    std::lock_guard lock(overflow_mutex_);
    const auto it = overflow_.find((std::uint64_t{a} << 32) | b);
    if (it == overflow_.end()) return std::nullopt;
    return it->second;
  }
  const Page* pg = page(a, b, false);
  if (pg == nullptr) return std::nullopt;
  const std::size_t cell = (a & (kBlock - 1)) * kBlock + (b & (kBlock - 1));
  const std::uint64_t word = pg->words[cell / 32].load(std::memory_order_relaxed);
  switch ((word >> ((cell % 32) * 2)) & 3U) {
    case 1: return false;
    case 2: return true;
    default: return std::nullopt;
  }
}

void PairMemo::put(std::uint32_t a, std::uint32_t b, bool value) {
  if ((a >> kDenseBits) != 0 || (b >> kDenseBits) != 0) {
    std::lock_guard lock(overflow_mutex_);
    overflow_.emplace((std::uint64_t{a} << 32) | b, value);
    return;
  }
  Page* pg = page(a, b, true);
  const std::size_t cell = (a & (kBlock - 1)) * kBlock + (b & (kBlock - 1));
  const std::uint64_t bits = value ? 2U : 1U;
  pg->words[cell / 32].fetch_or(bits << ((cell % 32) * 2), std::memory_order_relaxed);
}

}  // namespace kgap
