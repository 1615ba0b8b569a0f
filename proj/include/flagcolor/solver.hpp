#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagcolor/canon.hpp"
#include "flagcolor/graph.hpp"

namespace flagcolor {

/// Grundy value *n of an impartial position.
struct Nimber {
  std::uint32_t value = 0;

  static constexpr std::uint32_t kMax = 0x7fffffffu;

  friend auto operator<=>(const Nimber&, const Nimber&) = default;
  friend Nimber operator^(Nimber a, Nimber b) { return {a.value ^ b.value}; }
};

/// "0", "*", "*2", ...
std::string to_string(Nimber n);

enum class Outcome { P, N };

inline Outcome outcome_of(Nimber n) { return n.value == 0 ? Outcome::P : Outcome::N; }
const char* to_string(Outcome o) noexcept;

/// Least non-negative integer not in `values`.
std::uint32_t mex(std::span<const std::uint32_t> values);

struct TableStats {
  std::uint64_t entries = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

/// Concurrent map from canonical key to a computed value. Inserts keep the
/// first value stored for a key; a later insert of the same key must carry
/// the same value (checked).
class TranspositionTable {
 public:
  /// `capacity` 0 means unbounded.
  explicit TranspositionTable(std::size_t capacity = 0);

  std::optional<std::uint32_t> find(const CanonicalKey& key);
  /// Throws Error(capacity_exhausted) when the table is full.
  void insert(const CanonicalKey& key, std::uint32_t value);

  std::size_t size() const;
  std::size_t capacity() const noexcept { return capacity_; }
  TableStats stats() const;
  void clear();

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, std::uint32_t> map;
  };
  Shard& shard(const CanonicalKey& key);

  std::size_t capacity_;
  std::unique_ptr<Shard[]> shards_;
  std::atomic<std::uint64_t> entries_{0};
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

struct SolverOptions {
  /// Worker threads for sibling options at the root; 0 = hardware concurrency.
  unsigned threads = 1;
  /// Entry cap for each transposition table; 0 = unbounded.
  std::size_t memo_cap = 0;
  /// false: plain recursion over every legal move, no canonical keys.
  bool use_table = true;
};

struct SolverStats {
  std::uint64_t nodes = 0;          // positions expanded
  std::uint64_t canonizations = 0;  // canonical labelings computed
  TableStats grundy_table;
  TableStats outcome_table;
};

struct MoveValue {
  Move move;
  Nimber value;
};

class Solver {
 public:
  explicit Solver(SolverOptions options = {});
  /// Solve against an externally owned nimber table (kept across calls).
  Solver(SolverOptions options, std::shared_ptr<TranspositionTable> table);

  Nimber grundy(const Position& p);
  /// P iff grundy(p) == 0. Uses a separate win/loss search that stops at the
  /// first losing option, after consulting the nimber table.
  Outcome outcome(const Position& p);

  /// Every legal move with the Grundy value of its option.
  std::vector<MoveValue> option_values(const Position& p);
  /// Legal moves whose option is a P-position, in legal_moves order.
  std::vector<Move> winning_moves(const Position& p);

  /// XOR of the component values.
  Nimber grundy_sum(std::span<const Position> components);

  SolverStats stats() const;
  const SolverOptions& options() const noexcept { return options_; }
  TranspositionTable& table() noexcept { return *grundy_table_; }

 private:
  struct Child {
    Position position;
    CanonicalForm form;
  };

  CanonicalForm canonize(const Position& p);
  std::vector<Child> expand(const Position& p, const CanonicalForm& form);
  Nimber grundy_memo(const Position& p, const CanonicalForm& form);
  Nimber grundy_plain(const Position& p);
  bool is_next_player_win(const Position& p, const CanonicalForm& form);
  std::optional<bool> known_win(const Position& p, const CanonicalForm& form);

  SolverOptions options_;
  std::shared_ptr<TranspositionTable> grundy_table_;
  std::unique_ptr<TranspositionTable> outcome_table_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> canonizations_{0};
};

/// One-shot helpers with a fresh solver (and table) per call.
Nimber grundy(const Position& p);
Nimber grundy(const Position& p, TranspositionTable& table);
Outcome outcome(const Position& p);
std::vector<Move> winning_moves(const Position& p);
Nimber grundy_sum(std::span<const Position> components);

}  // namespace flagcolor
