#include "flagcolor/solver.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagcolor/error.hpp"
#include "parallel.hpp"

namespace flagcolor {

std::string to_string(Nimber n) {
  if (n.value == 0) return "0";
  if (n.value == 1) return "*";
  return "*" + std::to_string(n.value);
}

const char* to_string(Outcome o) noexcept { return o == Outcome::P ? "P" : "N"; }

std::uint32_t mex(std::span<const std::uint32_t> values) {
  std::vector<char> present(values.size() + 1, 0);
  for (std::uint32_t v : values) {
    if (v < present.size()) present[v] = 1;
  }
  std::uint32_t m = 0;
  while (present[m]) ++m;
  return m;
}

// --- TranspositionTable ---------------------------------------------------

TranspositionTable::TranspositionTable(std::size_t capacity)
    : capacity_(capacity), shards_(std::make_unique<Shard[]>(kShards)) {}

TranspositionTable::Shard& TranspositionTable::shard(const CanonicalKey& key) {
  return shards_[std::hash<CanonicalKey>{}(key) % kShards];
}

std::optional<std::uint32_t> TranspositionTable::find(const CanonicalKey& key) {
  Shard& s = shard(key);
  std::lock_guard lock(s.mutex);
  auto it = s.map.find(key.bytes());
  if (it == s.map.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void TranspositionTable::insert(const CanonicalKey& key, std::uint32_t value) {
  Shard& s = shard(key);
  std::lock_guard lock(s.mutex);
  auto [it, inserted] = s.map.try_emplace(key.bytes(), value);
  if (!inserted) {
    if (it->second != value) {
      throw std::logic_error("transposition table: conflicting values for one key");
    }
    return;
  }
  const std::uint64_t now = entries_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (capacity_ != 0 && now > capacity_) {
    s.map.erase(it);
    entries_.fetch_sub(1, std::memory_order_relaxed);
    throw Error(ErrorCode::capacity_exhausted,
                "cap " + std::to_string(capacity_) + " reached after " +
                    std::to_string(hits_.load()) + " hits, " + std::to_string(misses_.load()) +
                    " misses");
  }
}

std::size_t TranspositionTable::size() const { return entries_.load(); }

TableStats TranspositionTable::stats() const {
  return {entries_.load(), hits_.load(), misses_.load()};
}

void TranspositionTable::clear() {
  for (std::size_t i = 0; i < kShards; ++i) {
    std::lock_guard lock(shards_[i].mutex);
    shards_[i].map.clear();
  }
  entries_ = 0;
  hits_ = 0;
  misses_ = 0;
}

// --- Solver -----------------------------------------------------------------

using detail::parallel_for;

namespace {

Nimber checked_nimber(std::uint32_t m) {
  if (m > Nimber::kMax) throw Error(ErrorCode::nimber_overflow, std::to_string(m));
  return {m};
}

}  // namespace

Solver::Solver(SolverOptions options)
    : Solver(options, std::make_shared<TranspositionTable>(options.memo_cap)) {}

Solver::Solver(SolverOptions options, std::shared_ptr<TranspositionTable> table)
    : options_(options),
      grundy_table_(std::move(table)),
      outcome_table_(std::make_unique<TranspositionTable>(options.memo_cap)) {
  options_.threads = detail::resolve_threads(options_.threads);
}

CanonicalForm Solver::canonize(const Position& p) {
  canonizations_.fetch_add(1, std::memory_order_relaxed);
  return canonical_form(p.graph());
}

// Options of `p`, one per canonical key, smallest positions first. Moves
// from vertices in the same automorphism orbit give isomorphic options, so
// only orbit representatives are expanded.
std::vector<Solver::Child> Solver::expand(const Position& p, const CanonicalForm& form) {
  const ColoredGraph& g = p.graph();
  std::vector<Child> children;
  std::unordered_set<std::string> keys;
  std::vector<ColorId> colors;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (form.orbit[v] != v) continue;
    colors.clear();
    for (Vertex w : g.neighbors(v)) colors.push_back(g.color(w));
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (ColorId c : colors) {
      Position child = apply_move_unchecked(p, v, c);
      CanonicalForm cf = canonize(child);
      if (keys.insert(cf.key.bytes()).second) children.push_back({std::move(child), std::move(cf)});
    }
  }
  std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
    if (a.position.vertex_count() != b.position.vertex_count()) {
      return a.position.vertex_count() < b.position.vertex_count();
    }
    return a.form.key < b.form.key;
  });
  return children;
}

Nimber Solver::grundy_memo(const Position& p, const CanonicalForm& form) {
  if (p.is_terminal()) return {0};
  if (auto known = grundy_table_->find(form.key)) return {*known};
  nodes_.fetch_add(1, std::memory_order_relaxed);
  std::vector<Child> children = expand(p, form);
  std::vector<std::uint32_t> values;
  values.reserve(children.size());
  for (const Child& c : children) values.push_back(grundy_memo(c.position, c.form).value);
  const Nimber result = checked_nimber(mex(values));
  grundy_table_->insert(form.key, result.value);
  return result;
}

Nimber Solver::grundy_plain(const Position& p) {
  nodes_.fetch_add(1, std::memory_order_relaxed);
  std::vector<std::uint32_t> values;
  for (const Move& m : legal_moves(p)) values.push_back(grundy_plain(apply_move_unchecked(p, m.vertex, m.new_color)).value);
  return checked_nimber(mex(values));
}

Nimber Solver::grundy(const Position& p) {
  if (!options_.use_table) return grundy_plain(p);
  CanonicalForm form = canonize(p);
  if (p.is_terminal()) return {0};
  if (auto known = grundy_table_->find(form.key)) return {*known};
  if (options_.threads <= 1) return grundy_memo(p, form);

  nodes_.fetch_add(1, std::memory_order_relaxed);
  std::vector<Child> children = expand(p, form);
  std::vector<std::uint32_t> values(children.size());
  parallel_for(children.size(), options_.threads, [&](std::size_t i) {
    values[i] = grundy_memo(children[i].position, children[i].form).value;
  });
  const Nimber result = checked_nimber(mex(values));
  grundy_table_->insert(form.key, result.value);
  return result;
}

std::optional<bool> Solver::known_win(const Position& p, const CanonicalForm& form) {
  if (p.is_terminal()) return false;
  if (auto v = grundy_table_->find(form.key)) return *v != 0;
  if (auto v = outcome_table_->find(form.key)) return *v != 0;
  return std::nullopt;
}

bool Solver::is_next_player_win(const Position& p, const CanonicalForm& form) {
  if (auto known = known_win(p, form)) return *known;
  nodes_.fetch_add(1, std::memory_order_relaxed);
  std::vector<Child> children = expand(p, form);
  bool win = false;
  // Cheap pass over already-solved options before recursing.
  for (const Child& c : children) {
    auto k = known_win(c.position, c.form);
    if (k && !*k) {
      win = true;
      break;
    }
  }
  if (!win) {
    for (const Child& c : children) {
      if (!is_next_player_win(c.position, c.form)) {
        win = true;
        break;
      }
    }
  }
  outcome_table_->insert(form.key, win ? 1 : 0);
  return win;
}

Outcome Solver::outcome(const Position& p) {
  if (!options_.use_table) return outcome_of(grundy_plain(p));
  CanonicalForm form = canonize(p);
  if (auto known = known_win(p, form)) return *known ? Outcome::N : Outcome::P;
  if (options_.threads <= 1) return is_next_player_win(p, form) ? Outcome::N : Outcome::P;

  nodes_.fetch_add(1, std::memory_order_relaxed);
  std::vector<Child> children = expand(p, form);
  std::atomic<bool> win{false};
  parallel_for(children.size(), options_.threads, [&](std::size_t i) {
    if (win.load()) return;
    if (!is_next_player_win(children[i].position, children[i].form)) win = true;
  });
  outcome_table_->insert(form.key, win ? 1 : 0);
  return win ? Outcome::N : Outcome::P;
}

std::vector<MoveValue> Solver::option_values(const Position& p) {
  std::vector<MoveValue> out;
  for (const Move& m : legal_moves(p)) {
    out.push_back({m, grundy(apply_move_unchecked(p, m.vertex, m.new_color))});
  }
  return out;
}

std::vector<Move> Solver::winning_moves(const Position& p) {
  std::vector<Move> out;
  for (const Move& m : legal_moves(p)) {
    if (outcome(apply_move_unchecked(p, m.vertex, m.new_color)) == Outcome::P) out.push_back(m);
  }
  return out;
}

Nimber Solver::grundy_sum(std::span<const Position> components) {
  Nimber total{0};
  for (const Position& c : components) total = total ^ grundy(c);
  return total;
}

SolverStats Solver::stats() const {
  return {nodes_.load(), canonizations_.load(), grundy_table_->stats(), outcome_table_->stats()};
}

Nimber grundy(const Position& p) { return Solver().grundy(p); }

Nimber grundy(const Position& p, TranspositionTable& table) {
  return Solver({}, std::shared_ptr<TranspositionTable>(&table, [](TranspositionTable*) {})).grundy(p);
}

Outcome outcome(const Position& p) { return Solver().outcome(p); }

std::vector<Move> winning_moves(const Position& p) { return Solver().winning_moves(p); }

Nimber grundy_sum(std::span<const Position> components) { return Solver().grundy_sum(components); }

}  // namespace flagcolor
