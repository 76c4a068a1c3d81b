#include "looplab/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "looplab/errors.hpp"
#include "looplab/involution.hpp"
#include "looplab/pattern.hpp"
#include "looplab/rng.hpp"

namespace looplab {

bool check_pair(const RowPair& pair, SweepCounts& fail, bool* special_out) {
  require_valid_pair(pair);
  long before = fail.total();

  RowPair v = involute(pair);
  if (involute(v) != pair) ++fail.involutive;
  if (stack_boundary_pattern(v) != stack_boundary_pattern(pair)) ++fail.pattern;
  if (count_tiles(v.top, Tile::L) != count_tiles(pair.bottom, Tile::L) ||
      count_tiles(v.bottom, Tile::L) != count_tiles(pair.top, Tile::L))
    ++fail.count_switch;
  if (involute(rotate_row_pair(pair, 1)) != rotate_row_pair(v, 1)) ++fail.equivariance;

  bool special = classify_special(pair) != SpecialPair::None;
  if (special_out) *special_out = special;
  if (!special) {
    int L = pair.width();
    auto symbols = column_symbols(pair);
    auto blocks = maximal_fundamental_blocks(pair);

    // Blocks must tile exactly the marked columns: non-star symbols plus
    // stars with Left on their right or Right on their left.
    std::vector<char> covered(static_cast<std::size_t>(L), 0);
    bool cover_ok = true;
    for (const FundamentalBlock& b : blocks)
      for (int t = 0; t < b.interval.length(); ++t) {
        int pos = (b.interval.a + t) % L;
        if (covered[pos]) cover_ok = false;
        covered[pos] = 1;
      }
    for (int i = 0; i < L; ++i) {
      bool marked = symbols[i] != ColumnSymbol::Star ||
                    symbols[(i + 1) % L] == ColumnSymbol::Left ||
                    symbols[(i + L - 1) % L] == ColumnSymbol::Right;
      if (static_cast<bool>(covered[i]) != marked) cover_ok = false;
    }
    if (!cover_ok) ++fail.disjoint;

    auto vblocks = maximal_fundamental_blocks(v);
    bool same = blocks.size() == vblocks.size();
    for (std::size_t i = 0; same && i < blocks.size(); ++i)
      same = blocks[i].interval == vblocks[i].interval;
    if (!same) ++fail.stability;

    AnnularPattern pat = stack_boundary_pattern(pair);
    for (const FundamentalBlock& b : blocks)
      if (stack_boundary_pattern(block_rotate(pair, b.interval)) != pat) {
        ++fail.block_pattern;
        break;
      }
  }
  return fail.total() == before;
}

namespace {

constexpr long kChunkPairs = 8192;

RowPair pair_from_bits(int width, std::uint64_t bits) {
  RowPair pair;
  pair.top.tiles.resize(static_cast<std::size_t>(width));
  pair.bottom.tiles.resize(static_cast<std::size_t>(width));
  for (int c = 0; c < width; ++c) {
    pair.top.tiles[static_cast<std::size_t>(c)] = (bits >> c) & 1u ? Tile::L : Tile::R;
    pair.bottom.tiles[static_cast<std::size_t>(c)] =
        (bits >> (width + c)) & 1u ? Tile::L : Tile::R;
  }
  return pair;
}

struct ChunkTally {
  SweepCounts failures;
  long checked = 0;
  long specials = 0;
  long first_bad = -1;  // ordinal within the sweep
  std::string first_bad_pair;
};

}  // namespace

SweepReport involution_sweep(int width, const SweepOptions& opts) {
  if (width < 2 || width % 2 != 0)
    throw dimension_error("width must be even and positive");
  if (width > 32) throw resource_limit_error("sweep width capped at 32");
  bool exhaustive = opts.random_pairs == 0;
  if (exhaustive && width > 12)
    throw resource_limit_error("exhaustive sweep above width 12 is impractical (4^" +
                               std::to_string(width) + " pairs); set random_pairs");
  long total = exhaustive ? (1L << (2 * width)) : opts.random_pairs;
  if (total < 1) throw std::invalid_argument("random_pairs must be >= 1");

  long num_chunks = (total + kChunkPairs - 1) / kChunkPairs;
  std::vector<ChunkTally> tallies(static_cast<std::size_t>(num_chunks));
  std::atomic<long> next{0};
  auto worker = [&]() {
    for (long k = next.fetch_add(1); k < num_chunks; k = next.fetch_add(1)) {
      ChunkTally& tally = tallies[static_cast<std::size_t>(k)];
      long begin = k * kChunkPairs;
      long end = std::min(total, begin + kChunkPairs);
      std::mt19937_64 rng;
      if (!exhaustive) rng = derive_stream(opts.seed, "pairs/chunk-" + std::to_string(k));
      for (long i = begin; i < end; ++i) {
        std::uint64_t bits = exhaustive ? static_cast<std::uint64_t>(i) : rng();
        RowPair pair = pair_from_bits(width, bits);
        bool special = false;
        bool good = check_pair(pair, tally.failures, &special);
        ++tally.checked;
        if (special) ++tally.specials;
        if (!good && tally.first_bad < 0) {
          tally.first_bad = i;
          tally.first_bad_pair = format_row(pair.top) + "/" + format_row(pair.bottom);
        }
      }
    }
  };
  long workers = std::min<long>(std::max(opts.threads, 1), num_chunks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepReport rep;
  rep.width = width;
  rep.exhaustive = exhaustive;
  long first_bad = -1;
  for (const ChunkTally& tally : tallies) {
    rep.pairs_checked += tally.checked;
    rep.special_pairs += tally.specials;
    rep.failures.involutive += tally.failures.involutive;
    rep.failures.pattern += tally.failures.pattern;
    rep.failures.count_switch += tally.failures.count_switch;
    rep.failures.equivariance += tally.failures.equivariance;
    rep.failures.disjoint += tally.failures.disjoint;
    rep.failures.stability += tally.failures.stability;
    rep.failures.block_pattern += tally.failures.block_pattern;
    if (tally.first_bad >= 0 && (first_bad < 0 || tally.first_bad < first_bad)) {
      first_bad = tally.first_bad;
      rep.first_failure = tally.first_bad_pair;
    }
  }
  return rep;
}

nlohmann::ordered_json SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["width"] = width;
  j["mode"] = exhaustive ? "exhaustive" : "random";
  j["pairs_checked"] = pairs_checked;
  j["special_pairs"] = special_pairs;
  j["failures"] = nlohmann::ordered_json{{"involutive", failures.involutive},
                                         {"pattern", failures.pattern},
                                         {"count_switch", failures.count_switch},
                                         {"equivariance", failures.equivariance},
                                         {"disjoint", failures.disjoint},
                                         {"stability", failures.stability},
                                         {"block_pattern", failures.block_pattern}};
  j["ok"] = ok();
  if (!first_failure.empty()) j["first_failure"] = first_failure;
  return j;
}

}  // namespace looplab
