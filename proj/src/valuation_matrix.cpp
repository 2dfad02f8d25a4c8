#include "intz/valuation_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "intz/kernels.hpp"

namespace intz {

ValuationMatrix::ValuationMatrix(std::span<const IntPoly> polys, std::vector<std::uint64_t> primes,
                                 std::vector<unsigned> caps, std::size_t points)
    : poly_count_(polys.size()), primes_(std::move(primes)), points_(points) {
  if (caps.size() != primes_.size()) throw DomainError("ValuationMatrix: one cap per prime required");
  for (unsigned c : caps) {
    if (c >= 0xFFFF) throw BoundError("ValuationMatrix: valuation cap does not fit 16 bits");
  }
  data_.resize(poly_count_ * primes_.size() * points_);
  for (std::size_t i = 0; i < poly_count_; ++i) {
    for (std::size_t c = 0; c < points_; ++c) {
      BigInt v = evaluate(polys[i], BigInt(static_cast<unsigned long>(c)));
      for (std::size_t j = 0; j < primes_.size(); ++j) {
        data_[(i * primes_.size() + j) * points_ + c] =
            static_cast<std::uint16_t>(valuation(v, primes_[j], caps[j]));
      }
    }
  }
}

std::span<const std::uint16_t> ValuationMatrix::row(std::size_t poly, std::size_t prime) const {
  return {data_.data() + (poly * primes_.size() + prime) * points_, points_};
}

std::span<const std::uint16_t> ValuationMatrix::rows(std::size_t poly) const {
  return {data_.data() + poly * primes_.size() * points_, primes_.size() * points_};
}

std::vector<std::uint16_t> ValuationMatrix::subset_exponents(std::span<const std::size_t> members) const {
  const auto& k = kernels::active();
  std::vector<std::uint16_t> acc(primes_.size() * points_, 0);
  std::vector<std::uint16_t> out(primes_.size(), 0);
  for (std::size_t i : members) {
    auto r = rows(i);
    for (std::size_t j = 0; j < primes_.size(); ++j) {
      std::uint16_t* a = acc.data() + j * points_;
      out[j] = k.add_min(a, a, r.data() + j * points_, points_);
    }
  }
  return out;
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

namespace {

// Depth-first subset walk below a fixed prefix. Each level owns one
// accumulator buffer; a child is its parent's buffer plus one row.
struct SubsetWalker {
  const ValuationMatrix& m;
  const kernels::KernelSet& k;
  std::vector<std::uint16_t>& table;
  std::vector<std::vector<std::uint16_t>> buffers;

  SubsetWalker(const ValuationMatrix& matrix, std::vector<std::uint16_t>& out)
      : m(matrix), k(kernels::active()), table(out),
        buffers(matrix.poly_count() + 1,
                std::vector<std::uint16_t>(matrix.prime_count() * matrix.points(), 0)) {}

  // Writes table[mask | (1<<depth)] for every extension; buffers[level] holds prod(mask).
  void walk(std::size_t depth, std::size_t level, std::size_t mask) {
    const std::size_t P = m.prime_count(), L = m.points();
    for (std::size_t i = depth; i < m.poly_count(); ++i) {
      const std::size_t child = mask | (std::size_t{1} << i);
      auto r = m.rows(i);
      const std::uint16_t* src = buffers[level].data();
      std::uint16_t* dst = buffers[level + 1].data();
      for (std::size_t j = 0; j < P; ++j)
        table[child * P + j] = k.add_min(dst + j * L, src + j * L, r.data() + j * L, L);
      walk(i + 1, level + 1, child);
    }
  }
};

}  // namespace

std::vector<std::uint16_t> all_subset_exponents(const ValuationMatrix& m, unsigned threads) {
  const std::size_t n = m.poly_count();
  if (n > 24) throw BoundError("all_subset_exponents: more than 24 polynomials");
  const std::size_t P = m.prime_count(), L = m.points();
  std::vector<std::uint16_t> table((std::size_t{1} << n) * P, 0);
  threads = resolve_threads(threads);

  // Each task owns one assignment of the first `split` bits and fills every
  // mask carrying that low-bit pattern, the bare prefix included.
  std::size_t split = 0;
  while (split < n && (std::size_t{1} << split) < 4 * threads && split < 10) ++split;
  if (threads == 1) split = 0;
  const std::size_t tasks = std::size_t{1} << split;

  auto run_task = [&](std::size_t prefix) {
    SubsetWalker w(m, table);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < split; ++i)
      if (prefix >> i & 1) members.push_back(i);
    // Accumulate the prefix into buffers[0].
    const auto& k = kernels::active();
    std::fill(w.buffers[0].begin(), w.buffers[0].end(), 0);
    for (std::size_t i : members) {
      auto r = m.rows(i);
      for (std::size_t j = 0; j < P; ++j) {
        std::uint16_t* a = w.buffers[0].data() + j * L;
        table[prefix * P + j] = k.add_min(a, a, r.data() + j * L, L);
      }
    }
    w.walk(split, 0, prefix);
  };

  if (tasks == 1) {
    run_task(0);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, tasks); ++t) {
      pool.emplace_back([&] {
        for (std::size_t task; (task = next.fetch_add(1)) < tasks;) run_task(task);
      });
    }
    for (auto& th : pool) th.join();
  }
  return table;
}

void for_each_selection(const ValuationMatrix& m, std::span<const std::vector<std::size_t>> slots,
                        const SelectionVisitor& visit) {
  const std::size_t P = m.prime_count(), L = m.points();
  const auto& k = kernels::active();
  // buffers[t] / exps[t] are written only by a choice made at slot t - 1.
  std::vector<std::vector<std::uint16_t>> buffers(slots.size() + 1, std::vector<std::uint16_t>(P * L, 0));
  std::vector<std::vector<std::uint16_t>> exps(slots.size() + 1, std::vector<std::uint16_t>(P, 0));
  std::vector<int> choice(slots.size(), -1);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t s, std::size_t from) {
    if (s == slots.size()) {
      visit(choice, exps[from]);
      return;
    }
    choice[s] = -1;
    rec(s + 1, from);
    for (std::size_t a = 0; a < slots[s].size(); ++a) {
      auto r = m.rows(slots[s][a]);
      for (std::size_t j = 0; j < P; ++j)
        exps[s + 1][j] = k.add_min(buffers[s + 1].data() + j * L, buffers[from].data() + j * L,
                                   r.data() + j * L, L);
      choice[s] = static_cast<int>(a);
      rec(s + 1, s + 1);
    }
    choice[s] = -1;
  };
  rec(0, 0);
}

}  // namespace intz
