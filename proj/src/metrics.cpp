#include "nedlib/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <unordered_map>
#include <utility>

namespace nedlib {
namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

}  // namespace

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::ed:
      return "ed";
    case Metric::ned:
      return "ned";
    case Metric::ged:
      return "ged";
    case Metric::ced:
      return "ced";
    case Metric::ced_prime:
      return "cedp";
  }
  return {};
}

std::optional<Metric> metric_from_name(std::string_view name) {
  if (name == "ed") return Metric::ed;
  if (name == "ned") return Metric::ned;
  if (name == "ged") return Metric::ged;
  if (name == "ced") return Metric::ced;
  if (name == "cedp" || name == "ced'") return Metric::ced_prime;
  return std::nullopt;
}

DistanceResult ed(const Word& a, const Word& b, bool want_witness) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<int> dp((m + 1) * (n + 1));
  auto at = [&](std::size_t i, std::size_t j) -> int& { return dp[i * (n + 1) + j]; };
  for (std::size_t i = 0; i <= m; ++i) at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= n; ++j) at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      int diag = at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }

  DistanceResult result;
  result.metric = Metric::ed;
  result.value = Rational(at(m, n));
  if (want_witness) {
    EditPath path;
    std::size_t i = m, j = n;
    // Deterministic backtrack: no-change, change, delete, insert.
    while (i > 0 || j > 0) {
      int here = at(i, j);
      if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && at(i - 1, j - 1) == here) {
        path.push_back(EditLetter::no_change(a[i - 1]));
        --i, --j;
      } else if (i > 0 && j > 0 && a[i - 1] != b[j - 1] && at(i - 1, j - 1) + 1 == here) {
        path.push_back(EditLetter::change(a[i - 1], b[j - 1]));
        --i, --j;
      } else if (i > 0 && at(i - 1, j) + 1 == here) {
        path.push_back(EditLetter::erase(a[i - 1]));
        --i;
      } else {
        path.push_back(EditLetter::insert(b[j - 1]));
        --j;
      }
    }
    std::reverse(path.begin(), path.end());
    result.witness = std::move(path);
  }
  return result;
}

DistanceResult ned(const Word& a, const Word& b, bool want_witness) {
  const std::size_t m = a.size(), n = b.size();
  DistanceResult result;
  result.metric = Metric::ned;
  if (m == 0 && n == 0) {
    result.value = Rational(0);
    if (want_witness) result.witness = EditPath{};
    return result;
  }

  const std::size_t lmin = std::max(m, n), lmax = m + n;
  const std::size_t cells = (m + 1) * (n + 1);

  // Slice L holds the minimum weight of a path of length exactly L turning
  // a[0..i) into b[0..j); only cells with max(i,j) <= L <= i+j are reachable.
  // Every transition steps from slice L-1, so two slices suffice for the
  // value; the witness keeps all of them.
  std::vector<int> prev(cells, kInf), cur(cells, kInf);
  std::vector<std::vector<int>> layers;
  if (want_witness) {
    if (cells * (lmax + 1) > (std::size_t{1} << 28))
      throw BudgetError("ned: witness table too large for these word lengths");
    layers.reserve(lmax + 1);
  }
  auto idx = [&](std::size_t i, std::size_t j) { return i * (n + 1) + j; };

  prev[idx(0, 0)] = 0;
  if (want_witness) layers.push_back(prev);

  Rational best;
  std::size_t best_len = 0;
  bool have_best = false;

  for (std::size_t L = 1; L <= lmax; ++L) {
    std::fill(cur.begin(), cur.end(), kInf);
    const std::size_t ilo = L >= n ? L - n : 0;
    const std::size_t ihi = std::min(m, L);
    for (std::size_t i = ilo; i <= ihi; ++i) {
      const std::size_t jlo = L - i > n ? n + 1 : L - i;  // i <= L here
      const std::size_t jhi = std::min(n, L);
      for (std::size_t j = jlo; j <= jhi; ++j) {
        int w = kInf;
        if (i > 0) w = std::min(w, prev[idx(i - 1, j)] + 1);
        if (j > 0) w = std::min(w, prev[idx(i, j - 1)] + 1);
        if (i > 0 && j > 0)
          w = std::min(w, prev[idx(i - 1, j - 1)] + (a[i - 1] == b[j - 1] ? 0 : 1));
        cur[idx(i, j)] = std::min(w, kInf);
      }
    }
    if (L >= lmin && cur[idx(m, n)] < kInf) {
      Rational candidate(cur[idx(m, n)], static_cast<std::int64_t>(L));
      if (!have_best || candidate < best) {
        best = candidate;
        best_len = L;
        have_best = true;
      }
    }
    if (want_witness) layers.push_back(cur);
    std::swap(prev, cur);
  }

  result.value = best;
  if (want_witness) {
    EditPath path;
    std::size_t i = m, j = n, L = best_len;
    // Same preference order as ed(): no-change, change, delete, insert.
    while (L > 0) {
      int here = layers[L][idx(i, j)];
      const std::vector<int>& up = layers[L - 1];
      if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && up[idx(i - 1, j - 1)] == here) {
        path.push_back(EditLetter::no_change(a[i - 1]));
        --i, --j;
      } else if (i > 0 && j > 0 && a[i - 1] != b[j - 1] && up[idx(i - 1, j - 1)] + 1 == here) {
        path.push_back(EditLetter::change(a[i - 1], b[j - 1]));
        --i, --j;
      } else if (i > 0 && up[idx(i - 1, j)] + 1 == here) {
        path.push_back(EditLetter::erase(a[i - 1]));
        --i;
      } else {
        path.push_back(EditLetter::insert(b[j - 1]));
        --j;
      }
      --L;
    }
    std::reverse(path.begin(), path.end());
    result.witness = std::move(path);
  }
  return result;
}

DistanceResult ged(const Word& a, const Word& b) {
  DistanceResult base = ed(a, b);
  DistanceResult result;
  result.metric = Metric::ged;
  const std::int64_t d = base.value.num();
  const std::int64_t total = static_cast<std::int64_t>(a.size() + b.size()) + d;
  result.value = total == 0 ? Rational(0) : Rational(2 * d, total);
  result.witness = std::move(base.witness);
  return result;
}

namespace {

std::string ced_alphabet(const Word& a, const Word& b, const CedSearchConfig& cfg) {
  std::string sigma = a + b;
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  if (cfg.relaxed) {
    int added = 0;
    for (char c = 'a'; c <= 'z' && added < cfg.extra_symbols; ++c) {
      if (sigma.find(c) == std::string::npos) {
        sigma.push_back(c);
        ++added;
      }
    }
    for (char c = 'A'; c <= 'Z' && added < cfg.extra_symbols; ++c) {
      if (sigma.find(c) == std::string::npos) {
        sigma.push_back(c);
        ++added;
      }
    }
    std::sort(sigma.begin(), sigma.end());
  }
  return sigma;
}

// Harmonic prefix sums H[0..n] as exact rationals. Denominators blow past 64
// bits around H_43, which also bounds how far the search may ever reason
// about word lengths.
constexpr std::size_t kHarmonicMax = 42;

const std::vector<Rational>& harmonic_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> h{Rational(0)};
    for (std::size_t i = 1; i <= kHarmonicMax; ++i)
      h.push_back(h.back() + Rational(1, static_cast<std::int64_t>(i)));
    return h;
  }();
  return table;
}

// Cheapest conceivable cost of moving between these two lengths: one unit
// edit per length step, each at the largest length it touches.
Rational harmonic_gap(std::size_t from, std::size_t to) {
  const auto& h = harmonic_table();
  const std::size_t lo = std::min(from, to), hi = std::max(from, to);
  return h[hi] - h[lo];
}

// Cost of the chain that equalizes the lengths first (growing toward the
// longer word, or trimming toward it) and then substitutes position by
// position. Its peak never exceeds max(|a|,|b|).
Rational positional_chain_cost(const Word& a, const Word& b) {
  const std::size_t m = a.size(), n = b.size();
  const std::size_t shared = std::min(m, n);
  std::int64_t subs = 0;
  for (std::size_t i = 0; i < shared; ++i)
    if (a[i] != b[i]) ++subs;
  Rational total = harmonic_gap(m, n);
  if (subs > 0) total += Rational(subs, static_cast<std::int64_t>(std::max(m, n)));
  return total;
}

// Cost of the chain that grows the word with an optimal alignment's
// insertions, applies its substitutions, then shrinks with its deletions.
// Any valid chain is a sound upper bound; this one is usually tighter than
// the positional chain, but its peak of |a| + inserts can outrun the
// harmonic table, so callers fall back when it does.
std::optional<Rational> aligned_chain_cost(const Word& a, const Word& b) {
  DistanceResult alignment = ed(a, b);
  long long inserts = 0, subs = 0;
  for (const auto& letter : *alignment.witness) {
    if (letter.op == EditOp::Insert) ++inserts;
    if (letter.op == EditOp::Change) ++subs;
  }
  const std::size_t peak = a.size() + static_cast<std::size_t>(inserts);
  if (peak > kHarmonicMax) return std::nullopt;
  Rational total = harmonic_gap(a.size(), peak) + harmonic_gap(b.size(), peak);
  if (subs > 0) total += Rational(subs, static_cast<std::int64_t>(peak));
  return total;
}

Rational ced_upper_bound(const Word& a, const Word& b) {
  Rational upper = positional_chain_cost(a, b);
  if (auto aligned = aligned_chain_cost(a, b)) upper = min(upper, *aligned);
  return upper;
}

}  // namespace

DistanceResult ced(const Word& a, const Word& b, const CedSearchConfig& cfg) {
  const std::size_t input_cap = std::min<std::size_t>(cfg.max_word_len, 24);
  if (a.size() > input_cap || b.size() > input_cap)
    throw BudgetError("ced: word longer than the exact-search cap (" +
                      std::to_string(input_cap) + ")");

  DistanceResult result;
  result.metric = Metric::ced;
  if (a == b) {
    result.value = Rational(0);
    result.chain = {a};
    return result;
  }

  const std::string sigma = ced_alphabet(a, b, cfg);
  const std::size_t lmax = std::max(a.size(), b.size());

  // Restricted mode is exact over the full unbounded definition: symbols
  // outside the inputs never help (renaming them onto an input symbol keeps
  // every step legal and never raises a cost), and word lengths are capped
  // by a certificate. A chain that ever reaches length P pays at least
  // harmonic_gap(|a|,P) + harmonic_gap(|b|,P) for the unavoidable growth and
  // shrinkage alone, so once that exceeds a known achievable cost no longer
  // peak can be optimal. Relaxed mode instead searches the explicitly
  // widened bounded space used for cross-validation.
  std::size_t bound;
  std::optional<Rational> prune_above;
  if (cfg.relaxed) {
    bound = std::min(lmax + cfg.length_slack, kHarmonicMax);
  } else {
    const Rational upper = ced_upper_bound(a, b);
    bound = lmax;
    while (bound + 1 <= kHarmonicMax &&
           harmonic_gap(a.size(), bound + 1) + harmonic_gap(b.size(), bound + 1) <= upper)
      ++bound;
    if (bound + 1 > kHarmonicMax)
      throw BudgetError("ced: cannot certify a search bound for these inputs");
    prune_above = upper;
  }

  // A* over the implicit word graph: one edit per edge costing 1/max of the
  // lengths it connects, ordered by distance plus the harmonic gap to the
  // target length (consistent, so the first pop of the target is optimal).
  // Ties break on the word itself to keep the witness chain deterministic.
  using QueueItem = std::pair<Rational, Word>;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
  std::unordered_map<Word, Rational> dist;
  std::unordered_map<Word, Word> prev;

  auto heuristic = [&](const Word& w) { return harmonic_gap(w.size(), b.size()); };

  dist.emplace(a, Rational(0));
  queue.emplace(heuristic(a), a);

  auto relax = [&](const Word& from, Word to, const Rational& candidate) {
    const Rational key = candidate + heuristic(to);
    if (prune_above && key > *prune_above) return;
    auto it = dist.find(to);
    if (it == dist.end()) {
      if (dist.size() >= cfg.node_cap) throw BudgetError("ced: search node cap exceeded");
      dist.emplace(to, candidate);
      prev[to] = from;
      queue.emplace(key, std::move(to));
    } else if (candidate < it->second) {
      it->second = candidate;
      prev[to] = from;
      queue.emplace(key, std::move(to));
    }
  };

  bool settled_target = false;
  while (!queue.empty()) {
    auto [key, u] = queue.top();
    queue.pop();
    const Rational d = dist.at(u);
    if (key != d + heuristic(u)) continue;  // stale entry
    if (u == b) {
      settled_target = true;
      break;
    }

    const std::size_t ulen = u.size();
    if (ulen > 0) {
      Rational nd = d + Rational(1, static_cast<std::int64_t>(ulen));
      for (std::size_t i = 0; i < ulen; ++i) {
        Word v = u;
        v.erase(i, 1);
        relax(u, std::move(v), nd);
      }
      for (std::size_t i = 0; i < ulen; ++i)
        for (char c : sigma) {
          if (c == u[i]) continue;
          Word v = u;
          v[i] = c;
          relax(u, std::move(v), nd);
        }
    }
    if (ulen < bound) {
      Rational nd = d + Rational(1, static_cast<std::int64_t>(ulen + 1));
      for (std::size_t i = 0; i <= ulen; ++i)
        for (char c : sigma) {
          Word v = u;
          v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), c);
          relax(u, std::move(v), nd);
        }
    }
  }

  if (!settled_target)
    throw BudgetError("ced: target unreachable within the search space");
  result.value = dist.at(b);

  std::vector<Word> chain{b};
  Word cursor = b;
  while (cursor != a) {
    cursor = prev.at(cursor);
    chain.push_back(cursor);
  }
  std::reverse(chain.begin(), chain.end());
  result.chain = std::move(chain);
  return result;
}

DistanceResult ced_prime(const Word& a, const Word& b, const CedSearchConfig& cfg) {
  DistanceResult result = ced(a, b, cfg);
  result.metric = Metric::ced_prime;
  result.value = min(Rational(1), result.value);
  return result;
}

}  // namespace nedlib
