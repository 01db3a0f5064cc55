#include "nedlib/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

namespace nedlib {

std::vector<Word> enumerate_words(const EnumBudget& budget) {
  std::string sigma = budget.alphabet;
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());

  std::size_t total = 1;  // the empty word
  std::size_t layer = 1;
  for (std::size_t l = 1; l <= budget.max_len; ++l) {
    if (sigma.empty()) break;
    if (layer > budget.cap / sigma.size()) throw BudgetError("enumerate_words: cap exceeded");
    layer *= sigma.size();
    total += layer;
    if (total > budget.cap) throw BudgetError("enumerate_words: cap exceeded");
  }

  std::vector<Word> words;
  words.reserve(total);
  words.emplace_back();
  for (std::size_t l = 1; l <= budget.max_len && !sigma.empty(); ++l) {
    std::vector<std::size_t> digits(l, 0);
    while (true) {
      Word w(l, sigma[0]);
      for (std::size_t i = 0; i < l; ++i) w[i] = sigma[digits[i]];
      words.push_back(std::move(w));
      std::size_t pos = l;
      while (pos > 0) {
        if (++digits[pos - 1] < sigma.size()) break;
        digits[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return words;
}

Rational brute_force_ned(const Word& a, const Word& b, std::size_t max_total_len) {
  if (a.size() + b.size() > max_total_len)
    throw BudgetError("brute_force_ned: combined length above the enumeration budget");
  const std::size_t m = a.size(), n = b.size();
  std::optional<Rational> best;

  // Depth-first walk of the alignment lattice, carrying the running weight
  // and path length.
  struct Frame {
    std::size_t i, j;
    int weight, length;
  };
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.i == m && f.j == n) {
      Rational c = f.length == 0 ? Rational(0) : Rational(f.weight, f.length);
      if (!best || c < *best) best = c;
      continue;
    }
    if (f.i < m && f.j < n)
      stack.push_back({f.i + 1, f.j + 1, f.weight + (a[f.i] == b[f.j] ? 0 : 1), f.length + 1});
    if (f.i < m) stack.push_back({f.i + 1, f.j, f.weight + 1, f.length + 1});
    if (f.j < n) stack.push_back({f.i, f.j + 1, f.weight + 1, f.length + 1});
  }
  return *best;
}

EnumBudget relaxed_ced_space(const Word& a, const Word& b) {
  std::string sigma = a + b;
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  for (char c = 'a'; c <= 'z'; ++c) {
    if (sigma.find(c) == std::string::npos) {
      sigma.push_back(c);
      break;
    }
  }
  EnumBudget space;
  space.alphabet = sigma;
  space.max_len = std::max(a.size(), b.size()) + 2;
  return space;
}

Rational brute_force_ced(const Word& a, const Word& b, const EnumBudget& space) {
  std::string sigma = space.alphabet;
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  if (a.size() > space.max_len || b.size() > space.max_len)
    throw BudgetError("brute_force_ced: input longer than the search space");
  for (char c : a)
    if (sigma.find(c) == std::string::npos)
      throw BudgetError("brute_force_ced: input symbol outside the search alphabet");
  for (char c : b)
    if (sigma.find(c) == std::string::npos)
      throw BudgetError("brute_force_ced: input symbol outside the search alphabet");
  if (a == b) return Rational(0);

  using Item = std::pair<Rational, Word>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::map<Word, Rational> dist;
  dist.emplace(a, Rational(0));
  queue.emplace(Rational(0), a);

  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d != dist.at(u)) continue;
    if (u == b) return d;

    auto offer = [&](Word v, const Rational& nd) {
      auto it = dist.find(v);
      if (it == dist.end()) {
        if (dist.size() >= space.cap) throw BudgetError("brute_force_ced: cap exceeded");
        dist.emplace(v, nd);
        queue.emplace(nd, std::move(v));
      } else if (nd < it->second) {
        it->second = nd;
        queue.emplace(nd, std::move(v));
      }
    };

    if (!u.empty()) {
      Rational nd = d + Rational(1, static_cast<std::int64_t>(u.size()));
      for (std::size_t i = 0; i < u.size(); ++i) {
        Word v = u;
        v.erase(i, 1);
        offer(std::move(v), nd);
      }
      for (std::size_t i = 0; i < u.size(); ++i)
        for (char c : sigma) {
          if (c == u[i]) continue;
          Word v = u;
          v[i] = c;
          offer(std::move(v), nd);
        }
    }
    if (u.size() < space.max_len) {
      Rational nd = d + Rational(1, static_cast<std::int64_t>(u.size() + 1));
      for (std::size_t i = 0; i <= u.size(); ++i)
        for (char c : sigma) {
          Word v = u;
          v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), c);
          offer(std::move(v), nd);
        }
    }
  }
  throw BudgetError("brute_force_ced: target unreachable within the search space");
}

}  // namespace nedlib
