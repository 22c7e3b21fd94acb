#include "hsec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "hsec/errors.hpp"

namespace hsec {

bool is_irreducible(const std::vector<int>& row) {
  int m = static_cast<int>(row.size());
  int running_max = 0;
  for (int j = 1; j < m; ++j) {
    running_max = std::max(running_max, row[j - 1]);
    if (running_max == j) return false;
  }
  return true;
}

Permutation::Permutation(std::vector<int> bottom_row) : row_(std::move(bottom_row)) {
  int m = size();
  if (m < 2) throw InvalidPermutation("permutation needs at least two symbols");
  pos_.assign(m, 0);
  for (int p = 1; p <= m; ++p) {
    int v = row_[p - 1];
    if (v < 1 || v > m || pos_[v - 1] != 0)
      throw InvalidPermutation("not a bijection of 1.." + std::to_string(m));
    pos_[v - 1] = p;
  }
  if (!is_irreducible(row_)) throw InvalidPermutation("reducible permutation " + to_string());
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> row;
  bool has_sep = text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) row.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (has_sep) {
        cur.push_back(c);
      } else {
        row.push_back(c - '0');
      }
    } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')') {
      flush();
    } else {
      throw InvalidPermutation("unexpected character in permutation: " + std::string(text));
    }
  }
  flush();
  return Permutation(std::move(row));
}

std::string Permutation::to_string() const {
  std::string s = "(";
  bool wide = size() >= 10;
  for (int i = 0; i < size(); ++i) {
    if (wide && i) s += ",";
    s += std::to_string(row_[i]);
  }
  return s + ")";
}

int GluingMap::inverse(int v) const {
  auto it = std::find(values.begin(), values.end(), v);
  return static_cast<int>(it - values.begin());
}

GluingMap compute_sigma(const Permutation& pi) {
  int m = pi.size();
  GluingMap g;
  g.values.assign(m + 1, 0);
  // pi(j) = bottom position of j, pi^{-1}(p) = interval at position p.
  g.values[0] = pi.interval_at(1) - 1;
  for (int j = 1; j <= m; ++j) {
    if (j == pi.interval_at(m))
      g.values[j] = m;
    else
      g.values[j] = pi.interval_at(pi.position_of(j) + 1) - 1;
  }
  return g;
}

std::pair<Permutation, Permutation> rauzy_neighbors(const Permutation& pi) {
  const auto& b = pi.bottom_row();
  int m = pi.size();
  int last = b.back();

  std::vector<int> top_move(b.begin(), b.end() - 1);
  auto at = std::find(top_move.begin(), top_move.end(), m);
  top_move.insert(at + 1, last);

  std::vector<int> top(m);
  std::iota(top.begin(), top.end(), 1);
  top.pop_back();
  top.insert(top.begin() + last, m);
  std::vector<int> relabel(m + 1);
  for (int p = 0; p < m; ++p) relabel[top[p]] = p + 1;
  std::vector<int> bottom_move(m);
  for (int p = 0; p < m; ++p) bottom_move[p] = relabel[b[p]];

  return {Permutation(std::move(top_move)), Permutation(std::move(bottom_move))};
}

std::set<Permutation> rauzy_class(const Permutation& pi, Traversal order) {
  std::set<Permutation> seen{pi};
  std::deque<Permutation> work{pi};
  while (!work.empty()) {
    Permutation cur;
    if (order == Traversal::BreadthFirst) {
      cur = work.front();
      work.pop_front();
    } else {
      cur = work.back();
      work.pop_back();
    }
    auto [t, u] = rauzy_neighbors(cur);
    for (auto& n : {t, u})
      if (seen.insert(n).second) work.push_back(n);
  }
  return seen;
}

const std::vector<Permutation>& h2_class() {
  static const std::vector<Permutation> cls = {
      Permutation({3, 1, 4, 2}), Permutation({3, 2, 4, 1}), Permutation({4, 1, 3, 2}),
      Permutation({2, 4, 1, 3}), Permutation({2, 4, 3, 1}), Permutation({4, 3, 2, 1}),
      Permutation({4, 2, 1, 3})};
  return cls;
}

StratumSignature StratumSignature::from_alpha(std::vector<int> alpha) {
  StratumSignature s;
  int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  s.genus = (total + 2) / 2;
  s.intervals = 2 * s.genus + static_cast<int>(alpha.size()) - 1;
  s.alpha = std::move(alpha);
  return s;
}

bool StratumSignature::consistent() const {
  int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  return total == 2 * genus - 2 && intervals == 2 * genus + static_cast<int>(alpha.size()) - 1;
}

}  // namespace hsec
