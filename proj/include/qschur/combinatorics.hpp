#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

// A partition is stored as its weakly decreasing positive parts; trailing
// zeros are never stored.
using partition = std::vector<int>;

inline bool is_valid_partition(const partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

// 1-based row access; rows past the end read as zero.
inline int part_at(const partition& p, int row) {
  return (row >= 1 && row <= static_cast<int>(p.size())) ? p[row - 1] : 0;
}

inline partition conjugate_partition(const partition& p) {
  partition q;
  if (p.empty()) return q;
  q.resize(p[0]);
  for (int c = 1; c <= p[0]; ++c) {
    int rows = 0;
    while (rows < static_cast<int>(p.size()) && p[rows] >= c) ++rows;
    q[c - 1] = rows;
  }
  return q;
}

// A node (r, c, l): row, column and component, all 1-based.
struct node_t {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend bool operator==(const node_t&, const node_t&) = default;
};

// B is strictly below A when it lies in a later component, or in the same
// component in a lower row; the column is irrelevant.
inline bool strictly_below(const node_t& b, const node_t& a) {
  return b.comp > a.comp || (b.comp == a.comp && b.row > a.row);
}

inline bool strictly_above(const node_t& b, const node_t& a) {
  return b.comp < a.comp || (b.comp == a.comp && b.row < a.row);
}

// An ℓ-tuple of partitions.  The level is fixed at construction; empty
// components are allowed and the empty multipartition of level ℓ has ℓ
// empty components.
class multipartition {
 public:
  multipartition() = default;

  explicit multipartition(std::vector<partition> comps) : comps_(std::move(comps)) {
    for (const auto& p : comps_) {
      if (!is_valid_partition(p))
        throw parse_error("component is not a partition");
      for (int x : p) n_ += x;
    }
  }

  int size() const { return n_; }
  int level() const { return static_cast<int>(comps_.size()); }

  // 1-based component access.
  const partition& component(int l) const { return comps_.at(l - 1); }
  const std::vector<partition>& components() const { return comps_; }

  // Part (l, r), zero when out of range.
  int part(int l, int r) const {
    if (l < 1 || l > level()) return 0;
    return part_at(comps_[l - 1], r);
  }

  int rows(int l) const { return static_cast<int>(comps_.at(l - 1).size()); }

  bool contains(const node_t& a) const {
    return a.comp >= 1 && a.comp <= level() && a.row >= 1 && a.col >= 1 &&
           a.col <= part(a.comp, a.row);
  }

  bool empty() const { return n_ == 0; }

  // All nodes in row-major order, components first.
  std::vector<node_t> nodes() const {
    std::vector<node_t> out;
    out.reserve(n_);
    for (int l = 1; l <= level(); ++l)
      for (int r = 1; r <= rows(l); ++r)
        for (int c = 1; c <= part(l, r); ++c) out.push_back({r, c, l});
    return out;
  }

  bool is_addable(const node_t& a) const {
    if (a.comp < 1 || a.comp > level() || a.row < 1) return false;
    return a.col == part(a.comp, a.row) + 1 &&
           (a.row == 1 || part(a.comp, a.row - 1) >= a.col);
  }

  bool is_removable(const node_t& a) const {
    if (!contains(a)) return false;
    return a.col == part(a.comp, a.row) && part(a.comp, a.row + 1) < a.col;
  }

  std::vector<node_t> addable_nodes() const {
    std::vector<node_t> out;
    for (int l = 1; l <= level(); ++l) {
      for (int r = 1; r <= rows(l) + 1; ++r) {
        node_t a{r, part(l, r) + 1, l};
        if (is_addable(a)) out.push_back(a);
      }
    }
    return out;
  }

  std::vector<node_t> removable_nodes() const {
    std::vector<node_t> out;
    for (int l = 1; l <= level(); ++l) {
      for (int r = 1; r <= rows(l); ++r) {
        node_t a{r, part(l, r), l};
        if (is_removable(a)) out.push_back(a);
      }
    }
    return out;
  }

  multipartition with_box_added(const node_t& a) const {
    if (!is_addable(a)) throw invalid_node_error("node is not addable");
    auto comps = comps_;
    auto& p = comps[a.comp - 1];
    if (a.row > static_cast<int>(p.size()))
      p.push_back(1);
    else
      ++p[a.row - 1];
    return multipartition(std::move(comps));
  }

  friend bool operator==(const multipartition&, const multipartition&) = default;

 private:
  std::vector<partition> comps_;
  int n_ = 0;
};

// Lexicographic comparison of the flattened part sequences, each component
// padded with virtual zero rows.  This is a linear extension of the
// dominance order: the greater side is the more dominant one whenever the
// two are comparable.  It fixes the global total order used everywhere.
inline std::strong_ordering total_order_cmp(const multipartition& a, const multipartition& b) {
  if (auto c = a.level() <=> b.level(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (int l = 1; l <= a.level(); ++l) {
    int rows = std::max(a.rows(l), b.rows(l));
    for (int r = 1; r <= rows; ++r)
      if (auto c = a.part(l, r) <=> b.part(l, r); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Comparator for containers ordered most-dominant-first.
struct total_order_greater {
  bool operator()(const multipartition& a, const multipartition& b) const {
    return total_order_cmp(a, b) > 0;
  }
};

struct total_order_less {
  bool operator()(const multipartition& a, const multipartition& b) const {
    return total_order_cmp(a, b) < 0;
  }
};

// Dominance: every cumulative sum of λ weakly exceeds the corresponding one
// of μ.  Both arguments must have the same size and level.
inline bool dominates(const multipartition& lam, const multipartition& mu) {
  if (lam.size() != mu.size() || lam.level() != mu.level())
    throw size_mismatch_error("dominance requires equal size and level");
  long long cum_l = 0, cum_m = 0;
  for (int l = 1; l <= lam.level(); ++l) {
    int rows = std::max(lam.rows(l), mu.rows(l));
    for (int r = 1; r <= rows; ++r) {
      cum_l += lam.part(l, r);
      cum_m += mu.part(l, r);
      if (cum_l < cum_m) return false;
    }
  }
  return true;
}

// Reverse the component order and transpose each component.
inline multipartition conjugate(const multipartition& mu) {
  std::vector<partition> comps;
  comps.reserve(mu.level());
  for (int l = mu.level(); l >= 1; --l) comps.push_back(conjugate_partition(mu.component(l)));
  return multipartition(std::move(comps));
}

// Conjugate node position: (r, c, l) ↦ (c, r, ℓ+1−l).
inline node_t conjugate_node(const node_t& a, int level) {
  return {a.col, a.row, level + 1 - a.comp};
}

namespace detail {

inline void enumerate_partitions_into(int n, int max_part, partition& cur,
                                      std::vector<partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_partitions_into(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All partitions of n, largest-first lexicographic order.
inline std::vector<partition> enumerate_partitions(int n) {
  std::vector<partition> out;
  partition cur;
  detail::enumerate_partitions_into(n, n, cur, out);
  return out;
}

// All multipartitions of n with the given level, in descending total order
// (most dominant first).
inline std::vector<multipartition> enumerate_multipartitions(int n, int level) {
  if (n < 0 || level < 1) throw error("enumerate_multipartitions requires n >= 0 and level >= 1");
  std::vector<multipartition> out;
  std::vector<partition> comps(level);
  std::function<void(int, int)> rec = [&](int l, int remaining) {
    if (l == level) {
      for (const auto& p : enumerate_partitions(remaining)) {
        comps[l - 1] = p;
        out.push_back(multipartition(comps));
      }
      comps[l - 1].clear();
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : enumerate_partitions(k)) {
        comps[l - 1] = p;
        rec(l + 1, remaining - k);
      }
    }
    comps[l - 1].clear();
  };
  rec(1, n);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return total_order_cmp(a, b) > 0; });
  return out;
}

// Text form: components joined by "|", parts comma separated, an empty
// component printed as "0".  With compact=true repeated parts use exponent
// shorthand ("1^2"); the parser accepts both forms plus "-" for empty.
inline std::string format_multipartition(const multipartition& mu, bool compact = false) {
  std::ostringstream out;
  for (int l = 1; l <= mu.level(); ++l) {
    if (l > 1) out << '|';
    const auto& p = mu.component(l);
    if (p.empty()) {
      out << '0';
      continue;
    }
    if (compact) {
      size_t i = 0;
      bool first = true;
      while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!first) out << ',';
        out << p[i];
        if (j - i > 1) out << '^' << (j - i);
        first = false;
        i = j;
      }
    } else {
      for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ',';
        out << p[i];
      }
    }
  }
  return out.str();
}

inline multipartition parse_multipartition(std::string_view text) {
  std::string s(text);
  // strip optional surrounding parentheses and whitespace
  auto drop_ws = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  drop_ws(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    drop_ws(s);
  }
  std::vector<partition> comps;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '|') {
      std::string comp = s.substr(start, i - start);
      drop_ws(comp);
      partition p;
      if (!(comp.empty() || comp == "0" || comp == "-")) {
        std::istringstream in(comp);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          size_t caret = tok.find('^');
          int value, repeat = 1;
          try {
            if (caret == std::string::npos) {
              value = std::stoi(tok);
            } else {
              value = std::stoi(tok.substr(0, caret));
              repeat = std::stoi(tok.substr(caret + 1));
            }
          } catch (const std::exception&) {
            throw parse_error("bad multipartition component: " + comp);
          }
          for (int k = 0; k < repeat; ++k) p.push_back(value);
        }
      }
      if (!is_valid_partition(p)) throw parse_error("component is not a partition: " + comp);
      comps.push_back(std::move(p));
      start = i + 1;
    }
  }
  return multipartition(std::move(comps));
}

// Multicharge κ ∈ Z^ℓ together with the quantum characteristic e (0 for the
// linear quiver, or an integer >= 2 for the cyclic quiver Γ_e).
class multicharge {
 public:
  multicharge(std::vector<int> kappa, int e) : kappa_(std::move(kappa)), e_(e) {
    if (kappa_.empty()) throw error("multicharge needs at least one entry");
    if (e_ != 0 && e_ < 2) throw error("quantum characteristic must be 0 or >= 2");
  }

  int level() const { return static_cast<int>(kappa_.size()); }
  int e() const { return e_; }
  const std::vector<int>& kappa() const { return kappa_; }
  int kappa(int l) const { return kappa_.at(l - 1); }

  // The standing assumption: e = 0 or e >= n.
  bool standing_assumption(int n) const { return e_ == 0 || e_ >= n; }

  // Reduce an integer residue: identity when e = 0, representative in
  // [0, e) otherwise.
  int reduce(int i) const {
    if (e_ == 0) return i;
    int r = i % e_;
    return r < 0 ? r + e_ : r;
  }

  // res(r, c, l) = κ_l + c − r (mod e).
  int residue(const node_t& a) const { return reduce(kappa_.at(a.comp - 1) + a.col - a.row); }

  // (Λ, α_i) = #{ l : κ_l ≡ i (mod e) }.
  int weight_multiplicity(int i) const {
    int count = 0;
    for (int k : kappa_)
      if (reduce(k) == reduce(i)) ++count;
    return count;
  }

  // κ' = (−κ_ℓ, …, −κ_1), the conjugate multicharge.
  multicharge conjugate() const {
    std::vector<int> rev(kappa_.rbegin(), kappa_.rend());
    for (int& k : rev) k = -k;
    return multicharge(std::move(rev), e_);
  }

  bool weakly_decreasing() const {
    for (size_t i = 1; i < kappa_.size(); ++i)
      if (kappa_[i] > kappa_[i - 1]) return false;
    return true;
  }

  friend bool operator==(const multicharge&, const multicharge&) = default;

 private:
  std::vector<int> kappa_;
  int e_;
};

// A standard tableau: bijective filling of a multipartition diagram with
// 1..n, increasing along rows and down columns, every prefix a valid shape.
class standard_tableau {
 public:
  // entries[l][r][c] with 0-based indices; validated on construction.
  standard_tableau(multipartition shape, std::vector<std::vector<std::vector<int>>> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    int n = shape_.size();
    positions_.assign(n + 1, node_t{});
    std::vector<bool> seen(n + 1, false);
    if (static_cast<int>(entries_.size()) != shape_.level())
      throw parse_error("tableau has wrong number of components");
    for (int l = 1; l <= shape_.level(); ++l) {
      const auto& comp = entries_[l - 1];
      if (static_cast<int>(comp.size()) != shape_.rows(l))
        throw parse_error("tableau component has wrong number of rows");
      for (int r = 1; r <= shape_.rows(l); ++r) {
        const auto& row = comp[r - 1];
        if (static_cast<int>(row.size()) != shape_.part(l, r))
          throw parse_error("tableau row has wrong length");
        for (int c = 1; c <= shape_.part(l, r); ++c) {
          int k = row[c - 1];
          if (k < 1 || k > n || seen[k]) throw parse_error("tableau entries are not a bijection");
          seen[k] = true;
          positions_[k] = {r, c, l};
          if (c > 1 && row[c - 2] >= k) throw parse_error("tableau rows must increase");
          if (r > 1 && comp[r - 2][c - 1] >= k) throw parse_error("tableau columns must increase");
        }
      }
    }
  }

  const multipartition& shape() const { return shape_; }
  int size() const { return shape_.size(); }

  int entry(const node_t& a) const { return entries_.at(a.comp - 1).at(a.row - 1).at(a.col - 1); }
  const node_t& position_of(int k) const { return positions_.at(k); }

  // Shape of the subtableau containing 1..k.
  multipartition prefix_shape(int k) const {
    std::vector<partition> comps(shape_.level());
    for (int l = 1; l <= shape_.level(); ++l) {
      for (int r = 1; r <= shape_.rows(l); ++r) {
        int len = 0;
        while (len < shape_.part(l, r) && entries_[l - 1][r - 1][len] <= k) ++len;
        if (len == 0) break;
        comps[l - 1].push_back(len);
      }
    }
    return multipartition(std::move(comps));
  }

  standard_tableau conjugate() const {
    int level = shape_.level();
    multipartition cshape = qschur::conjugate(shape_);
    std::vector<std::vector<std::vector<int>>> centries(level);
    for (int l = 1; l <= level; ++l) {
      centries[l - 1].resize(cshape.rows(l));
      for (int r = 1; r <= cshape.rows(l); ++r) centries[l - 1][r - 1].resize(cshape.part(l, r));
    }
    for (int k = 1; k <= size(); ++k) {
      node_t a = conjugate_node(positions_[k], level);
      centries[a.comp - 1][a.row - 1][a.col - 1] = k;
    }
    return standard_tableau(std::move(cshape), std::move(centries));
  }

  // t^μ: 1..n entered left to right along the rows of components 1..ℓ.
  static standard_tableau row_reading(const multipartition& mu) {
    std::vector<std::vector<std::vector<int>>> entries(mu.level());
    int next = 1;
    for (int l = 1; l <= mu.level(); ++l) {
      entries[l - 1].resize(mu.rows(l));
      for (int r = 1; r <= mu.rows(l); ++r)
        for (int c = 1; c <= mu.part(l, r); ++c) entries[l - 1][r - 1].push_back(next++);
    }
    return standard_tableau(mu, std::move(entries));
  }

  // t_μ: 1..n entered down the columns of components ℓ..1; equivalently
  // (t^{μ'})'.
  static standard_tableau column_reading(const multipartition& mu) {
    std::vector<std::vector<std::vector<int>>> entries(mu.level());
    for (int l = 1; l <= mu.level(); ++l) {
      entries[l - 1].resize(mu.rows(l));
      for (int r = 1; r <= mu.rows(l); ++r) entries[l - 1][r - 1].resize(mu.part(l, r));
    }
    int next = 1;
    for (int l = mu.level(); l >= 1; --l) {
      for (int c = 1; c <= mu.part(l, 1); ++c)
        for (int r = 1; r <= mu.rows(l) && mu.part(l, r) >= c; ++r)
          entries[l - 1][r - 1][c - 1] = next++;
    }
    return standard_tableau(mu, std::move(entries));
  }

  std::vector<int> residue_sequence(const multicharge& mc) const {
    std::vector<int> res(size());
    for (int k = 1; k <= size(); ++k) res[k - 1] = mc.residue(positions_[k]);
    return res;
  }

  friend bool operator==(const standard_tableau&, const standard_tableau&) = default;

 private:
  multipartition shape_;
  std::vector<std::vector<std::vector<int>>> entries_;
  std::vector<node_t> positions_;
};

// Tableau dominance: Shape(s↓k) dominates Shape(t↓k) for every k.
inline bool tableau_dominates(const standard_tableau& s, const standard_tableau& t) {
  if (s.size() != t.size()) throw size_mismatch_error("tableau dominance requires equal size");
  for (int k = 1; k <= s.size(); ++k)
    if (!dominates(s.prefix_shape(k), t.prefix_shape(k))) return false;
  return true;
}

// d_A(μ) and d^A(μ): signed counts of addable minus removable i-nodes of μ
// strictly below (resp. above) A, where i = res(A).  A must lie in μ or be
// addable to it.
inline std::pair<int, int> node_degree_stats(const multipartition& mu, const node_t& a,
                                             const multicharge& mc) {
  if (!mu.contains(a) && !mu.is_addable(a))
    throw invalid_node_error("node is neither in the shape nor addable to it");
  int i = mc.residue(a);
  int below = 0, above = 0;
  for (const node_t& b : mu.addable_nodes()) {
    if (mc.residue(b) != i) continue;
    if (strictly_below(b, a)) ++below;
    if (strictly_above(b, a)) ++above;
  }
  for (const node_t& b : mu.removable_nodes()) {
    if (mc.residue(b) != i) continue;
    if (strictly_below(b, a)) --below;
    if (strictly_above(b, a)) --above;
  }
  return {below, above};
}

// deg t and codeg t, by the inductive definition over t↓k.
inline std::pair<int, int> degree_codegree(const standard_tableau& t, const multicharge& mc) {
  int deg = 0, codeg = 0;
  multipartition shape = t.prefix_shape(t.size());
  for (int k = t.size(); k >= 1; --k) {
    const node_t& a = t.position_of(k);
    auto [d_below, d_above] = node_degree_stats(shape, a, mc);
    deg += d_below;
    codeg += d_above;
    if (k > 1) shape = t.prefix_shape(k - 1);
  }
  return {deg, codeg};
}

inline int degree(const standard_tableau& t, const multicharge& mc) {
  return degree_codegree(t, mc).first;
}

inline int codegree(const standard_tableau& t, const multicharge& mc) {
  return degree_codegree(t, mc).second;
}

namespace detail {

// Incremental tableau builder used by the enumeration routines: grows a
// shape one box at a time inside a fixed target shape.
struct tableau_builder {
  const multipartition& target;
  std::vector<partition> cur;  // current prefix shape, by component
  std::vector<std::vector<std::vector<int>>> entries;
  int placed = 0;

  explicit tableau_builder(const multipartition& shape)
      : target(shape), cur(shape.level()), entries(shape.level()) {}

  // Addable nodes of the current prefix that stay inside the target shape,
  // in (component, row) order.
  std::vector<node_t> candidates() const {
    std::vector<node_t> out;
    for (int l = 1; l <= target.level(); ++l) {
      const partition& p = cur[l - 1];
      for (int r = 1; r <= static_cast<int>(p.size()) + 1; ++r) {
        int c = part_at(p, r) + 1;
        if (c > target.part(l, r)) continue;
        if (r > 1 && part_at(p, r - 1) < c) continue;
        out.push_back({r, c, l});
      }
    }
    return out;
  }

  void push(const node_t& a) {
    auto& p = cur[a.comp - 1];
    auto& comp = entries[a.comp - 1];
    if (a.row > static_cast<int>(p.size())) {
      p.push_back(1);
      comp.emplace_back();
    } else {
      ++p[a.row - 1];
    }
    comp[a.row - 1].push_back(++placed);
  }

  void pop(const node_t& a) {
    auto& p = cur[a.comp - 1];
    auto& comp = entries[a.comp - 1];
    comp[a.row - 1].pop_back();
    if (p[a.row - 1] == 1) {
      p.erase(p.begin() + (a.row - 1));
      comp.erase(comp.begin() + (a.row - 1));
    } else {
      --p[a.row - 1];
    }
    --placed;
  }

  standard_tableau build() const { return standard_tableau(multipartition(cur), entries); }

  multipartition shape() const { return multipartition(cur); }
};

}  // namespace detail

// All standard tableaux of the given shape, in the deterministic order
// produced by placing 1..n at addable nodes scanned by (component, row).
inline std::vector<standard_tableau> enumerate_standard(const multipartition& lam) {
  std::vector<standard_tableau> out;
  detail::tableau_builder b(lam);
  std::function<void()> rec = [&] {
    if (b.placed == lam.size()) {
      out.push_back(b.build());
      return;
    }
    for (const node_t& a : b.candidates()) {
      b.push(a);
      rec();
      b.pop(a);
    }
  };
  rec();
  return out;
}

enum class relative_mode { upper, lower };

// Std^μ(λ) (upper): all s ∈ Std(λ) with s ⊵ t^μ and res(s) = res(t^μ);
// Std_μ(λ) (lower): all s ∈ Std(λ) with t_μ ⊵ s and res(s) = res(t_μ).
// Implemented as a pruned placement search: both the residue condition and
// the prefix-dominance condition must hold at every step, so each can be
// enforced as soon as a box is placed.
inline std::vector<standard_tableau> std_relative(const multipartition& mu,
                                                  const multipartition& lam, relative_mode mode,
                                                  const multicharge& mc) {
  if (mu.size() != lam.size()) throw size_mismatch_error("std_relative requires equal size");
  if (mu.level() != lam.level()) throw size_mismatch_error("std_relative requires equal level");
  standard_tableau ref = (mode == relative_mode::upper) ? standard_tableau::row_reading(mu)
                                                        : standard_tableau::column_reading(mu);
  std::vector<int> target_res = ref.residue_sequence(mc);
  std::vector<multipartition> ref_prefix(mu.size() + 1, multipartition(std::vector<partition>(mu.level())));
  for (int k = 1; k <= mu.size(); ++k) ref_prefix[k] = ref.prefix_shape(k);

  std::vector<standard_tableau> out;
  detail::tableau_builder b(lam);
  std::function<void()> rec = [&] {
    if (b.placed == lam.size()) {
      out.push_back(b.build());
      return;
    }
    int k = b.placed + 1;
    for (const node_t& a : b.candidates()) {
      if (mc.residue(a) != target_res[k - 1]) continue;
      b.push(a);
      multipartition prefix = b.shape();
      bool ok = (mode == relative_mode::upper) ? dominates(prefix, ref_prefix[k])
                                               : dominates(ref_prefix[k], prefix);
      if (ok) rec();
      b.pop(a);
    }
  };
  rec();
  return out;
}

// t^μ and t_μ, the dominance-greatest and dominance-least standard μ-tableaux.
inline std::pair<standard_tableau, standard_tableau> initial_final_tableaux(
    const multipartition& mu) {
  return {standard_tableau::row_reading(mu), standard_tableau::column_reading(mu)};
}

}  // namespace qschur
