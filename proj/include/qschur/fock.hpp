#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/combinatorics.hpp"
#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"
#include "qschur/roots.hpp"

namespace qschur {

// Validity regime of a computation under the scope gating rules.  The
// boundary e = n is labelled conjectural: there a multipartition component
// can carry two addable nodes of equal residue, the claimed module bases
// behind the straightening become linearly dependent, and the graded
// dimension identities that certify the output fail (seen already at
// n = e = 2).  Strictly large e behaves like the linear quiver.
enum class regime {
  exact,        // e = 0, or level <= 2 with e > n
  conjectural,  // e = n, or level >= 3 with e >= n: runs, output unproven
};

inline regime classify_regime(const multicharge& mc, int n) {
  if (!mc.standing_assumption(n))
    throw unsupported_error("the standing assumption e = 0 or e >= n fails");
  if (mc.e() == 0) return regime::exact;
  if (mc.level() <= 2 && mc.e() > n) return regime::exact;
  return regime::conjectural;
}

// Finitely supported map from multipartitions to Laurent polynomials: the
// expansion of a module class in the standard basis {[Δ^λ]}.  Keys are kept
// most-dominant-first; zero values are never stored.
class fock_vector {
 public:
  fock_vector() = default;
  explicit fock_vector(root_vector block_key) : block_key_(std::move(block_key)) {}

  const root_vector& block_key() const { return block_key_; }

  const std::map<multipartition, laurent, total_order_greater>& entries() const {
    return entries_;
  }

  laurent coefficient(const multipartition& lam) const {
    auto it = entries_.find(lam);
    return it == entries_.end() ? laurent() : it->second;
  }

  void set(const multipartition& lam, laurent value) {
    if (value.is_zero())
      entries_.erase(lam);
    else
      entries_.insert_or_assign(lam, std::move(value));
  }

  void add(const multipartition& lam, const laurent& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.emplace(lam, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  // this -= scale * other
  void subtract_scaled(const laurent& scale, const fock_vector& other) {
    for (const auto& [lam, value] : other.entries()) add(lam, -(scale * value));
  }

  bool all_coefficients_nonnegative() const {
    for (const auto& [lam, value] : entries_)
      if (!value.all_coefficients_nonnegative()) return false;
    return true;
  }

  friend bool operator==(const fock_vector&, const fock_vector&) = default;

 private:
  root_vector block_key_;
  std::map<multipartition, laurent, total_order_greater> entries_;
};

// Dense matrix of Laurent polynomials with multipartition row and column
// labels.  Decomposition matrices are stored with labels ascending in the
// total order, which makes them lower unitriangular.
class graded_matrix {
 public:
  graded_matrix() = default;

  graded_matrix(std::vector<multipartition> rows, std::vector<multipartition> cols)
      : row_labels_(std::move(rows)),
        col_labels_(std::move(cols)),
        entries_(row_labels_.size(), std::vector<laurent>(col_labels_.size())) {}

  const std::vector<multipartition>& row_labels() const { return row_labels_; }
  const std::vector<multipartition>& col_labels() const { return col_labels_; }

  int row_index(const multipartition& lam) const {
    for (size_t i = 0; i < row_labels_.size(); ++i)
      if (row_labels_[i] == lam) return static_cast<int>(i);
    throw error("row label not found: " + format_multipartition(lam));
  }

  int col_index(const multipartition& mu) const {
    for (size_t j = 0; j < col_labels_.size(); ++j)
      if (col_labels_[j] == mu) return static_cast<int>(j);
    throw error("column label not found: " + format_multipartition(mu));
  }

  laurent& at(size_t i, size_t j) { return entries_.at(i).at(j); }
  const laurent& at(size_t i, size_t j) const { return entries_.at(i).at(j); }

  const laurent& entry(const multipartition& lam, const multipartition& mu) const {
    return entries_[row_index(lam)][col_index(mu)];
  }

  void set_entry(const multipartition& lam, const multipartition& mu, laurent value) {
    entries_[row_index(lam)][col_index(mu)] = std::move(value);
  }

  friend bool operator==(const graded_matrix&, const graded_matrix&) = default;

 private:
  std::vector<multipartition> row_labels_;
  std::vector<multipartition> col_labels_;
  std::vector<std::vector<laurent>> entries_;
};

// [Z^μ] = Σ_λ Σ_{s ∈ Std^μ(λ)} q^{deg s − deg t^μ} [Δ^λ].  The coefficient
// of [Δ^μ] is 1 and the support lies in {λ ⊵ μ}.
inline fock_vector zmu_expansion(const multipartition& mu, const multicharge& mc) {
  if (!mc.standing_assumption(mu.size()))
    throw unsupported_error("zmu_expansion: the standing assumption e = 0 or e >= n fails");
  fock_vector v(content(mu, mc));
  int base = degree(standard_tableau::row_reading(mu), mc);
  for (const multipartition& lam : enumerate_multipartitions(mu.size(), mu.level())) {
    if (!dominates(lam, mu)) continue;
    laurent coeff;
    for (const standard_tableau& s : std_relative(mu, lam, relative_mode::upper, mc))
      coeff += laurent::q(degree(s, mc) - base);
    v.add(lam, coeff);
  }
  return v;
}

// [E^μ] = Σ_λ Σ_{s ∈ Std_μ(λ)} q^{deg s − deg t_μ} [Δ^λ].  The coefficient
// of [Δ^μ] is 1 and the support lies in {λ ⊴ μ}: shapes of tableaux
// dominated by t_μ are dominated by μ.
inline fock_vector emu_expansion(const multipartition& mu, const multicharge& mc) {
  if (!mc.standing_assumption(mu.size()))
    throw unsupported_error("emu_expansion: the standing assumption e = 0 or e >= n fails");
  fock_vector v(content(mu, mc));
  int base = degree(standard_tableau::column_reading(mu), mc);
  for (const multipartition& lam : enumerate_multipartitions(mu.size(), mu.level())) {
    if (!dominates(mu, lam)) continue;
    laurent coeff;
    for (const standard_tableau& s : std_relative(mu, lam, relative_mode::lower, mc))
      coeff += laurent::q(degree(s, mc) - base);
    v.add(lam, coeff);
  }
  return v;
}

namespace detail {

inline void check_straightening_column(const fock_vector& v, const multipartition& mu,
                                       bool tilting) {
  for (const auto& [lam, coeff] : v.entries()) {
    if (!coeff.all_coefficients_nonnegative())
      throw positivity_violation_error("negative coefficient in basis vector for " +
                                       format_multipartition(mu) + " at " +
                                       format_multipartition(lam));
    if (lam == mu) {
      if (coeff != laurent::constant(1))
        throw positivity_violation_error("diagonal coefficient is not 1 for " +
                                         format_multipartition(mu));
    } else if (!tilting && coeff.min_degree() <= 0) {
      throw positivity_violation_error("column for " + format_multipartition(mu) +
                                       " is not in δ + q·N[q] at " + format_multipartition(lam));
    } else if (tilting && coeff.max_degree() >= 0) {
      throw positivity_violation_error("column for " + format_multipartition(mu) +
                                       " is not in δ + q⁻¹·N[q⁻¹] at " +
                                       format_multipartition(lam));
    }
  }
}

}  // namespace detail

struct straighten_result {
  // Canonical-basis vectors [P^μ] (resp. twisted tilting vectors [T_μ]),
  // keyed most-dominant-first.
  std::map<multipartition, fock_vector, total_order_greater> basis;
  graded_matrix matrix;  // entry (λ, μ) is the coefficient of [Δ^λ] in basis[μ]
  // Total strip amounts per column: [Z^μ] = [P^μ] + Σ_ν strips[μ][ν]·[P^ν]
  // (and the tilting mirror).  The amounts are bar invariant by
  // construction.
  std::map<multipartition, std::map<multipartition, laurent, total_order_greater>,
           total_order_greater>
      strips;
  regime validity = regime::exact;
};

// The straightening loop shared by the canonical and tilting computations.
// Canonical: process μ from the top of the block down; strip bar-invariant
// multiples of already-known [P^ν] while some off-diagonal coefficient has
// a term of degree <= 0; the strip amount at minimal degree d is
// z^{(d)}(q^d + q^{−d}) for d < 0 and z^{(0)} for d = 0.
// Tilting: mirror image: process μ from the bottom of the block up (the
// support of [E^μ] lies below μ), strip while some off-diagonal coefficient
// has a term of degree >= 0, at the maximal such degree.
inline straighten_result straighten(const block_t& blk, const multicharge& mc, bool tilting) {
  int n = blk.beta.total();
  straighten_result result;
  result.validity = classify_regime(mc, n);

  std::vector<multipartition> order = blk.members;  // descending
  if (tilting) std::reverse(order.begin(), order.end());

  for (const multipartition& mu : order) {
    fock_vector v = tilting ? emu_expansion(mu, mc) : zmu_expansion(mu, mc);
    auto& strip_totals = result.strips[mu];
    for (;;) {
      // Pick the extremal offending degree over all off-diagonal entries,
      // then the most dominant label attaining it (the entries iterate
      // most-dominant-first, so the first attaining label wins).
      std::optional<int> best_degree;
      const multipartition* best_label = nullptr;
      for (const auto& [nu, coeff] : v.entries()) {
        if (nu == mu) continue;
        if (!tilting) {
          int d = coeff.min_degree();
          if (d <= 0 && (!best_degree || d < *best_degree)) {
            best_degree = d;
            best_label = &nu;
          }
        } else {
          int d = coeff.max_degree();
          if (d >= 0 && (!best_degree || d > *best_degree)) {
            best_degree = d;
            best_label = &nu;
          }
        }
      }
      if (!best_degree) break;
      int d = *best_degree;
      multipartition nu = *best_label;
      bigint c = v.coefficient(nu).coefficient(d);
      laurent strip = (d == 0) ? laurent::constant(c)
                               : c * (laurent::q(d) + laurent::q(-d));
      auto it = result.basis.find(nu);
      if (it == result.basis.end())
        throw positivity_violation_error(
            "straightening needs a basis vector that has not been computed; "
            "offending label " +
            format_multipartition(nu));
      v.subtract_scaled(strip, it->second);
      strip_totals[nu] += strip;
      if (!v.all_coefficients_nonnegative())
        throw positivity_violation_error("strip produced a negative coefficient at column " +
                                         format_multipartition(mu));
    }
    detail::check_straightening_column(v, mu, tilting);
    result.basis.emplace(mu, std::move(v));
  }

  std::vector<multipartition> ascending(blk.members.rbegin(), blk.members.rend());
  result.matrix = graded_matrix(ascending, ascending);
  for (const auto& [mu, column] : result.basis)
    for (const auto& [lam, coeff] : column.entries()) result.matrix.set_entry(lam, mu, coeff);
  return result;
}

// Canonical basis {[P^μ]} of the block and the graded decomposition matrix
// D with D(λ, μ) = coefficient of [Δ^λ] in [P^μ].
inline straighten_result straighten_canonical(const block_t& blk, const multicharge& mc) {
  return straighten(blk, mc, false);
}

// Twisted tilting basis {[T_μ]}: [T_μ] ≡ [Δ^μ] modulo q⁻¹·N[q⁻¹] terms.
inline straighten_result straighten_tilting(const block_t& blk, const multicharge& mc) {
  return straighten(blk, mc, true);
}

// Graded Cartan matrix C = Dᵗ·D: C(λ, μ) = Σ_ν D(ν, λ)·D(ν, μ).
inline graded_matrix cartan_matrix(const graded_matrix& d) {
  const auto& cols = d.col_labels();
  graded_matrix c(cols, cols);
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      laurent sum;
      for (size_t k = 0; k < d.row_labels().size(); ++k) sum += d.at(k, i) * d.at(k, j);
      c.at(i, j) = sum;
    }
  return c;
}

// Kleshchev (restricted) multipartition test for e = 0 with weakly
// decreasing multicharge: μ^(l)_{r + κ_l − κ_{l+1}} <= μ^(l+1)_r for all
// 1 <= l < ℓ and r >= 1, out-of-range parts reading as zero.
inline bool is_kleshchev(const multipartition& mu, const multicharge& mc) {
  if (mc.e() != 0)
    throw unsupported_error("is_kleshchev: the row criterion applies only to e = 0");
  if (!mc.weakly_decreasing())
    throw unsupported_error("is_kleshchev: the multicharge must be weakly decreasing");
  if (mu.level() != mc.level())
    throw size_mismatch_error("is_kleshchev: level mismatch");
  for (int l = 1; l < mu.level(); ++l) {
    int shift = mc.kappa(l) - mc.kappa(l + 1);
    for (int r = 1; r + shift <= mu.rows(l); ++r)
      if (mu.part(l, r + shift) > mu.part(l + 1, r)) return false;
  }
  return true;
}

// D restricted to its Kleshchev columns: the graded decomposition matrix of
// the Hecke algebra block.
inline graded_matrix hecke_submatrix(const graded_matrix& d, const multicharge& mc) {
  std::vector<multipartition> cols;
  for (const multipartition& mu : d.col_labels())
    if (is_kleshchev(mu, mc)) cols.push_back(mu);
  graded_matrix out(d.row_labels(), cols);
  for (size_t i = 0; i < d.row_labels().size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out.at(i, j) = d.at(i, d.col_index(cols[j]));
  return out;
}

// Graded dimension of G^μ:
//   q^{−deg t^μ} Σ_ν (Σ_{s ∈ Std^μ(ν)} q^{deg s}) (Σ_{t ∈ Std(ν)} q^{deg t}).
inline laurent dim_g_upper(const multipartition& mu, const multicharge& mc) {
  if (!mc.standing_assumption(mu.size()))
    throw unsupported_error("dim_g_upper: the standing assumption e = 0 or e >= n fails");
  laurent total;
  for (const multipartition& nu : enumerate_multipartitions(mu.size(), mu.level())) {
    if (!dominates(nu, mu)) continue;
    laurent upper;
    for (const standard_tableau& s : std_relative(mu, nu, relative_mode::upper, mc))
      upper += laurent::q(degree(s, mc));
    if (upper.is_zero()) continue;
    laurent full;
    for (const standard_tableau& t : enumerate_standard(nu)) full += laurent::q(degree(t, mc));
    total += upper * full;
  }
  int base = degree(standard_tableau::row_reading(mu), mc);
  return laurent::q(-base) * total;
}

// Graded dimension of G_μ, the codegree statistics mirror of dim_g_upper.
inline laurent dim_g_lower(const multipartition& mu, const multicharge& mc) {
  if (!mc.standing_assumption(mu.size()))
    throw unsupported_error("dim_g_lower: the standing assumption e = 0 or e >= n fails");
  laurent total;
  for (const multipartition& nu : enumerate_multipartitions(mu.size(), mu.level())) {
    if (!dominates(mu, nu)) continue;
    laurent lower;
    for (const standard_tableau& u : std_relative(mu, nu, relative_mode::lower, mc))
      lower += laurent::q(codegree(u, mc));
    if (lower.is_zero()) continue;
    laurent full;
    for (const standard_tableau& v : enumerate_standard(nu)) full += laurent::q(codegree(v, mc));
    total += lower * full;
  }
  int base = codegree(standard_tableau::column_reading(mu), mc);
  return laurent::q(-base) * total;
}

// Graded dimension of the Schur-algebra block:
//   Σ_{λ ∈ block} (Σ_{(μ, s) : s ∈ Std^μ(λ)} q^{deg s − deg t^μ})².
inline laurent dim_schur_block(const block_t& blk, const multicharge& mc) {
  laurent total;
  for (const multipartition& lam : blk.members) {
    laurent inner;
    for (const multipartition& mu : blk.members) {
      if (!dominates(lam, mu)) continue;
      int base = degree(standard_tableau::row_reading(mu), mc);
      for (const standard_tableau& s : std_relative(mu, lam, relative_mode::upper, mc))
        inner += laurent::q(degree(s, mc) - base);
    }
    total += inner * inner;
  }
  return total;
}

// Graded dimension of the Hecke-algebra block: Σ_λ (Σ_{s ∈ Std(λ)} q^{deg s})².
inline laurent dim_hecke_block(const block_t& blk, const multicharge& mc) {
  laurent total;
  for (const multipartition& lam : blk.members) {
    laurent inner;
    for (const standard_tableau& s : enumerate_standard(lam)) inner += laurent::q(degree(s, mc));
    total += inner * inner;
  }
  return total;
}

// Level-two closed formula: D(λ, μ) = q^{deg t^μ_λ − deg t^μ} when Std^μ(λ)
// is the singleton {t^μ_λ} and 0 otherwise; no straightening involved.
inline graded_matrix level2_decomposition(const block_t& blk, const multicharge& mc) {
  if (mc.level() != 2) throw not_level_two_error("level2_decomposition requires level 2");
  if (!mc.standing_assumption(blk.beta.total()))
    throw unsupported_error("level2_decomposition: standing assumption fails");
  std::vector<multipartition> ascending(blk.members.rbegin(), blk.members.rend());
  graded_matrix d(ascending, ascending);
  for (const multipartition& mu : blk.members) {
    int base = degree(standard_tableau::row_reading(mu), mc);
    for (const multipartition& lam : blk.members) {
      if (!dominates(lam, mu)) continue;
      auto tableaux = std_relative(mu, lam, relative_mode::upper, mc);
      if (tableaux.size() > 1)
        throw non_unique_tableau_error("Std^μ(λ) has more than one element at level 2: μ = " +
                                       format_multipartition(mu) +
                                       ", λ = " + format_multipartition(lam));
      if (tableaux.size() == 1)
        d.set_entry(lam, mu, laurent::q(degree(tableaux.front(), mc) - base));
    }
  }
  return d;
}

}  // namespace qschur
