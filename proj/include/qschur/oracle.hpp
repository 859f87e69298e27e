#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qschur/combinatorics.hpp"
#include "qschur/fock.hpp"
#include "qschur/laurent.hpp"
#include "qschur/roots.hpp"

namespace qschur {

// Outcome of one oracle run.  A counterexample is present exactly when the
// check failed; it names the offending object.
struct check_report {
  std::string name;
  std::string scope;
  bool passed = true;
  std::optional<std::string> counterexample;

  void fail(std::string witness) {
    if (passed) {
      passed = false;
      counterexample = std::move(witness);
    }
  }
};

inline std::string describe_scope(int n, const multicharge& mc) {
  std::ostringstream out;
  out << "n=" << n << " e=" << mc.e() << " kappa=";
  for (size_t i = 0; i < mc.kappa().size(); ++i) {
    if (i) out << ',';
    out << mc.kappa()[i];
  }
  return out.str();
}

// Definition-level recomputation of Std^μ(λ): filter the full tableau list
// through the membership conditions, bypassing the pruned generator.
inline std::vector<standard_tableau> oracle_std_upper(const multipartition& mu,
                                                      const multipartition& lam,
                                                      const multicharge& mc) {
  standard_tableau tmu = standard_tableau::row_reading(mu);
  auto target = tmu.residue_sequence(mc);
  std::vector<standard_tableau> out;
  for (const standard_tableau& s : enumerate_standard(lam))
    if (s.residue_sequence(mc) == target && tableau_dominates(s, tmu)) out.push_back(s);
  return out;
}

inline std::vector<standard_tableau> oracle_std_lower(const multipartition& mu,
                                                      const multipartition& lam,
                                                      const multicharge& mc) {
  standard_tableau tmu = standard_tableau::column_reading(mu);
  auto target = tmu.residue_sequence(mc);
  std::vector<standard_tableau> out;
  for (const standard_tableau& s : enumerate_standard(lam))
    if (s.residue_sequence(mc) == target && tableau_dominates(tmu, s)) out.push_back(s);
  return out;
}

// Σ_{λ} (#Std(λ))² over all multipartitions of n at the given level equals
// ℓⁿ·n!, the ungraded dimension of the Hecke algebra.
inline bool dimension_identity(int n, int level) {
  bigint total = 0;
  for (const multipartition& lam : enumerate_multipartitions(n, level)) {
    bigint count = static_cast<long long>(enumerate_standard(lam).size());
    total += count * count;
  }
  bigint expected = 1;
  for (int k = 1; k <= n; ++k) expected *= k;
  for (int k = 0; k < n; ++k) expected *= level;
  return total == expected;
}

// Exhaustive per-block invariant suite, run against a supplied
// decomposition matrix: tableau degree statistics against the defect,
// unitriangularity and positivity of D, Cartan symmetry, palindromic
// graded dimensions, and recomputation of the Std^μ sets.
inline check_report verify_block_invariants(const block_t& blk, const multicharge& mc,
                                            const graded_matrix& d) {
  int n = blk.beta.total();
  check_report report{"block_invariants", describe_scope(n, mc) +
                                              " beta=" + format_root_vector(blk.beta)};

  // deg t + codeg t = defect β for every standard tableau in the block
  for (const multipartition& lam : blk.members) {
    for (const standard_tableau& t : enumerate_standard(lam)) {
      auto [deg, codeg] = degree_codegree(t, mc);
      if (deg + codeg != blk.defect) {
        report.fail("deg+codeg != defect for a tableau of shape " + format_multipartition(lam));
        return report;
      }
    }
  }

  // D is unitriangular with respect to dominance; for e = 0 the
  // off-diagonal entries lie in q·N[q]
  for (const multipartition& lam : d.row_labels()) {
    for (const multipartition& mu : d.col_labels()) {
      const laurent& entry = d.entry(lam, mu);
      if (lam == mu) {
        if (entry != laurent::constant(1)) {
          report.fail("diagonal entry is not 1 at (" + format_multipartition(lam) + ", " +
                      format_multipartition(mu) + "): " + entry.to_string());
          return report;
        }
        continue;
      }
      if (entry.is_zero()) continue;
      if (!dominates(lam, mu)) {
        report.fail("nonzero entry off the dominance cone at (" + format_multipartition(lam) +
                    ", " + format_multipartition(mu) + "): " + entry.to_string());
        return report;
      }
      if (mc.e() == 0 && (!entry.all_coefficients_nonnegative() || entry.min_degree() <= 0)) {
        report.fail("off-diagonal entry outside q·N[q] at (" + format_multipartition(lam) + ", " +
                    format_multipartition(mu) + "): " + entry.to_string());
        return report;
      }
    }
  }

  // C = Dᵗ·D is symmetric with diagonal constant term 1
  graded_matrix c = cartan_matrix(d);
  for (size_t i = 0; i < c.row_labels().size(); ++i) {
    for (size_t j = 0; j < c.col_labels().size(); ++j) {
      if (c.at(i, j) != c.at(j, i)) {
        report.fail("Cartan matrix asymmetric at (" + format_multipartition(c.row_labels()[i]) +
                    ", " + format_multipartition(c.col_labels()[j]) + ")");
        return report;
      }
    }
    if (c.at(i, i).coefficient(0) != 1) {
      report.fail("Cartan diagonal constant term is not 1 at " +
                  format_multipartition(c.row_labels()[i]));
      return report;
    }
  }

  // Dim G^μ is palindromic around the defect:
  // Dim G^μ(q) = q^{2·defect}·Dim G^μ(q⁻¹)
  for (const multipartition& mu : blk.members) {
    laurent dim = dim_g_upper(mu, mc);
    if (dim != laurent::q(2 * blk.defect) * dim.bar()) {
      report.fail("Dim G^μ not palindromic for " + format_multipartition(mu) + ": " +
                  dim.to_string());
      return report;
    }
  }

  // Hecke block dimension shares the same symmetry
  {
    laurent dim = dim_hecke_block(blk, mc);
    if (dim != laurent::q(2 * blk.defect) * dim.bar()) {
      report.fail("Hecke block dimension not palindromic: " + dim.to_string());
      return report;
    }
  }

  // Std^μ(λ) from the pruned generator agrees with the filtered enumeration
  for (const multipartition& mu : blk.members) {
    for (const multipartition& lam : blk.members) {
      if (dominates(lam, mu) &&
          std_relative(mu, lam, relative_mode::upper, mc) != oracle_std_upper(mu, lam, mc)) {
        report.fail("Std^μ(λ) mismatch at μ=" + format_multipartition(mu) +
                    ", λ=" + format_multipartition(lam));
        return report;
      }
      if (dominates(mu, lam) &&
          std_relative(mu, lam, relative_mode::lower, mc) != oracle_std_lower(mu, lam, mc)) {
        report.fail("Std_μ(λ) mismatch at μ=" + format_multipartition(mu) +
                    ", λ=" + format_multipartition(lam));
        return report;
      }
    }
  }

  return report;
}

inline check_report verify_block_invariants(const block_t& blk, const multicharge& mc) {
  return verify_block_invariants(blk, mc, straighten_canonical(blk, mc).matrix);
}

// Conjugation duality across the conjugate block: residue, degree and
// codegree identities for every tableau, plus the tilting/decomposition
// duality (T_λ : Δ^μ)_q = bar(d'_{μ'λ'}).
inline check_report conjugate_duality_check(const block_t& blk, const multicharge& mc) {
  int n = blk.beta.total();
  check_report report{"conjugate_duality", describe_scope(n, mc) +
                                               " beta=" + format_root_vector(blk.beta)};
  multicharge conj = mc.conjugate();
  root_vector beta_conj = conjugate_residues(blk.beta, mc);

  // the conjugate block exists and its member set is {μ' : μ in block}
  std::vector<multipartition> expected;
  for (const multipartition& mu : blk.members) expected.push_back(conjugate(mu));
  std::sort(expected.begin(), expected.end(), total_order_less{});
  const block_t* conj_block = nullptr;
  std::vector<block_t> all = blocks(n, conj);
  for (const block_t& b : all)
    if (b.beta == beta_conj) conj_block = &b;
  if (conj_block == nullptr) {
    report.fail("conjugate block not found for beta' = " + format_root_vector(beta_conj));
    return report;
  }
  std::vector<multipartition> actual = conj_block->members;
  std::sort(actual.begin(), actual.end(), total_order_less{});
  if (actual != expected) {
    report.fail("conjugate block members differ from conjugated members");
    return report;
  }
  if (conj_block->defect != blk.defect) {
    report.fail("defect changed under conjugation");
    return report;
  }

  // res'(t') = −res(t), deg' t' = codeg t, codeg' t' = deg t
  for (const multipartition& lam : blk.members) {
    for (const standard_tableau& t : enumerate_standard(lam)) {
      standard_tableau tc = t.conjugate();
      auto res = t.residue_sequence(mc);
      auto res_conj = tc.residue_sequence(conj);
      bool ok = res.size() == res_conj.size();
      for (size_t k = 0; ok && k < res.size(); ++k)
        ok = (res_conj[k] == conj.reduce(-res[k]));
      auto [deg, codeg] = degree_codegree(t, mc);
      auto [deg_c, codeg_c] = degree_codegree(tc, conj);
      if (!ok || deg_c != codeg || codeg_c != deg) {
        report.fail("conjugation statistics mismatch for a tableau of shape " +
                    format_multipartition(lam));
        return report;
      }
    }
  }

  // (T_λ : Δ^μ)_q equals the bar of the conjugate decomposition number
  straighten_result tilt = straighten_tilting(blk, mc);
  graded_matrix d_conj = straighten_canonical(*conj_block, conj).matrix;
  for (const multipartition& lam : blk.members) {
    for (const multipartition& mu : blk.members) {
      laurent lhs = tilt.matrix.entry(mu, lam);  // coefficient of [Δ^μ] in [T_λ]
      laurent rhs = d_conj.entry(conjugate(mu), conjugate(lam)).bar();
      if (lhs != rhs) {
        report.fail("tilting duality fails at λ=" + format_multipartition(lam) +
                    ", μ=" + format_multipartition(mu) + ": " + lhs.to_string() +
                    " != " + rhs.to_string());
        return report;
      }
    }
  }

  return report;
}

// All per-block oracles plus the global dimension identity for one (n, κ, e).
inline std::vector<check_report> verify_suite(int n, const multicharge& mc) {
  std::vector<check_report> reports;
  for (const block_t& blk : blocks(n, mc)) {
    reports.push_back(verify_block_invariants(blk, mc));
    reports.push_back(conjugate_duality_check(blk, mc));
  }
  check_report dims{"dimension_identity", describe_scope(n, mc)};
  if (n <= 6 && !dimension_identity(n, mc.level()))
    dims.fail("sum of squared tableau counts differs from level^n * n!");
  reports.push_back(dims);
  return reports;
}

}  // namespace qschur
