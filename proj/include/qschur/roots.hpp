#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qschur/combinatorics.hpp"
#include "qschur/errors.hpp"

namespace qschur {

// Element of the positive root lattice Q⁺: a finitely supported map from
// residues to nonnegative multiplicities.  Keys are reduced mod e by the
// operations that build root vectors.
class root_vector {
 public:
  root_vector() = default;

  void add(int residue, int multiplicity = 1) {
    if (multiplicity == 0) return;
    auto [it, inserted] = coeffs_.emplace(residue, multiplicity);
    if (!inserted) {
      it->second += multiplicity;
      if (it->second == 0) coeffs_.erase(it);
    }
    total_ += multiplicity;
  }

  int multiplicity(int residue) const {
    auto it = coeffs_.find(residue);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<int, int>& coefficients() const { return coeffs_; }
  int total() const { return total_; }

  friend bool operator==(const root_vector&, const root_vector&) = default;
  friend auto operator<=>(const root_vector&, const root_vector&) = default;

 private:
  std::map<int, int> coeffs_;
  int total_ = 0;
};

// Content of a multipartition: the multiset of residues of its nodes.
inline root_vector content(const multipartition& lam, const multicharge& mc) {
  root_vector beta;
  for (const node_t& a : lam.nodes()) beta.add(mc.residue(a));
  return beta;
}

// Cartan matrix entry (α_i, α_j) of the quiver Γ_e.  The linear quiver
// (e = 0) and the cyclic quiver with e >= 3 have single edges between
// neighbouring residues; e = 2 is the doubled-edge case.
inline int cartan_entry(int i, int j, int e) {
  if (e == 0) {
    if (i == j) return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
  }
  int d = (i - j) % e;
  if (d < 0) d += e;
  if (d == 0) return 2;
  if (e == 2) return -2;
  return (d == 1 || d == e - 1) ? -1 : 0;
}

// Bilinear form (β, γ) extended from the Cartan entries.
inline long long symmetric_form(const root_vector& beta, const root_vector& gamma, int e) {
  long long s = 0;
  for (const auto& [i, bi] : beta.coefficients())
    for (const auto& [j, cj] : gamma.coefficients())
      s += static_cast<long long>(bi) * cj * cartan_entry(i, j, e);
  return s;
}

// (Λ, β) = Σ_i (Λ, α_i)·β_i with (Λ, α_i) = #{ l : κ_l ≡ i }.
inline long long weight_pairing(const multicharge& mc, const root_vector& beta) {
  long long s = 0;
  for (const auto& [i, bi] : beta.coefficients())
    s += static_cast<long long>(mc.weight_multiplicity(i)) * bi;
  return s;
}

// defect β = (Λ, β) − ½(β, β).
inline int defect(const multicharge& mc, const root_vector& beta) {
  long long norm = symmetric_form(beta, beta, mc.e());
  if (norm % 2 != 0) throw odd_norm_error("(β,β) is odd; β is not a multipartition content");
  return static_cast<int>(weight_pairing(mc, beta) - norm / 2);
}

// β' = Σ b_i α_{−i}; pairs with the conjugate multicharge κ'.
inline root_vector conjugate_residues(const root_vector& beta, const multicharge& mc) {
  root_vector out;
  for (const auto& [i, bi] : beta.coefficients()) out.add(mc.reduce(-i), bi);
  return out;
}

// One block of the algebra: all multipartitions of a common content β,
// listed in descending total order, together with the defect.
struct block_t {
  root_vector beta;
  std::vector<multipartition> members;
  int defect = 0;
};

// Partition of all multipartitions of n into blocks by content.  Requires
// the standing assumption e = 0 or e >= n.  Blocks are ordered by the
// total order of their most dominant member.
inline std::vector<block_t> blocks(int n, const multicharge& mc) {
  if (!mc.standing_assumption(n))
    throw unsupported_error("blocks: the standing assumption e = 0 or e >= n fails");
  std::map<root_vector, block_t> by_content;
  for (const multipartition& lam : enumerate_multipartitions(n, mc.level())) {
    root_vector beta = content(lam, mc);
    auto [it, inserted] = by_content.try_emplace(beta);
    if (inserted) {
      it->second.beta = beta;
      it->second.defect = defect(mc, beta);
    }
    it->second.members.push_back(lam);  // enumeration order is already descending
  }
  std::vector<block_t> out;
  out.reserve(by_content.size());
  for (auto& [beta, blk] : by_content) out.push_back(std::move(blk));
  std::sort(out.begin(), out.end(), [](const block_t& a, const block_t& b) {
    return total_order_cmp(a.members.front(), b.members.front()) > 0;
  });
  return out;
}

// Text form of a root vector: residues as "a<k>:<mult>", comma separated,
// sorted by residue, e.g. "a-1:1,a0:3,a1:1".
inline std::string format_root_vector(const root_vector& beta) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, bi] : beta.coefficients()) {
    if (!first) out << ',';
    out << 'a' << i << ':' << bi;
    first = false;
  }
  return out.str();
}

inline root_vector parse_root_vector(std::string_view text, const multicharge& mc) {
  root_vector beta;
  std::string s(text);
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t colon = tok.find(':');
    if (tok[0] != 'a' || colon == std::string::npos)
      throw parse_error("bad root vector term (want a<res>:<mult>): " + tok);
    try {
      int res = std::stoi(tok.substr(1, colon - 1));
      int mult = std::stoi(tok.substr(colon + 1));
      if (mult < 0) throw parse_error("negative multiplicity: " + tok);
      beta.add(mc.reduce(res), mult);
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception&) {
      throw parse_error("bad root vector term: " + tok);
    }
  }
  return beta;
}

}  // namespace qschur
