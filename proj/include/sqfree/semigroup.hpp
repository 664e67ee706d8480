#pragma once

// Finite square-free semigroups with zero, stored combinatorially: a nonzero
// element is its support pair (i,j), and the multiplication is the set of
// composable triples (i,j,k) meaning s_ij * s_jk = s_ik != 0. Indices are
// 0-based in code and 1-based on the wire.

#include <compare>
#include <string>
#include <vector>

#include "sqfree/error.hpp"

namespace sqfree::sgrp {

struct Pair {
  int i = 0, j = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

struct Triple {
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct Violation {
  std::string kind;
  std::vector<int> tuple;  // 0-based indices of the witnessing tuple
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

class Semigroup {
 public:
  Semigroup() = default;
  /// Throws InvalidInput on out-of-range indices. With close_units, the
  /// unit-law triples (i,i,j) and (i,j,j) are added for every support pair.
  Semigroup(int n, std::vector<Pair> support, std::vector<Triple> comp, bool close_units = true);

  int size() const { return n_; }

  std::size_t num_pairs() const { return pairs_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& pair(int id) const { return pairs_[id]; }
  /// Id of s_ij in pairs(), or -1 when e_i S e_j = {0}.
  int pair_index(int i, int j) const { return pair_id_[i * n_ + j]; }
  bool has(int i, int j) const { return pair_index(i, j) >= 0; }

  std::size_t num_triples() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& triple(int id) const { return triples_[id]; }
  int triple_index(int i, int j, int k) const { return triple_id_[(i * n_ + j) * n_ + k]; }
  bool composes(int i, int j, int k) const { return triple_index(i, j, k) >= 0; }

  /// S^{<m>} as vertex paths (i_0, ..., i_m): the tuple (s_{i0 i1}, ..., s_{i(m-1) im})
  /// with nonzero product. m = 0 gives the idempotents (i). Lexicographic order.
  std::vector<std::vector<int>> paths(int m) const;

  /// Sub-semigroup induced on the given idempotents (new index t <-> indices[t]).
  Semigroup induced(const std::vector<int>& indices) const;

  friend bool operator==(const Semigroup&, const Semigroup&) = default;

 private:
  int n_ = 0;
  std::vector<Pair> pairs_;
  std::vector<Triple> triples_;
  std::vector<int> pair_id_;
  std::vector<int> triple_id_;
};

ValidationReport validate(const Semigroup& s);

/// e_i ~ e_j iff i = j or (s_ij, s_ji exist and s_ij s_ji = e_i).
bool related(const Semigroup& s, int i, int j);
/// ~-classes, each sorted, ordered by least element.
std::vector<std::vector<int>> sim_classes(const Semigroup& s);

struct Block {
  Semigroup semigroup;
  std::vector<int> parent;  // block index -> parent index
};

/// One induced matrix-unit sub-semigroup per ~-class. Throws BlockNotMatrixUnits.
std::vector<Block> blocks(const Semigroup& s);

struct Reduced {
  Semigroup semigroup;
  std::vector<int> representatives;
};

/// Induced semigroup on the least index of each ~-class.
Reduced reduced(const Semigroup& s);
/// Induced semigroup on a caller-chosen representative set (one per class).
Reduced reduced(const Semigroup& s, const std::vector<int>& representatives);

/// Position of each idempotent inside its ~-class (0 for the least index).
std::vector<int> block_labels(const Semigroup& s);

/// A permutation of E preserving support and comp; s_ij maps to s_{perm(i) perm(j)}.
class SemigroupAutomorphism {
 public:
  SemigroupAutomorphism() = default;
  explicit SemigroupAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {}
  static SemigroupAutomorphism identity(int n);

  int operator()(int i) const { return perm_[i]; }
  const std::vector<int>& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }
  bool is_identity() const;
  SemigroupAutomorphism inverse() const;

  /// (a * b)(i) = a(b(i))
  friend SemigroupAutomorphism operator*(const SemigroupAutomorphism& a, const SemigroupAutomorphism& b);
  friend auto operator<=>(const SemigroupAutomorphism&, const SemigroupAutomorphism&) = default;
  friend bool operator==(const SemigroupAutomorphism&, const SemigroupAutomorphism&) = default;

 private:
  std::vector<int> perm_;
};

bool is_automorphism(const Semigroup& s, const SemigroupAutomorphism& phi);

/// Maps every idempotent to one with the same position inside its ~-class.
bool is_normal(const Semigroup& s, const SemigroupAutomorphism& phi);

/// Aut S in lexicographic order of permutations. Throws SearchBoundExceeded
/// when n > max_n.
std::vector<SemigroupAutomorphism> automorphisms(const Semigroup& s, int max_n = 8);

bool isomorphic(const Semigroup& a, const Semigroup& b);

std::string to_string(const std::vector<int>& tuple, bool one_based = true);

namespace fixtures {

/// Single idempotent.
Semigroup single();
/// e1, e2, s12.
Semigroup t2();
/// 1 -> 2 -> 3 with s12 s23 = s13.
Semigroup a3();
/// 1 -> 2 -> 3 with s12 s23 = 0 and no s13.
Semigroup z3();
/// n x n matrix units.
Semigroup matrix_units(int n);
/// Total order on n points: s_ij for i <= j, every chain composes.
Semigroup chain(int n);

}  // namespace fixtures

}  // namespace sqfree::sgrp
