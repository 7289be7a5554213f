#ifndef PISO_MATRIX_HPP
#define PISO_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "piso/selfsim.hpp"

namespace piso {

// The strong embedding of the two-generator polycyclic monoid determined
// by a self-similar structure: p = proj_left ∘ decode, q = proj_right ∘
// decode.  Construction verifies the defining relations p p† = 1 = q q†,
// p q† = 0 = q p† and the strong condition p†p ∨ q†q = 1.
struct P2Embedding {
  PrefixArrow p;
  PrefixArrow q;
};

P2Embedding embed_p2(const SelfSimilarStructure& s);

// 2×2 matrix of endo-arrows at S; e01 is row 0, column 1.
struct Matrix2 {
  PrefixArrow e00;
  PrefixArrow e01;
  PrefixArrow e10;
  PrefixArrow e11;

  std::string str() const;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 identity_matrix();

// [f] with entries x_i f x_j†, x_0 = p, x_1 = q.
Matrix2 matrix_rep(const PrefixArrow& f, const SelfSimilarStructure& s);

// Matrix product with join in place of addition; throws JoinError if a
// summand pair fails to be orthogonal (it never does for representation
// matrices taken w.r.t. a single structure).
Matrix2 mat_mul(const Matrix2& m, const Matrix2& n);

// ⋁ x_i† e_ij x_j; inverse of matrix_rep on representation matrices.
// Throws JoinError when m is not a representation w.r.t. s.
PrefixArrow reconstruct(const Matrix2& m, const SelfSimilarStructure& s);

struct RebaseResult {
  Matrix2 direct;      // [f] w.r.t. `to`
  Matrix2 conjugated;  // u†-matrix · [f]_from · u-matrix
  Matrix2 u;           // u_ij = x_i^from (x_j^to)†
  Matrix2 u_dagger;
  bool consistent() const { return direct == conjugated; }
};

// Change of representation between two self-similar structures.
RebaseResult rebase(const PrefixArrow& f, const SelfSimilarStructure& from,
                    const SelfSimilarStructure& to);

// True iff the representation of f w.r.t. `from` is diagonalised by `to`:
// the rebased matrix has zero off-diagonal entries.
bool is_diagonalized_by(const PrefixArrow& f, const SelfSimilarStructure& from,
                        const SelfSimilarStructure& to);

// The matrix (w.r.t. `from`) of the `to`-internalised direct sum of X and
// Y: precisely the shape of matrix that `to` diagonalises.
Matrix2 diagonal_form(const PrefixArrow& x, const PrefixArrow& y,
                      const SelfSimilarStructure& from,
                      const SelfSimilarStructure& to);

struct DiagonalExtraction {
  bool diagonal = false;    // off-diagonals of [f]_to vanish
  PrefixArrow x;            // p_to f p_to†
  PrefixArrow y;            // q_to f q_to†
  bool reproduces = false;  // f = internalize(x, y, to)
};

// Extracts the diagonal witnesses of f w.r.t. `to` and checks that they
// re-internalise to f; `diagonal` and `reproduces` agree exactly when f
// is of the characterised diagonal form.
DiagonalExtraction extract_diagonal(const PrefixArrow& f,
                                    const SelfSimilarStructure& to);

// Bounded search for a diagonalising structure: enumerates code arrows
// whose prefix codes have at most max_terms terms and words no longer
// than max_depth, in a fixed deterministic order.  The general problem is
// undecidable, so this is a best-effort enumeration.
std::optional<SelfSimilarStructure> search_diagonalizer(
    const PrefixArrow& f, const SelfSimilarStructure& from,
    std::size_t max_depth = 4, std::size_t max_terms = 4);

}  // namespace piso

#endif  // PISO_MATRIX_HPP
