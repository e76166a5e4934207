#pragma once

#include <vector>

#include "cubicsym/forms.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/matrix.hpp"

namespace cubicsym {

struct InvariantSpace {
  int m = 0;
  int d = 0;
  unsigned n = 1;
  // Reduced echelon form over the grevlex-descending monomial basis; each
  // member has leading coefficient 1.
  std::vector<Form> basis;

  size_t dim() const noexcept { return basis.size(); }
  // True when f lies in the span of the basis.
  bool contains(const Form& f) const;
};

// Matrix of F -> A(F) on degree-d forms; column j holds A(mono_j) in the
// monomials(m, d) basis.
CycMatrix actionMatrix(const CycMatrix& a, int d);

// Forms of degree d fixed exactly by every generator. Throws InputError on an
// empty generator list or mismatched dimensions.
InvariantSpace invariantForms(const std::vector<CycMatrix>& gens, int d);

struct SymplecticCheck {
  bool symplectic = false;
  // Data of the normalized matrix mu * A, where (mu A)^k = I for k the
  // projective order of A.
  CycNum mu;
  CycNum lambda;
  CycNum det;
};

// mu * A is the normalization; A(F) = lambda F is required. Throws InputError
// when A is not semi-invariant, and DomainError when A has no finite
// projective order up to the cap.
SymplecticCheck symplecticCheck(const CycMatrix& a, const Form& f);
bool isSymplectic(const CycMatrix& a, const Form& f);

// #{A in G : det A = lambda_A^2} / |G n scalars|, for a materialized group
// whose elements are semi-invariant. The count is stable under A -> mu A
// exactly when m = 2d; other shapes throw InputError.
size_t symplecticOrder(const MatGroup& g, const Form& f);

// diag(A, 1) for each generator, plus diag(xi_d I_m, 1). The result fixes
// hat(F) whenever the generators fix F up to d-th roots of unity.
std::vector<CycMatrix> coveringLift(const std::vector<CycMatrix>& gens, int d);

// gcd(m, d) = 1. Throws InputError when m < 3, d < 3, or (m, d) is (3, 3) or (4, 4).
bool fLiftingExists(int m, int d);

}  // namespace cubicsym
