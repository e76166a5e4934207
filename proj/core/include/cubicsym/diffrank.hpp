#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicsym/forms.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/matrix.hpp"

namespace cubicsym {

// Applies the differential operator d^|op| / dx^op.
Form derivative(const Form& f, const Exps& op);

// Rank of the coefficient matrix of all order-i partials of F in the
// degree-(d - i) monomial basis. Throws InputError unless 1 <= i <= d.
int rankD(const Form& f, int i);

// sum_i l_i dF/dx_i
Form directionalDerivative(const Form& f, const std::vector<CycNum>& l);

// rank D_1(sum l_i dF/dx_i) == r. Throws InputError on l = 0 or deg F < 2.
bool charSetMember(const Form& f, const std::vector<CycNum>& l, int r);

// The m x m matrix of linear forms whose rank at l equals rank D_1 of the
// l-directional derivative, evaluated at l.
CycMatrix hessianAt(const Form& f, const std::vector<CycNum>& l);

enum class S1Status { Yes, No, Exhausted };

struct S1Result {
  S1Status status = S1Status::Exhausted;
  // Present for Yes when the small search finds an explicit l; its entries
  // have conductor lcm(f.conductor(), 3).
  std::optional<std::vector<CycNum>> witness;
  std::string method;
};

// Decides whether some l != 0 gives rank exactly 1 (for smooth cubics the
// rank-0 branch is only l = 0). No is certified by a Groebner basis of the
// 2x2 minors whose leading monomials include a pure power of every variable.
S1Result s1NonEmpty(const Form& f, size_t budget = 1000000);

// (2, m-2) or (3, m-3) per the zeta_3 eigenvalue shape; delegates to
// cubeRootEigenShape.
std::optional<std::pair<int, int>> eigenPartitionWitness(const CycMatrix& a);

enum class PartitionCertificate { MonomialSupport, EigenvalueWitness, ExplicitMatrix };

std::string certificateName(PartitionCertificate c);

struct PartitionReport {
  std::vector<std::vector<int>> blocks;  // 0-based, each sorted, ordered by least element
  std::vector<int> residual;             // variables absent from the support
  PartitionCertificate certifiedBy = PartitionCertificate::MonomialSupport;
  std::string note;

  std::string str() const;
};

// Connected components of the variable co-occurrence graph of the support.
PartitionReport supportPartition(const std::vector<Exps>& monos, int m);

// Support partition of F if it splits; otherwise an eigenvalue witness from
// some element of G if one exists; otherwise the single-block support report.
PartitionReport partitionReport(const Form& f, const MatGroup* g);

// A(F) splits along `blocks` (every monomial lies in one block).
bool verifyExplicitPartition(const Form& f, const CycMatrix& a, const std::vector<std::vector<int>>& blocks);

// Every element is block diagonal for consecutive blocks of the given sizes
// (leftover coordinates form a final block). With allowSwap and sizes (1,3,3),
// elements exchanging the two 3-blocks are accepted as well.
bool verifyBlockShape(const MatGroup& g, const std::vector<int>& sizes, bool allowSwap = false);

}  // namespace cubicsym
