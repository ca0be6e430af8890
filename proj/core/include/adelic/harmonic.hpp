#pragma once

#include "adelic/cohomology.hpp"
#include "adelic/fn_table.hpp"
#include "adelic/window.hpp"

namespace adelic::harmonic {

using adeles::AdeleWindow;
using curve::Divisor;
using series::ClosedPoint;

// ---- Parseval => Riemann-Roch at window level -----------------------------

// All quantities are exponents of q; the identity
//   (delta_K_hat, delta_D_hat) = |V| (delta_K, delta_D)
// becomes hat_exponent == vol_exponent + l_D, and extracting it yields
// l(D) - l(K-D) = deg D + 1.
struct RRReport {
  long deg_D = 0;
  long l_D = 0;    // from the window kernel computation
  long l_KD = 0;   // same, in the dual window
  long window_dim = 0;
  long lhs_exponent = 0;  // log_q (delta_K_hat, delta_D_hat)
  long rhs_exponent = 0;  // log_q |V| (delta_K, delta_D)
  bool orthogonality_ok = false;  // Gamma-perp equals embedded L((omega)-D_low)
  bool parseval_ok = false;
  bool rr_identity_holds = false;
};

RRReport rr_via_parseval(const Divisor& D);
RRReport rr_via_parseval(const Divisor& D, const AdeleWindow& W);

// A window that accommodates D, (omega)-D and the duality bookkeeping.
AdeleWindow standard_window(const Divisor& D);

// l(D) computed inside the window: dimension of the embedded L(D_high)
// subspace that lands in the A(D) block.
long window_l_dim(const Divisor& D, const AdeleWindow& W);

// Basis rows of { y : rows . Gram . y = 0 } under a block pairing.
std::vector<std::vector<algebra::Fq>> orthogonal_rows(const linalg::Mat& rows,
                                                      const qspace::Pairing& P);

// ---- subgroup rule ---------------------------------------------------------

// transform of char(A(D)) equals |A(D)w| * char(A((omega)-D)); exhaustive.
bool subgroup_rule_check(const AdeleWindow& W, const Divisor& D);
// f_hat_hat = |V| f(-x); exhaustive.
bool double_transform_check(const AdeleWindow& W, const FnTable& f);

// ---- cube diagram ----------------------------------------------------------

struct CubeReport {
  bool tensor_rule = false;       // F_hat (x) G_hat = (F (x) G)_hat
  bool diagonal_unwind = false;   // <F_hat,G_hat> = beta_* i^* (F_hat (x) G_hat)
  bool ij_duality = false;        // i^* after hat = hat after j_* (reflected)
  bool alpha_beta_duality = false;  // beta_* after hat = |V| alpha^*
  bool parseval_reflected = false;  // <F_hat,G_hat> = |V| <F, G o neg>
  bool ok = false;
  CycloValue lhs, rhs;  // <F_hat,G_hat> and <F, G o neg>
  long vol_exponent = 0;
};

// Every equality in the chain, checked exactly. The maps are i(a) = (a, a)
// and j(a, b) = a - b; the reflection convention enters as G o neg (for the
// catalog's symmetric functions it is invisible).
CubeReport cube_check(const FnTable& f0, const FnTable& f1, const qspace::Pairing& P);

// ---- Bruhat type square ----------------------------------------------------

enum class BruhatType { D, E, Dprime, Eprime };
enum class CatalogKind { DeltaD, DeltaH1, DeltaK, DeltaH0 };

std::string bruhat_type_name(BruhatType t);

// Nested family W_k = W(D_low - k*step, D_high + k*step), k = 1..levels.
struct WindowFamily {
  std::vector<ClosedPoint> S;
  Divisor D;         // divisor defining the catalog entries
  Divisor base_low, base_high;
  Divisor step;      // strictly effective on S
  int levels = 3;

  AdeleWindow at(int k) const;
  static WindowFamily standard(const Divisor& D, int levels = 3);
};

FnTable catalog_table(CatalogKind kind, const WindowFamily& fam, int k);

struct BruhatReport {
  bool support_bounded = false;
  bool locally_constant = false;
  bool stable = false;  // flags agree across the family
  BruhatType type = BruhatType::D;
};

// flags measured against the base pair (A(D_high), A(D_low)) inside each
// family window; unstable flags are an error state reported via stable.
BruhatReport bruhat_type(CatalogKind kind, const WindowFamily& fam);

// transform flags against the dual base pair; checks D<->D, E<->E',
// D'<->D' across the whole family.
bool fourier_swap_check(CatalogKind kind, const WindowFamily& fam);

BruhatType flags_to_type(bool support_bounded, bool locally_constant);

}  // namespace adelic::harmonic
