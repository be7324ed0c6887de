#pragma once

// Closed-form Gromov–Witten multiple-cover contributions of an isolated
// (-1,-1) curve (the resolved conifold), and the GV table they induce.

#include "bps/gv_transform.hpp"
#include "bps/rat.hpp"

namespace bps {

/// Exact Bernoulli number B_n with B_1 = -1/2, from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0. Values are cached process-wide.
Rat bernoulli(int n);

/// GW_{g,d} of the resolved conifold:
///   g = 0:  1/d^3
///   g = 1:  1/(12 d)
///   g >= 2: |B_{2g}| d^{2g-3} / (2g (2g-2)!)
Rat conifold_gw(int g, int d);

/// GW table of the resolved conifold for g <= g_max, d <= d_max (rank 1).
InvariantTable conifold_gw_table(int g_max, int d_max);

/// gw_to_gv(conifold_gw_table(g_max, d_max)); expected to be the delta at (0, 1).
InvariantTable conifold_gv_table(int g_max, int d_max);

/// True iff the table's only nonzero entry is GV_{0,[1]} = 1.
bool is_conifold_delta(const InvariantTable& gv);

}  // namespace bps
