#pragma once

#include <iosfwd>
#include <vector>

#include "zslab/group.hpp"

namespace zslab {

/** All abelian groups of order 2..max_order (one per isomorphism class),
 *  ordered by order then by invariant factor chain. */
std::vector<AbelianGroup> abelian_groups_up_to(long long max_order);

/**
 * Table generators.  Each writes a TSV (header row, LF line endings) and
 * returns a process exit status: 0 when every row is definite, 2 when some
 * row is budget-limited or otherwise undecided.  Budgets are node-only so
 * repeated runs are byte-identical.
 */
int table_egz_small(std::ostream& os, long long node_budget);
int table_dim_vs_bound(std::ostream& os);
int table_petrov_caps(std::ostream& os, long long node_budget);
int table_propd_survey(std::ostream& os, long long node_budget);

} // namespace zslab
