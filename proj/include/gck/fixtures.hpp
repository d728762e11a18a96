/*
 * fixtures.hpp: the verification registry behind `verify-paper`.
 *
 * Each fixture checks one fact from the published reference tables and
 * propositions against this library's computed results: the three character
 * tables, the closed-form decomposition coefficients, the constraint
 * propositions, idempotents, multiplicities, and the obstruction norm.
 *
 * The reference material orders rows and columns differently from our
 * canonical ordering; the mapping ships as data files (one per group) so the
 * convention stays out of the code. GCK_DATA_DIR overrides the compiled
 * default location.
 */

#pragma once

#include <string>
#include <vector>

namespace gck {

// reference-order index -> canonical index, for table rows (irreps) and
// columns (conjugacy classes)
struct PaperOrderMap {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
};

// Resolves the data directory (GCK_DATA_DIR, else the build-time default).
std::string paper_order_data_dir();

// Loads s3.json / q8.json / s4.json. Errors: unknown-paper-order for groups
// without a shipped map (domain), paper-order-corrupt for unreadable or
// invalid files (internal).
PaperOrderMap load_paper_order(const std::string& group_name);

struct FixtureResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;   // worst deviation observed, when meaningful
    std::string detail;   // human-readable summary of what was checked
};

// Runs all fixtures (or the one named by `only`). Throws DomainError
// unknown-fixture for a name not in the registry. Deterministic per seed.
std::vector<FixtureResult> run_paper_fixtures(unsigned seed, const std::string& only = "");

} // namespace gck
