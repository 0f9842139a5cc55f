#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "wucalc/interaction_basis.hpp"

namespace wucalc {

// One row of the linear/quadratic/cubic reference table. Values in `wu` and
// `betti` are the ones the suite checks; `note` names cells that differ from
// the reference table and why.
struct TableRow {
  std::string label;
  std::string complex;  // catalog name, or "star3xstar3" for the ring product
  std::array<long long, 3> wu;
  std::array<std::vector<long long>, 3> betti;
  std::string note;
};

struct PairRow {
  std::string g_label, h_label;
  std::function<std::vector<Complex>()> build;
  long long wu;
  std::vector<long long> betti;
  std::string note;
};

const std::vector<TableRow>& reference_table();
const std::vector<PairRow>& pair_table();

// k copies of the row's complex (or product cell complex).
std::vector<CellComplexPtr> row_sources(const TableRow& row, int k);

// Betti vectors compare equal after trimming trailing zeros.
bool betti_equal(const std::vector<long long>& a, const std::vector<long long>& b);

struct FixtureOutcome {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool skipped = false;
  double seconds = 0;
};

struct FixtureOptions {
  bool large = false;  // also run the largest cohomology computation
};

// Cohomology of a basis larger than this many tuples is only attempted with `large`.
constexpr std::size_t kLargeBasisThreshold = 1000000;

std::vector<FixtureOutcome> run_fixtures(const FixtureOptions& options);

}  // namespace wucalc
