#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "weyldual/presentation.hpp"

namespace weyldual {

/// Ordering of wedge coordinates and sign rule for the de Rham differential.
///  kLexLeftInsert:  subsets in lexicographic order; inserting s on the left
///                   of dx_J costs (-1)^{#{j in J : j < s}}.
///  kColexRightInsert: subsets in colexicographic order; dx_J is extended on
///                   the right, costing (-1)^{#{j in J : j > s}}.
/// Cohomology dimensions do not depend on the choice.
enum class WedgeConvention { kLexLeftInsert, kColexRightInsert };

/// One graded summand of a Koszul-type complex of M.
///
/// Cohomological (de Rham) summand at label a: object i is the sum over
/// i-subsets J of M_{a - deg x_J}, differentials[i] : object i -> object i+1.
/// Homological (Koszul) summand at label a: object i is the sum over
/// i-subsets J of M_{a + deg x_J}, differentials[i] : object i+1 -> object i.
/// Pieces outside the covered region are treated as zero and clear
/// `certified`.
struct SummandComplex {
  Label label;
  bool homological = false;
  bool certified = true;
  std::vector<std::vector<std::vector<std::size_t>>> subsets;  // per object, in basis order
  std::vector<std::size_t> object_dims;
  std::vector<ExactMatrix> differentials;

  /// Dimension of h^i (or h_i when homological) for i = 0..n.
  std::vector<std::size_t> cohomology() const;
};

SummandComplex build_summand(const GradedPresentation& m, const Label& a,
                             WedgeConvention convention = WedgeConvention::kLexLeftInsert);

/// Homological Koszul summand with respect to sign * d_1, ..., sign * d_n.
/// Block for removing j_s from J is (-1)^{s-1} sign d_{j_s}.
SummandComplex build_koszul_summand(const GradedPresentation& m, const Label& a, int sign = 1);

struct TableEntry {
  std::size_t dim = 0;
  bool certified = false;
};

struct TableTotal {
  std::size_t dim = 0;
  bool complete = false;
};

/// Per-label cohomology. Entries are kept when nonzero or uncertified;
/// totals sum certified entries only.
struct CohomologyTable {
  GradingSpec spec;
  Window window;
  bool homological = false;
  std::map<std::pair<Label, int>, TableEntry> entries;
  std::map<int, TableTotal> totals;
  std::size_t labels_computed = 0;
  std::size_t labels_certified = 0;

  std::size_t total(int i) const { return totals.at(i).dim; }
  bool complete() const;
  /// Totals as a vector indexed by i (only for full tables).
  std::vector<std::size_t> total_vector() const;
};

struct EngineOptions {
  unsigned workers = 1;
  WedgeConvention convention = WedgeConvention::kLexLeftInsert;
};

CohomologyTable derham_cohomology(const GradedPresentation& m, const EngineOptions& opts = {});

CohomologyTable koszul_homology(const GradedPresentation& m, int sign = 1,
                                const EngineOptions& opts = {});

/// H^0 = joint kernel of the d_i, one label at a time.
CohomologyTable h0_fast(const GradedPresentation& m);
/// H^n = M / (d_1 M + ... + d_n M), one label at a time.
CohomologyTable hn_fast(const GradedPresentation& m);

/// Labels where de Rham cohomology can be nonzero according to the Euler
/// certificate, or nullopt when the certificate is absent or fails.
std::optional<std::set<Label>> certified_support(const GradedPresentation& m);

}  // namespace weyldual
