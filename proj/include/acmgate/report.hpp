#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acmgate/case_engine.hpp"
#include "acmgate/gorenstein_km.hpp"
#include "acmgate/liaison.hpp"

namespace acm {

/// Rows of exact values rendered as text; every cell is already formatted.
struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_markdown() const;
  std::string to_csv() const;
};

enum class ReportFormat { Markdown, Csv };

ReportFormat parse_report_format(const std::string& text);
std::string render(const std::vector<ReportTable>& tables, ReportFormat format);

/// Provenance labels used in the tables.
inline constexpr const char* kPublished = "published value";
inline constexpr const char* kDerived = "derived";
inline constexpr const char* kExternal = "external input";

/// A curve on a general sextic threefold together with its self-dual
/// resolution in P^4, as used in the dimension gates.
struct SexticCurve {
  std::string id;
  std::string description;
  int c1;
  GorensteinResolution resolution;
  CurveInvariants invariants;
  /// Pivot order for the Hilbert constraints (keeps the free unknown stable).
  std::vector<std::string> pivots;
  std::string provenance;
};

/// Every resolution shape used for the gates on sextics, in c1 order.
const std::vector<SexticCurve>& sextic_curves();
const SexticCurve& sextic_curve(const std::string& id);

/// Degree-d curves with c1 = 1 on a sextic: normal bundle dimensions are not
/// recomputed here but taken from the classification of such curves.
struct CitedNormalBundle {
  int d;
  std::int64_t h0N;
};
const std::vector<CitedNormalBundle>& cited_c1_1_normal_bundles();

/// Plane curve degree, the resolution obtained by linking back through
/// (1,2,5) and (2,2,5), and the self-dual reduction found for it.
struct LemmaSolution {
  int plane_degree;
  GradedComplex back_propagated;
  GorensteinResolution resolution;
  std::int64_t x, a, b, c;
};

/// Back-propagates plane curves of degree 1..max_degree to c1 = 2 curves on
/// a sextic and keeps the self-dual reductions lying in at least three
/// quadrics with generators of degree 2..5.
std::vector<LemmaSolution> c1_2_lemma_solutions(int max_degree = 4);

/// Step of the c1 = 3 linkage chain.
struct ChainStep {
  std::string label;
  GradedComplex complex;
  DegreeGenus invariants;
};

/// Links the c1 = 3 curve by (3,3,5), (2,3,5) and (2,2,4) with the
/// cancellations forced at each stage. The cancellation of the cubic
/// generators after the second link is not determined by the numbers; it is
/// carried as the unknown "eps" (0 or 1). Complexes keep x, a, b; the
/// invariants are expressed in d after the Hilbert constraints.
std::vector<ChainStep> c1_3_chain();

/// Classification of c1 with relations and admissible c2 for degree r.
ReportTable classify_table(int r, const EnumerationOptions& options = {});

/// Classification of rank-2 ACM bundles on sextics: case table, relations
/// across degrees, Riemann-Roch checkpoints.
std::vector<ReportTable> reproduce_classification();

/// Dimension gates, Hilbert constraints and linkage chains for sextics.
std::vector<ReportTable> reproduce_gates(std::int64_t ambient_dim = 209);

}  // namespace acm
