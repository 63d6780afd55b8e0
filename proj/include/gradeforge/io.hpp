#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gradeforge/algebra.hpp"
#include "gradeforge/category.hpp"
#include "gradeforge/counting.hpp"
#include "gradeforge/magma.hpp"

namespace gradeforge::io {

// Magma text:
//   magma <order>
//   zero <index>          (optional)
//   <order> rows of <order> space-separated indices
FiniteMagma parse_magma(std::string_view text);
std::string print_magma(FiniteMagma const& m);

// Category text:
//   category <objects> <morphisms>
//   m <dom> <cod> [id]    one line per morphism
//   c <s> <t> <st>        one line per composable pair (s after t)
// or, for a connected groupoid, after the header:
//   groupoid-presentation <group order>
//   <group table rows>
// Printing always uses the explicit form with triples in row-major order.
FinitePrecategory parse_category(std::string_view text);
std::string print_category(FinitePrecategory const& c);

// Relation text:
//   relation <left order> <right order> <pair count>
//   <g> <h>               one line per pair, ascending
PairRelation parse_relation(std::string_view text);
std::string print_relation(PairRelation const& r);

enum class DocumentKind { magma, category, relation, family, report };

struct Document {
  DocumentKind kind;
  std::variant<FiniteMagma, FinitePrecategory, PairRelation, std::string> payload;
};

/// Dispatches on the leading keyword. JSON documents ('{') with a "target"
/// key are family reports; other JSON is a plain report.
Document parse_document(std::string_view text);

// JSON reports. Keys are sorted, counts are decimal strings, and lists keep
// enumeration order, so equal inputs give byte-identical output.

/// {"count":"<n>","items":[...]} around already-serialised JSON items.
std::string emit_report(std::vector<std::string> const& items);

std::string emit_maps(std::vector<ElementMap> const& maps);
std::string emit_sets(std::vector<ElementSet> const& sets);
std::string emit_relations(std::vector<PairRelation> const& relations);
std::string emit_morphism_maps(std::vector<MorphismMap> const& maps);
std::string emit_magmas(std::vector<FiniteMagma> const& magmas);
std::string emit_count_report(CountReport const& report);
std::string emit_verdicts(std::vector<Verdict> const& verdicts);

/// A batch of elementary families over one target.
struct FamilyReport {
  std::string kind;         // "grading" or "filter"
  std::string target_text;  // magma or category text of the target
  bool contracted = false;  // families on the contracted algebra of a zero magma
  std::vector<ElementaryFamily> families;
};

/// Each family serialises as {"<target element>": [sorted basis indices], ...}.
std::string emit_family_report(FamilyReport const& report);
/// Inverse of emit_family_report. A category target becomes adjoin_zero of
/// that category.
FamilyReport parse_family_report(std::string_view text);

/// Target magma described by a target text (magma or category).
FiniteMagma target_magma(std::string_view target_text);

}  // namespace gradeforge::io
