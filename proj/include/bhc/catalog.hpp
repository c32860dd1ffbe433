#pragma once

// Built-in examples and the JSON interchange format.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bhc/hopf.hpp"
#include "bhc/sayd.hpp"
#include "bhc/superlie.hpp"

namespace bhc {

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::optional<HopfObject> hopf;
  std::vector<ModularPair> pairs;
  std::vector<bool> bmpi_expected;  // one per pair
  std::optional<SuperLieAlgebra> lie;
  std::vector<SaydModule> modules;  // extra coefficient modules from an interchange file
  std::vector<std::string> notes;
};

// cz2, cz2_rmatrix, super_ext_1..3, anyon_line_4, group_z_<m>, lie_odd_abelian_<k>, lie_ax_b, lie_1_1.
// Throws UnknownName, or VerificationFailed if an entry stops verifying.
CatalogEntry load_example(const std::string& name);
std::vector<std::string> example_names();

// Full verification of an entry; load_example and import_presentation both run it.
CheckReport verify_entry(const CatalogEntry& e);

// Structure tensors in the sparse interchange layout.
using Triple3 = std::tuple<Index, Index, Index, Scalar>;
using Pair1 = std::pair<Index, Scalar>;
using Pair2 = std::tuple<Index, Index, Scalar>;
HopfData hopf_data_from_tensors(const Space& H, const std::vector<Triple3>& m, const std::vector<Pair1>& unit,
                                const std::vector<Triple3>& delta, const std::vector<Pair1>& counit,
                                const std::vector<Pair2>& antipode);

std::string export_entry(const CatalogEntry& e);
void export_entry(const CatalogEntry& e, const std::string& path);
// ParseError (with position) on malformed input, VerificationFailed naming the first violated identity.
CatalogEntry import_presentation_text(const std::string& text, const std::string& source = "<input>");
CatalogEntry import_presentation(const std::string& path);
// Catalog name or path to an interchange file.
CatalogEntry load_any(const std::string& name_or_path);

}  // namespace bhc
