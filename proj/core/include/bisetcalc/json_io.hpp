#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "bisetcalc/laws.hpp"

namespace biset::io {

using nlohmann::json;

/// Resolves group name references: built-in groups first, then
/// <fixtures_dir>/<name>.json. The directory usually comes from --fixtures
/// or the BISETCALC_FIXTURES environment variable.
class GroupResolver {
  public:
    explicit GroupResolver(std::optional<std::filesystem::path> fixtures_dir = std::nullopt)
        : fixtures_dir_(std::move(fixtures_dir)) {}

    /// Throws UnknownGroup when the name resolves nowhere.
    FiniteGroup group(const std::string& name) const;

  private:
    std::optional<std::filesystem::path> fixtures_dir_;
};

/// Reads and parses a JSON file; throws ParseError with the path on failure.
json load_json(const std::filesystem::path& p);

// Serialization. Groups are referenced by name everywhere below; only
// group_to_json emits the full multiplication table.
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json gset_to_json(const GSet& a);
GSet gset_from_json(const json& j, const GroupResolver& r);

json gmap_to_json(const GMap& m);
GMap gmap_from_json(const json& j, const GroupResolver& r);

json zero_cell_to_json(const ZeroCell& x);
ZeroCell zero_cell_from_json(const json& j, const GroupResolver& r);

json one_cell_to_json(const OneCell& f);
OneCell one_cell_from_json(const json& j, const GroupResolver& r);

json two_cell_to_json(const TwoCell& e);
TwoCell two_cell_from_json(const json& j, const GroupResolver& r);

json slice_object_to_json(const SliceObject& a);
SliceObject slice_object_from_json(const json& j, const GroupResolver& r);

json burnside_class_to_json(const BurnsideClass& c);
BurnsideClass burnside_class_from_json(const json& j);

json omega_element_to_json(const OmegaElement& x);
OmegaElement omega_element_from_json(const json& j, const GroupResolver& r);

json law_report_to_json(const LawReport& r);

}  // namespace biset::io
