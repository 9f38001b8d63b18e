#pragma once

#include <filesystem>

#include <json.hpp>

#include "gproj/gpcriteria.hpp"

namespace gproj {

using ojson = nlohmann::ordered_json;

// Presentation files: {"field", "vertices", "arrows": [{id, from, to}],
// "relations": [[{coeff, path: [arrow ids]}]]}. Reading then writing
// reproduces the identical document.
PathPresentation presentation_from_json(const ojson& j);
ojson presentation_to_json(const PathPresentation& p);
PathPresentation load_presentation(const std::filesystem::path& file);
void save_presentation(const std::filesystem::path& file, const PathPresentation& p);

/// Algebra reference inside a module file: a path to a presentation file, an
/// inline presentation object, or {"tensor": [<ref>, <ref>]}. Relative paths
/// resolve against base_dir.
AlgebraPtr algebra_from_json(const ojson& j, const std::filesystem::path& base_dir);
/// Inline description of an algebra built from presentations (recursively
/// tensor-structured). Throws when the algebra has no recorded presentation.
ojson algebra_to_json(const AlgebraPtr& alg);

// Module files: {"algebra": <ref, optional when supplied by the caller>,
// "dim", "actions": {generator name -> dim x dim matrix of scalar strings}}.
Module module_from_json(const ojson& j, const std::filesystem::path& base_dir,
                        AlgebraPtr algebra = nullptr);
ojson module_to_json(const Module& m, bool inline_algebra);
Module load_module(const std::filesystem::path& file, AlgebraPtr algebra = nullptr);
void save_module(const std::filesystem::path& file, const Module& m);

/// Generator list and basic invariants of a constructed algebra, for module
/// file authoring (stable generator order).
ojson algebra_description(const AlgebraPtr& alg);

ojson verdict_to_json(const GpVerdict& v);
GpVerdict verdict_from_json(const ojson& j);

std::string canonical_dump(const ojson& j);
ojson parse_json_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, const std::string& text);

} // namespace gproj
