#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "tenring/gorenstein.hpp"

namespace tenring {

/// Knobs shared by every command: bounds are explicit and echoed into
/// reports so a verdict is always relative to a stated window.
struct WorkbenchConfig {
    std::uint32_t p = 7;
    std::size_t resolution_depth = 20;
    std::size_t degree_bound = 6;
    std::size_t nil_bound = 16;
    std::size_t window = 8;
    std::size_t samples = 50;
    std::uint64_t seed = 42;
    std::string format = "text";  // "text" | "structured"
    bool include_timing = false;

    void validate() const;
    nlohmann::json to_json() const;
    static WorkbenchConfig from_json(const nlohmann::json& j);
};

/// A definition document: algebras by structure constants, bimodules by
/// action matrices, named modules and pairs, an optional task list. Matrices
/// are integer lists mod p, row-major.
struct DefinitionFile {
    nlohmann::json doc;
    bool operator==(const DefinitionFile& o) const { return doc == o.doc; }
};

// --- serialization helpers (shared with reports) ---
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j, FieldSpec f);
nlohmann::json algebra_to_json(const FinDimAlgebra& a);
FinDimAlgebra algebra_from_json(const nlohmann::json& j, FieldSpec f);

/// Cyclic Nakayama preset kQ/J^h with the arrow bimodule R e_i (x) e_j R
/// (1-based vertices). When (j - i) mod n < h the bimodule is not known to
/// be nilpotent; the file is still emitted, carrying a warning that makes
/// tensor-ring tasks refuse to run.
DefinitionFile preset_nakayama(std::size_t n, std::size_t h, std::size_t i,
                               std::size_t j, FieldSpec f);
/// The 2x2 triangular algebra (k 0 / k k).
DefinitionFile preset_triangular(FieldSpec f);
/// Zero-pairing Morita context with A = B = k, U = k, V = 0.
DefinitionFile preset_morita_zero(FieldSpec f);

std::string render_definition(const DefinitionFile& d);
/// Throws Error with a field diagnostic on schema violations.
DefinitionFile parse_definition(const std::string& text);

/// Everything a task needs, resolved from a definition file.
struct BuiltDefinition {
    FinDimAlgebra ring;
    std::optional<FdBimodule> bimodule;
    std::optional<TensorRingContext> context;
    std::optional<MoritaData> morita;
    std::map<std::string, FdModule> modules;
    std::map<std::string, PairModule> pairs;
    bool nilpotency_warning = false;
};
BuiltDefinition build_definition(const DefinitionFile& d,
                                 const WorkbenchConfig& cfg);

}  // namespace tenring
