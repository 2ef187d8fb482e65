#include "tenring/definition.hpp"

#include <sstream>

using nlohmann::json;

namespace tenring {

void WorkbenchConfig::validate() const {
    if (!FieldSpec::is_prime(p)) throw Error("config: p must be prime");
    if (resolution_depth < 1 || degree_bound < 1 || nil_bound < 1 || window < 1)
        throw Error("config: all bounds must be >= 1");
    if (format != "text" && format != "structured")
        throw Error("config: format must be 'text' or 'structured'");
}

json WorkbenchConfig::to_json() const {
    return json{{"p", p},
                {"resolution_depth", resolution_depth},
                {"degree_bound", degree_bound},
                {"nil_bound", nil_bound},
                {"window", window},
                {"samples", samples},
                {"seed", seed},
                {"format", format}};
}

WorkbenchConfig WorkbenchConfig::from_json(const json& j) {
    WorkbenchConfig c;
    c.p = j.value("p", c.p);
    c.resolution_depth = j.value("resolution_depth", c.resolution_depth);
    c.degree_bound = j.value("degree_bound", c.degree_bound);
    c.nil_bound = j.value("nil_bound", c.nil_bound);
    c.window = j.value("window", c.window);
    c.samples = j.value("samples", c.samples);
    c.seed = j.value("seed", c.seed);
    c.format = j.value("format", c.format);
    c.validate();
    return c;
}

json matrix_to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j, FieldSpec f) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw Error("matrix: expected object with rows/cols/entries");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    const auto& e = j["entries"];
    if (!e.is_array() || e.size() != rows * cols)
        throw Error("matrix: entries length does not match rows*cols");
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(i, c, e[i * cols + c].get<std::int64_t>());
    return m;
}

json algebra_to_json(const FinDimAlgebra& a) {
    json mult = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) {
            ExactMatrix c = a.mul(a.basis_element(i), a.basis_element(j));
            json col = json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) col.push_back(c.at(k, 0));
            row.push_back(col);
        }
        mult.push_back(row);
    }
    json unit = json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) unit.push_back(a.unit().at(k, 0));
    return json{{"dim", a.dim()},
                {"labels", a.labels()},
                {"mult", mult},
                {"unit", unit}};
}

FinDimAlgebra algebra_from_json(const json& j, FieldSpec f) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("mult") ||
        !j.contains("unit"))
        throw Error("algebra: expected object with dim/mult/unit");
    std::size_t n = j["dim"].get<std::size_t>();
    const auto& mj = j["mult"];
    if (!mj.is_array() || mj.size() != n)
        throw Error("algebra: mult table must have dim rows");
    std::vector<std::vector<std::vector<std::uint32_t>>> mult(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mj[i].size() != n) throw Error("algebra: mult row has wrong length");
        mult[i].resize(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (mj[i][c].size() != n)
                throw Error("algebra: structure-constant column has wrong length");
            for (std::size_t k = 0; k < n; ++k)
                mult[i][c].push_back(
                    f.reduce(mj[i][c][k].get<std::int64_t>()));
        }
    }
    std::vector<std::uint32_t> unit;
    for (const auto& v : j["unit"]) unit.push_back(f.reduce(v.get<std::int64_t>()));
    if (unit.size() != n) throw Error("algebra: unit has wrong length");
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    FinDimAlgebra a(mult, unit, f, labels);
    a.validate();
    return a;
}

namespace {

json actions_to_json(const std::vector<ExactMatrix>& acts) {
    json out = json::array();
    for (const auto& m : acts) out.push_back(matrix_to_json(m));
    return out;
}

json module_to_json(const std::string& name, const FdModule& x) {
    return json{{"name", name},
                {"side", x.side == Side::left ? "left" : "right"},
                {"dim", x.dim},
                {"action", actions_to_json(x.action)}};
}

FdModule module_from_json(const json& j, const FinDimAlgebra& a) {
    if (!j.contains("side") || !j.contains("dim") || !j.contains("action"))
        throw Error("module: expected side/dim/action");
    FdModule x;
    x.algebra = a;
    x.side = j["side"].get<std::string>() == "left" ? Side::left : Side::right;
    x.dim = j["dim"].get<std::size_t>();
    const auto& acts = j["action"];
    if (acts.size() != a.dim())
        throw Error("module: one action matrix per algebra basis element required");
    for (const auto& aj : acts) {
        ExactMatrix m = matrix_from_json(aj, a.field());
        if (m.rows() != x.dim || m.cols() != x.dim)
            throw Error("module: action matrix dimension mismatch");
        x.action.push_back(m);
    }
    x.validate();
    return x;
}

json bimodule_to_json(const FdBimodule& m) {
    return json{{"dim", m.dim()},
                {"left_action", actions_to_json(m.left.action)},
                {"right_action", actions_to_json(m.right.action)}};
}

FdBimodule bimodule_from_json(const json& j, const FinDimAlgebra& left_alg,
                              const FinDimAlgebra& right_alg) {
    if (!j.contains("dim") || !j.contains("left_action") ||
        !j.contains("right_action"))
        throw Error("bimodule: expected dim/left_action/right_action");
    std::size_t d = j["dim"].get<std::size_t>();
    auto read = [&](const json& acts, const FinDimAlgebra& a, Side side) {
        FdModule x;
        x.algebra = a;
        x.side = side;
        x.dim = d;
        if (acts.size() != a.dim())
            throw Error("bimodule: one action matrix per algebra basis element");
        for (const auto& aj : acts) {
            ExactMatrix m = matrix_from_json(aj, a.field());
            if (m.rows() != d || m.cols() != d)
                throw Error("bimodule: action matrix dimension mismatch");
            x.action.push_back(m);
        }
        return x;
    };
    FdBimodule m{read(j["left_action"], left_alg, Side::left),
                 read(j["right_action"], right_alg, Side::right)};
    m.validate();
    return m;
}

json base_document(FieldSpec f) {
    return json{{"schema_version", 1},
                {"field", json{{"p", f.p}}},
                {"warnings", json::array()},
                {"tasks", json::array()}};
}

}  // namespace

DefinitionFile preset_nakayama(std::size_t n, std::size_t h, std::size_t i,
                               std::size_t j, FieldSpec f) {
    if (n < 1 || h < 1) throw Error("nakayama: n and h must be >= 1");
    if (i < 1 || i > n || j < 1 || j > n)
        throw Error("nakayama: vertex indices must be in 1..n");
    PathAlgebra pa = path_algebra({n, h, f});
    FdModule reg_l = regular_module(pa.algebra, Side::left);
    FdModule reg_r = regular_module(pa.algebra, Side::right);
    FdModule re =
        submodule(reg_l, pa.algebra.right_mult(pa.idempotents[i - 1])).module;
    FdModule er =
        submodule(reg_r, pa.algebra.left_mult(pa.idempotents[j - 1])).module;
    FdBimodule m = bimodule_tensor_k(re, er);

    json doc = base_document(f);
    doc["preset"] = json{{"name", "nakayama"}, {"n", n}, {"h", h}, {"i", i}, {"j", j}};
    doc["algebra"] = algebra_to_json(pa.algebra);
    doc["bimodule"] = bimodule_to_json(m);
    json modules = json::array();
    modules.push_back(module_to_json("R", reg_l));
    for (std::size_t v = 1; v <= n; ++v) {
        modules.push_back(module_to_json(
            "S" + std::to_string(v),
            simple_of_idempotent(pa.algebra, pa.idempotents[v - 1])));
        modules.push_back(module_to_json(
            "P" + std::to_string(v),
            submodule(reg_l, pa.algebra.right_mult(pa.idempotents[v - 1])).module));
    }
    doc["modules"] = modules;
    doc["pairs"] = json::array(
        {json{{"name", "stalk_R"}, {"base", "R"}, {"u", "zero"}},
         json{{"name", "ind_R"}, {"base", "R"}, {"u", "induced"}}});
    if ((j + n - i) % n < h)
        doc["warnings"].push_back(
            "bimodule nilpotency is unproven: (j - i) mod n < h, so paths i -> j "
            "survive and the tensor powers need not vanish");
    return DefinitionFile{doc};
}

DefinitionFile preset_triangular(FieldSpec f) {
    // Reduce the (k, k, U = k, V = 0) Morita context: the result is the 2x2
    // lower triangular algebra on basis e_A, u, e_B.
    FinDimAlgebra k = scalar_algebra(f);
    FdBimodule u{regular_module(k, Side::left), regular_module(k, Side::right)};
    FdBimodule v{zero_module(k, Side::left), zero_module(k, Side::right)};
    FinDimAlgebra t = morita_ring(morita_zero(k, k, u, v));
    json doc = base_document(f);
    doc["preset"] = json{{"name", "triangular"}};
    doc["algebra"] = algebra_to_json(t);
    auto projs = indecomposable_projectives(t, Side::left);
    json modules = json::array();
    modules.push_back(module_to_json("R", regular_module(t, Side::left)));
    for (std::size_t p = 0; p < projs.projectives.size(); ++p) {
        modules.push_back(
            module_to_json("P" + std::to_string(p + 1), projs.projectives[p]));
        modules.push_back(module_to_json(
            "S" + std::to_string(p + 1),
            simple_of_idempotent(t, projs.idempotents[p])));
    }
    doc["modules"] = modules;
    return DefinitionFile{doc};
}

DefinitionFile preset_morita_zero(FieldSpec f) {
    FinDimAlgebra k = scalar_algebra(f);
    FdBimodule u{regular_module(k, Side::left), regular_module(k, Side::right)};
    FdBimodule v{zero_module(k, Side::left), zero_module(k, Side::right)};
    MoritaData d = morita_zero(k, k, u, v);
    json doc = base_document(f);
    doc["preset"] = json{{"name", "morita-zero"}};
    doc["morita"] = json{{"a", algebra_to_json(d.a)},
                         {"b", algebra_to_json(d.b)},
                         {"u", bimodule_to_json(d.u)},
                         {"v", bimodule_to_json(d.v)}};
    return DefinitionFile{doc};
}

std::string render_definition(const DefinitionFile& d) {
    return d.doc.dump(2) + "\n";
}

DefinitionFile parse_definition(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("definition: invalid document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version"))
        throw Error("definition: missing schema_version");
    if (doc["schema_version"].get<int>() != 1)
        throw Error("definition: unsupported schema_version");
    if (!doc.contains("field") || !doc["field"].contains("p"))
        throw Error("definition: missing field.p");
    return DefinitionFile{doc};
}

BuiltDefinition build_definition(const DefinitionFile& d,
                                 const WorkbenchConfig& cfg) {
    const json& doc = d.doc;
    FieldSpec f(doc["field"]["p"].get<std::uint32_t>());
    BuiltDefinition b;
    if (doc.contains("warnings"))
        b.nilpotency_warning = !doc["warnings"].empty();

    if (doc.contains("morita")) {
        const json& mj = doc["morita"];
        FinDimAlgebra a = algebra_from_json(mj.at("a"), f);
        FinDimAlgebra bb = algebra_from_json(mj.at("b"), f);
        FdBimodule u = bimodule_from_json(mj.at("u"), bb, a);
        FdBimodule v = bimodule_from_json(mj.at("v"), a, bb);
        b.morita = morita_zero(a, bb, u, v);
        b.ring = morita_ring(*b.morita);
        FinDimAlgebra prod = product_algebra(a, bb);
        FdBimodule m = morita_bimodule(*b.morita);
        b.bimodule = m;
        if (!b.nilpotency_warning)
            b.context = tensor_ring(prod, m, cfg.nil_bound);
        return b;
    }

    if (!doc.contains("algebra")) throw Error("definition: missing algebra");
    b.ring = algebra_from_json(doc["algebra"], f);
    if (doc.contains("bimodule")) {
        b.bimodule = bimodule_from_json(doc["bimodule"], b.ring, b.ring);
        if (!b.nilpotency_warning)
            b.context = tensor_ring(b.ring, *b.bimodule, cfg.nil_bound);
    }
    if (doc.contains("modules"))
        for (const auto& mj : doc["modules"])
            b.modules.emplace(mj.at("name").get<std::string>(),
                              module_from_json(mj, b.ring));
    if (doc.contains("pairs")) {
        for (const auto& pj : doc["pairs"]) {
            if (!b.context) {
                // A warned definition still loads; only tensor-ring tasks
                // refuse to run.
                if (b.nilpotency_warning) break;
                throw Error("definition: pairs require a nilpotent bimodule");
            }
            std::string name = pj.at("name").get<std::string>();
            std::string base = pj.at("base").get<std::string>();
            auto it = b.modules.find(base);
            if (it == b.modules.end())
                throw Error("definition: pair '" + name +
                            "' references unknown module '" + base + "'");
            std::string kind = pj.at("u").get<std::string>();
            if (kind == "zero")
                b.pairs.emplace(name, functor_S(*b.context, it->second));
            else if (kind == "induced")
                b.pairs.emplace(name, functor_Ind(*b.context, it->second));
            else
                throw Error("definition: pair '" + name + "' has unknown u kind");
        }
    }
    return b;
}

}  // namespace tenring
