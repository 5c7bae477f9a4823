#include "homtensor/workspace.hpp"

#include "homtensor/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace homtensor {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

Rat scalar(const json& j, const std::string& where) {
    if (!j.is_string())
        fail(where, "scalars must be exact \"p/q\" strings (no numbers accepted)");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

Vec vector(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        fail(where, "expected a vector of length " + std::to_string(dim));
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = scalar(j[i], where + "[" + std::to_string(i + 1) + "]");
    return v;
}

Matrix matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        fail(where, "expected a matrix with " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec row = vector(j[r], cols, where + " row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

std::size_t dim_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0)
        fail(where, std::string("missing or invalid \"") + key + "\" (positive integer)");
    return j[key].get<std::size_t>();
}

std::vector<std::size_t> parse_key_indices(const std::string& key, std::size_t arity,
                                           std::size_t dim, const std::string& where) {
    std::vector<std::size_t> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(part);
        } catch (...) {
            fail(where, "bad index \"" + part + "\" in key \"" + key + "\"");
        }
        if (idx < 1 || idx > dim)
            fail(where, "index " + part + " out of range 1.." + std::to_string(dim));
        out.push_back(idx - 1);
    }
    if (out.size() != arity)
        fail(where, "key \"" + key + "\" must have " + std::to_string(arity) + " indices");
    return out;
}

json render_scalar(const Rat& r) { return to_string(r); }

json render_vector(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(render_scalar(x));
    return out;
}

json render_matrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(render_vector(m.row(r)));
    return out;
}

std::string index_key(std::initializer_list<std::size_t> idx) {
    std::string key;
    for (auto i : idx) {
        if (!key.empty()) key += ",";
        key += std::to_string(i + 1);
    }
    return key;
}

ThreeHomLieAlgebra parse_algebra(const json& j, const std::string& where) {
    std::size_t dim = dim_field(j, "dim", where);
    if (!j.contains("alpha")) fail(where, "missing \"alpha\"");
    Matrix alpha = matrix(j["alpha"], dim, dim, where + ".alpha");
    std::map<std::array<std::size_t, 3>, Vec> entries;
    if (j.contains("bracket")) {
        if (!j["bracket"].is_object()) fail(where, "\"bracket\" must be an object");
        for (const auto& [key, value] : j["bracket"].items()) {
            auto idx = parse_key_indices(key, 3, dim, where + ".bracket");
            if (!(idx[0] < idx[1] && idx[1] < idx[2]))
                fail(where + ".bracket",
                     "key \"" + key + "\" is not strictly increasing (only i<j<k is legal)");
            entries[{idx[0], idx[1], idx[2]}] =
                vector(value, dim, where + ".bracket." + key);
        }
    }
    return ThreeHomLieAlgebra::from_entries(dim, entries, std::move(alpha));
}

HomLeibnizAlgebra parse_hom_leibniz(const json& j, const std::string& where) {
    std::size_t dim = dim_field(j, "dim", where);
    if (!j.contains("twist")) fail(where, "missing \"twist\"");
    HomLeibnizAlgebra out;
    out.dim = dim;
    out.twist = matrix(j["twist"], dim, dim, where + ".twist");
    out.bracket2 = Tensor({dim, dim, dim});
    if (j.contains("bracket")) {
        for (const auto& [key, value] : j["bracket"].items()) {
            auto idx = parse_key_indices(key, 2, dim, where + ".bracket");
            Vec v = vector(value, dim, where + ".bracket." + key);
            for (std::size_t r = 0; r < dim; ++r) out.bracket2.at({idx[0], idx[1], r}) = v[r];
        }
    }
    return out;
}

ThreeHomLeibnizAlgebra parse_leibniz(const json& j, const std::string& where) {
    std::size_t dim = dim_field(j, "dim", where);
    if (!j.contains("twist")) fail(where, "missing \"twist\"");
    ThreeHomLeibnizAlgebra out;
    out.dim = dim;
    out.twist = matrix(j["twist"], dim, dim, where + ".twist");
    out.bracket3 = Tensor({dim, dim, dim, dim});
    if (j.contains("bracket")) {
        for (const auto& [key, value] : j["bracket"].items()) {
            auto idx = parse_key_indices(key, 3, dim, where + ".bracket");
            Vec v = vector(value, dim, where + ".bracket." + key);
            for (std::size_t r = 0; r < dim; ++r)
                out.bracket3.at({idx[0], idx[1], idx[2], r}) = v[r];
        }
    }
    return out;
}

} // namespace

bool Workspace::has_object(const std::string& name) const {
    return algebras.count(name) || hom_leibniz_algebras.count(name) ||
           leibniz_algebras.count(name) || representations.count(name) ||
           leibniz_representations.count(name) || tensors.count(name) ||
           cochains.count(name) || deformations.count(name) || witnesses.count(name);
}

Workspace parse_workspace_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("workspace is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("workspace root must be an object");
    Workspace ws;
    if (!j.contains("format_version") || !j["format_version"].is_string())
        throw ParseError("missing \"format_version\" string");
    ws.format_version = j["format_version"].get<std::string>();
    if (ws.format_version != "1")
        throw ParseError("unsupported format_version \"" + ws.format_version + "\"");

    if (j.contains("algebras"))
        for (const auto& [name, def] : j["algebras"].items())
            ws.algebras.emplace(name, parse_algebra(def, "algebras." + name));
    if (j.contains("hom_leibniz_algebras"))
        for (const auto& [name, def] : j["hom_leibniz_algebras"].items())
            ws.hom_leibniz_algebras.emplace(name,
                                            parse_hom_leibniz(def, "hom_leibniz_algebras." + name));
    if (j.contains("leibniz_algebras"))
        for (const auto& [name, def] : j["leibniz_algebras"].items())
            ws.leibniz_algebras.emplace(name, parse_leibniz(def, "leibniz_algebras." + name));

    if (j.contains("representations"))
        for (const auto& [name, def] : j["representations"].items()) {
            std::string where = "representations." + name;
            if (!def.contains("algebra") || !def["algebra"].is_string())
                fail(where, "missing \"algebra\" reference");
            std::string ref = def["algebra"].get<std::string>();
            auto alg = ws.algebras.find(ref);
            if (alg == ws.algebras.end()) fail(where, "unresolved algebra \"" + ref + "\"");
            std::size_t vdim = dim_field(def, "vdim", where);
            if (!def.contains("beta")) fail(where, "missing \"beta\"");
            Matrix beta = matrix(def["beta"], vdim, vdim, where + ".beta");
            const std::size_t d = alg->second.dim();
            Tensor rho({pair_count(d), vdim, vdim});
            if (def.contains("rho")) {
                for (const auto& [key, value] : def["rho"].items()) {
                    auto idx = parse_key_indices(key, 2, d, where + ".rho");
                    if (!(idx[0] < idx[1]))
                        fail(where + ".rho",
                             "key \"" + key + "\" is not strictly increasing (only i<j is legal)");
                    Matrix mat = matrix(value, vdim, vdim, where + ".rho." + key);
                    std::size_t p = pair_index(idx[0], idx[1], d);
                    for (std::size_t r = 0; r < vdim; ++r)
                        for (std::size_t c = 0; c < vdim; ++c) rho.at({p, r, c}) = mat.at(r, c);
                }
            }
            ws.representations.emplace(
                name, RepresentationEntry{
                          ref, Representation(alg->second, vdim, std::move(rho), std::move(beta))});
        }

    if (j.contains("leibniz_representations"))
        for (const auto& [name, def] : j["leibniz_representations"].items()) {
            std::string where = "leibniz_representations." + name;
            if (!def.contains("algebra") || !def["algebra"].is_string())
                fail(where, "missing \"algebra\" reference");
            std::string ref = def["algebra"].get<std::string>();
            auto alg = ws.leibniz_algebras.find(ref);
            if (alg == ws.leibniz_algebras.end())
                fail(where, "unresolved leibniz algebra \"" + ref + "\"");
            std::size_t wdim = dim_field(def, "wdim", where);
            if (!def.contains("beta")) fail(where, "missing \"beta\"");
            Matrix beta = matrix(def["beta"], wdim, wdim, where + ".beta");
            const std::size_t d = alg->second.dim;
            auto parse_action = [&](const char* key) {
                Tensor t({d, d, wdim, wdim});
                if (def.contains(key)) {
                    for (const auto& [pair_key, value] : def[key].items()) {
                        auto idx = parse_key_indices(pair_key, 2, d,
                                                     where + "." + key);
                        Matrix mat = matrix(value, wdim, wdim,
                                            where + "." + key + "." + pair_key);
                        for (std::size_t r = 0; r < wdim; ++r)
                            for (std::size_t c = 0; c < wdim; ++c)
                                t.at({idx[0], idx[1], r, c}) = mat.at(r, c);
                    }
                }
                return t;
            };
            Tensor l = parse_action("l"), m = parse_action("m"), r = parse_action("r");
            ws.leibniz_representations.emplace(
                name, LeibnizRepresentationEntry{
                          ref, LeibnizRepresentation(alg->second, wdim, std::move(l),
                                                     std::move(m), std::move(r),
                                                     std::move(beta))});
        }

    auto resolve_rep = [&](const json& def, const std::string& where) -> const RepresentationEntry& {
        if (!def.contains("representation") || !def["representation"].is_string())
            fail(where, "missing \"representation\" reference");
        std::string ref = def["representation"].get<std::string>();
        auto it = ws.representations.find(ref);
        if (it == ws.representations.end())
            fail(where, "unresolved representation \"" + ref + "\"");
        return it->second;
    };

    if (j.contains("tensors"))
        for (const auto& [name, def] : j["tensors"].items()) {
            std::string where = "tensors." + name;
            const auto& rep = resolve_rep(def, where);
            if (!def.contains("matrix")) fail(where, "missing \"matrix\"");
            Matrix m = matrix(def["matrix"], rep.value.algebra.dim(), rep.value.vdim,
                              where + ".matrix");
            ws.tensors.emplace(name,
                               TensorEntry{def["representation"].get<std::string>(), std::move(m)});
        }

    if (j.contains("cochains"))
        for (const auto& [name, def] : j["cochains"].items()) {
            std::string where = "cochains." + name;
            const auto& rep = resolve_rep(def, where);
            if (!def.contains("matrix")) fail(where, "missing \"matrix\"");
            Matrix m = matrix(def["matrix"], rep.value.algebra.dim(), rep.value.vdim,
                              where + ".matrix");
            ws.cochains.emplace(name,
                                CochainEntry{def["representation"].get<std::string>(), std::move(m)});
        }

    if (j.contains("deformations"))
        for (const auto& [name, def] : j["deformations"].items()) {
            std::string where = "deformations." + name;
            if (!def.contains("tensor") || !def["tensor"].is_string())
                fail(where, "missing \"tensor\" reference");
            std::string ref = def["tensor"].get<std::string>();
            auto it = ws.tensors.find(ref);
            if (it == ws.tensors.end()) fail(where, "unresolved tensor \"" + ref + "\"");
            const auto& rep = ws.representations.at(it->second.rep_ref);
            if (!def.contains("infinitesimal")) fail(where, "missing \"infinitesimal\"");
            Matrix m = matrix(def["infinitesimal"], rep.value.algebra.dim(), rep.value.vdim,
                              where + ".infinitesimal");
            ws.deformations.emplace(name, DeformationEntry{ref, std::move(m)});
        }

    if (j.contains("witnesses"))
        for (const auto& [name, def] : j["witnesses"].items()) {
            std::string where = "witnesses." + name;
            if (!def.contains("algebra") || !def["algebra"].is_string())
                fail(where, "missing \"algebra\" reference");
            std::string ref = def["algebra"].get<std::string>();
            auto alg = ws.algebras.find(ref);
            if (alg == ws.algebras.end()) fail(where, "unresolved algebra \"" + ref + "\"");
            if (!def.contains("a") || !def.contains("b")) fail(where, "missing \"a\" or \"b\"");
            Vec a = vector(def["a"], alg->second.dim(), where + ".a");
            Vec b = vector(def["b"], alg->second.dim(), where + ".b");
            ws.witnesses.emplace(name, WitnessEntry{ref, std::move(a), std::move(b)});
        }
    return ws;
}

Workspace parse_workspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open workspace file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_workspace_text(buffer.str());
}

std::string render_workspace(const Workspace& ws) {
    json j;
    j["format_version"] = ws.format_version;
    if (!ws.algebras.empty()) {
        json section = json::object();
        for (const auto& [name, alg] : ws.algebras) {
            json def;
            def["dim"] = alg.dim();
            def["alpha"] = render_matrix(alg.alpha());
            json bracket = json::object();
            for (std::size_t t = 0; t < triple_count(alg.dim()); ++t) {
                auto [i, jx, k] = triple_unrank(t, alg.dim());
                Vec v = alg.bracket_basis(i, jx, k);
                if (!is_zero(v)) bracket[index_key({i, jx, k})] = render_vector(v);
            }
            if (!bracket.empty()) def["bracket"] = bracket;
            section[name] = def;
        }
        j["algebras"] = section;
    }
    if (!ws.hom_leibniz_algebras.empty()) {
        json section = json::object();
        for (const auto& [name, alg] : ws.hom_leibniz_algebras) {
            json def;
            def["dim"] = alg.dim;
            def["twist"] = render_matrix(alg.twist);
            json bracket = json::object();
            for (std::size_t i = 0; i < alg.dim; ++i)
                for (std::size_t jx = 0; jx < alg.dim; ++jx) {
                    Vec v = alg.bracket_basis(i, jx);
                    if (!is_zero(v)) bracket[index_key({i, jx})] = render_vector(v);
                }
            if (!bracket.empty()) def["bracket"] = bracket;
            section[name] = def;
        }
        j["hom_leibniz_algebras"] = section;
    }
    if (!ws.leibniz_algebras.empty()) {
        json section = json::object();
        for (const auto& [name, alg] : ws.leibniz_algebras) {
            json def;
            def["dim"] = alg.dim;
            def["twist"] = render_matrix(alg.twist);
            json bracket = json::object();
            for (std::size_t i = 0; i < alg.dim; ++i)
                for (std::size_t jx = 0; jx < alg.dim; ++jx)
                    for (std::size_t k = 0; k < alg.dim; ++k) {
                        Vec v = alg.bracket_basis(i, jx, k);
                        if (!is_zero(v)) bracket[index_key({i, jx, k})] = render_vector(v);
                    }
            if (!bracket.empty()) def["bracket"] = bracket;
            section[name] = def;
        }
        j["leibniz_algebras"] = section;
    }
    if (!ws.representations.empty()) {
        json section = json::object();
        for (const auto& [name, entry] : ws.representations) {
            json def;
            def["algebra"] = entry.algebra_ref;
            def["vdim"] = entry.value.vdim;
            def["beta"] = render_matrix(entry.value.beta);
            json rho = json::object();
            const std::size_t d = entry.value.algebra.dim();
            for (std::size_t p = 0; p < pair_count(d); ++p) {
                auto [i, jx] = pair_unrank(p, d);
                Matrix m = entry.value.rho_basis(i, jx);
                if (!m.is_zero()) rho[index_key({i, jx})] = render_matrix(m);
            }
            if (!rho.empty()) def["rho"] = rho;
            section[name] = def;
        }
        j["representations"] = section;
    }
    if (!ws.leibniz_representations.empty()) {
        json section = json::object();
        for (const auto& [name, entry] : ws.leibniz_representations) {
            json def;
            def["algebra"] = entry.algebra_ref;
            def["wdim"] = entry.value.wdim;
            def["beta"] = render_matrix(entry.value.beta);
            auto render_action = [&](auto basis_fn) {
                json action = json::object();
                const std::size_t d = entry.value.algebra.dim;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t jx = 0; jx < d; ++jx) {
                        Matrix m = basis_fn(i, jx);
                        if (!m.is_zero()) action[index_key({i, jx})] = render_matrix(m);
                    }
                return action;
            };
            json l = render_action(
                [&](std::size_t i, std::size_t jx) { return entry.value.l_basis(i, jx); });
            json m = render_action(
                [&](std::size_t i, std::size_t jx) { return entry.value.m_basis(i, jx); });
            json r = render_action(
                [&](std::size_t i, std::size_t jx) { return entry.value.r_basis(i, jx); });
            if (!l.empty()) def["l"] = l;
            if (!m.empty()) def["m"] = m;
            if (!r.empty()) def["r"] = r;
            section[name] = def;
        }
        j["leibniz_representations"] = section;
    }
    if (!ws.tensors.empty()) {
        json section = json::object();
        for (const auto& [name, entry] : ws.tensors) {
            section[name] = {{"representation", entry.rep_ref},
                             {"matrix", render_matrix(entry.matrix)}};
        }
        j["tensors"] = section;
    }
    if (!ws.cochains.empty()) {
        json section = json::object();
        for (const auto& [name, entry] : ws.cochains) {
            section[name] = {{"representation", entry.rep_ref},
                             {"matrix", render_matrix(entry.matrix)}};
        }
        j["cochains"] = section;
    }
    if (!ws.deformations.empty()) {
        json section = json::object();
        for (const auto& [name, entry] : ws.deformations) {
            section[name] = {{"tensor", entry.tensor_ref},
                             {"infinitesimal", render_matrix(entry.infinitesimal)}};
        }
        j["deformations"] = section;
    }
    if (!ws.witnesses.empty()) {
        json section = json::object();
        for (const auto& [name, entry] : ws.witnesses) {
            section[name] = {{"algebra", entry.algebra_ref},
                             {"a", render_vector(entry.a)},
                             {"b", render_vector(entry.b)}};
        }
        j["witnesses"] = section;
    }
    return j.dump(2) + "\n";
}

void write_workspace_file(const Workspace& ws, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write workspace file: " + path);
    out << render_workspace(ws);
}

} // namespace homtensor
