#include "quiverhom/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace quiverhom {

namespace {

using nlohmann::json;

Int int_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw ValidationError("expected an integer (number or decimal string)");
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ValidationError("matrix must be {\"rows\", \"cols\", \"data\"}");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols)
        throw ValidationError("matrix data length does not match rows*cols");
    IntMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = int_from_json(data[k++]);
    return m;
}

Quiver quiver_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("arrows"))
        throw ValidationError("quiver must carry \"vertices\" and \"arrows\"");
    std::vector<int> vertices;
    for (const json& v : j.at("vertices"))
        vertices.push_back(v.get<int>());
    std::vector<Arrow> arrows;
    for (const json& a : j.at("arrows"))
        arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<int>(),
                          a.at("tgt").get<int>()});
    return Quiver::validate(std::move(vertices), std::move(arrows));
}

int vertex_key(const std::string& key) {
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size())
            throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("vertex key \"" + key + "\" is not an integer");
    }
}

SimplicialComplex complex_from_json(const json& j) {
    std::vector<int> vertices;
    if (j.contains("vertices"))
        for (const json& v : j.at("vertices"))
            vertices.push_back(v.get<int>());
    std::vector<std::vector<int>> facets;
    if (j.contains("facets"))
        for (const json& f : j.at("facets")) {
            std::vector<int> tuple;
            for (const json& v : f)
                tuple.push_back(v.get<int>());
            facets.push_back(std::move(tuple));
        }
    return validate_complex(vertices, facets);
}

std::map<int, SimplicialComplex> complex_family_from_json(const json& j) {
    std::map<int, SimplicialComplex> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.emplace(vertex_key(it.key()), complex_from_json(it.value()));
    return out;
}

FinSetRep finset_from_json(const json& j) {
    Quiver q = quiver_from_json(j.at("quiver"));
    std::map<int, std::vector<std::string>> sets;
    if (j.contains("sets"))
        for (auto it = j.at("sets").begin(); it != j.at("sets").end(); ++it) {
            std::vector<std::string> elems;
            for (const json& e : it.value())
                elems.push_back(e.get<std::string>());
            sets.emplace(vertex_key(it.key()), std::move(elems));
        }
    std::map<std::string, std::map<std::string, std::string>> maps;
    if (j.contains("maps"))
        for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
            std::map<std::string, std::string> table;
            for (auto e = it.value().begin(); e != it.value().end(); ++e)
                table.emplace(e.key(), e.value().get<std::string>());
            maps.emplace(it.key(), std::move(table));
        }
    return validate_finset_rep(std::move(q), std::move(sets), std::move(maps));
}

SimplicialRep simplicial_from_json(const json& j) {
    Quiver q = quiver_from_json(j.at("quiver"));
    std::map<int, SimplicialComplex> spaces = complex_family_from_json(j.at("spaces"));
    std::map<std::string, std::map<int, int>> maps;
    if (j.contains("maps"))
        for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
            const json& body =
                it.value().contains("vertex_map") ? it.value().at("vertex_map") : it.value();
            std::map<int, int> vm;
            for (auto e = body.begin(); e != body.end(); ++e)
                vm.emplace(vertex_key(e.key()), e.value().get<int>());
            maps.emplace(it.key(), std::move(vm));
        }
    return validate_simplicial_rep(std::move(q), std::move(spaces), std::move(maps));
}

ChainRep chain_from_json(const json& j) {
    Quiver q = quiver_from_json(j.at("quiver"));
    std::map<int, ChainComplex> complexes;
    for (auto it = j.at("complexes").begin(); it != j.at("complexes").end(); ++it) {
        const json& body = it.value();
        std::vector<std::size_t> ranks;
        for (const json& r : body.at("ranks"))
            ranks.push_back(r.get<std::size_t>());
        std::vector<IntMatrix> boundaries(ranks.size());
        if (body.contains("boundaries")) {
            const json& bs = body.at("boundaries");
            // boundaries[k] is the boundary into degree k: entry k maps
            // degree k+1 to degree k, matching index n = k+1
            for (std::size_t k = 0; k + 1 < ranks.size() && k < bs.size(); ++k)
                boundaries[k + 1] = matrix_from_json(bs[k]);
        }
        for (std::size_t n = 1; n < ranks.size(); ++n)
            if (boundaries[n].rows() == 0 && boundaries[n].cols() == 0)
                boundaries[n] = IntMatrix(ranks[n - 1], ranks[n]);
        complexes.emplace(vertex_key(it.key()),
                          ChainComplex::validate(std::move(ranks), std::move(boundaries)));
    }
    std::map<std::string, ChainMap> maps;
    if (j.contains("maps"))
        for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
            const Arrow& a = q.arrow(it.key());
            std::vector<IntMatrix> mats;
            for (const json& m : it.value().at("matrices"))
                mats.push_back(matrix_from_json(m));
            maps.emplace(it.key(), ChainMap::validate(complexes.at(a.src), complexes.at(a.tgt),
                                                      std::move(mats)));
        }
    return validate_chain_rep(std::move(q), std::move(complexes), std::move(maps));
}

FgAbGroup group_from_json(const json& j) {
    if (j.contains("relations")) {
        IntMatrix rel = matrix_from_json(j.at("relations"));
        std::size_t n = j.contains("generators") ? j.at("generators").get<std::size_t>()
                                                 : rel.rows();
        return FgAbGroup(n, std::move(rel));
    }
    std::size_t free_rank = j.contains("free_rank") ? j.at("free_rank").get<std::size_t>() : 0;
    std::vector<Int> torsion;
    if (j.contains("torsion"))
        for (const json& t : j.at("torsion"))
            torsion.push_back(int_from_json(t));
    return FgAbGroup::from_invariants(free_rank, torsion);
}

AbRep ab_from_json(const json& j) {
    Quiver q = quiver_from_json(j.at("quiver"));
    std::map<int, FgAbGroup> groups;
    for (auto it = j.at("groups").begin(); it != j.at("groups").end(); ++it)
        groups.emplace(vertex_key(it.key()), group_from_json(it.value()));
    std::map<std::string, GroupHom> homs;
    if (j.contains("maps"))
        for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
            const Arrow& a = q.arrow(it.key());
            homs.emplace(it.key(), GroupHom(groups.at(a.src), groups.at(a.tgt),
                                            matrix_from_json(it.value())));
        }
    return validate_ab_rep(std::move(q), std::move(groups), std::move(homs));
}

}  // namespace

const Quiver& ParsedInput::any_quiver() const {
    switch (kind) {
        case Kind::quiver:
            return *quiver;
        case Kind::finset:
            return finset->quiver;
        case Kind::simplicial:
            return simplicial->quiver;
        case Kind::chain:
            return chain->quiver;
        case Kind::ab:
            return ab->quiver;
    }
    internal_error("unreachable input kind");
}

ParsedInput parse_input_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        throw ValidationError("input must be a JSON object");

    std::string kind = j.value("kind", std::string{});
    if (kind.empty() && j.contains("vertices") && j.contains("arrows"))
        kind = "quiver";
    ParsedInput out;
    if (kind == "quiver") {
        out.kind = ParsedInput::Kind::quiver;
        out.quiver = quiver_from_json(j);
    } else if (kind == "finset") {
        out.kind = ParsedInput::Kind::finset;
        out.finset = finset_from_json(j);
    } else if (kind == "simplicial") {
        out.kind = ParsedInput::Kind::simplicial;
        out.simplicial = simplicial_from_json(j);
        if (j.contains("basepoints"))
            for (auto it = j.at("basepoints").begin(); it != j.at("basepoints").end(); ++it)
                out.basepoints.emplace(vertex_key(it.key()), it.value().get<int>());
        if (j.contains("sub_a"))
            out.sub_a = complex_family_from_json(j.at("sub_a"));
        if (j.contains("sub_b"))
            out.sub_b = complex_family_from_json(j.at("sub_b"));
        if (j.contains("left"))
            out.part_left = complex_family_from_json(j.at("left"));
        if (j.contains("right"))
            out.part_right = complex_family_from_json(j.at("right"));
    } else if (kind == "chain") {
        out.kind = ParsedInput::Kind::chain;
        out.chain = chain_from_json(j);
    } else if (kind == "ab") {
        out.kind = ParsedInput::Kind::ab;
        out.ab = ab_from_json(j);
    } else {
        throw ValidationError("unknown input kind \"" + kind + "\"");
    }
    return out;
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open input file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input_text(buffer.str());
}

}  // namespace quiverhom
