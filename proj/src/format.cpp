#include "rbcoalg/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace rbcoalg {

using ojson = nlohmann::ordered_json;

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Coalgebra: return "coalgebra";
        case Kind::Algebra: return "algebra";
        case Kind::Hopf: return "hopf";
        case Kind::RBCoalgebra: return "rb-coalgebra";
        case Kind::RBAlgebra: return "rb-algebra";
    }
    throw FormatError("unknown kind");
}

Kind parse_kind(const std::string& name) {
    if (name == "coalgebra") return Kind::Coalgebra;
    if (name == "algebra") return Kind::Algebra;
    if (name == "hopf") return Kind::Hopf;
    if (name == "rb-coalgebra") return Kind::RBCoalgebra;
    if (name == "rb-algebra") return Kind::RBAlgebra;
    throw FormatError("unknown kind '" + name + "'");
}

namespace {

bool is_coalgebra_kind(Kind k) {
    return k == Kind::Coalgebra || k == Kind::RBCoalgebra || k == Kind::Hopf;
}
bool is_algebra_kind(Kind k) {
    return k == Kind::Algebra || k == Kind::RBAlgebra || k == Kind::Hopf;
}
bool is_rb_kind(Kind k) { return k == Kind::RBCoalgebra || k == Kind::RBAlgebra; }

Rational parse_scalar_field(const ojson& j, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": scalar must be a \"num/den\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(where + ": " + e.what());
    }
}

int parse_index(const ojson& j, int dim, const std::string& where) {
    if (!j.is_number_integer()) throw FormatError(where + ": index must be an integer");
    const long long v = j.get<long long>();
    if (v < 0 || v >= dim) throw FormatError(where + ": index out of range");
    return static_cast<int>(v);
}

Vec parse_vector(const ojson& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw FormatError(where + ": expected an array of " + std::to_string(dim) + " scalars");
    }
    Vec v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v[i] = parse_scalar_field(j[i], where);
    return v;
}

Matrix parse_matrix(const ojson& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw FormatError(where + ": expected " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const ojson& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw FormatError(where + ": row " + std::to_string(r) + " has wrong length");
        }
        for (int c = 0; c < dim; ++c) m.at(r, c) = parse_scalar_field(row[c], where);
    }
    return m;
}

std::vector<Tensor2> parse_delta(const ojson& j, int dim) {
    if (!j.is_array()) throw FormatError("delta: expected an array of [k,i,j,\"s\"] entries");
    std::vector<Tensor2> delta(static_cast<std::size_t>(dim), Tensor2(dim));
    std::set<std::array<int, 3>> seen;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 4) {
            throw FormatError("delta: each entry must be [k, i, j, \"num/den\"]");
        }
        const int k = parse_index(entry[0], dim, "delta");
        const int i = parse_index(entry[1], dim, "delta");
        const int jj = parse_index(entry[2], dim, "delta");
        if (!seen.insert({k, i, jj}).second) throw FormatError("delta: duplicate entry");
        delta[static_cast<std::size_t>(k)].at(i, jj) = parse_scalar_field(entry[3], "delta");
    }
    return delta;
}

MultTable parse_mult(const ojson& j, int dim) {
    if (!j.is_array()) throw FormatError("mult: expected an array of [i,j,k,\"s\"] entries");
    MultTable mult(dim);
    std::set<std::array<int, 3>> seen;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 4) {
            throw FormatError("mult: each entry must be [i, j, k, \"num/den\"]");
        }
        const int i = parse_index(entry[0], dim, "mult");
        const int jj = parse_index(entry[1], dim, "mult");
        const int k = parse_index(entry[2], dim, "mult");
        if (!seen.insert({i, jj, k}).second) throw FormatError("mult: duplicate entry");
        mult.at(i, jj, k) = parse_scalar_field(entry[3], "mult");
    }
    return mult;
}

std::vector<Vec> parse_row_list(const ojson& j, int dim, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array of rows");
    std::vector<Vec> rows;
    for (const auto& row : j) rows.push_back(parse_vector(row, dim, where));
    return rows;
}

ojson vector_json(const Vec& v) {
    ojson out = ojson::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

ojson matrix_json(const Matrix& m) {
    ojson out = ojson::array();
    for (int r = 0; r < m.rows; ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(format_rational(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

ojson delta_json(const std::vector<Tensor2>& delta) {
    ojson out = ojson::array();
    for (int k = 0; k < static_cast<int>(delta.size()); ++k) {
        const Tensor2& dk = delta[static_cast<std::size_t>(k)];
        for (int i = 0; i < dk.dim; ++i)
            for (int j = 0; j < dk.dim; ++j)
                if (!dk.at(i, j).is_zero()) {
                    out.push_back(ojson::array({k, i, j, format_rational(dk.at(i, j))}));
                }
    }
    return out;
}

ojson mult_json(const MultTable& mult) {
    ojson out = ojson::array();
    for (int i = 0; i < mult.dim; ++i)
        for (int j = 0; j < mult.dim; ++j)
            for (int k = 0; k < mult.dim; ++k)
                if (!mult.at(i, j, k).is_zero()) {
                    out.push_back(ojson::array({i, j, k, format_rational(mult.at(i, j, k))}));
                }
    return out;
}

}  // namespace

StructureFile parse_structure(const std::string& json_text) {
    ojson j;
    try {
        j = ojson::parse(json_text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("top level must be an object");

    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1) {
        throw FormatError("missing or unsupported \"format\" (expected 1)");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) throw FormatError("missing \"kind\"");
    StructureFile sf;
    sf.kind = parse_kind(j["kind"].get<std::string>());
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0) {
        throw FormatError("missing or negative \"dim\"");
    }
    sf.dim = j["dim"].get<int>();

    std::set<std::string> allowed = {"format", "kind", "dim", "basis_names"};
    if (is_coalgebra_kind(sf.kind)) {
        allowed.insert("delta");
        allowed.insert("counit");
    }
    if (is_algebra_kind(sf.kind)) {
        allowed.insert("mult");
        allowed.insert("unit");
    }
    if (sf.kind == Kind::Algebra || sf.kind == Kind::RBAlgebra) allowed.insert("degrees");
    if (sf.kind == Kind::Hopf) allowed.insert("antipode");
    if (is_rb_kind(sf.kind)) {
        allowed.insert("operators");
        allowed.insert("weight");
    }
    if (sf.kind == Kind::RBCoalgebra) allowed.insert("subspaces");
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) throw FormatError("unknown field \"" + item.key() + "\"");
    }

    if (!j.contains("basis_names")) throw FormatError("missing \"basis_names\"");
    {
        const ojson& names = j["basis_names"];
        if (!names.is_array() || static_cast<int>(names.size()) != sf.dim) {
            throw FormatError("\"basis_names\" must list exactly dim names");
        }
        for (const auto& n : names) {
            if (!n.is_string()) throw FormatError("basis names must be strings");
            sf.basis_names.push_back(n.get<std::string>());
        }
    }

    if (is_coalgebra_kind(sf.kind)) {
        if (!j.contains("delta")) throw FormatError("missing \"delta\"");
        sf.delta = parse_delta(j["delta"], sf.dim);
        if (j.contains("counit")) sf.counit = parse_vector(j["counit"], sf.dim, "counit");
        if (sf.kind == Kind::Hopf && !sf.counit) throw FormatError("hopf requires \"counit\"");
    }
    if (is_algebra_kind(sf.kind)) {
        if (!j.contains("mult")) throw FormatError("missing \"mult\"");
        sf.mult = parse_mult(j["mult"], sf.dim);
        if (j.contains("unit")) sf.unit = parse_vector(j["unit"], sf.dim, "unit");
        if (sf.kind == Kind::Hopf && !sf.unit) throw FormatError("hopf requires \"unit\"");
    }
    if (sf.kind == Kind::Hopf) {
        if (!j.contains("antipode")) throw FormatError("hopf requires \"antipode\"");
        sf.antipode = parse_matrix(j["antipode"], sf.dim, "antipode");
    }
    if (is_rb_kind(sf.kind)) {
        if (!j.contains("operators") || !j["operators"].is_object() || j["operators"].empty()) {
            throw FormatError("rb kinds require a non-empty \"operators\" map");
        }
        for (const auto& item : j["operators"].items()) {
            if (item.key().empty()) throw FormatError("operator names must be non-empty");
            sf.operators[item.key()] =
                parse_matrix(item.value(), sf.dim, "operators." + item.key());
        }
        if (!j.contains("weight")) throw FormatError("rb kinds require \"weight\"");
        sf.weight = parse_scalar_field(j["weight"], "weight");
    }
    if (j.contains("degrees")) {
        const ojson& deg = j["degrees"];
        if (!deg.is_array() || static_cast<int>(deg.size()) != sf.dim) {
            throw FormatError("\"degrees\" must list exactly dim integers");
        }
        std::vector<int> degrees;
        for (const auto& d : deg) {
            if (!d.is_number_integer() || d.get<long long>() < 0) {
                throw FormatError("degrees must be non-negative integers");
            }
            degrees.push_back(d.get<int>());
        }
        sf.degrees = degrees;
    }
    if (j.contains("subspaces")) {
        const ojson& sub = j["subspaces"];
        if (!sub.is_object()) throw FormatError("\"subspaces\" must be an object");
        for (const auto& item : sub.items()) {
            if (item.key() != "c1" && item.key() != "c2") {
                throw FormatError("unknown subspaces field \"" + item.key() + "\"");
            }
        }
        if (!sub.contains("c1") || !sub.contains("c2")) {
            throw FormatError("\"subspaces\" requires \"c1\" and \"c2\"");
        }
        SubspacesField s;
        s.c1 = parse_row_list(sub["c1"], sf.dim, "subspaces.c1");
        s.c2 = parse_row_list(sub["c2"], sf.dim, "subspaces.c2");
        sf.subspaces = s;
    }
    return sf;
}

std::string serialize_structure(const StructureFile& sf) {
    ojson j;
    j["format"] = 1;
    j["kind"] = kind_name(sf.kind);
    j["dim"] = sf.dim;
    j["basis_names"] = sf.basis_names;
    if (is_coalgebra_kind(sf.kind)) {
        j["delta"] = delta_json(sf.delta);
        if (sf.counit) j["counit"] = vector_json(*sf.counit);
    }
    if (is_algebra_kind(sf.kind)) {
        j["mult"] = mult_json(sf.mult);
        if (sf.unit) j["unit"] = vector_json(*sf.unit);
        if (sf.degrees) j["degrees"] = *sf.degrees;
    }
    if (sf.antipode) j["antipode"] = matrix_json(*sf.antipode);
    if (is_rb_kind(sf.kind)) {
        ojson ops;
        for (const auto& [name, m] : sf.operators) ops[name] = matrix_json(m);
        j["operators"] = std::move(ops);
        j["weight"] = format_rational(sf.weight.value_or(Rational(0)));
    }
    if (sf.subspaces) {
        ojson sub;
        ojson c1 = ojson::array();
        for (const auto& row : sf.subspaces->c1) c1.push_back(vector_json(row));
        ojson c2 = ojson::array();
        for (const auto& row : sf.subspaces->c2) c2.push_back(vector_json(row));
        sub["c1"] = std::move(c1);
        sub["c2"] = std::move(c2);
        j["subspaces"] = std::move(sub);
    }
    return j.dump(2) + "\n";
}

namespace {

const Matrix& named_operator(const StructureFile& sf, const std::string& op_name) {
    const auto it = sf.operators.find(op_name);
    if (it == sf.operators.end()) {
        throw FormatError("missing operator \"" + op_name + "\"");
    }
    return it->second;
}

}  // namespace

Coalgebra to_coalgebra(const StructureFile& sf) {
    if (!is_coalgebra_kind(sf.kind)) {
        throw FormatError("file kind '" + kind_name(sf.kind) + "' carries no comultiplication");
    }
    Coalgebra c;
    c.dim = sf.dim;
    c.basis_names = sf.basis_names;
    c.delta = sf.delta;
    c.counit = sf.counit;
    return c;
}

RBCoalgebra to_rb_coalgebra(const StructureFile& sf, const std::string& op_name) {
    if (sf.kind != Kind::RBCoalgebra) throw FormatError("expected an rb-coalgebra file");
    return RBCoalgebra{to_coalgebra(sf), named_operator(sf, op_name), *sf.weight};
}

Algebra to_algebra(const StructureFile& sf) {
    if (!is_algebra_kind(sf.kind)) {
        throw FormatError("file kind '" + kind_name(sf.kind) + "' carries no multiplication");
    }
    Algebra a;
    a.dim = sf.dim;
    a.basis_names = sf.basis_names;
    a.mult = sf.mult;
    a.unit = sf.unit;
    return a;
}

RBAlgebra to_rb_algebra(const StructureFile& sf, const std::string& op_name) {
    if (sf.kind != Kind::RBAlgebra) throw FormatError("expected an rb-algebra file");
    return RBAlgebra{to_algebra(sf), named_operator(sf, op_name), *sf.weight};
}

HopfAlgebra to_hopf(const StructureFile& sf) {
    if (sf.kind != Kind::Hopf) throw FormatError("expected a hopf file");
    HopfAlgebra h;
    h.dim = sf.dim;
    h.basis_names = sf.basis_names;
    h.mult = sf.mult;
    h.unit = *sf.unit;
    h.delta = sf.delta;
    h.counit = *sf.counit;
    h.antipode = *sf.antipode;
    return h;
}

StructureFile from_coalgebra(const Coalgebra& c) {
    StructureFile sf;
    sf.kind = Kind::Coalgebra;
    sf.dim = c.dim;
    sf.basis_names = c.basis_names;
    sf.delta = c.delta;
    sf.counit = c.counit;
    return sf;
}

StructureFile from_rb_coalgebra(const RBCoalgebra& rb, const std::string& op_name) {
    StructureFile sf = from_coalgebra(rb.coalgebra);
    sf.kind = Kind::RBCoalgebra;
    sf.operators[op_name] = rb.op;
    sf.weight = rb.weight;
    return sf;
}

StructureFile from_algebra(const Algebra& a) {
    StructureFile sf;
    sf.kind = Kind::Algebra;
    sf.dim = a.dim;
    sf.basis_names = a.basis_names;
    sf.mult = a.mult;
    sf.unit = a.unit;
    return sf;
}

StructureFile from_rb_algebra(const RBAlgebra& rb, const std::string& op_name) {
    StructureFile sf = from_algebra(rb.algebra);
    sf.kind = Kind::RBAlgebra;
    sf.operators[op_name] = rb.op;
    sf.weight = rb.weight;
    return sf;
}

StructureFile from_hopf(const HopfAlgebra& h) {
    StructureFile sf;
    sf.kind = Kind::Hopf;
    sf.dim = h.dim;
    sf.basis_names = h.basis_names;
    sf.delta = h.delta;
    sf.counit = h.counit;
    sf.mult = h.mult;
    sf.unit = h.unit;
    sf.antipode = h.antipode;
    return sf;
}

}  // namespace rbcoalg
