#include "avdeq/json_io.hpp"

namespace avdeq::io {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    fail("BadInput", "expected an integer or decimal string");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail("BadInput", "expected an integer, decimal string, or fraction string");
}

json rat_to_json(const Rat& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return to_fraction_string(q);
}

}  // namespace

json to_json(const IntMat& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols; ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const RatMat& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat rat_mat_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        fail("BadInput", "matrix must be an array of arrays");
    RatMat m(static_cast<long>(j.size()), static_cast<long>(j[0].size()));
    for (long i = 0; i < m.rows; ++i) {
        if (static_cast<long>(j[i].size()) != m.cols) fail("BadInput", "ragged matrix rows");
        for (long c = 0; c < m.cols; ++c) m(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

IntMat int_mat_from_json(const json& j) {
    RatMat m = rat_mat_from_json(j);
    if (!is_integral(m)) fail("BadInput", "matrix must be integral");
    return to_int(m);
}

json to_json(const Poly& p) {
    json arr = json::array();
    for (const Rat& c : p.c) arr.push_back(rat_to_json(c));
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) fail("BadInput", "polynomial must be a coefficient array");
    std::vector<Rat> c;
    for (const auto& v : j) c.push_back(rat_from_json(v));
    return Poly(std::move(c));
}

json to_json(const VarietyModel& m) {
    json j;
    switch (m.kind) {
        case ModelKind::EllipticPower:
            j["kind"] = "elliptic-power";
            j["n"] = m.dim;
            break;
        case ModelKind::PolarizedScalar:
            j["kind"] = "polarized-scalar";
            j["N"] = m.level;
            break;
        case ModelKind::LatticeGeneric:
            j["kind"] = "lattice";
            j["ample"] = to_json(m.ample);
            break;
    }
    return j;
}

VarietyModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) fail("BadInput", "model needs a 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "elliptic-power") {
        if (!j.contains("n")) fail("BadInput", "elliptic-power model needs 'n'");
        return elliptic_power(j["n"].get<long>());
    }
    if (kind == "polarized-scalar") {
        if (!j.contains("N")) fail("BadInput", "polarized-scalar model needs 'N'");
        return polarized_scalar(j["N"].get<long>());
    }
    if (kind == "lattice") {
        if (!j.contains("ample")) fail("BadInput", "lattice model needs 'ample'");
        return lattice_generic(int_mat_from_json(j["ample"]));
    }
    fail("BadInput", "unknown model kind '" + kind + "'");
}

json to_json(const DoubledMap& f) {
    json j;
    j["model"] = to_json(f.source);
    if (!(f.source == f.target)) j["target_model"] = to_json(f.target);
    j["blocks"] = {{"x", to_json(f.x)}, {"y", to_json(f.y)}, {"z", to_json(f.z)},
                   {"w", to_json(f.w)}};
    return j;
}

namespace {

// A block may be a scalar (scalar models), an n x n condensed block (E^n
// model), or the full 2n x 2n homology block.
RatMat block_from_json(const json& j, const VarietyModel& m, char slot) {
    const long r = m.rank();
    RatMat id = to_rat(IntMat::identity(r));
    if (j.is_number_integer() || j.is_string()) {
        Rat t = rat_from_json(j);
        switch (slot) {
            case 'x':
            case 'w': return t * id;
            case 'y': return t * to_rat(m.y_base());
            default: return t * to_rat(m.ample);
        }
    }
    RatMat raw = rat_mat_from_json(j);
    if (raw.rows == r && raw.cols == r) return raw;
    if (m.kind == ModelKind::EllipticPower && raw.rows == m.dim && raw.cols == m.dim) {
        IntMat cond = to_int(raw);
        IntMat jm = symplectic_block();
        switch (slot) {
            case 'x':
            case 'w': return to_rat(kron(cond, IntMat::identity(2)));
            case 'y': return to_rat(kron(cond, -jm));
            default: return to_rat(kron(cond, jm));
        }
    }
    fail("BadInput", std::string("block '") + slot + "' has incompatible dimensions");
}

}  // namespace

DoubledMap doubled_map_from_json(const json& j, const VarietyModel* default_model) {
    if (!j.is_object() || !j.contains("blocks")) fail("BadInput", "doubled map needs 'blocks'");
    VarietyModel src;
    if (j.contains("model"))
        src = model_from_json(j["model"]);
    else if (default_model)
        src = *default_model;
    else
        fail("BadInput", "no model given (inline or --model)");
    VarietyModel dst = j.contains("target_model") ? model_from_json(j["target_model"]) : src;
    const json& b = j["blocks"];
    for (const char* k : {"x", "y", "z", "w"})
        if (!b.contains(k)) fail("BadInput", std::string("missing block '") + k + "'");
    return DoubledMap(src, dst, block_from_json(b["x"], src, 'x'),
                      block_from_json(b["y"], src, 'y'), block_from_json(b["z"], src, 'z'),
                      block_from_json(b["w"], src, 'w'));
}

json to_json(const TorsionPoint& p) {
    json arr = json::array();
    for (const Rat& q : p.coords) arr.push_back(to_fraction_string(q));
    return arr;
}

TorsionPoint point_from_json(const json& j) {
    if (!j.is_array()) fail("BadInput", "point must be an array of fractions");
    std::vector<Rat> c;
    for (const auto& v : j) c.push_back(rat_from_json(v));
    return TorsionPoint::reduced(std::move(c));
}

json to_json(const Gamma0Element& g) {
    json j;
    j["level"] = g.level;
    j["matrix"] = json::array({json::array({g.a.get_str(), g.b.get_str()}),
                               json::array({g.c.get_str(), g.d.get_str()})});
    return j;
}

json to_json(const UtildeElement& u) {
    json j;
    j["g"] = to_json(u.g.f);
    j["shift"] = u.shift.get_str();
    return j;
}

UtildeElement utilde_from_json(const json& j, const VarietyModel* default_model) {
    if (!j.is_object() || !j.contains("g")) fail("BadInput", "utilde element needs 'g'");
    UElement g = UElement::checked(doubled_map_from_json(j["g"], default_model));
    Int shift = j.contains("shift") ? int_from_json(j["shift"]) : Int(0);
    return UtildeElement{std::move(g), std::move(shift)};
}

json to_json(const AutoeqElement& a) {
    json j;
    j["shift"] = a.shift.get_str();
    j["point"] = to_json(a.point);
    j["g"] = to_json(a.g.f);
    return j;
}

AutoeqElement autoeq_from_json(const json& j, const VarietyModel* default_model) {
    if (!j.is_object() || !j.contains("g")) fail("BadInput", "autoeq element needs 'g'");
    UElement g = UElement::checked(doubled_map_from_json(j["g"], default_model));
    Int shift = j.contains("shift") ? int_from_json(j["shift"]) : Int(0);
    TorsionPoint p = j.contains("point") ? point_from_json(j["point"])
                                         : TorsionPoint::zero(2 * g.model().rank());
    if (p.size() != 2 * g.model().rank()) fail("BadInput", "point has wrong ambient rank");
    return AutoeqElement{std::move(shift), std::move(p), std::move(g)};
}

json to_json(const SlopeClass& mu) {
    json j;
    j["model"] = to_json(mu.model);
    j["L"] = to_json(mu.class_mat);
    j["l"] = mu.denom.get_str();
    return j;
}

SlopeClass slope_from_json(const json& j, const VarietyModel* default_model) {
    if (!j.is_object() || !j.contains("L")) fail("BadInput", "slope needs 'L'");
    VarietyModel m;
    if (j.contains("model"))
        m = model_from_json(j["model"]);
    else if (default_model)
        m = *default_model;
    else
        fail("BadInput", "no model given (inline or --model)");
    Int l = j.contains("l") ? int_from_json(j["l"]) : Int(1);
    return make_slope(std::move(m), int_mat_from_json(j["L"]), std::move(l));
}

json to_json(const PartnerReport& r) {
    json j;
    j["N"] = r.n_value;
    j["count"] = r.count;
    j["divisors"] = r.divisors;
    json ko = json::array();
    for (const auto& [k, order] : r.kernel_orders)
        ko.push_back(json{{"k", k}, {"order", order.get_str()}});
    j["kernel_orders"] = std::move(ko);
    return j;
}

}  // namespace avdeq::io
