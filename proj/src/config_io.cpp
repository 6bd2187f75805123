#include "blockcond/config_io.hpp"

#include <sstream>

#include <json.hpp>

#include "blockcond/arith.hpp"
#include "blockcond/errors.hpp"
#include "blockcond/twist_levels.hpp"

namespace blockcond {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(std::string msg, std::string path)
{
    throw validation_error(std::move(msg), std::move(path));
}

int64 require_int(ordered_json const & j, std::string const & key,
                  std::string const & path)
{
    if (!j.contains(key))
        bad("missing field '" + key + "'", path);
    if (!j[key].is_number_integer())
        bad("field '" + key + "' must be an integer", path + "/" + key);
    return j[key].get<int64>();
}

DirichletCharacter character_from_json(ordered_json const & j, std::string const & path)
{
    if (!j.is_object() || !j.contains("local") || !j["local"].is_array())
        bad("character must be an object with a 'local' array", path);
    std::vector<LocalCharacter> comps;
    std::size_t i = 0;
    for (auto const & c : j["local"]) {
        std::string const cpath = path + "/local/" + std::to_string(i++);
        int64 const p = require_int(c, "p", cpath);
        int64 const k = require_int(c, "k", cpath);
        if (!arith::is_prime(p))
            bad("'p' must be prime", cpath + "/p");
        if (k < 1 || arith::ipow(p, static_cast<int>(k)) > 100000)
            bad("'k' out of range", cpath + "/k");
        try {
            if (p == 2) {
                int64 const minus =
                    c.contains("minus_one_exp") ? require_int(c, "minus_one_exp", cpath)
                                                : 0;
                int64 const five =
                    c.contains("five_exp") ? require_int(c, "five_exp", cpath) : 0;
                if (minus < 0 || minus > 1)
                    bad("'minus_one_exp' must be 0 or 1", cpath + "/minus_one_exp");
                comps.push_back(
                    LocalCharacter::two(static_cast<int>(k), static_cast<int>(minus),
                                        five));
            } else {
                comps.push_back(LocalCharacter::odd_prime(
                    p, static_cast<int>(k), require_int(c, "gen_exp", cpath)));
            }
        } catch (validation_error const & e) {
            bad(e.what(), cpath);
        }
    }
    try {
        return DirichletCharacter::from_components(comps);
    } catch (validation_error const & e) {
        bad(e.what(), path + "/local");
    }
}

ordered_json character_to_json(DirichletCharacter const & chi)
{
    ordered_json local = ordered_json::array();
    for (auto const & c : chi.primitive().components()) {
        ordered_json o;
        o["p"] = c.prime();
        o["k"] = c.exponent();
        if (c.prime() == 2) {
            o["minus_one_exp"] = c.minus_one_exp();
            if (c.exponent() >= 3)
                o["five_exp"] = c.five_exp();
        } else {
            o["gen_exp"] = c.gen_exp();
        }
        local.push_back(o);
    }
    ordered_json out;
    out["local"] = local;
    return out;
}

ordered_json exponent_to_json(LevelExponent const & e)
{
    if (e.is_exact())
        return ordered_json(e.lo);
    ordered_json o;
    o["lo"] = e.lo;
    o["hi"] = e.hi;
    return o;
}

} // namespace

NewformConfig parse_config(std::string const & json_text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (nlohmann::json::parse_error const & e) {
        bad(std::string("malformed JSON: ") + e.what(), "");
    }
    if (!j.is_object())
        bad("config must be a JSON object", "");

    std::string const label =
        j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>()
                                                      : "";
    int64 const level = require_int(j, "level", "");
    int64 const dim_af = require_int(j, "dim_Af", "");
    int64 const deg_f = require_int(j, "deg_F", "");
    int64 const schur = require_int(j, "schur_index", "");

    DirichletCharacter nebentypus;
    if (j.contains("nebentypus"))
        nebentypus = character_from_json(j["nebentypus"], "/nebentypus");

    if (!j.contains("inner_twists") || !j["inner_twists"].is_array())
        bad("missing 'inner_twists' array", "");
    std::vector<GaloisElement> twists;
    std::size_t i = 0;
    for (auto const & t : j["inner_twists"]) {
        std::string const tpath = "/inner_twists/" + std::to_string(i++);
        GaloisElement e;
        e.label = t.contains("label") && t["label"].is_string()
                      ? t["label"].get<std::string>()
                      : "s" + std::to_string(i);
        if (!t.contains("chi"))
            bad("missing 'chi'", tpath);
        e.twist = character_from_json(t["chi"], tpath + "/chi");
        e.galois_exp = t.contains("galois_exp") ? require_int(t, "galois_exp", tpath)
                                                : 1;
        twists.push_back(std::move(e));
    }

    std::vector<LevelOverride> overrides;
    if (j.contains("level_overrides")) {
        if (!j["level_overrides"].is_array())
            bad("'level_overrides' must be an array", "/level_overrides");
        std::size_t k = 0;
        for (auto const & o : j["level_overrides"]) {
            std::string const opath = "/level_overrides/" + std::to_string(k++);
            LevelOverride ov;
            if (!o.contains("chi"))
                bad("missing 'chi'", opath);
            ov.chi = character_from_json(o["chi"], opath + "/chi");
            ov.q = require_int(o, "q", opath);
            ov.value = require_int(o, "v", opath);
            overrides.push_back(std::move(ov));
        }
    }

    return NewformConfig(label, level, nebentypus, dim_af, deg_f, schur,
                         std::move(twists), std::move(overrides));
}

std::string render_config(NewformConfig const & config)
{
    ordered_json j;
    j["label"] = config.label();
    j["level"] = config.level();
    j["nebentypus"] = character_to_json(config.nebentypus());
    j["dim_Af"] = config.dim_af();
    j["deg_F"] = config.deg_f();
    j["schur_index"] = config.schur_index();
    ordered_json twists = ordered_json::array();
    for (auto const & s : config.twists().elements()) {
        ordered_json t;
        t["label"] = s.label;
        t["chi"] = character_to_json(s.twist);
        t["galois_exp"] = s.galois_exp;
        twists.push_back(t);
    }
    j["inner_twists"] = twists;
    ordered_json ovs = ordered_json::array();
    for (auto const & o : config.overrides()) {
        ordered_json oj;
        oj["chi"] = character_to_json(o.chi);
        oj["q"] = o.q;
        oj["v"] = o.value;
        ovs.push_back(oj);
    }
    j["level_overrides"] = ovs;
    return j.dump(2) + "\n";
}

std::string render_character_json(DirichletCharacter const & chi)
{
    return character_to_json(chi).dump();
}

DirichletCharacter parse_character_json(std::string const & json_text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (nlohmann::json::parse_error const & e) {
        bad(std::string("malformed JSON: ") + e.what(), "");
    }
    return character_from_json(j, "");
}

std::string render_report_json(ConductorReport const & rep)
{
    ordered_json j;
    j["schema_version"] = 1;
    j["label"] = rep.label;
    j["level"] = rep.level;
    j["dim_B"] = rep.dim_b;
    j["degree"] = rep.degree;
    j["field_conductor"] = rep.field_conductor;

    ordered_json norms;
    ordered_json splits;
    for (auto const & p : rep.primes) {
        std::string const key = std::to_string(p.q);
        norms[key] = exponent_to_json(p.norm_valuation);
        ordered_json s;
        s["e"] = p.split.e;
        s["f"] = p.split.f;
        s["g"] = p.split.g;
        splits[key] = s;
    }
    j["norm_valuations"] = norms;
    j["splitting"] = splits;

    ordered_json ideal = ordered_json::array();
    for (auto const & f : rep.ideal) {
        ordered_json o;
        o["q"] = f.q;
        o["e"] = f.split.e;
        o["f"] = f.split.f;
        o["g"] = f.split.g;
        o["n"] = f.prime_exponent;
        if (f.generator_exponent)
            o["generator_exp"] = *f.generator_exponent;
        else
            o["generator_exp"] = nullptr;
        ideal.push_back(o);
    }
    j["ideal"] = ideal;

    switch (rep.verdict.status) {
        case Integrality::Integral: j["integral"] = true; break;
        case Integrality::NonIntegral: j["integral"] = false; break;
        case Integrality::Indeterminate: j["integral"] = nullptr; break;
    }
    if (rep.verdict.witness)
        j["witness"] = *rep.verdict.witness;
    if (rep.generator)
        j["generator"] = *rep.generator;
    else
        j["generator"] = nullptr;
    j["case"] = to_string(rep.classification.tag);
    j["p2_size"] = rep.classification.p2_size;
    if (rep.classification.residual) {
        ordered_json r;
        r["num"] = rep.classification.residual->num;
        r["den"] = rep.classification.residual->den;
        j["residual"] = r;
    } else {
        j["residual"] = nullptr;
    }
    if (!rep.verdict.unresolved.empty()) {
        ordered_json u = ordered_json::array();
        for (auto const & s : rep.verdict.unresolved) {
            ordered_json o;
            o["chi"] = character_to_json(s.chi);
            o["q"] = s.q;
            o["lo"] = s.bound.lo;
            o["hi"] = s.bound.hi;
            u.push_back(o);
        }
        j["needed_overrides"] = u;
    }

    ordered_json dec = ordered_json::array();
    for (auto const & f : rep.decomposition.factors) {
        ordered_json o;
        o["twist"] = character_to_json(f.representative);
        o["orbit_size"] = f.orbit_size;
        o["dim"] = f.dimension;
        o["multiplicity"] = f.multiplicity;
        dec.push_back(o);
    }
    j["decomposition"] = dec;
    return j.dump(2) + "\n";
}

std::string render_report_text(ConductorReport const & rep)
{
    std::ostringstream os;
    os << "label: " << (rep.label.empty() ? "(unnamed)" : rep.label) << "\n";
    os << "N = " << rep.level << ", dim B = " << rep.dim_b << ", [L:Q] = "
       << rep.degree << ", f_L = " << rep.field_conductor << "\n";
    os << "norm valuations:";
    for (auto const & p : rep.primes) {
        os << "  v_" << p.q << " = ";
        if (p.norm_valuation.is_exact())
            os << p.norm_valuation.lo;
        else
            os << "[" << p.norm_valuation.lo << ", " << p.norm_valuation.hi << "]";
    }
    os << "\n";
    os << "splitting:";
    for (auto const & p : rep.primes)
        os << "  q=" << p.q << ": (e,f,g)=(" << p.split.e << "," << p.split.f << ","
           << p.split.g << ")";
    os << "\n";

    switch (rep.verdict.status) {
        case Integrality::Integral:
            os << "N_L(B) = " << *rep.generator << " (integral)\n";
            break;
        case Integrality::NonIntegral: {
            os << "non-integral (witness q = " << *rep.verdict.witness << ")";
            if (rep.ideal.empty()) {
                os << "; ideal not factored (inexact exponents remain)\n";
                break;
            }
            os << "; ideal = ";
            bool first = true;
            for (auto const & f : rep.ideal) {
                if (!first)
                    os << " * ";
                first = false;
                os << "p_" << f.q;
                if (f.prime_exponent != 1)
                    os << "^" << f.prime_exponent;
            }
            os << " with";
            for (auto const & f : rep.ideal)
                os << " f(p_" << f.q << ")=" << f.split.f << " e(p_" << f.q
                   << ")=" << f.split.e;
            os << "\n";
            break;
        }
        case Integrality::Indeterminate:
            os << "indeterminate: v_" << *rep.verdict.witness
               << "(norm) is only bounded; supply level_overrides for:\n";
            for (auto const & s : rep.verdict.unresolved)
                os << "  chi = " << s.chi.str() << ", q = " << s.q
                   << "  (v currently in [" << s.bound.lo << ", " << s.bound.hi
                   << "])\n";
            break;
    }

    os << "case " << to_string(rep.classification.tag)
       << ", |P2| = " << rep.classification.p2_size;
    if (rep.classification.residual)
        os << ", residual " << rep.classification.residual->str();
    if (rep.classification.closed_form_holds)
        os << (*rep.classification.closed_form_holds ? " (closed form holds)"
                                                     : " (closed form FAILS)");
    os << "\n";
    return os.str();
}

std::string render_decomposition_text(OrbitDecomposition const & dec)
{
    std::ostringstream os;
    os << "Res_{L/Q}(B) ~ ";
    bool first = true;
    for (auto const & f : dec.factors) {
        if (!first)
            os << " x ";
        first = false;
        if (f.representative.is_trivial())
            os << "A_f";
        else
            os << "A_{f(x)" << f.representative.str() << "}";
        os << " (dim " << f.dimension << ")";
        if (f.multiplicity != 1)
            os << "^" << f.multiplicity;
    }
    os << "\n";
    for (auto const & f : dec.factors)
        os << "  twist " << f.representative.str() << ": orbit size " << f.orbit_size
           << ", dim " << f.dimension << ", multiplicity " << f.multiplicity << "\n";
    return os.str();
}

std::string render_level_table_text(NewformConfig const & config)
{
    LevelTable const table = LevelTable::build(config);
    CharacterGroup const & G = config.group();
    std::ostringstream os;
    os << "levels v_q(N_chi) for " << config.label() << " (N = " << config.level()
       << "):\n";
    for (std::size_t i = 0; i < G.size(); i++) {
        os << "  " << G.at(i).str() << ":";
        for (int64 const q : table.primes()) {
            LevelEntry const & e = table.at(i, q);
            os << "  q=" << q << ": ";
            if (e.exponent.is_exact())
                os << e.exponent.lo;
            else
                os << "[" << e.exponent.lo << "," << e.exponent.hi << "]";
            os << " (" << to_string(e.rule) << ")";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_level_table_json(NewformConfig const & config)
{
    LevelTable const table = LevelTable::build(config);
    CharacterGroup const & G = config.group();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < G.size(); i++) {
        ordered_json row;
        row["chi"] = character_to_json(G.at(i));
        ordered_json cells;
        for (int64 const q : table.primes()) {
            LevelEntry const & e = table.at(i, q);
            ordered_json cell;
            cell["v"] = exponent_to_json(e.exponent);
            cell["rule"] = to_string(e.rule);
            cells[std::to_string(q)] = cell;
        }
        row["levels"] = cells;
        rows.push_back(row);
    }
    ordered_json j;
    j["label"] = config.label();
    j["level"] = config.level();
    j["table"] = rows;
    return j.dump(2) + "\n";
}

} // namespace blockcond
