#include "augres/json_io.hpp"

#include <fstream>
#include <sstream>

namespace augres {

std::string dump_stable(const Json& doc) { return doc.dump(2) + "\n"; }

Json braid_json(const BraidSpec& spec) {
    Json deleted = Json::array();
    for (const auto& [i, j] : spec.deleted) deleted.push_back(Json::array({i, j}));
    return Json{{"p", spec.p}, {"q", spec.q}, {"deleted", deleted},
                {"text", braid_to_text(spec)}};
}

Json dga_document(const BraidSpec& spec, const Dga& dga, bool d_squared_zero) {
    Census c = census_of(spec);
    Json gens = Json::array();
    std::size_t degree0 = 0;
    for (const auto& g : dga.generators) {
        if (g.degree() == 0) ++degree0;
        gens.push_back(Json{{"name", g.name()},
                            {"degree", g.degree()},
                            {"d", dga.d_of(g).str()}});
    }
    return Json{{"braid", braid_to_text(spec)},
                {"census", Json{{"b", c.num_b},
                                {"c", c.num_c},
                                {"s", c.num_s},
                                {"total", c.total()},
                                {"degree0", degree0}}},
                {"generators", gens},
                {"d_squared_zero", d_squared_zero}};
}

namespace {
Json disk_json(const ClosureDiagram& diagram, const Disk& dk) {
    Json boundary = Json::array();
    for (const DiskEvent& e : dk.boundary) {
        Json ev{{"at", diagram.vertices[e.vertex].gen.name()}};
        if (e.corner) {
            ev["type"] = "corner";
            ev["tick"] = e.quadrant_tick;
            ev["positive"] = e.positive;
        } else {
            ev["type"] = "pass";
            ev["axis"] = e.strand_axis;
        }
        boundary.push_back(ev);
    }
    return Json{{"word", dk.word.str()}, {"boundary", boundary}};
}
}  // namespace

Json disks_json(const ClosureDiagram& diagram, const GeneratorId& at,
                const DiskHarvest& harvest) {
    Json one = Json::array();
    for (const Disk& dk : harvest.one_positive)
        one.push_back(disk_json(diagram, dk));
    Json two = Json::object();
    for (const auto& [second, disks] : harvest.two_positive) {
        Json list = Json::array();
        for (const Disk& dk : disks) list.push_back(disk_json(diagram, dk));
        two[second.name()] = list;
    }
    return Json{{"at", at.name()}, {"one_positive", one}, {"two_positive", two}};
}

Json augs_document(const BraidSpec& spec, const Dga& dga,
                   const std::vector<Augmentation>& augs) {
    Json list = Json::array();
    const auto deg0 = dga.generators_of_degree(0);
    for (std::size_t k = 0; k < augs.size(); ++k) {
        Json values = Json::object();
        for (const auto& g : deg0) values[g.name()] = augs[k].value(g) ? 1 : 0;
        list.push_back(Json{{"index", k}, {"values", values}});
    }
    return Json{{"braid", braid_to_text(spec)},
                {"count", augs.size()},
                {"augmentations", list}};
}

Json lch_document(const BraidSpec& spec, const std::vector<LchPairEntry>& pairs) {
    Json list = Json::array();
    for (const auto& entry : pairs) {
        const HomComplex& cx = entry.data.complex;
        Json cocycles = Json::array();
        for (const auto& vec : entry.data.degree0_cocycles) {
            Json names = Json::array();
            for (std::size_t k = 0; k < vec.size(); ++k)
                if (vec[k]) names.push_back(cx.basis0[k].name());
            cocycles.push_back(names);
        }
        Json reps = Json::array();
        for (std::size_t idx : entry.data.degree1_representatives)
            reps.push_back(cx.basis1[idx].name());
        list.push_back(Json{{"eps1", entry.eps1},
                            {"eps2", entry.eps2},
                            {"dim0", entry.data.dim0},
                            {"dim1", entry.data.dim1},
                            {"degree0_cocycles", cocycles},
                            {"degree1_representatives", reps}});
    }
    return Json{{"braid", braid_to_text(spec)}, {"pairs", list}};
}

Json resolve_document(const ResolutionData& r, const std::string& engine_name) {
    auto table = [&](const std::map<GeneratorId, Poly>& m) {
        Json out = Json::object();
        for (const auto& [g, poly] : m) {
            Json words = Json::array();
            for (const Word& w : poly.monomials) words.push_back(w.str());
            out[g.name()] = words;
        }
        return out;
    };
    std::map<GeneratorId, Poly> psi_map;
    for (const auto& g : r.plus.generators) psi_map[g] = r.psi.of(g);
    return Json{{"plus", braid_to_text(r.plus_spec)},
                {"minus", braid_to_text(r.minus_spec)},
                {"resolved", r.resolved.name()},
                {"engine", engine_name},
                {"psi", table(psi_map)},
                {"psi1", table(r.psi1)},
                {"chain_map", true}};
}

Json mu_document(const BraidSpec& spec, const std::vector<std::size_t>& aug_indices,
                 const std::vector<GeneratorId>& inputs,
                 const std::set<GeneratorId>& result) {
    Json in = Json::array();
    for (const auto& g : inputs) in.push_back(g.name());
    Json idx = Json::array();
    for (std::size_t k : aug_indices) idx.push_back(k);
    Json out = Json::array();
    for (const auto& g : result) out.push_back(g.name());
    return Json{{"braid", braid_to_text(spec)},
                {"augmentations", idx},
                {"inputs", in},
                {"result", out}};
}

Json verify_document(const BraidSpec& spec, const GeneratorId& resolved,
                     std::size_t pairs,
                     const std::vector<VerifyAssertion>& assertions) {
    Json list = Json::array();
    for (const auto& a : assertions) {
        Json entry{{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}};
        Json ce = Json::array();
        for (const auto& s : a.counterexamples) ce.push_back(s);
        entry["counterexamples"] = ce;
        list.push_back(entry);
    }
    return Json{{"braid", braid_to_text(spec)},
                {"resolved", resolved.name()},
                {"pairs", pairs},
                {"assertions", list}};
}

Json verify_paper_document(const std::vector<FixtureResult>& fixtures) {
    Json list = Json::array();
    bool all = true;
    for (const auto& f : fixtures) {
        all = all && f.passed;
        Json details = Json::array();
        for (const auto& d : f.details) details.push_back(d);
        list.push_back(Json{{"id", f.id},
                            {"title", f.title},
                            {"passed", f.passed},
                            {"erratum", f.erratum},
                            {"verdict", f.verdict},
                            {"details", details}});
    }
    return Json{{"fixtures", list}, {"all_passed", all}};
}

Json sweep_document(int p_max, int q_max, const std::string& engine_name,
                    const std::vector<SweepRow>& rows) {
    Json list = Json::array();
    bool sound = true, thm = true;
    std::size_t cor_failures = 0;
    for (const auto& row : rows) {
        Json entry{{"braid", row.braid}, {"d_squared_zero", row.d_squared_zero}};
        sound = sound && row.d_squared_zero;
        if (row.resolved) entry["resolved"] = *row.resolved;
        if (row.chain_map) {
            entry["chain_map"] = *row.chain_map;
            sound = sound && *row.chain_map;
        }
        if (row.lemma31) {
            entry["lemma31"] = *row.lemma31;
            sound = sound && *row.lemma31;
        }
        if (row.pairs) entry["pairs"] = *row.pairs;
        if (row.thm32_failures) {
            entry["thm32_failures"] = *row.thm32_failures;
            thm = thm && *row.thm32_failures == 0;
        }
        if (row.cor33_failures) {
            entry["cor33_failures"] = *row.cor33_failures;
            cor_failures += *row.cor33_failures;
        }
        list.push_back(entry);
    }
    Json summary{{"rows", rows.size()}, {"all_sound", sound}};
    summary["thm32_all_pass"] = thm;
    summary["cor33_failures"] = cor_failures;
    return Json{{"p_max", p_max},
                {"q_max", q_max},
                {"engine", engine_name},
                {"instances", list},
                {"summary", summary}};
}

namespace {

std::string type_name(const Json& v) {
    if (v.is_object()) return "object";
    if (v.is_array()) return "array";
    if (v.is_string()) return "string";
    if (v.is_boolean()) return "boolean";
    if (v.is_number_integer() || v.is_number_unsigned()) return "integer";
    if (v.is_number()) return "number";
    return "null";
}

std::optional<std::string> validate_at(const Json& doc, const Json& schema,
                                       const std::string& path) {
    if (schema.contains("type")) {
        const std::string want = schema.at("type").get<std::string>();
        const std::string got = type_name(doc);
        const bool ok = want == got || (want == "number" && got == "integer");
        if (!ok) return path + ": expected " + want + ", got " + got;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema.at("enum"))
            if (v == doc) { found = true; break; }
        if (!found) return path + ": value not in enum";
    }
    if (doc.is_object()) {
        const Json props = schema.value("properties", Json::object());
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!doc.contains(key.get<std::string>()))
                    return path + ": missing required key '" +
                           key.get<std::string>() + "'";
        for (const auto& [key, value] : doc.items()) {
            if (props.contains(key)) {
                if (auto err = validate_at(value, props.at(key), path + "/" + key))
                    return err;
            } else if (schema.contains("additionalProperties")) {
                const Json& extra = schema.at("additionalProperties");
                if (extra.is_boolean()) {
                    if (!extra.get<bool>())
                        return path + ": unexpected key '" + key + "'";
                } else if (auto err =
                               validate_at(value, extra, path + "/" + key)) {
                    return err;
                }
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        const Json& item_schema = schema.at("items");
        for (std::size_t k = 0; k < doc.size(); ++k)
            if (auto err = validate_at(doc[k], item_schema,
                                       path + "/" + std::to_string(k)))
                return err;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_against_schema(const Json& doc,
                                                   const Json& schema) {
    return validate_at(doc, schema, "");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return doc;
}

}  // namespace augres
