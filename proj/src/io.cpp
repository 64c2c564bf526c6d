#include "hyperlab/io.hpp"

#include <fstream>
#include <stdexcept>

namespace hyperlab::io {

namespace {

json points_array(const Subset& s) {
    json arr = json::array();
    for (int p : s.points()) arr.push_back(p);
    return arr;
}

Mask mask_from_array(const json& arr, int ground_size, bool allow_empty) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of point indices");
    Mask m = 0;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw std::invalid_argument("point index must be an integer");
        long long p = v.get<long long>();
        if (p < 0 || p >= ground_size) throw std::invalid_argument("point index out of range");
        m |= Mask{1} << p;
    }
    if (!allow_empty && m == 0) throw std::invalid_argument("empty set not allowed here");
    return m;
}

}  // namespace

json space_to_json(const FiniteTopology& t) {
    json doc;
    doc["points"] = t.ground_size();
    json opens = json::array();
    for (Mask m : t.opens().masks()) opens.push_back(points_array(Subset(t.ground_size(), m)));
    doc["opens"] = std::move(opens);
    return doc;
}

FiniteTopology space_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("opens"))
        throw std::invalid_argument("space document needs 'points' and 'opens'");
    if (!doc["points"].is_number_integer())
        throw std::invalid_argument("'points' must be an integer");
    const int g = doc["points"].get<int>();
    check_ground(g);
    if (!doc["opens"].is_array()) throw std::invalid_argument("'opens' must be an array");
    std::vector<Mask> masks;
    for (const auto& arr : doc["opens"]) masks.push_back(mask_from_array(arr, g, true));
    return FiniteTopology::from_opens(g, SetFamily(g, std::move(masks)));
}

json family_to_json(const SetFamily& f) {
    json doc;
    json sets = json::array();
    for (Mask m : f.masks()) sets.push_back(points_array(Subset(f.ground_size(), m)));
    doc["sets"] = std::move(sets);
    return doc;
}

SetFamily family_from_json(const json& doc, int ground_size) {
    if (!doc.is_object() || !doc.contains("sets"))
        throw std::invalid_argument("family document needs 'sets'");
    if (!doc["sets"].is_array()) throw std::invalid_argument("'sets' must be an array");
    std::vector<Mask> masks;
    for (const auto& arr : doc["sets"]) masks.push_back(mask_from_array(arr, ground_size, false));
    return SetFamily(ground_size, std::move(masks));
}

json subset_to_json(const Subset& s) { return points_array(s); }

Subset subset_from_json(const json& doc, int ground_size) {
    return Subset(ground_size, mask_from_array(doc, ground_size, true));
}

json witness_to_json(const props::Witness& w) {
    json doc;
    doc["space"] = space_to_json(w.space);
    doc["family"] = w.family ? family_to_json(*w.family) : json(nullptr);
    if (w.hypertopology) {
        json hyper;
        hyper["points"] = w.hypertopology->ground_size();
        json opens = json::array();
        for (Mask m : w.hypertopology->opens().masks())
            opens.push_back(points_array(Subset(w.hypertopology->ground_size(), m)));
        hyper["opens"] = std::move(opens);
        doc["hypertopology"] = std::move(hyper);
    } else {
        doc["hypertopology"] = nullptr;
    }
    doc["points"] = w.points;
    doc["note"] = w.note;
    return doc;
}

json report_to_json(const props::CheckReport& rep) {
    json doc;
    doc["prop"] = rep.prop_id;
    doc["instances_checked"] = rep.instances_checked;
    doc["hypotheses_met"] = rep.hypotheses_met;
    doc["passed"] = rep.passed;
    doc["failed"] = rep.failed;
    doc["verdict"] = props::verdict_name(rep.verdict);
    doc["seed"] = rep.seed;
    doc["witness"] = rep.witness ? witness_to_json(*rep.witness) : json(nullptr);
    // timing deliberately left out: reports must be byte-identical across runs
    return doc;
}

props::SearchConfig search_config_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("search config must be an object");
    props::SearchConfig cfg;
    if (doc.contains("min_points")) cfg.min_points = doc["min_points"].get<int>();
    if (doc.contains("max_points")) cfg.max_points = doc["max_points"].get<int>();
    if (cfg.min_points < 1 || cfg.max_points > 4 || cfg.min_points > cfg.max_points)
        throw std::invalid_argument("search points must sit within 1..4");

    const json& fam = doc.contains("family_policy") ? doc["family_policy"] : json(nullptr);
    if (fam.is_object()) {
        std::string kind = fam.value("kind", "closed-only");
        if (kind == "closed-only") cfg.family_policy = props::FamilyPolicy::closed_only;
        else if (kind == "all-natural") cfg.family_policy = props::FamilyPolicy::all_natural;
        else if (kind == "fin-n") {
            cfg.family_policy = props::FamilyPolicy::fin_n;
            cfg.fin_arity = fam.value("n", 2);
            if (cfg.fin_arity < 1) throw std::invalid_argument("fin-n arity must be >= 1");
        } else if (kind == "explicit") {
            cfg.family_policy = props::FamilyPolicy::explicit_list;
            if (!fam.contains("ground") || !fam.contains("families"))
                throw std::invalid_argument("explicit family policy needs 'ground' and 'families'");
            int g = fam["ground"].get<int>();
            for (const auto& f : fam["families"]) cfg.explicit_families.push_back(family_from_json(f, g));
        } else {
            throw std::invalid_argument("unknown family policy: " + kind);
        }
    }

    const json& hyp = doc.contains("hypertopology_policy") ? doc["hypertopology_policy"] : json(nullptr);
    if (hyp.is_object()) {
        std::string kind = hyp.value("kind", "vietoris");
        if (kind == "vietoris") cfg.hyper_policy = props::HyperPolicy::vietoris;
        else if (kind == "upper") cfg.hyper_policy = props::HyperPolicy::upper;
        else if (kind == "lower") cfg.hyper_policy = props::HyperPolicy::lower;
        else if (kind == "random-subbase") {
            cfg.hyper_policy = props::HyperPolicy::random_subbase;
            if (hyp.contains("seed")) cfg.seed = hyp["seed"].get<std::uint64_t>();
            cfg.random_count = hyp.value("count", 32);
            if (cfg.random_count < 1) throw std::invalid_argument("random count must be >= 1");
        } else if (kind == "enumerate-all") {
            cfg.hyper_policy = props::HyperPolicy::enumerate_all;
        } else {
            throw std::invalid_argument("unknown hypertopology policy: " + kind);
        }
    }

    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (!doc.contains("implication") || !doc["implication"].is_object())
        throw std::invalid_argument("search config needs an 'implication' object");
    const json& imp = doc["implication"];
    if (imp.contains("hypotheses"))
        for (const auto& h : imp["hypotheses"]) cfg.hypotheses.push_back(h.get<std::string>());
    if (!imp.contains("conclusion"))
        throw std::invalid_argument("implication needs a 'conclusion'");
    cfg.conclusion = imp["conclusion"].get<std::string>();
    return cfg;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json doc;
    in >> doc;
    return doc;
}

void save_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace hyperlab::io
