// hyperlab: finite-model computations on hyperspace topologies.
//
// Subcommands:
//   classify   compute induced families and classification flags for one
//              (space, family, hypertopology) triple
//   check      run one statement's exhaustive driver, or reproduce a built-in
//              example (exit 0 pass, 1 fail, 2 error)
//   search     look for a counterexample to an implication described in a
//              JSON config (exit 1 when a witness is found)
//   enumerate  write all topologies on n points
//   reproduce  recompute a built-in example against embedded expected values
//
// HYPERLAB_SEED overrides the search seed.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperlab/io.hpp"

namespace {

using hyperlab::io::json;

int exit_code_for(hyperlab::props::Verdict v) {
    return v == hyperlab::props::Verdict::fail ? 1 : 0;
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        hyperlab::io::save_file(out_path, doc);
}

hyperlab::HyperSpace build_hyper(const hyperlab::FiniteTopology& t, const hyperlab::SetFamily& m,
                                 const std::string& spec) {
    using namespace hyperlab;
    if (spec == "vietoris") return vietoris(t, m);
    if (spec == "upper") return upper_vietoris(t, m);
    if (spec == "lower") return lower_vietoris(t, m);
    const std::string prefix = "subbase:";
    if (spec.rfind(prefix, 0) == 0) {
        json doc = io::load_file(spec.substr(prefix.size()));
        if (!doc.is_object() || !doc.contains("sets"))
            throw std::invalid_argument("subbase document needs 'sets'");
        // each entry is a list of members of the family
        std::vector<Mask> sub;
        for (const auto& entry : doc["sets"]) {
            Mask idx = 0;
            for (const auto& member : entry) {
                Subset s = io::subset_from_json(member, t.ground_size());
                int i = m.index_of(s.bits());
                if (i < 0)
                    throw std::invalid_argument("subbase member " + s.to_string() +
                                                " is not in the family");
                idx |= Mask{1} << i;
            }
            sub.push_back(idx);
        }
        const int h = static_cast<int>(m.size());
        return HyperSpace(t, m, from_subbase(h, SetFamily(h, std::move(sub))));
    }
    throw std::invalid_argument("unknown hypertopology spec: " + spec);
}

json family_list_json(const hyperlab::SetFamily& f) {
    return hyperlab::io::family_to_json(f)["sets"];
}

int cmd_classify(const std::string& space_path, const std::string& family_path,
                 const std::string& hyper_spec, const std::string& out_path) {
    using namespace hyperlab;
    FiniteTopology t = io::space_from_json(io::load_file(space_path));
    SetFamily m = io::family_from_json(io::load_file(family_path), t.ground_size());
    HyperSpace h = build_hyper(t, m, hyper_spec);

    DerivedFamilies d = derive(h);
    bool vt = is_vietoris_type(h);

    json doc;
    doc["space"] = io::space_to_json(t);
    doc["family"] = io::family_to_json(m);
    doc["hypertopology"] = hyper_spec;
    json opens = json::array();
    for (Mask o : h.topo().opens().masks())
        opens.push_back(family_list_json(h.decode(Subset(h.topo().ground_size(), o))));
    doc["hyper_opens"] = std::move(opens);
    json cls;
    cls["tychonoff_type"] = is_tychonoff_type(h);
    cls["lower_vietoris_type"] = is_lower_vietoris_type(h);
    cls["vietoris_type"] = vt;
    cls["strong_vietoris_type"] = vt ? json(is_strong_vietoris_type(h)) : json(nullptr);
    cls["natural_family"] = is_natural_family(t.ground_size(), m);
    doc["classification"] = std::move(cls);
    json induced;
    induced["b_family"] = family_list_json(d.b_family);
    induced["p_family"] = family_list_json(d.p_family);
    induced["t_plus"] = family_list_json(d.t_plus.opens());
    induced["t_minus"] = family_list_json(d.t_minus.opens());
    induced["t_v"] = family_list_json(d.t_v.opens());
    doc["induced"] = std::move(induced);
    json sep;
    sep["t0"] = is_t0(h.topo());
    sep["t1"] = is_t1(h.topo());
    sep["t2"] = is_t2(h.topo());
    sep["regular"] = is_regular(h.topo());
    sep["compact"] = is_compact(h.topo());
    doc["hyper_separation"] = std::move(sep);
    emit(doc, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model engine for hyperspace topologies"};
    app.require_subcommand(1);

    std::string space_path, family_path, hyper_spec = "vietoris", out_path;
    auto* classify = app.add_subcommand("classify", "classify one hypertopology");
    classify->add_option("--space", space_path, "space document (JSON)")->required();
    classify->add_option("--family", family_path, "family document (JSON)")->required();
    classify->add_option("--hyper", hyper_spec, "vietoris|upper|lower|subbase:<file>");
    classify->add_option("--out", out_path, "write the report here instead of stdout");

    std::string prop_id, check_out;
    hyperlab::props::DriverOptions opt;
    std::string mode_name = "parallel";
    auto* check = app.add_subcommand("check", "run one statement's exhaustive driver");
    check->add_option("prop", prop_id, "statement id, e.g. prop-T1 or example-novt")->required();
    check->add_option("--max-points", opt.max_points, "largest base-space size (default 3)");
    check->add_option("--min-points", opt.min_points, "smallest base-space size (default 1)");
    check->add_option("--n", opt.jn_arity, "tuple arity for prop-2.7.20a (default: 1 and 2)");
    check->add_option("--seed", opt.seed, "seed for random-subbase candidates");
    check->add_option("--random-count", opt.random_hyper_count,
                      "random hypertopologies per (space, family)");
    check->add_option("--mode", mode_name, "serial|parallel (default parallel)");
    check->add_option("--out", check_out, "write the JSON report here");

    std::string config_path, search_out;
    auto* search = app.add_subcommand("search", "search for a counterexample");
    search->add_option("--config", config_path, "search config (JSON)")->required();
    search->add_option("--out", search_out, "write the JSON report here");

    int enum_n = 3;
    std::string enum_out;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate topologies on n points");
    enumerate->add_option("--n", enum_n, "points (1..4)")->required();
    enumerate->add_option("--out", enum_out, "write the topologies here");

    std::string example_id, repro_out;
    auto* repro = app.add_subcommand("reproduce", "recompute a built-in example");
    repro->add_option("example", example_id, "novt|novt1|novietoris")->required();
    repro->add_option("--out", repro_out, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(space_path, family_path, hyper_spec, out_path);

        if (check->parsed()) {
            opt.mode = hyperlab::par::parse_mode(mode_name);
            auto rep = hyperlab::props::run_prop(prop_id, opt);
            emit(hyperlab::io::report_to_json(rep), check_out);
            std::cerr << rep.prop_id << ": " << hyperlab::props::verdict_name(rep.verdict)
                      << " (" << rep.elapsed_seconds << " s)\n";
            return exit_code_for(rep.verdict);
        }

        if (search->parsed()) {
            auto cfg = hyperlab::io::search_config_from_json(hyperlab::io::load_file(config_path));
            if (const char* env_seed = std::getenv("HYPERLAB_SEED"))
                cfg.seed = std::stoull(env_seed);
            auto rep = hyperlab::props::search_counterexamples(cfg);
            emit(hyperlab::io::report_to_json(rep), search_out);
            std::cerr << "seed " << cfg.seed << ": "
                      << (rep.witness ? "counterexample found" : "no counterexample within bounds")
                      << "\n";
            return rep.witness ? 1 : 0;
        }

        if (enumerate->parsed()) {
            auto topologies = hyperlab::enumerate_topologies(enum_n);
            json doc;
            doc["count"] = topologies.size();
            json list = json::array();
            for (const auto& t : topologies) list.push_back(hyperlab::io::space_to_json(t));
            doc["topologies"] = std::move(list);
            emit(doc, enum_out);
            std::cout << topologies.size() << "\n";
            return 0;
        }

        if (repro->parsed()) {
            auto rep = hyperlab::props::reproduce(example_id);
            emit(hyperlab::io::report_to_json(rep), repro_out);
            return exit_code_for(rep.verdict);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
