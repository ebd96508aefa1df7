#include "wreathchar/report_io.hpp"

#include <sstream>

namespace wreathchar {

namespace {

nlohmann::json constituents_json(const Decomposition& d) {
    // Induced constituents first, linear extensions after.
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [id, mult] : d.constituents) {
        if (const auto* ind = std::get_if<InducedChar>(&id)) {
            arr.push_back({{"kind", "induced"},
                           {"rep", ind->rep.tuple().str()},
                           {"multiplicity", mult},
                           {"degree", degree_of(id, d.p)}});
        }
    }
    for (const auto& [id, mult] : d.constituents) {
        if (const auto* lin = std::get_if<LinearExtChar>(&id)) {
            arr.push_back({{"kind", "linear"},
                           {"c", lin->c},
                           {"e", lin->e},
                           {"multiplicity", mult},
                           {"degree", 1}});
        }
    }
    return arr;
}

nlohmann::json config_json(const SearchConfig& cfg) {
    return nlohmann::json{
        {"p", cfg.p.value()},
        {"mode", cfg.mode == SearchMode::Exhaustive ? "exhaustive" : "sample"},
        {"n_pairs", cfg.n_pairs},
        {"seed", cfg.seed},
        {"shard", {{"index", cfg.shard.index}, {"total", cfg.shard.total}}},
        {"symmetry",
         {{"shift", cfg.symmetry.shift}, {"scale", cfg.symmetry.scale}, {"swap", cfg.symmetry.swap}}},
        {"worker_count", cfg.worker_count},
    };
}

SearchConfig config_from_json(const nlohmann::json& j) {
    SearchConfig cfg{Prime(j.at("p").get<int>())};
    cfg.mode = j.at("mode").get<std::string>() == "sample" ? SearchMode::Sample
                                                           : SearchMode::Exhaustive;
    cfg.n_pairs = j.at("n_pairs").get<long long>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.shard.index = j.at("shard").at("index").get<int>();
    cfg.shard.total = j.at("shard").at("total").get<int>();
    cfg.symmetry.shift = j.at("symmetry").at("shift").get<bool>();
    cfg.symmetry.scale = j.at("symmetry").at("scale").get<bool>();
    cfg.symmetry.swap = j.at("symmetry").at("swap").get<bool>();
    cfg.worker_count = j.at("worker_count").get<int>();
    return cfg;
}

// (p+1)/2: integral for odd p, exact binary fraction for p = 2.
nlohmann::json half_bound_json(int p) {
    if (p % 2 == 1) return nlohmann::json((p + 1) / 2);
    return nlohmann::json((p + 1) / 2.0);
}

} // namespace

nlohmann::json to_json(const Decomposition& d) {
    return nlohmann::json{
        {"p", d.p},
        {"constituents", constituents_json(d)},
        {"distinct_count", d.distinct_count},
        {"degree_total", d.degree_total},
    };
}

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json sums = nlohmann::json::array();
    for (const Tuple& t : r.walkthrough_sums) sums.push_back(t.str());
    nlohmann::json classes = nlohmann::json::array();
    for (const OrbitRep& rep : r.sum_classes) classes.push_back(rep.tuple().str());
    return nlohmann::json{
        {"p", r.p},
        {"phi", r.phi.str()},
        {"psi", r.psi.str()},
        {"phi_irreducible", r.phi_irreducible},
        {"psi_irreducible", r.psi_irreducible},
        {"phi_faithful", r.phi_faithful},
        {"psi_faithful", r.psi_faithful},
        {"walkthrough_sums", std::move(sums)},
        {"sum_classes", std::move(classes)},
        {"pre_collapse_distinct_tuples", r.pre_collapse_distinct_tuples},
        {"collision",
         {{"first_index", r.collision.first},
          {"second_index", r.collision.second},
          {"class", r.sum_classes.empty()
                        ? ""
                        : r.sum_classes[static_cast<size_t>(r.collision.first)].tuple().str()}}},
        {"distinct_constituents", r.distinct_constituents},
        {"expected_distinct", r.p - 1},
        {"passed", r.passed},
        {"decomposition", to_json(r.decomposition)},
    };
}

nlohmann::json to_json(const SearchReport& r) {
    const int p = r.config.p.value();
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [count, freq] : r.histogram) {
        hist.push_back({{"count", count}, {"frequency", freq}});
    }
    nlohmann::json wits = nlohmann::json::array();
    for (const auto& [count, w] : r.witnesses) {
        wits.push_back({{"count", count}, {"phi", w.phi.str()}, {"psi", w.psi.str()}});
    }
    nlohmann::json gaps = nlohmann::json::array();
    for (int c : r.gap_counts) gaps.push_back(c);
    return nlohmann::json{
        {"config", config_json(r.config)},
        {"rng", r.rng_name},
        {"histogram", std::move(hist)},
        {"witnesses", std::move(wits)},
        {"bound_check",
         {{"threshold", half_bound_json(p)},
          {"min_count_above_one", r.bound_check.min_count_above_one},
          {"satisfied", r.bound_check.satisfied}}},
        {"gap_check",
         {{"interval_open", {half_bound_json(p), p - 1}}, {"observed", std::move(gaps)}}},
        {"pairs_examined", r.pairs_examined},
        {"merged_parts", r.merged_parts},
        {"timing",
         {{"wall_time_seconds", r.wall_time_seconds}, {"workers_resolved", r.workers_resolved}}},
    };
}

SearchReport search_report_from_json(const nlohmann::json& j) {
    SearchReport r(config_from_json(j.at("config")));
    r.rng_name = j.at("rng").get<std::string>();
    for (const auto& entry : j.at("histogram")) {
        r.histogram[entry.at("count").get<int>()] = entry.at("frequency").get<long long>();
    }
    for (const auto& entry : j.at("witnesses")) {
        r.witnesses.emplace(entry.at("count").get<int>(),
                            PairWitness{Tuple::parse(entry.at("phi").get<std::string>()),
                                        Tuple::parse(entry.at("psi").get<std::string>())});
    }
    r.bound_check.min_count_above_one =
        j.at("bound_check").at("min_count_above_one").get<int>();
    r.bound_check.satisfied = j.at("bound_check").at("satisfied").get<bool>();
    for (const auto& c : j.at("gap_check").at("observed")) {
        r.gap_counts.push_back(c.get<int>());
    }
    r.pairs_examined = j.at("pairs_examined").get<long long>();
    r.merged_parts = j.at("merged_parts").get<int>();
    if (j.contains("timing")) {
        r.wall_time_seconds = j.at("timing").at("wall_time_seconds").get<double>();
        r.workers_resolved = j.at("timing").at("workers_resolved").get<int>();
    }
    return r;
}

std::string to_text(const Decomposition& d) {
    std::ostringstream out;
    out << "p: " << d.p << "\n";
    out << "constituents (" << d.distinct_count << " distinct):\n";
    for (const auto& [id, mult] : d.constituents) {
        if (!std::holds_alternative<InducedChar>(id)) continue;
        out << "  " << character_str(id) << "  multiplicity=" << mult
            << "  degree=" << degree_of(id, d.p) << "\n";
    }
    for (const auto& [id, mult] : d.constituents) {
        if (!std::holds_alternative<LinearExtChar>(id)) continue;
        out << "  " << character_str(id) << "  multiplicity=" << mult << "  degree=1\n";
    }
    out << "degree_total: " << d.degree_total << " (p^2 = " << d.p * d.p << ")\n";
    return out.str();
}

std::string to_text(const TheoremReport& r) {
    std::ostringstream out;
    out << "p: " << r.p << "\n";
    out << "phi: " << r.phi.str() << "  (irreducible=" << (r.phi_irreducible ? "yes" : "no")
        << ", faithful=" << (r.phi_faithful ? "yes" : "no") << ")\n";
    out << "psi: " << r.psi.str() << "  (irreducible=" << (r.psi_irreducible ? "yes" : "no")
        << ", faithful=" << (r.psi_faithful ? "yes" : "no") << ")\n";
    out << "representative sums (one per shift of phi):\n";
    for (size_t i = 0; i < r.walkthrough_sums.size(); ++i) {
        out << "  [" << i << "] " << r.walkthrough_sums[i].str() << "  -> class "
            << r.sum_classes[i].tuple().str() << "\n";
    }
    out << "pre-collapse distinct tuples: " << r.pre_collapse_distinct_tuples << "\n";
    out << "collision: indices " << r.collision.first << " and " << r.collision.second
        << " share class "
        << r.sum_classes[static_cast<size_t>(r.collision.first)].tuple().str() << "\n";
    out << "distinct constituents: " << r.distinct_constituents << " (expected " << r.p - 1
        << ")\n";
    out << "result: " << (r.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string to_text(const SearchReport& r) {
    const int p = r.config.p.value();
    std::ostringstream out;
    out << "p: " << p << "\n";
    out << "mode: " << (r.config.mode == SearchMode::Exhaustive ? "exhaustive" : "sample");
    if (r.config.mode == SearchMode::Sample) {
        out << " (n_pairs=" << r.config.n_pairs << ", seed=" << r.config.seed
            << ", rng=" << r.rng_name << ")";
    }
    out << "\n";
    if (r.config.shard.total > 1) {
        out << "shard: " << r.config.shard.index << "/" << r.config.shard.total << "\n";
    }
    out << "pairs examined: " << r.pairs_examined << "\n";
    out << "histogram (distinct constituents -> pairs):\n";
    for (const auto& [count, freq] : r.histogram) {
        out << "  " << count << " -> " << freq << "\n";
    }
    out << "witnesses:\n";
    for (const auto& [count, w] : r.witnesses) {
        out << "  " << count << ": phi=" << w.phi.str() << " psi=" << w.psi.str() << "\n";
    }
    out << "bound check (every count > 1 is >= (p+1)/2 = ";
    if ((p + 1) % 2 == 0) {
        out << (p + 1) / 2;
    } else {
        out << (p + 1) / 2.0;
    }
    out << "): " << (r.bound_check.satisfied ? "satisfied" : "VIOLATED")
        << " (min count above one: " << r.bound_check.min_count_above_one << ")\n";
    out << "gap check (counts strictly between (p+1)/2 and p-1): ";
    if (r.gap_counts.empty()) {
        out << "none observed\n";
    } else {
        out << "OBSERVED:";
        for (int c : r.gap_counts) out << " " << c;
        out << "\n";
    }
    out << "wall time: " << r.wall_time_seconds << " s\n";
    return out.str();
}

std::string histogram_csv(const SearchReport& r) {
    std::string out = "count,frequency\n";
    for (const auto& [count, freq] : r.histogram) {
        out += std::to_string(count) + "," + std::to_string(freq) + "\n";
    }
    return out;
}

} // namespace wreathchar
