#include "irrt/report.hpp"

#include <sstream>

#include "irrt/graph6.hpp"

namespace irrt {

namespace {

Json sequences_json(const std::vector<DegreeSequence>& seqs) {
    Json out = Json::array();
    for (const auto& d : seqs) out.push_back(to_json(d));
    return out;
}

std::string compact_list(const std::vector<DegreeSequence>& seqs) {
    std::string out;
    for (const auto& d : seqs) {
        if (!out.empty()) out += " ";
        out += d.to_compact_string();
    }
    return out.empty() ? "-" : out;
}

Json vertex_list(VertexSet s) {
    Json out = Json::array();
    for (Vertex v = 0; s; ++v, s >>= 1) {
        if (s & 1) out.push_back(v);
    }
    return out;
}

// One element per line keeps reports diffable without spreading degree
// sequences over dozens of lines.
std::string array_per_line(const std::vector<Json>& items) {
    if (items.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += "  " + items[i].dump();
        out += i + 1 < items.size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

}  // namespace

Json to_json(const DegreeSequence& d) { return Json(d.values()); }

Json to_json(const VerificationReport& r) {
    Json ranks = Json::array();
    for (const auto& rank : r.ranks) {
        Json entry;
        entry["value"] = rank.value;
        entry["sequences"] = sequences_json(rank.sequences);
        entry["count"] = rank.graph_count;
        ranks.push_back(std::move(entry));
    }
    Json expected = Json::array();
    for (const auto& e : r.expected) {
        if (!e) {
            expected.push_back(nullptr);
            continue;
        }
        Json entry;
        entry["value"] = e->value;
        entry["sequences"] = sequences_json(e->sequences);
        expected.push_back(std::move(entry));
    }
    Json verdict = Json::array();
    for (auto v : r.verdict) verdict.push_back(to_string(v));

    Json out;
    out["family"] = to_string(r.family);
    out["n"] = r.n;
    out["ranks"] = std::move(ranks);
    out["expected"] = std::move(expected);
    out["verdict"] = std::move(verdict);
    return out;
}

Json to_json(const BoundsReport& r) {
    Json out;
    out["n"] = r.n;
    out["connected_covered"] = r.connected_covered;
    out["connected_checked"] = r.connected_checked;
    out["nonregular_checked"] = r.nonregular_checked;
    out["cubic_bound"] = cubic_bound_numerator(r.n);
    out["cubic_bound_violations"] = r.cubic_bound_violations;
    out["ratio_bound_violations"] = r.ratio_bound_violations;
    out["trees_checked"] = r.trees_checked;
    out["tree_bound"] = static_cast<long>(r.n - 1) * (r.n - 2);
    out["tree_max"] = r.tree_max;
    out["tree_max_count"] = r.tree_max_count;
    out["star_is_unique_max"] = r.star_is_unique_max;
    out["tree_bound_violations"] = r.tree_bound_violations;
    out["tree_ratio_violations"] = r.tree_ratio_violations;
    out["passed"] = r.passed();
    return out;
}

Json to_json(const ConjectureResult& r) {
    Json levels = Json::array();
    for (const auto& level : r.levels) {
        Json entry;
        entry["n"] = level.n;
        entry["bound"] = std::max(2L * level.n - 4, 0L);
        entry["min_nonregular"] = level.min_nonregular ? Json(*level.min_nonregular) : Json(nullptr);
        entry["minimizers"] = sequences_json(level.minimizers);
        entry["violations"] = level.violations;
        levels.push_back(std::move(entry));
    }
    Json out;
    out["mode"] = to_string(r.mode);
    out["levels"] = std::move(levels);
    if (r.first) {
        Json ce;
        ce["n"] = r.first->n;
        ce["sequence"] = to_json(r.first->sequence);
        ce["irr_t"] = r.first->value;
        ce["bound"] = r.first->bound;
        ce["graph6"] = r.first->witness ? Json(write_graph6(*r.first->witness)) : Json(nullptr);
        out["counterexample"] = std::move(ce);
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

Json to_json(const Graph& input, const Reduction& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json entry;
        entry["source"] = s.source;
        entry["target"] = s.target;
        entry["bridge"] = Json::array({s.moved.root_attachment, s.moved.attach});
        entry["moved"] = vertex_list(s.moved.vertices);
        entry["delta"] = s.delta;
        entry["predicted"] = s.predicted;
        steps.push_back(std::move(entry));
    }
    Json out;
    out["graph"] = write_graph6(input);
    out["irr_t"] = total_irregularity(input);
    out["steps"] = std::move(steps);
    out["result"] = write_graph6(r.result);
    out["result_irr_t"] = total_irregularity(r.result);
    out["result_sequence"] = to_json(degree_sequence(r.result));
    return out;
}

std::string format_json(const std::vector<VerificationReport>& reports) {
    std::vector<Json> items;
    for (const auto& r : reports) items.push_back(to_json(r));
    return array_per_line(items);
}

std::string format_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << to_string(r.family) << " n=" << r.n << (r.passed() ? " PASS" : " FAIL") << "\n";
        for (std::size_t i = 0; i < r.verdict.size(); ++i) {
            os << "  rank " << i + 1 << ": ";
            if (i < r.ranks.size()) {
                const auto& rank = r.ranks[i];
                os << "irr_t=" << rank.value << " " << compact_list(rank.sequences) << " graphs=" << rank.graph_count;
            } else {
                os << "missing";
            }
            if (r.expected[i]) {
                os << " | expected " << r.expected[i]->value << " " << compact_list(r.expected[i]->sequences);
            }
            os << " | " << to_string(r.verdict[i]) << "\n";
        }
    }
    return os.str();
}

std::string format_json(const std::vector<BoundsReport>& reports) {
    std::vector<Json> items;
    for (const auto& r : reports) items.push_back(to_json(r));
    return array_per_line(items);
}

std::string format_text(const std::vector<BoundsReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "n=" << r.n << (r.passed() ? " PASS" : " FAIL");
        if (r.connected_covered) {
            os << " connected=" << r.connected_checked << " cubic_violations=" << r.cubic_bound_violations
               << " nonregular=" << r.nonregular_checked << " ratio_violations=" << r.ratio_bound_violations;
        }
        os << " trees=" << r.trees_checked << " tree_max=" << r.tree_max << "/" << static_cast<long>(r.n - 1) * (r.n - 2)
           << " star_unique=" << (r.star_is_unique_max ? "yes" : "no")
           << " tree_violations=" << r.tree_bound_violations << " tree_ratio_violations=" << r.tree_ratio_violations
           << "\n";
    }
    return os.str();
}

std::string format_json(const ConjectureResult& r) { return to_json(r).dump() + "\n"; }

std::string format_text(const ConjectureResult& r) {
    std::ostringstream os;
    os << "mode " << to_string(r.mode) << "\n";
    for (const auto& level : r.levels) {
        os << "  n=" << level.n << " bound=" << std::max(2L * level.n - 4, 0L) << " min_nonregular=";
        if (level.min_nonregular) {
            os << *level.min_nonregular << " " << compact_list(level.minimizers);
        } else {
            os << "none";
        }
        os << " violations=" << level.violations << "\n";
    }
    if (r.first) {
        os << "counterexample: n=" << r.first->n << " " << r.first->sequence.to_string() << " irr_t=" << r.first->value
           << " < " << r.first->bound;
        if (r.first->witness) os << " graph6=" << write_graph6(*r.first->witness);
        os << "\n";
    } else {
        os << "no counterexample\n";
    }
    return os.str();
}

std::string format_text(const Graph& input, const Reduction& r) {
    std::ostringstream os;
    os << write_graph6(input) << " irr_t=" << total_irregularity(input) << "\n";
    for (const auto& s : r.steps) {
        os << "  move T@" << s.moved.attach << " size=" << s.moved.size() << " from " << s.source << " to "
           << s.target << ": delta=" << s.delta << " predicted=" << s.predicted << "\n";
    }
    os << "  -> " << write_graph6(r.result) << " irr_t=" << total_irregularity(r.result) << " "
       << degree_sequence(r.result).to_compact_string() << "\n";
    return os.str();
}

}  // namespace irrt
