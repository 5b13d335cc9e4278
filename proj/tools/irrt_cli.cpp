// irrt: total irregularity calculator and exhaustive verifier.
//
// Exit status: 0 success, 1 verification failure or counterexample,
// 2 usage or limit error, 3 I/O or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "irrt/error.hpp"
#include "irrt/graph6.hpp"
#include "irrt/report.hpp"

namespace {

using namespace irrt;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Graph> load_graphs(const std::string& path) {
    if (path == "-") return read_graph6(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_graph6(in);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) throw IoError("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void check_range(int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("need 1 <= n-min <= n-max, got " + std::to_string(n_min) + ".." +
                                    std::to_string(n_max));
    }
}

struct ComputeArgs {
    std::string in;
    std::string index = "both";
    std::string format = "csv";
};

int run_compute(const ComputeArgs& a) {
    const bool total = a.index != "edge";
    const bool edge = a.index != "total";
    const auto graphs = load_graphs(a.in);
    if (a.format == "csv") {
        std::cout << "graph" << (total ? ",irr_t" : "") << (edge ? ",irr" : "") << "\n";
    }
    for (const auto& g : graphs) {
        const std::string code = write_graph6(g);
        if (a.format == "csv") {
            std::cout << code;
            if (total) std::cout << "," << total_irregularity(g);
            if (edge) std::cout << "," << edge_irregularity(g);
            std::cout << "\n";
        } else {
            Json row;
            row["graph"] = code;
            if (total) row["irr_t"] = total_irregularity(g);
            if (edge) row["irr"] = edge_irregularity(g);
            std::cout << row.dump() << "\n";
        }
    }
    return 0;
}

struct EnumerateArgs {
    std::string family;
    int n = 0;
    std::optional<int> m;
    std::string out;
};

int run_enumerate(const EnumerateArgs& a, GraphCatalog& catalog) {
    const std::vector<Graph>* graphs = nullptr;
    if (a.family == "tree") {
        graphs = &catalog.trees(a.n);
    } else if (a.family == "unicyclic") {
        graphs = &catalog.connected(a.n, a.n);
    } else if (a.family == "bicyclic") {
        graphs = &catalog.connected(a.n, a.n + 1);
    } else if (a.m) {
        graphs = &catalog.connected(a.n, *a.m);
    } else {
        graphs = &catalog.connected_all(a.n);
    }
    Output out(a.out);
    for (const auto& g : *graphs) out.stream() << write_graph6(g) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string family;
    int n_min = 0;
    int n_max = 0;
    std::string format = "json";
};

int run_verify(const VerifyArgs& a, GraphCatalog& catalog) {
    check_range(a.n_min, a.n_max);
    std::vector<VerificationReport> reports;
    auto append = [&](std::vector<VerificationReport> more) {
        for (auto& r : more) reports.push_back(std::move(r));
    };
    auto single = [&](Family f) {
        for (int n = a.n_min; n <= a.n_max; ++n) reports.push_back(verify_family(catalog, f, n));
    };
    if (a.family == "tree") {
        append(verify_trees(catalog, a.n_min, a.n_max));
    } else if (a.family == "unicyclic") {
        append(verify_unicyclic(catalog, a.n_min, a.n_max));
    } else if (a.family == "bicyclic") {
        append(verify_bicyclic(catalog, a.n_min, a.n_max));
    } else if (a.family == "bplus") {
        single(Family::bicyclic_infinity_l1);
    } else if (a.family == "bplusplus") {
        single(Family::bicyclic_infinity_l2plus);
    } else if (a.family == "theta") {
        single(Family::bicyclic_theta);
    } else if (a.family == "connected") {
        single(Family::connected_all);
    } else {
        append(verify_trees(catalog, a.n_min, a.n_max));
        append(verify_unicyclic(catalog, a.n_min, a.n_max));
        append(verify_bicyclic(catalog, a.n_min, a.n_max));
    }
    std::cout << (a.format == "json" ? format_json(reports) : format_text(reports));
    for (const auto& r : reports) {
        if (!r.passed()) return kExitFailure;
    }
    return 0;
}

struct BoundsArgs {
    int n_min = 1;
    int n_max = 0;
    std::string format = "text";
};

int run_bounds(const BoundsArgs& a, GraphCatalog& catalog) {
    check_range(a.n_min, a.n_max);
    const auto reports = verify_bounds(catalog, a.n_min, a.n_max);
    std::cout << (a.format == "json" ? format_json(reports) : format_text(reports));
    for (const auto& r : reports) {
        if (!r.passed()) return kExitFailure;
    }
    return 0;
}

struct ConjectureArgs {
    int n_min = 1;
    int n_max = 0;
    std::string mode = "sequence";
    std::string format = "text";
};

int run_conjecture(const ConjectureArgs& a, GraphCatalog& catalog) {
    check_range(a.n_min, a.n_max);
    const auto mode = a.mode == "graph" ? SearchMode::graph : SearchMode::sequence;
    const auto result = check_conjecture(catalog, a.n_min, a.n_max, mode);
    std::cout << (a.format == "json" ? format_json(result) : format_text(result));
    return result.first ? kExitFailure : 0;
}

struct TransformArgs {
    std::string in;
    bool trace = false;
    std::string format = "text";
};

int run_transform(const TransformArgs& a) {
    for (const auto& g : load_graphs(a.in)) {
        const auto reduction = reduce_to_minimum(g);
        if (!a.trace) {
            std::cout << write_graph6(reduction.result) << "\n";
        } else if (a.format == "json") {
            std::cout << to_json(g, reduction).dump() << "\n";
        } else {
            std::cout << format_text(g, reduction);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total irregularity of graphs: computation, enumeration and exhaustive verification"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->check(CLI::Range(0u, 256u));

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Irregularity indices of every graph in a graph6 file");
    c->add_option("--in", compute.in, "graph6 file, '-' for stdin")->required();
    c->add_option("--index", compute.index)->check(CLI::IsMember({"total", "edge", "both"}));
    c->add_option("--format", compute.format)->check(CLI::IsMember({"csv", "json"}));

    EnumerateArgs enumerate;
    auto* e = app.add_subcommand("enumerate", "Write a non-isomorphic family as graph6 lines");
    e->add_option("--family", enumerate.family)
        ->required()
        ->check(CLI::IsMember({"tree", "unicyclic", "bicyclic", "connected"}));
    e->add_option("--n", enumerate.n)->required()->check(CLI::PositiveNumber);
    e->add_option("--m", enumerate.m, "Edge count (connected family only)")->check(CLI::NonNegativeNumber);
    e->add_option("--out", enumerate.out, "Output file (default stdout)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check extremal minima against the closed forms");
    v->add_option("--family", verify.family)
        ->required()
        ->check(CLI::IsMember({"tree", "unicyclic", "bicyclic", "bplus", "bplusplus", "theta", "connected", "all"}));
    v->add_option("--n-min", verify.n_min)->required();
    v->add_option("--n-max", verify.n_max)->required();
    v->add_option("--format", verify.format)->check(CLI::IsMember({"json", "text"}));

    BoundsArgs bounds;
    auto* b = app.add_subcommand("bounds", "Check the upper bounds and index relations exhaustively");
    b->add_option("--n-min", bounds.n_min);
    b->add_option("--n-max", bounds.n_max)->required();
    b->add_option("--format", bounds.format)->check(CLI::IsMember({"json", "text"}));

    ConjectureArgs conjecture;
    auto* q = app.add_subcommand("conjecture", "Search non-regular graphs for irr_t < 2n - 4");
    q->add_option("--n-min", conjecture.n_min);
    q->add_option("--n-max", conjecture.n_max)->required();
    q->add_option("--mode", conjecture.mode)->check(CLI::IsMember({"sequence", "graph"}));
    q->add_option("--format", conjecture.format)->check(CLI::IsMember({"json", "text"}));

    TransformArgs transform;
    auto* t = app.add_subcommand("transform", "Reduce graphs by repeated branch transformations");
    t->add_option("--in", transform.in, "graph6 file, '-' for stdin")->required();
    t->add_flag("--trace", transform.trace, "Print every step with its measured and predicted delta");
    t->add_option("--format", transform.format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitUsage;
    }

    GraphCatalog catalog(threads);
    try {
        if (c->parsed()) return run_compute(compute);
        if (e->parsed()) return run_enumerate(enumerate, catalog);
        if (v->parsed()) return run_verify(verify, catalog);
        if (b->parsed()) return run_bounds(bounds, catalog);
        if (q->parsed()) return run_conjecture(conjecture, catalog);
        if (t->parsed()) return run_transform(transform);
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIo;
    } catch (const Graph6Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIo;
    } catch (const LimitError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
