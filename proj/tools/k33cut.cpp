#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "k33cut/classify.hpp"
#include "k33cut/generate.hpp"
#include "k33cut/maxcut.hpp"
#include "k33cut/polytope.hpp"
#include "k33cut/spqr.hpp"

using namespace k33cut;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kUnsupported = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load(const std::string& path, std::ostream& err) {
    auto parsed = parse_graph(slurp(path));
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    return std::move(parsed.graph);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_system(const InequalitySystem& sys) {
    std::ostringstream os;
    os << "dim " << sys.dim() << " count " << sys.size() << '\n';
    for (const auto& q : sys) os << format_inequality(q) << '\n';
    return os.str();
}

InequalitySystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    int dim = -1;
    std::size_t count = 0;
    if (!(in >> word) || word != "dim" || !(in >> dim) || !(in >> word) || word != "count" || !(in >> count) || dim < 1)
        throw InputError("malformed facet header");
    InequalitySystem sys(dim);
    std::string line;
    std::getline(in, line);
    std::size_t read = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<Coeff> c(static_cast<std::size_t>(dim));
        for (auto& x : c)
            if (!(ls >> x)) throw InputError("malformed facet line: " + line);
        Coeff rhs;
        if (!(ls >> word) || word != "<=" || !(ls >> rhs)) throw InputError("malformed facet line: " + line);
        try {
            sys.add(LinearInequality::make(std::move(c), rhs));
        } catch (const GraphError& e) {
            throw InputError(e.what());
        }
        ++read;
    }
    if (read != count) throw InputError("facet count does not match header");
    return sys;
}

std::string side_line(const Cut& c) {
    std::ostringstream os;
    os << "side";
    for (std::size_t v = 0; v < c.side.size(); ++v)
        if (c.side[v]) os << ' ' << v + 1;
    return os.str();
}

int cmd_maxcut(const std::string& path, bool brute, bool witness) {
    const Graph g = load(path, std::cerr);
    const auto r = brute ? maxcut_bruteforce(g) : maxcut(g);
    std::cout << "value " << r.value << '\n';
    if (witness) std::cout << side_line(r.cut) << '\n';
    return kOk;
}

int cmd_decompose(const std::string& path) {
    const Graph g = load(path, std::cerr);
    const auto d = k33_decompose(g);
    std::cout << "k33_minor_free " << yes_no(d.is_k33_minor_free) << " maximal " << yes_no(d.is_maximal) << '\n';
    const auto& bd = d.block_decomposition;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        std::cout << "block " << b << " nodes=";
        for (std::size_t k = 0; k < bd.blocks[b].size(); ++k) std::cout << (k ? "," : "") << bd.blocks[b][k] + 1;
        std::cout << '\n';
        if (d.trees[b]) std::cout << format_tree(*d.trees[b]);
    }
    for (const auto& c : d.components)
        std::cout << "component block=" << c.block << " node=" << c.tree_node << " class=" << class_name(c.cls) << '\n';
    return d.is_k33_minor_free ? kOk : kUnsupported;
}

int cmd_facets(const std::string& path) {
    const Graph g = load(path, std::cerr);
    std::cout << format_system(facet_description(g));
    return kOk;
}

int cmd_classify(const std::string& path) {
    const Graph g = load(path, std::cerr);
    const auto r = classify(g);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << "simple " << yes_no(r.simple) << '\n'
              << "simplicial " << yes_no(r.simplicial) << '\n'
              << "reason simple: " << r.simple_reason << '\n'
              << "reason simplicial: " << r.simplicial_reason << '\n';
    return kOk;
}

struct VerifyOutcome {
    std::string text;
    int code = kOk;
};

VerifyOutcome verify_one(const std::string& path, const std::string& facet_path) {
    VerifyOutcome out;
    std::ostringstream os;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
        os << path << ": " << name << ' ' << (ok ? "pass" : "FAIL") << (detail.empty() ? "" : " ") << detail << '\n';
        if (!ok) out.code = std::max(out.code, static_cast<int>(kMismatch));
    };
    auto skip = [&](const char* name, const std::string& why) { os << path << ": " << name << " skip " << why << '\n'; };
    try {
        std::ostringstream warn;
        const Graph g = load(path, warn);
        os << warn.str();
        const bool small = g.node_count() <= kMaxEnumerationNodes;

        try {
            const auto fast = maxcut(g);
            if (small) {
                const auto brute = maxcut_bruteforce(g);
                report("maxcut", fast.value == brute.value && fast.cut.weight(g) == fast.value,
                       std::to_string(fast.value) + " vs " + std::to_string(brute.value));
            } else {
                skip("maxcut", "too many nodes for brute force");
            }
        } catch (const UnsupportedGraph& e) {
            skip("maxcut", e.what());
        }

        const HullLimits limits;
        std::optional<std::vector<Cut>> cuts;
        if (small) cuts = enumerate_cuts(g);
        const bool hull_ok = cuts && g.edge_count() >= 1 && g.edge_count() <= limits.max_dim && cuts->size() <= limits.max_vertices;
        std::optional<InequalitySystem> described;
        try {
            described = facet_description(g);
        } catch (const UnsupportedGraph& e) {
            skip("facets", e.what());
        }
        if (described) {
            if (hull_ok) {
                const auto hull = brute_hull(*cuts, g.edge_count(), limits);
                report("facets", hull.facets == *described, "count " + std::to_string(described->size()));
            } else {
                skip("facets", "hull oracle size guard");
            }
        }
        if (!facet_path.empty()) {
            const auto given = parse_system(slurp(facet_path));
            const bool same = described && given == *described;
            report("facet-file", same, "count " + std::to_string(given.size()));
        }

        const Graph core = drop_isolated_nodes(g);
        if (hull_ok && core.edge_count() > 0) {
            const auto c = classify(g);
            const auto b = brute_classify(g, limits);
            report("classify", c.simple == b.simple && c.simplicial == b.simplicial,
                   std::string("simple ") + yes_no(b.simple) + " simplicial " + yes_no(b.simplicial));
        } else {
            skip("classify", "hull oracle size guard");
        }
    } catch (const std::exception& e) {
        os << path << ": error " << e.what() << '\n';
        out.code = kInputError;
    }
    out.text = os.str();
    return out;
}

int cmd_verify(const std::vector<std::string>& paths, const std::string& facet_path) {
    std::vector<std::future<VerifyOutcome>> jobs;
    for (const auto& p : paths) jobs.push_back(std::async(std::launch::async, verify_one, p, facet_path));
    int code = kOk;
    for (auto& j : jobs) {
        const auto r = j.get();
        std::cout << r.text;
        code = std::max(code, r.code);
    }
    return code;
}

int cmd_gen(std::uint64_t seed, int max_nodes, const std::string& out_path) {
    const auto spec = spec_for_seed(seed, max_nodes);
    const Graph g = gen_k33free(spec);
    const std::string text = format_graph(g, {"k33cut gen --seed " + std::to_string(seed)});
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write " + out_path);
        out << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-cut and cut polytope tools for K33-minor-free graphs"};
    app.require_subcommand(1);

    std::string file, facet_file, out_path;
    std::vector<std::string> files;
    bool brute = false, witness = false;
    std::uint64_t seed = 1;
    int max_nodes = 16;

    auto* mc = app.add_subcommand("maxcut", "maximum cut value");
    mc->add_option("file", file, "graph file")->required();
    mc->add_flag("--brute", brute, "exhaustive search");
    mc->add_flag("--witness", witness, "print the side containing the cut");

    auto* dc = app.add_subcommand("decompose", "blocks and SPR-trees");
    dc->add_option("file", file, "graph file")->required();

    auto* fc = app.add_subcommand("facets", "facet description of the cut polytope");
    fc->add_option("file", file, "graph file")->required();

    auto* cl = app.add_subcommand("classify", "simple / simplicial cut polytope");
    cl->add_option("file", file, "graph file")->required();

    auto* vf = app.add_subcommand("verify", "compare solvers against brute-force oracles");
    vf->add_option("files", files, "graph files")->required();
    vf->add_option("--facets", facet_file, "facet file to compare against");

    auto* gn = app.add_subcommand("gen", "random K33-minor-free instance");
    gn->add_option("--seed", seed, "generator seed");
    gn->add_option("--max-nodes", max_nodes, "node budget")->check(CLI::Range(4, 64));
    gn->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (*mc) return cmd_maxcut(file, brute, witness);
        if (*dc) return cmd_decompose(file);
        if (*fc) return cmd_facets(file);
        if (*cl) return cmd_classify(file);
        if (*vf) return cmd_verify(files, facet_file);
        if (*gn) return cmd_gen(seed, max_nodes, out_path);
    } catch (const UnsupportedGraph& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
