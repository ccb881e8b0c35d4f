#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cograph/chain.hpp"
#include "cograph/cotree.hpp"
#include "cograph/errors.hpp"
#include "cograph/family.hpp"
#include "cograph/graph_io.hpp"
#include "cograph/oracle.hpp"
#include "cograph/sibling.hpp"

namespace cograph::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json read_json(const std::string& path) {
    try {
        return nlohmann::json::parse(read_input(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": invalid JSON: " + e.what());
    }
}

Graph read_graph(const std::string& path) { return parse_graph(read_input(path)); }

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "json") out << graph_to_json(g).dump() << '\n';
    else out << format_edge_list(g);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

struct Options {
    std::string input, second, format, order, op, f_bits, emit = "json";
    bool terms = false, verify = false, random_block = false;
    int n = 2, anchors = 4, cap = 2, extension = 10, random_graphs = 0, max_vertices = 7;
    std::uint64_t budget = kDefaultEmbedBudget;
    std::uint64_t seed = 20260101;
};

QuasiOrder order_for(const Options& o, const std::vector<RegularChain>& chains) {
    if (!o.order.empty()) return quasi_order_from_json(read_json(o.order));
    int size = 1;
    for (const auto& c : chains)
        for (int a : c.letters()) size = std::max(size, a + 1);
    return QuasiOrder::antichain(size);
}

int cmd_recognize(const Options& o, std::ostream& out) {
    const Graph g = read_graph(o.input);
    if (auto p4 = find_induced_p4(g)) {
        out << "not a cograph\nwitness " << join(*p4) << '\n';
        return kNegative;
    }
    out << "cograph\n";
    return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = read_graph(o.input);
    try {
        const ValuedMeetTree t = decomposition_tree(g);
        if (o.format == "dot") out << tree_to_dot(t);
        else out << tree_to_json(t).dump(2) << '\n';
        return kOk;
    } catch (const NotACograph& e) {
        err << "not a cograph\nwitness " << join(e.witness()) << '\n';
        return kNegative;
    }
}

int cmd_rebuild(const Options& o, std::ostream& out) {
    const ValuedMeetTree t = tree_from_json(read_json(o.input));
    const TreeValidation v = validate(t);
    if (!v.ok()) throw FormatError("invalid tree (" + v.violation + "): " + v.detail);
    write_graph(out, graph_of(t), o.format);
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const CographTerm t = normalize(term_from_json(read_json(o.input)));
    const SiblingVerdict v = classify_siblings(t);
    if (v.one) out << "One\n";
    else out << "Infinite: " << to_string(*v.reason) << '\n';
    out << "classes: " << v.classes.to_string() << '\n';
    return kOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
    bool result = false;
    if (o.terms) {
        result = term_embeds(term_from_json(read_json(o.input)), term_from_json(read_json(o.second)), o.budget);
    } else {
        result = embeds(read_graph(o.input), read_graph(o.second), o.budget);
    }
    out << (result ? "embeds" : "does not embed") << '\n';
    return result ? kOk : kNegative;
}

int cmd_chain(const Options& o, std::ostream& out) {
    std::vector<RegularChain> chains{chain_from_json(read_json(o.input))};
    if (!o.second.empty()) chains.push_back(chain_from_json(read_json(o.second)));
    const QuasiOrder q = order_for(o, chains);
    const RegularChain& c = chains.front();
    auto need_second = [&] {
        if (chains.size() < 2) throw FormatError("chain " + o.op + " needs two chain files");
        return chains[1];
    };
    auto verdict = [&](bool b, const char* yes, const char* no) {
        out << (b ? yes : no) << '\n';
        return b ? kOk : kNegative;
    };
    if (o.op == "embed") return verdict(q_embedding(c, need_second(), q), "embeds", "does not embed");
    if (o.op == "sum") {
        out << chain_to_json(sum(c, need_second())).dump() << '\n';
        return kOk;
    }
    if (o.op == "product") {
        out << chain_to_json(ordinal_product(o.n, c)).dump() << '\n';
        return kOk;
    }
    if (o.op == "indecomposable") return verdict(is_indecomposable(c, q), "indecomposable", "decomposable");
    if (o.op == "left-indecomposable")
        return verdict(is_left_indecomposable(c, q), "left-indecomposable", "not left-indecomposable");
    if (o.op == "decompose") {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& p : indecomposable_decomposition(c, q)) parts.push_back(chain_to_json(p));
        out << parts.dump() << '\n';
        return kOk;
    }
    if (o.op == "left-segment") {
        out << chain_to_json(left_indec_initial_segment(c, q)).dump() << '\n';
        return kOk;
    }
    if (o.op == "classes") {
        out << nlohmann::json(equivalence_classes(c, q)).dump() << '\n';
        return kOk;
    }
    throw FormatError("unknown chain operation \"" + o.op + "\"");
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
    FBits f;
    for (char ch : o.f_bits) {
        if (ch != '0' && ch != '1') throw FormatError("--f takes a 0/1 word");
        f.push_back(ch - '0');
    }
    std::mt19937_64 rng(o.seed);
    const auto block = o.random_block ? random_block(rng) : default_block();
    const ReducedChainPrefix base = repeated_prefix(block, o.anchors);
    const ReducedChainPrefix built = build_Cf(base, f);
    if (o.emit == "dot") out << prefix_to_dot(built);
    else if (o.emit == "graph") out << format_edge_list(materialize(built, o.cap));
    else out << prefix_to_json(built).dump(2) << '\n';
    if (o.verify) {
        const FBits decoded = decode_f(built);
        std::string word;
        for (int b : decoded) word += static_cast<char>('0' + b);
        const bool sibling = prefix_sibling_check(base, built, o.cap, o.extension);
        err << "decoded f: " << (word.empty() ? "(empty)" : word) << '\n'
            << "embeds into extended base: " << (sibling ? "yes" : "no") << '\n';
        return sibling && decoded == f ? kOk : kNegative;
    }
    return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    std::vector<std::pair<Graph, std::string>> instances;
    if (!o.input.empty()) instances.emplace_back(read_graph(o.input), o.input);
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.random_graphs; ++i) {
        const int n = std::uniform_int_distribution<int>(1, o.max_vertices)(rng);
        Graph g(n);
        std::bernoulli_distribution coin(0.5);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        instances.emplace_back(std::move(g), "random-" + std::to_string(i));
    }
    if (instances.empty()) throw FormatError("oracle needs an input graph or --random N");
    bool all = true;
    for (const auto& [g, name] : instances)
        for (const auto& r : oracle::cross_check_graph(g, name)) {
            out << r.to_json().dump() << '\n';
            all = all && r.agree;
        }
    return all ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cograph decomposition and sibling tools", "cograph"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "Seed for randomized commands")->capture_default_str();

    auto* recognize = app.add_subcommand("recognize", "Test for an induced P4");
    recognize->add_option("input", o.input, "Graph file (edge list or JSON, - for stdin)")->required();

    auto* decompose = app.add_subcommand("decompose", "Decomposition tree of a cograph");
    decompose->add_option("input", o.input, "Graph file")->required();
    decompose->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* rebuild = app.add_subcommand("rebuild", "Graph of a valued tree");
    rebuild->add_option("input", o.input, "Tree JSON file")->required();
    rebuild->add_option("--format", o.format, "edgelist or json")->check(CLI::IsMember({"edgelist", "json"}));

    auto* classify = app.add_subcommand("classify", "Sibling verdict for a term");
    classify->add_option("input", o.input, "Term JSON file")->required();

    auto* embed = app.add_subcommand("embed", "Induced embedding test");
    embed->add_option("pattern", o.input, "Pattern file")->required();
    embed->add_option("target", o.second, "Target file")->required();
    embed->add_flag("--terms", o.terms, "Inputs are term JSON files");
    embed->add_option("--budget", o.budget, "Search node budget")->capture_default_str();

    auto* chain = app.add_subcommand("chain", "Labelled chain operations");
    chain->add_option("op", o.op, "embed, sum, product, indecomposable, left-indecomposable, decompose, left-segment, classes")
        ->required();
    chain->add_option("chain", o.input, "Chain JSON file")->required();
    chain->add_option("second", o.second, "Second chain for embed and sum");
    chain->add_option("--order", o.order, "Quasi-order JSON (default: antichain on the labels)");
    chain->add_option("--n", o.n, "Factor for product")->check(CLI::PositiveNumber);

    auto* family = app.add_subcommand("family", "Build C_f from a periodic prefix");
    family->add_option("--anchors", o.anchors, "Number of anchor blocks")->check(CLI::PositiveNumber)->capture_default_str();
    family->add_option("--f", o.f_bits, "Bits of f, e.g. 1011");
    family->add_option("--emit", o.emit, "json, dot or graph")->check(CLI::IsMember({"json", "dot", "graph"}))->capture_default_str();
    family->add_option("--cap", o.cap, "Stand-in size for omega")->check(CLI::PositiveNumber)->capture_default_str();
    family->add_option("--extension", o.extension, "Extra base blocks for --verify")->check(CLI::NonNegativeNumber)->capture_default_str();
    family->add_flag("--random-block", o.random_block, "Random block from --seed instead of the default");
    family->add_flag("--verify", o.verify, "Decode f and run the embedding check");

    auto* oracle = app.add_subcommand("oracle", "Cross-check against brute force, JSON lines");
    oracle->add_option("input", o.input, "Graph file");
    oracle->add_option("--random", o.random_graphs, "Also check N random graphs")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-n", o.max_vertices, "Vertex bound for random graphs")->check(CLI::Range(1, 7));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(o, out);
        if (decompose->parsed()) return cmd_decompose(o, out, err);
        if (rebuild->parsed()) return cmd_rebuild(o, out);
        if (classify->parsed()) return cmd_classify(o, out);
        if (embed->parsed()) return cmd_embed(o, out);
        if (chain->parsed()) return cmd_chain(o, out);
        if (family->parsed()) return cmd_family(o, out, err);
        if (oracle->parsed()) return cmd_oracle(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace cograph::cli
