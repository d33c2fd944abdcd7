// Command-line front end for the treecycle library: censuses of tree-edge
// products, poset counts, and realisability checks, with JSON or CSV output.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "treecycle/census.hpp"
#include "treecycle/json_io.hpp"
#include "treecycle/numbers.hpp"
#include "treecycle/perm.hpp"
#include "treecycle/poset.hpp"
#include "treecycle/realisation.hpp"
#include "treecycle/traversal.hpp"
#include "treecycle/tree.hpp"

namespace tc = treecycle;
using tc::BigInt;
using tc::Json;

namespace {

struct Options {
    std::string format = "json";
    int cap = 0;       // 0 = per-command default (TREECYCLE_CAP overrides)
    int threads = 1;
    long long seed = 0;
    std::string out;

    std::string edges;   // inline tree: "1-2,2-3,..."
    std::string tree;    // tree JSON file
    std::string prufer;  // "a,b,c"
    int n = 0;

    std::string cycle;     // "1,2,4,6,5,3" (orbit)
    std::string ordering;  // "1-2,2-3,..."
    std::string signs;     // "1,-1,..."
    std::string poset;     // poset JSON file
    std::string name;      // sequence name
    int upto = 0;
    int length = 0;
    bool verify = false;
    bool diameter = false;
};

int effective_cap(const Options& opt, int fallback) {
    if (opt.cap > 0) return opt.cap;
    if (const char* env = std::getenv("TREECYCLE_CAP")) return std::atoi(env);
    return fallback;
}

std::vector<int> parse_int_list(const std::string& text, char sep = ',') {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw tc::InputParseError("bad integer '" + item + "'");
        }
        if (used != item.size()) throw tc::InputParseError("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<tc::Edge> parse_edge_list(const std::string& text) {
    std::vector<tc::Edge> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
            throw tc::InputParseError("bad edge '" + item + "', expected i-j");
        auto ends = parse_int_list(item, '-');
        if (ends.size() != 2) throw tc::InputParseError("bad edge '" + item + "'");
        out.push_back(tc::make_edge(ends[0], ends[1]));
    }
    return out;
}

tc::LabelledTree input_tree(const Options& opt) {
    if (!opt.tree.empty()) {
        std::ifstream in(opt.tree);
        if (!in) throw tc::InputParseError("cannot open " + opt.tree);
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& ex) {
            throw tc::InputParseError(std::string("json: ") + ex.what());
        }
        return tc::tree_from_json(j);
    }
    if (!opt.prufer.empty()) {
        tc::PruferCode code;
        code.seq = parse_int_list(opt.prufer);
        code.n = opt.n ? opt.n : static_cast<int>(code.seq.size()) + 2;
        return tc::prufer_decode(code);
    }
    if (!opt.edges.empty()) {
        auto edges = parse_edge_list(opt.edges);
        int n = static_cast<int>(edges.size()) + 1;
        for (const auto& [a, b] : edges) n = std::max(n, b);
        return tc::LabelledTree(opt.n ? opt.n : n, std::move(edges));
    }
    throw tc::UsageError("no tree given; use --edges, --tree, or --prufer");
}

tc::CycleForm input_cycle(const Options& opt, int n) {
    if (opt.cycle.empty()) throw tc::UsageError("no cycle given; use --cycle a,b,c,...");
    auto orbit = parse_int_list(opt.cycle);
    if (static_cast<int>(orbit.size()) != n)
        throw tc::InputParseError("cycle must list all " + std::to_string(n) + " points");
    auto c = tc::make_n_cycle(std::move(orbit));
    tc::from_cycle(c);  // validate
    return c;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opt.out);
    if (!out) throw tc::UsageError("cannot open " + opt.out + " for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump()); }

std::string join_bigints(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

std::string profile_field(const tc::FrequencyProfile& profile) {
    std::string s;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(profile[i].first) + "-" + std::to_string(profile[i].second);
    }
    return s;
}

Json cycles_json(const std::vector<tc::CycleForm>& cycles) {
    Json arr = Json::array();
    for (const auto& c : cycles) arr.push_back(c.cycles[0]);
    return arr;
}

// ---------------------------------------------------------------------------

int cmd_census(const Options& opt) {
    auto t = input_tree(opt);
    auto census = tc::cycle_census(t, effective_cap(opt, 9), opt.threads);
    std::optional<int> diam;
    if (opt.diameter) diam = tc::cayley_diameter(t);
    BigInt claimed = tc::count_cycles_formula(t);
    BigInt computed = census.counts.size();
    if (opt.format == "csv") {
        emit(opt, tc::profile_to_csv(census.profile()));
    } else {
        Json j = tc::census_to_json(census, diam);
        j["claimed_num_cycles"] = tc::bigint_to_json(claimed);
        emit_json(opt, j);
    }
    return claimed == computed ? 0 : 2;
}

int cmd_count(const Options& opt) {
    auto t = input_tree(opt);
    BigInt c = tc::count_cycles_formula(t);
    if (opt.format == "csv")
        emit(opt, c.str());
    else
        emit_json(opt, Json{{"n", t.n()}, {"count", tc::bigint_to_json(c)}});
    return 0;
}

int cmd_mult1(const Options& opt) {
    auto t = input_tree(opt);
    BigInt claimed = tc::multiplicity_one_count(t);
    std::optional<BigInt> computed;
    if (opt.verify) {
        auto census = tc::cycle_census(t, effective_cap(opt, 9), opt.threads);
        long long ones = 0;
        for (const auto& [cycle, mult] : census.counts)
            if (mult == 1) ++ones;
        computed = ones;
    }
    if (opt.format == "csv") {
        emit(opt, claimed.str());
    } else {
        Json j{{"n", t.n()}, {"claimed", tc::bigint_to_json(claimed)}};
        j["computed"] = computed ? tc::bigint_to_json(*computed) : Json();
        j["ok"] = !computed || *computed == claimed;
        emit_json(opt, j);
    }
    return (!computed || *computed == claimed) ? 0 : 2;
}

int cmd_caterpillar(const Options& opt) {
    auto t = input_tree(opt);
    auto shape = tc::caterpillar_shape(t);
    Json j{{"caterpillar", shape.has_value()}};
    if (shape) {
        j["body"] = shape->body;
        j["leaf_counts"] = shape->leaf_counts;
    }
    emit_json(opt, j);
    return 0;
}

int cmd_diameter(const Options& opt) {
    auto t = input_tree(opt);
    int d = tc::cayley_diameter(t, effective_cap(opt, 7));
    if (opt.format == "csv")
        emit(opt, std::to_string(d));
    else
        emit_json(opt, Json{{"n", t.n()}, {"diameter", d}});
    return 0;
}

int cmd_poset(const Options& opt) {
    auto t = input_tree(opt);
    if (opt.ordering.empty()) throw tc::UsageError("poset needs --ordering i-j,...");
    auto s = parse_edge_list(opt.ordering);
    auto p = tc::poset_from_ordering(t, s);
    Json j = tc::poset_to_json(p);
    j["linext"] = tc::bigint_to_json(p.linear_extensions_count());
    emit_json(opt, j);
    return 0;
}

int cmd_linext(const Options& opt) {
    std::optional<tc::Poset> p;
    if (!opt.poset.empty()) {
        std::ifstream in(opt.poset);
        if (!in) throw tc::InputParseError("cannot open " + opt.poset);
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& ex) {
            throw tc::InputParseError(std::string("json: ") + ex.what());
        }
        p = tc::poset_from_json(j);
    } else if (!opt.signs.empty()) {
        tc::SignVector v;
        v.signs = parse_int_list(opt.signs);
        for (int s : v.signs)
            if (s != 1 && s != -1) throw tc::InputParseError("signs must be +-1");
        p = tc::sign_vector_to_poset(v);
    } else {
        throw tc::UsageError("linext needs --poset FILE or --signs 1,-1,...");
    }
    BigInt c = p->linear_extensions_count();
    if (opt.format == "csv")
        emit(opt, c.str());
    else
        emit_json(opt, Json{{"count", tc::bigint_to_json(c)}});
    return 0;
}

int cmd_path_extremes(const Options& opt) {
    if (opt.n < 2) throw tc::UsageError("path-extremes needs --n >= 2 (edges)");
    auto path = tc::make_path(opt.n + 1);
    auto canon = tc::canonical_multiplicity_check(path);
    auto least = tc::least_frequent_check(path);
    auto tables = tc::number_tables(opt.n);
    Json j{{"n", opt.n},
           {"canonical",
            {{"claimed", tc::bigint_to_json(tables.euler[opt.n])},
             {"computed", canon.multiplicity},
             {"ok", canon.ok}}},
           {"least", {{"value", least.value}, {"ok", least.ok}}}};
    bool ok = canon.ok && least.ok;
    if (opt.n >= 4) {
        auto second = tc::second_least_check(path);
        j["second_least"] = {{"claimed", opt.n - 1},
                             {"computed", second.value},
                             {"attained_by", cycles_json(second.attained_by)},
                             {"ok", second.ok}};
        ok = ok && second.ok;
    }
    j["ok"] = ok;
    emit_json(opt, j);
    return ok ? 0 : 2;
}

int cmd_fork_extremes(const Options& opt) {
    if (opt.n < 5) throw tc::UsageError("fork-extremes needs --n >= 5 (vertices)");
    auto rep = tc::fork_max_check(tc::make_fork(opt.n), effective_cap(opt, 9));
    Json j{{"n", opt.n},
           {"claimed", tc::bigint_to_json(rep.predicted)},
           {"computed", rep.max_multiplicity},
           {"attained_by", cycles_json(rep.attained_by)},
           {"ok", rep.ok}};
    emit_json(opt, j);
    return rep.ok ? 0 : 2;
}

int cmd_conjecture_scan(const Options& opt) {
    if (opt.length < 1) throw tc::UsageError("conjecture-scan needs --length >= 1");
    auto rep = tc::conjecture_scan(opt.length);
    Json counter = Json::array();
    for (const auto& [v, i] : rep.counterexamples)
        counter.push_back({{"signs", v.signs}, {"index", i}});
    emit_json(opt, Json{{"length", rep.length},
                        {"cases", rep.cases},
                        {"counterexamples", counter}});
    return 0;  // reported, not asserted
}

int cmd_realisable(const Options& opt) {
    auto t = input_tree(opt);
    auto c = input_cycle(opt, t.n());
    auto d = tc::build_diagram(t, c);
    Json j = tc::diagram_to_json(d);
    j["realisable"] = tc::is_realisable(t, c);
    emit_json(opt, j);
    return 0;
}

int cmd_realise(const Options& opt) {
    auto t = input_tree(opt);
    auto c = input_cycle(opt, t.n());
    auto ordering = tc::realising_ordering(t, c);
    Json j{{"realisable", ordering.has_value()}};
    if (ordering) {
        if (tc::cycle_form(tc::product_of_transpositions(*ordering, t.n())) != c)
            throw tc::Error("internal: ordering does not multiply to the cycle");
        Json arr = Json::array();
        for (const auto& [a, b] : *ordering) arr.push_back({a, b});
        j["ordering"] = arr;
    } else {
        j["ordering"] = Json();
    }
    emit_json(opt, j);
    return 0;
}

int cmd_inverse_count(const Options& opt) {
    if (opt.n < 2) throw tc::UsageError("inverse-count needs --n >= 2");
    BigInt claimed = tc::fuss_catalan(opt.n);
    BigInt computed = tc::count_realising_trees(opt.n, effective_cap(opt, 8));
    bool ok = claimed == computed;
    if (opt.format == "csv")
        emit(opt, computed.str());
    else
        emit_json(opt, Json{{"n", opt.n},
                            {"claimed", tc::bigint_to_json(claimed)},
                            {"computed", tc::bigint_to_json(computed)},
                            {"ok", ok}});
    return ok ? 0 : 2;
}

int cmd_orbit_check(const Options& opt) {
    auto t = input_tree(opt);
    auto rep = tc::orbit_identity_check(t, effective_cap(opt, 7));
    emit_json(opt, Json{{"n", t.n()},
                        {"claimed", tc::bigint_to_json(rep.predicted)},
                        {"computed", tc::bigint_to_json(rep.realising)},
                        {"orbit_size", tc::bigint_to_json(rep.orbit_size)},
                        {"ok", rep.ok}});
    return rep.ok ? 0 : 2;
}

int cmd_sequences(const Options& opt) {
    if (opt.name.empty() || opt.upto < 1)
        throw tc::UsageError("sequences needs --name and --upto");
    auto tables = tc::number_tables(std::max(opt.upto, 2));
    std::vector<BigInt> values;
    if (opt.name == "euler") {
        values.assign(tables.euler.begin(), tables.euler.begin() + opt.upto + 1);
    } else if (opt.name == "almost") {
        values.assign(tables.almost_updown.begin() + 1,
                      tables.almost_updown.begin() + opt.upto + 1);
    } else if (opt.name == "fusscatalan") {
        for (int n = 1; n <= opt.upto; ++n) values.push_back(tc::fuss_catalan(n));
    } else if (opt.name == "entringer") {
        std::string lines;
        for (int n = 0; n <= opt.upto; ++n) lines += join_bigints(tables.entringer[n]) + "\n";
        emit(opt, lines);
        return 0;
    } else {
        throw tc::UsageError("unknown sequence '" + opt.name + "'");
    }
    emit(opt, join_bigints(values));
    return 0;
}

int cmd_table6(const Options& opt) {
    struct Row {
        std::vector<tc::Edge> edges;
        long long cycles;
        int diameter;
        tc::FrequencyProfile profile;
    };
    const std::vector<Row> rows{
        {{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
         16, 15, {{1, 2}, {4, 4}, {6, 2}, {9, 4}, {11, 2}, {16, 2}}},
        {{{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
         24, 11, {{1, 4}, {3, 4}, {4, 4}, {6, 4}, {7, 4}, {9, 4}}},
        {{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}},
         24, 11, {{1, 2}, {2, 4}, {3, 4}, {4, 4}, {7, 4}, {8, 4}, {11, 2}}},
        {{{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}},
         36, 10, {{1, 8}, {3, 16}, {4, 4}, {6, 8}}},
        {{{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}},
         48, 9, {{1, 12}, {2, 12}, {3, 12}, {4, 12}}},
        {{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}},
         120, 7, {{1, 120}}}};
    bool ok = true;
    Json out = Json::array();
    std::string csv = "row,profile,num_cycles,diameter\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        tc::LabelledTree t(6, rows[i].edges);
        auto census = tc::cycle_census(t, 9, opt.threads);
        int diam = tc::cayley_diameter(t);
        auto profile = census.profile();
        bool row_ok = profile == rows[i].profile &&
                      static_cast<long long>(census.counts.size()) == rows[i].cycles &&
                      diam == rows[i].diameter;
        ok = ok && row_ok;
        csv += std::to_string(i + 1) + "," + profile_field(profile) + "," +
               std::to_string(census.counts.size()) + "," + std::to_string(diam) + "\n";
        Json entry = tc::census_to_json(census, diam);
        entry["claimed"] = {{"num_cycles", rows[i].cycles},
                            {"diameter", rows[i].diameter}};
        entry["ok"] = row_ok;
        out.push_back(entry);
    }
    if (opt.format == "csv")
        emit(opt, csv);
    else
        emit_json(opt, Json{{"rows", out}, {"ok", ok}});
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree edge-transposition cycle toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--cap", opt.cap, "size cap override");
        sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "seed for sampled checks");
        sub->add_option("--out", opt.out, "output path (default stdout)");
        return sub;
    };
    auto add_tree = [&](CLI::App* sub) {
        sub->add_option("--edges", opt.edges, "inline edges 1-2,2-3,...");
        sub->add_option("--tree", opt.tree, "tree JSON file");
        sub->add_option("--prufer", opt.prufer, "Prufer code a,b,c");
        sub->add_option("--n", opt.n, "vertex count");
        return sub;
    };

    std::map<std::string, std::function<int()>> dispatch;
    auto reg = [&](const std::string& name, const std::string& help,
                   std::function<int()> fn, bool tree_input) {
        auto* sub = add_common(app.add_subcommand(name, help));
        if (tree_input) add_tree(sub);
        dispatch[name] = std::move(fn);
        return sub;
    };

    auto* census = reg("census", "full cycle census of a tree", [&] { return cmd_census(opt); }, true);
    census->add_flag("--diameter", opt.diameter, "include the Cayley graph diameter");
    reg("count", "number of distinct cycles, prod d_i!", [&] { return cmd_count(opt); }, true);
    auto* mult1 = reg("mult1", "number of multiplicity-1 cycles", [&] { return cmd_mult1(opt); }, true);
    mult1->add_flag("--verify", opt.verify, "cross-check against a full census");
    reg("caterpillar", "caterpillar body/leaf profile", [&] { return cmd_caterpillar(opt); }, true);
    reg("diameter", "Cayley graph diameter", [&] { return cmd_diameter(opt); }, true);
    auto* poset = reg("poset", "partial order of an edge ordering", [&] { return cmd_poset(opt); }, true);
    poset->add_option("--ordering", opt.ordering, "edge ordering i-j,...");
    auto* linext = reg("linext", "linear extension count", [&] { return cmd_linext(opt); }, false);
    linext->add_option("--poset", opt.poset, "poset JSON file");
    linext->add_option("--signs", opt.signs, "path-type sign vector 1,-1,...");
    auto* pe = reg("path-extremes", "extreme multiplicities on a path",
                   [&] { return cmd_path_extremes(opt); }, false);
    pe->add_option("--n", opt.n, "number of edges")->required();
    auto* fe = reg("fork-extremes", "most frequent cycles on a forked path",
                   [&] { return cmd_fork_extremes(opt); }, false);
    fe->add_option("--n", opt.n, "number of vertices")->required();
    auto* cs = reg("conjecture-scan", "right-side inversions at every repeated sign",
                   [&] { return cmd_conjecture_scan(opt); }, false);
    cs->add_option("--length", opt.length, "sign vector length")->required();
    auto* rble = reg("realisable", "chord diagram crossing test", [&] { return cmd_realisable(opt); }, true);
    rble->add_option("--cycle", opt.cycle, "target cycle orbit a,b,c,...");
    auto* rlse = reg("realise", "ordering multiplying to a given cycle", [&] { return cmd_realise(opt); }, true);
    rlse->add_option("--cycle", opt.cycle, "target cycle orbit a,b,c,...");
    auto* ic = reg("inverse-count", "trees realising a fixed n-cycle",
                   [&] { return cmd_inverse_count(opt); }, false);
    ic->add_option("--n", opt.n, "vertex count")->required();
    reg("orbit-check", "n*C(T) = |Aut(T)|*D(T)", [&] { return cmd_orbit_check(opt); }, true);
    auto* seq = reg("sequences", "integer sequence prefixes", [&] { return cmd_sequences(opt); }, false);
    seq->add_option("--name", opt.name, "euler|entringer|almost|fusscatalan")->required();
    seq->add_option("--upto", opt.upto, "largest index")->required();
    reg("table6", "censuses of the six 6-vertex tree shapes", [&] { return cmd_table6(opt); }, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        return dispatch.at(app.get_subcommands().front()->get_name())();
    } catch (const tc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
