// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds below are fixed.

#include "cli_app.hpp"

#include "neron/compgroup.hpp"
#include "neron/criteria.hpp"
#include "neron/errors.hpp"
#include "neron/graph_json.hpp"
#include "neron/oracle.hpp"
#include "neron/purity.hpp"
#include "neron/report_json.hpp"
#include "neron/resolution.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace neron;

namespace {

constexpr double golden_time_limit_s = 0.1;
constexpr double purity_time_limit_s = 30.0;
constexpr std::size_t corpus_size = 1200;        // at least 1000
constexpr std::size_t regular_corpus_size = 1000;
constexpr std::size_t disciplined_corpus_size = 500;
constexpr std::size_t mixed_loop_corpus_size = 500;
constexpr std::size_t single_param_corpus_size = 500;
constexpr std::size_t max_vertices = 8;
constexpr std::size_t max_edges = 12;
constexpr std::size_t max_params = 3;
constexpr std::uint32_t max_exponent = 3;
constexpr std::uint64_t corpus_meta_seed = 20240917;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t violations = 0;

    void fail(const std::string& what) {
        pass = false;
        if (violations++ < 3)
            detail += (detail.empty() ? "" : "; ") + what;
    }
};

// Shapes drawn from a meta generator; each graph's own seed is its index.
std::vector<LabelledGraph> make_corpus(oracle::ClassConstraint cls, std::size_t count, std::uint64_t meta_seed,
                                       std::size_t min_params = 1, std::size_t top_params = max_params) {
    oracle::Lcg64 meta(meta_seed);
    std::vector<LabelledGraph> out;
    for (std::size_t k = 0; k < count; ++k) {
        oracle::GeneratorConfig cfg;
        cfg.num_vertices = 1 + oracle::draw_below(meta, max_vertices);
        const std::size_t min_e = std::max<std::size_t>(cfg.num_vertices - 1, 1);
        cfg.num_edges = min_e + oracle::draw_below(meta, max_edges - min_e + 1);
        cfg.num_params = min_params + oracle::draw_below(meta, top_params - min_params + 1);
        cfg.max_exponent = static_cast<std::uint32_t>(1 + oracle::draw_below(meta, max_exponent));
        cfg.seed = k;
        cfg.class_constraint = cls;
        out.push_back(oracle::random_labelled_graph(cfg));
    }
    return out;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> generic_ranks(const LabelledGraph& g) {
    std::vector<std::size_t> r;
    for (std::size_t i = 1; i <= g.num_params; ++i)
        r.push_back(betti_one(contract_to(g, i).graph));
    return r;
}

bool has_mixed_loop(const LabelledGraph& g) {
    for (const auto& e : g.edges)
        if (e.is_loop() && e.label.support_size() >= 2)
            return true;
    return false;
}

const std::vector<LabelledGraph>& main_corpus() {
    static const auto corpus = make_corpus(oracle::ClassConstraint::any, corpus_size, corpus_meta_seed);
    return corpus;
}

constexpr const char* golden_text = R"({
  "num_params": 2,
  "vertices": [{"id": "E", "genus": 0}],
  "edges": [{"id": "node", "ends": ["E", "E"], "label": [1, 1]}]
})";

Outcome golden_example() {
    Outcome o;
    const auto start = Clock::now();
    const auto g = load_graph(golden_text);
    if (betti_one(g) != 1)
        o.fail("h1 != 1");
    if (generic_ranks(g) != std::vector<std::size_t>{1, 1})
        o.fail("generic ranks != [1, 1]");
    const auto v = check_all(g);
    const std::vector<bool> want{false, true, false, false};
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k].holds != want[k])
            o.fail(std::string(to_string(v[k].criterion)) + " mismatch");
    try {
        resolve(g);
        o.fail("resolve succeeded");
    } catch (const NotDisciplined& e) {
        if (e.edge_id() != "node")
            o.fail("wrong NotDisciplined witness");
    }

    // Same verdicts through the command-line front end.
    std::istringstream in(golden_text);
    std::ostringstream out, err;
    const int code = cli::run({"check", "-", "--criterion", "all", "--format", "json"}, in, out, err);
    const auto j = nlohmann::json::parse(out.str());
    if (code != cli::fails || j["toric_additive"]["holds"] != false || j["aligned"]["holds"] != true ||
        j["disciplined"]["holds"] != false || j["regular"]["holds"] != false)
        o.fail("CLI report mismatch");
    std::istringstream in2(golden_text);
    std::ostringstream out2, err2;
    if (cli::run({"resolve", "-"}, in2, out2, err2) != cli::fails || err2.str() != "not disciplined: node\n")
        o.fail("CLI resolve did not refuse");

    const double t = seconds_since(start);
    if (t >= golden_time_limit_s)
        o.fail("took " + std::to_string(t) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(t * 1000.0) + " ms";
    return o;
}

Outcome purity_laws() {
    Outcome o;
    const auto start = Clock::now();
    for (std::size_t k = 0; k < main_corpus().size(); ++k) {
        const auto& g = main_corpus()[k];
        const auto rep = purity_report(g);
        const auto ranks = generic_ranks(g);
        std::size_t sum = 0;
        for (auto r : ranks)
            sum += r;
        const std::string tag = "graph " + std::to_string(k);
        if (!rep.injective)
            o.fail(tag + " not injective");
        if (!rep.cokernel_torsion.empty())
            o.fail(tag + " cokernel torsion");
        if (rep.domain_rank != betti_one(g) || rep.codomain_ranks != ranks)
            o.fail(tag + " rank mismatch");
        if (rep.is_isomorphism != (rep.domain_rank == sum))
            o.fail(tag + " isomorphism flag disagrees with rank sum");
        if (rep.is_isomorphism != (rep.cokernel_free_rank == 0))
            o.fail(tag + " isomorphism flag disagrees with cokernel");
    }
    const double t = seconds_since(start);
    if (t >= purity_time_limit_s)
        o.fail("took " + std::to_string(t) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(main_corpus().size()) + " graphs in " +
                std::to_string(t) + " s";
    return o;
}

Outcome implication_chain() {
    Outcome o;
    std::size_t ta_count = 0;
    for (std::size_t k = 0; k < main_corpus().size(); ++k) {
        const auto& g = main_corpus()[k];
        const std::string tag = "graph " + std::to_string(k);
        if (!is_toric_additive(g).holds)
            continue;
        ++ta_count;
        if (!is_aligned(g).holds)
            o.fail(tag + " TA but not aligned");
        if (!is_disciplined(g).holds)
            o.fail(tag + " TA but not disciplined");
        for (const auto& I : nonempty_subsets(g.num_params))
            if (!is_toric_additive(contract(g, I).graph).holds)
                o.fail(tag + " contraction loses TA");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(ta_count) + " toric-additive graphs";
    return o;
}

Outcome regular_equivalence() {
    Outcome o;
    const auto corpus = make_corpus(oracle::ClassConstraint::regular, regular_corpus_size, corpus_meta_seed + 1);
    std::size_t ta_count = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& g = corpus[k];
        if (!is_regular_model(g).holds)
            o.fail("graph " + std::to_string(k) + " not regular");
        const bool ta = is_toric_additive(g).holds;
        ta_count += ta;
        if (is_aligned(g).holds != ta)
            o.fail("graph " + std::to_string(k) + " aligned != TA");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " graphs, " +
                std::to_string(ta_count) + " toric-additive";
    return o;
}

Outcome resolution() {
    Outcome o;
    const auto corpus =
        make_corpus(oracle::ClassConstraint::disciplined, disciplined_corpus_size, corpus_meta_seed + 2);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& g = corpus[k];
        const std::string tag = "graph " + std::to_string(k);
        try {
            const auto r = resolve(g);
            if (!is_regular_model(r.graph).holds)
                o.fail(tag + " output not regular");
            if (arithmetic_genus(r.graph) != arithmetic_genus(g))
                o.fail(tag + " genus changed");
            if (generic_ranks(r.graph) != generic_ranks(g))
                o.fail(tag + " generic ranks changed");
            for (std::size_t i = 1; i <= g.num_params; ++i)
                if (component_group(r.graph, i).invariant_factors != component_group(g, i).invariant_factors)
                    o.fail(tag + " component group changed");
            if (is_toric_additive(r.graph).holds != is_toric_additive(g).holds)
                o.fail(tag + " TA verdict changed");
        } catch (const NotDisciplined&) {
            o.fail(tag + " refused");
        }
    }

    // Mixed-loop graphs: sample the unconstrained class with n >= 2 and keep
    // those that contain a mixed-support loop.
    oracle::Lcg64 meta(corpus_meta_seed + 3);
    std::size_t found = 0, scanned = 0;
    while (found < mixed_loop_corpus_size && scanned < 100 * mixed_loop_corpus_size) {
        oracle::GeneratorConfig cfg;
        cfg.num_vertices = 1 + oracle::draw_below(meta, max_vertices);
        const std::size_t min_e = std::max<std::size_t>(cfg.num_vertices - 1, 1);
        cfg.num_edges = min_e + oracle::draw_below(meta, max_edges - min_e + 1);
        cfg.num_params = 2 + oracle::draw_below(meta, max_params - 1);
        cfg.max_exponent = static_cast<std::uint32_t>(1 + oracle::draw_below(meta, max_exponent));
        cfg.seed = scanned++;
        const auto g = oracle::random_labelled_graph(cfg);
        if (!has_mixed_loop(g))
            continue;
        ++found;
        const std::string tag = "mixed graph " + std::to_string(cfg.seed);
        try {
            resolve(g);
            o.fail(tag + " resolved");
        } catch (const NotDisciplined& e) {
            const auto idx = g.find_edge(e.edge_id());
            if (!idx || !g.edges[*idx].is_loop() || g.edges[*idx].label.support_size() < 2)
                o.fail(tag + " witness is not a mixed loop");
            const auto verdict = is_disciplined(g);
            if (verdict.holds)
                o.fail(tag + " is_disciplined holds");
        }
    }
    if (found < mixed_loop_corpus_size)
        o.fail("only " + std::to_string(found) + " mixed-loop graphs found");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " disciplined, " +
                std::to_string(found) + " with a mixed loop";
    return o;
}

Outcome alignment_oracle() {
    Outcome o;
    std::size_t compared = 0;
    for (std::size_t k = 0; k < main_corpus().size(); ++k) {
        const auto& g = main_corpus()[k];
        if (g.edges.size() > max_edges)
            continue;
        ++compared;
        if (is_aligned(g).holds != oracle::aligned_bruteforce(g))
            o.fail("graph " + std::to_string(k) + " disagrees");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(compared) + " graphs compared";
    return o;
}

Outcome component_groups() {
    Outcome o;
    std::size_t compared = 0;
    for (std::size_t k = 0; k < main_corpus().size(); ++k) {
        const auto& g = main_corpus()[k];
        for (std::size_t i = 1; i <= g.num_params; ++i) {
            ++compared;
            if (component_group(g, i).order != oracle::spanning_tree_order_oracle(g, i))
                o.fail("graph " + std::to_string(k) + " param " + std::to_string(i));
        }
    }
    for (std::uint32_t m = 1; m <= 6; ++m) {
        LabelledGraph c;
        c.num_params = 1;
        for (std::size_t v = 0; v < m; ++v)
            c.vertices.push_back({"v" + std::to_string(v), 0});
        for (std::size_t v = 0; v < m; ++v)
            c.edges.push_back({"e" + std::to_string(v), v, (v + 1) % m, ExponentVector{1}});
        const auto cg = component_group(c, 1);
        const IntVector want = m == 1 ? IntVector{} : IntVector{Integer(m)};
        if (cg.invariant_factors != want || cg.order != m)
            o.fail("cycle of length " + std::to_string(m));
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(compared) + " (graph, param) pairs";
    return o;
}

Outcome single_param() {
    Outcome o;
    const auto corpus =
        make_corpus(oracle::ClassConstraint::single_param, single_param_corpus_size, corpus_meta_seed + 4, 1, 1);
    for (std::size_t k = 0; k < corpus.size(); ++k)
        if (corpus[k].num_params != 1 || !is_toric_additive(corpus[k]).holds)
            o.fail("graph " + std::to_string(k));
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " graphs";
    return o;
}

std::string corpus_dump() {
    std::string s;
    const auto corpus = make_corpus(oracle::ClassConstraint::any, 200, corpus_meta_seed + 5);
    for (const auto& g : corpus) {
        s += print_graph(g);
        nlohmann::json report;
        for (const auto& v : check_all(g))
            report[to_string(v.criterion)] = to_json(v);
        report["purity"] = to_json(purity_report(g));
        for (std::size_t i = 1; i <= g.num_params; ++i)
            report["phi"].push_back(to_json(component_group(g, i)));
        s += report.dump(2);
    }
    return s;
}

std::string cli_random_dump() {
    std::string s;
    for (int seed = 0; seed < 20; ++seed) {
        std::istringstream in;
        std::ostringstream out, err;
        cli::run({"random", "--vertices", "6", "--edges", "10", "--params", "3", "--max-exponent", "3", "--seed",
                  std::to_string(seed)},
                 in, out, err);
        std::istringstream graph(out.str());
        std::ostringstream report, err2;
        cli::run({"check", "-", "--format", "json"}, graph, report, err2);
        s += out.str() + report.str();
    }
    return s;
}

Outcome determinism() {
    Outcome o;
    const auto a = corpus_dump();
    const auto b = corpus_dump();
    if (a != b)
        o.fail("library output differs between runs");
    const auto c = cli_random_dump();
    const auto d = cli_random_dump();
    if (c != d)
        o.fail("command-line output differs between runs");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(a.size() + c.size()) + " bytes compared";
    return o;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries{
        {1, "golden example", golden_example},
        {2, "purity laws", purity_laws},
        {3, "implication chain", implication_chain},
        {4, "regular equivalence", regular_equivalence},
        {5, "resolution", resolution},
        {6, "alignment oracle equivalence", alignment_oracle},
        {7, "component groups", component_groups},
        {8, "single-parameter corpus", single_param},
        {9, "determinism", determinism},
    };
    int failures = 0;
    for (const auto& e : entries) {
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        failures += !o.pass;
        std::printf("%s  %d  %-30s %s\n", o.pass ? "PASS" : "FAIL", e.id, e.name, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
    return failures == 0 ? 0 : 1;
}
