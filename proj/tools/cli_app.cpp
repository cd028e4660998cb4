#include "cli_app.hpp"

#include "neron/compgroup.hpp"
#include "neron/criteria.hpp"
#include "neron/errors.hpp"
#include "neron/graph_json.hpp"
#include "neron/oracle.hpp"
#include "neron/purity.hpp"
#include "neron/report_json.hpp"
#include "neron/resolution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace neron::cli {

using nlohmann::json;

namespace {

enum class Format { text, json };

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw InvalidGraph("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i)
        s += (i ? sep : "") + items[i];
    return s;
}

template <typename T>
std::string list(const std::vector<T>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) {
        std::ostringstream os;
        os << x;
        parts.push_back(os.str());
    }
    return "[" + join(parts) + "]";
}

std::string group_name(const ComponentGroup& g) {
    if (g.invariant_factors.empty())
        return "trivial";
    std::vector<std::string> parts;
    for (const auto& d : g.invariant_factors)
        parts.push_back("Z/" + d.str());
    return join(parts, " + ");
}

void print_verdict_text(std::ostream& out, const CriterionVerdict& v) {
    out << to_string(v.criterion) << ": " << (v.holds ? "true" : "false");
    if (v.witness) {
        std::visit(
            [&](const auto& w) {
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, AlignmentWitness>)
                    out << "  (edges " << w.first << " and " << w.second << " on cycle " << join(w.cycle, " ") << ")";
                else if constexpr (std::is_same_v<W, RankWitness>)
                    out << "  (mu = " << w.mu << ", generic ranks = " << list(w.generic_ranks) << ")";
                else if (v.criterion == Criterion::disciplined)
                    out << "  (loop " << w.edge << " has mixed-support label)";
                else
                    out << "  (edge " << w.edge << " has non-unit label)";
            },
            *v.witness);
    }
    out << '\n';
}

int cmd_check(const LabelledGraph& g, const std::string& criterion, Format fmt, std::ostream& out) {
    std::vector<CriterionVerdict> verdicts;
    if (criterion == "all") {
        verdicts = check_all(g);
    } else {
        auto c = parse_criterion(criterion);
        if (!c)
            throw InvalidParameter("unknown criterion '" + criterion + "'");
        verdicts.push_back(check(g, *c));
    }
    bool all_hold = true;
    json report = json::object();
    for (const auto& v : verdicts) {
        all_hold = all_hold && v.holds;
        if (fmt == Format::json)
            report[to_string(v.criterion)] = to_json(v);
        else
            print_verdict_text(out, v);
    }
    if (fmt == Format::json)
        out << report.dump(2) << '\n';
    return all_hold ? ok : fails;
}

int cmd_purity(const LabelledGraph& g, bool with_snf, Format fmt, std::ostream& out) {
    const PurityReport r = purity_report(g);
    if (fmt == Format::json) {
        json j = to_json(r);
        if (with_snf)
            j["snf"] = to_json(smith_normal_form(r.matrix));
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "mu = " << r.domain_rank << '\n'
        << "generic ranks = " << list(r.codomain_ranks) << '\n'
        << "matrix = " << r.matrix << '\n'
        << "injective: " << (r.injective ? "true" : "false") << '\n'
        << "cokernel: free rank " << r.cokernel_free_rank << ", torsion " << list(r.cokernel_torsion) << '\n'
        << "isomorphism: " << (r.is_isomorphism ? "true" : "false") << '\n';
    if (with_snf) {
        const SNFResult snf = smith_normal_form(r.matrix);
        out << "snf diagonal = " << list(snf.diagonal()) << '\n'
            << "U = " << snf.U << '\n'
            << "V = " << snf.V << '\n';
    }
    return ok;
}

int cmd_phi(const LabelledGraph& g, std::size_t param, Format fmt, std::ostream& out) {
    const ComponentGroup cg = component_group(g, param);
    if (fmt == Format::json)
        out << to_json(cg).dump(2) << '\n';
    else
        out << "param " << param << ": " << group_name(cg) << "  (order " << cg.order << ")\n";
    return ok;
}

int cmd_oracle(const LabelledGraph& g, Format fmt, std::ostream& out) {
    const auto cycles = oracle::enumerate_cycles(g);
    const bool aligned = oracle::aligned_bruteforce(g);
    json orders = json::array();
    for (std::size_t i = 1; i <= g.num_params; ++i) {
        try {
            orders.push_back(to_json(oracle::spanning_tree_order_oracle(g, i)));
        } catch (const SizeLimitExceeded&) {
            orders.push_back(nullptr);
        }
    }
    json cycle_ids = json::array();
    for (const auto& c : cycles) {
        json ids = json::array();
        for (std::size_t e : c)
            ids.push_back(g.edges[e].id);
        cycle_ids.push_back(std::move(ids));
    }
    if (fmt == Format::json) {
        out << json{{"cycles", cycle_ids}, {"aligned_bruteforce", aligned}, {"spanning_tree_orders", orders}}.dump(2)
            << '\n';
        return ok;
    }
    out << "cycles (" << cycles.size() << "):\n";
    for (const auto& c : cycle_ids)
        out << "  " << c.dump() << '\n';
    out << "aligned (brute force): " << (aligned ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < orders.size(); ++i)
        out << "spanning-tree order, param " << i + 1 << ": " << (orders[i].is_null() ? "too large" : orders[i].dump())
            << '\n';
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial Neron-model criteria for labelled dual graphs", "neroncheck"};
    app.require_subcommand(1);

    std::string file;
    std::string criterion = "all";
    std::string format_name = "text";
    std::vector<std::size_t> params;
    std::size_t param = 1;
    bool with_snf = false;
    oracle::GeneratorConfig config;
    std::string class_name = "any";

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "Graph description (JSON), or - for standard input")->required();
    };

    auto* check_cmd = app.add_subcommand("check", "Decide criteria and print verdicts with witnesses");
    add_file(check_cmd);
    check_cmd->add_option("--criterion", criterion, "ta, aligned, disciplined, regular or all")
        ->check(CLI::IsMember({"ta", "toric_additive", "aligned", "disciplined", "regular", "all"}));
    add_format(check_cmd);

    auto* contract_cmd = app.add_subcommand("contract", "Contract edges whose label vanishes on the given parameters");
    add_file(contract_cmd);
    contract_cmd->add_option("--params", params, "Comma-separated 1-based parameter indices")
        ->required()
        ->delimiter(',');

    auto* purity_cmd = app.add_subcommand("purity", "Purity map on first homology");
    add_file(purity_cmd);
    purity_cmd->add_flag("--snf", with_snf, "Include the Smith normal form of the purity matrix");
    add_format(purity_cmd);

    auto* resolve_cmd = app.add_subcommand("resolve", "Blow up to a graph with all labels regular");
    add_file(resolve_cmd);

    auto* phi_cmd = app.add_subcommand("phi", "Component group over the given divisor branch");
    add_file(phi_cmd);
    phi_cmd->add_option("--param", param, "1-based parameter index")->required();
    add_format(phi_cmd);

    auto* random_cmd = app.add_subcommand("random", "Generate a seeded random labelled graph");
    random_cmd->add_option("--vertices", config.num_vertices)->required();
    random_cmd->add_option("--edges", config.num_edges)->required();
    random_cmd->add_option("--params", config.num_params)->required();
    random_cmd->add_option("--max-exponent", config.max_exponent)->required();
    random_cmd->add_option("--seed", config.seed)->required();
    random_cmd->add_option("--class", class_name)
        ->check(CLI::IsMember({"any", "regular", "disciplined", "single_param"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cycle enumeration and spanning-tree counts");
    add_file(oracle_cmd);
    add_format(oracle_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }
    const Format fmt = formats.at(format_name);

    try {
        if (*random_cmd) {
            auto cls = oracle::parse_class_constraint(class_name);
            config.class_constraint = *cls;
            out << print_graph(oracle::random_labelled_graph(config));
            return ok;
        }
        const LabelledGraph g = load_graph(read_input(file, in));
        if (*check_cmd)
            return cmd_check(g, criterion, fmt, out);
        if (*contract_cmd) {
            out << print_graph(contract(g, params).graph);
            return ok;
        }
        if (*purity_cmd)
            return cmd_purity(g, with_snf, fmt, out);
        if (*resolve_cmd) {
            out << to_json(resolve(g)).dump(2) << '\n';
            return ok;
        }
        if (*phi_cmd)
            return cmd_phi(g, param, fmt, out);
        if (*oracle_cmd)
            return cmd_oracle(g, fmt, out);
    } catch (const NotDisciplined& e) {
        err << "not disciplined: " << e.edge_id() << '\n';
        return fails;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return internal_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return invalid_input;
}

} // namespace neron::cli
