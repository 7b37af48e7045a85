#include "modrat/cli.hpp"

#include "modrat/conditions.hpp"
#include "modrat/matrix_io.hpp"
#include "modrat/properties.hpp"
#include "modrat/stability.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace modrat::cli {

using ojson = nlohmann::ordered_json;

namespace {

Integer parse_integer_flag(const std::string& name, const std::string& text) {
    auto v = parse_integer(text);
    if (!v) throw UsageError("--" + name + " expects an integer, got '" + text + "'");
    return *v;
}

std::pair<Integer, Integer> parse_pair_flag(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--pair expects n,d, got '" + text + "'");
    return {parse_integer_flag("pair", text.substr(0, comma)), parse_integer_flag("pair", text.substr(comma + 1))};
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args, bool& help_requested, std::string& help_text) {
    CLI::App app{"Rank/degree pair classification and genericity checks for moduli of vector bundles", "modrat"};
    app.require_subcommand(1);

    std::string genus, pair, n_max, format = "text", grid_bound;
    std::optional<std::string> input;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials, ambient;
    std::string chain_mode = "nice", via = "both";
    bool parallel = false;

    struct Sub {
        Command command;
        CLI::App* app;
    };
    std::vector<Sub> subs;
    const auto add = [&](Command c, const char* name, const char* description) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        subs.push_back({c, sub});
        return sub;
    };

    auto* classify = add(Command::Classify, "classify", "Full report for one pair");
    classify->add_option("--genus,-g", genus)->required();
    classify->add_option("--pair,-p", pair, "n,d")->required();

    auto* chain = add(Command::Chain, "chain", "Reduction chain from a pair");
    chain->add_option("--genus,-g", genus)->required();
    chain->add_option("--pair,-p", pair, "n,d")->required();
    chain->add_option("--mode", chain_mode, "nice (shortest chain to (1;g)), reduce or dual")
        ->check(CLI::IsMember({"nice", "reduce", "dual"}));

    auto* enumerate = add(Command::Enumerate, "enumerate", "Classify every lattice point up to a rank bound");
    enumerate->add_option("--genus,-g", genus)->required();
    enumerate->add_option("--n-max", n_max)->required();
    enumerate->add_flag("--parallel", parallel, "classify each rank with an OpenMP team");

    auto* fine = add(Command::Fine, "fine", "Admissible diagram search");
    fine->add_option("--genus,-g", genus)->required();
    fine->add_option("--pair,-p", pair, "n,d")->required();

    auto* preds = add(Command::Predecessors, "predecessors", "One-step predecessors of a pair");
    preds->add_option("--genus,-g", genus)->required();
    preds->add_option("--pair,-p", pair, "n,d")->required();
    preds->add_option("--n-max", n_max)->required();
    preds->add_option("--via", via, "reduce, dual or both")->check(CLI::IsMember({"reduce", "dual", "both"}));

    auto* stability = add(Command::Stability, "stability", "Stability of a point configuration in P_n");
    stability->add_option("--ambient", ambient, "n of P_n (CSV input)");
    stability->add_option("--input,-i", input, "CSV or .json file, - for stdin")->required();

    auto* condition = add(Command::Condition, "condition", "Conditions A and B, minor-expansion identity, sampling");
    condition->add_option("--input,-i", input, "omega then phi (CSV or .json), - for stdin")->required();
    condition->add_option("--seed", seed, "enables random sampling of phi");
    condition->add_option("--trials", trials);
    condition->add_option("--grid-bound", grid_bound, "sampled entries lie in [-B, B]");

    auto* verify = add(Command::Verify, "verify", "Run the arithmetic property oracles");
    verify->add_option("--genus,-g", genus, "largest genus checked (default 7)");
    verify->add_option("--n-max", n_max, "largest rank checked (default 12)");
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials, "random chains (default 10000)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        help_requested = true;
        help_text = app.help();
        return {};
    } catch (const CLI::CallForAllHelp&) {
        help_requested = true;
        help_text = app.help("", CLI::AppFormatMode::All);
        return {};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    help_requested = false;

    RunConfig config;
    for (const auto& s : subs) {
        if (s.app->parsed()) config.command = s.command;
    }
    if (!genus.empty()) config.genus = parse_integer_flag("genus", genus);
    if (!pair.empty()) config.pair = parse_pair_flag(pair);
    if (!n_max.empty()) config.n_max = parse_integer_flag("n-max", n_max);
    if (!grid_bound.empty()) config.grid_bound = parse_integer_flag("grid-bound", grid_bound);
    config.input_path = input;
    config.output_format = *parse_output_format(format);
    config.seed = seed;
    config.trials = trials;
    config.ambient = ambient;
    config.chain_mode = chain_mode;
    config.via = via;
    config.parallel = parallel;
    return config;
}

namespace {

Genus require_genus(const RunConfig& c) {
    if (!c.genus) throw UsageError("--genus is required");
    try {
        return Genus(*c.genus);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Pair require_pair(const RunConfig& c) {
    if (!c.pair) throw UsageError("--pair is required");
    try {
        return Pair(c.pair->first, c.pair->second);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Integer require_n_max(const RunConfig& c) {
    if (!c.n_max) throw UsageError("--n-max is required");
    if (*c.n_max < 1) throw UsageError("--n-max must be at least 1");
    return *c.n_max;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Reads matrices from the configured input as CSV or JSON (by .json suffix).
MatrixInput read_input(const RunConfig& c, std::istream& in) {
    if (!c.input_path) throw UsageError("--input is required");
    std::ifstream file;
    std::istream* source = &in;
    if (*c.input_path != "-") {
        file.open(*c.input_path);
        if (!file) throw UsageError("cannot read input file '" + *c.input_path + "'");
        source = &file;
    }
    if (ends_with(*c.input_path, ".json")) return read_matrix_json(*source);
    MatrixInput out;
    out.matrices = read_matrices_csv(*source);
    return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (auto i : v) out += (out.empty() ? "" : ",") + std::to_string(i);
    return out;
}

ojson indices_json(const std::optional<std::vector<std::size_t>>& v) {
    if (!v) return nullptr;
    return *v;
}

ojson matrix_json(const RationalMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (const auto& x : m.row(r)) row.push_back(to_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
    const Genus g = require_genus(c);
    const Pair p = require_pair(c);
    Classifier classifier(g);
    const auto report = classifier.classify(p);
    if (c.output_format == OutputFormat::Csv) out << csv_header() << '\n';
    out << serialize_report(report, c.output_format);
    return Ok;
}

int cmd_chain(const RunConfig& c, std::ostream& out) {
    const Genus g = require_genus(c);
    const Pair p = require_pair(c);
    if (window_status(g, p) == WindowStatus::Outside) {
        throw UsageError(to_string(p) + " is outside the window n(g-1) < d <= ng");
    }
    std::optional<ReductionChain> chain;
    if (c.chain_mode == "nice") {
        chain = Classifier(g).is_nice(p).witness;
    } else {
        chain = follow(g, p, c.chain_mode == "reduce" ? StepKind::Reduce : StepKind::DualReduce);
    }
    const std::string end = chain ? to_string(chain->end(p)) : "";
    switch (c.output_format) {
        case OutputFormat::Json: {
            ojson o;
            o["genus"] = integer_to_json(g.value());
            o["n"] = integer_to_json(p.n);
            o["d"] = integer_to_json(p.d);
            o["mode"] = c.chain_mode;
            o["chain"] = chain ? chain_to_json(*chain) : ojson(nullptr);
            if (chain) {
                o["end_window"] = to_string(window_status(g, chain->end(p)));
            } else {
                o["end_window"] = nullptr;
            }
            out << o.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "genus,n,d,mode,steps,end\n"
                << to_string(g.value()) << ',' << to_string(p.n) << ',' << to_string(p.d) << ',' << c.chain_mode << ','
                << (chain ? step_codes(*chain) : "") << ',' << end << '\n';
            break;
        case OutputFormat::Text:
            if (!chain) {
                out << to_string(p) << " has no chain to (1;" << to_string(g.value()) << ")\n";
            } else {
                out << chain_arrows(*chain, p) << '\n';
                out << "steps: " << step_codes(*chain) << '\n';
                out << "ends " << to_string(window_status(g, chain->end(p))) << '\n';
            }
            break;
    }
    return Ok;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    const Genus g = require_genus(c);
    const Integer n_max = require_n_max(c);
    if (c.output_format == OutputFormat::Csv) out << csv_header() << '\n';
    if (c.output_format == OutputFormat::Text) out << "pair          nice  fine  newstead  chain\n";
    enumerate_stream(g, n_max, c.parallel, [&](const ClassificationReport& r) {
        if (c.output_format == OutputFormat::Text) {
            std::string name = to_string(r.pair);
            name.resize(std::max<std::size_t>(name.size(), 13), ' ');
            std::string chain = r.nice_witness ? step_codes(*r.nice_witness) : "";
            out << name << ' ' << (r.is_nice ? "yes " : "no  ") << "  " << (r.is_fine ? "yes " : "no  ") << "  "
                << (r.newstead_condition ? "yes     " : "no      ") << "  " << chain << '\n';
        } else {
            out << serialize_report(r, c.output_format);
        }
        out.flush();
    });
    return Ok;
}

int cmd_fine(const RunConfig& c, std::ostream& out) {
    const Genus g = require_genus(c);
    const Pair p = require_pair(c);
    const auto w = window_status(g, p);
    if (w != WindowStatus::InWindow && w != WindowStatus::TerminalLine) {
        throw UsageError("fine needs an in-window pair; " + to_string(p) + " is " + to_string(w));
    }
    const auto result = Classifier(g).is_fine(p);
    switch (c.output_format) {
        case OutputFormat::Json: {
            ojson o;
            o["genus"] = integer_to_json(g.value());
            o["n"] = integer_to_json(p.n);
            o["d"] = integer_to_json(p.d);
            o["fine"] = result.verdict;
            o["fine_diagram"] = result.witness ? diagram_to_json(*result.witness) : ojson(nullptr);
            out << o.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
        case OutputFormat::Text: {
            // Text and CSV both reuse the report renderers.
            ClassificationReport r = Classifier(g).classify(p);
            if (c.output_format == OutputFormat::Csv) out << csv_header() << '\n';
            out << serialize_report(r, c.output_format);
            break;
        }
    }
    return Ok;
}

int cmd_predecessors(const RunConfig& c, std::ostream& out) {
    const Genus g = require_genus(c);
    const Pair p = require_pair(c);
    const Integer n_max = require_n_max(c);
    const auto w = window_status(g, p);
    if (w != WindowStatus::InWindow && w != WindowStatus::TerminalLine) {
        throw UsageError("predecessors need an in-window pair or (1;g); " + to_string(p) + " is " + to_string(w));
    }
    struct Row {
        const char* via;
        Predecessor pred;
    };
    std::vector<Row> rows;
    if (c.via != "dual") {
        for (auto& q : predecessors_via_reduction(g, p, n_max)) rows.push_back({"reduce", std::move(q)});
    }
    if (c.via != "reduce") {
        for (auto& q : predecessors_via_dual(g, p, n_max)) rows.push_back({"dual", std::move(q)});
    }
    switch (c.output_format) {
        case OutputFormat::Json: {
            ojson arr = ojson::array();
            for (const auto& r : rows) {
                ojson o;
                o["via"] = r.via;
                o["n"] = integer_to_json(r.pred.pair.n);
                o["d"] = integer_to_json(r.pred.pair.d);
                o["k"] = integer_to_json(r.pred.k);
                arr.push_back(std::move(o));
            }
            ojson doc;
            doc["genus"] = integer_to_json(g.value());
            doc["n"] = integer_to_json(p.n);
            doc["d"] = integer_to_json(p.d);
            doc["predecessors"] = std::move(arr);
            out << doc.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "via,n,d,k\n";
            for (const auto& r : rows) {
                out << r.via << ',' << to_string(r.pred.pair.n) << ',' << to_string(r.pred.pair.d) << ','
                    << to_string(r.pred.k) << '\n';
            }
            break;
        case OutputFormat::Text:
            for (const auto& r : rows) {
                out << to_string(r.pred.pair) << " -" << (r.via[0] == 'r' ? 'R' : 'D') << to_string(r.pred.k)
                    << "-> " << to_string(p) << '\n';
            }
            if (rows.empty()) out << "no predecessors of " << to_string(p) << " with rank <= " << to_string(n_max) << '\n';
            break;
    }
    return Ok;
}

int cmd_stability(const RunConfig& c, std::istream& in, std::ostream& out) {
    auto input = read_input(c, in);
    std::optional<RationalMatrix> points = input.points;
    if (!points) {
        if (input.matrices.size() != 1) throw UsageError("stability expects exactly one matrix of points");
        points = input.matrices.front();
    }
    const auto ambient = c.ambient ? c.ambient : input.ambient;
    if (!ambient) throw UsageError("--ambient is required");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < points->rows(); ++r) rows.emplace_back(points->row(r).begin(), points->row(r).end());
    std::optional<ProjectiveConfig> config;
    try {
        config.emplace(*ambient, std::move(rows));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto result = git_stable(*config);
    switch (c.output_format) {
        case OutputFormat::Json: {
            ojson o;
            o["ambient"] = *ambient;
            o["points"] = config->size();
            o["stable"] = result.stable;
            o["violating_subspace"] = indices_json(result.violating_subspace);
            if (result.violating_dimension) {
                o["violating_dimension"] = *result.violating_dimension;
            } else {
                o["violating_dimension"] = nullptr;
            }
            out << o.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "ambient,points,stable,violating_subspace,violating_dimension\n"
                << *ambient << ',' << config->size() << ',' << flag(result.stable) << ','
                << (result.violating_subspace ? join(*result.violating_subspace) : "") << ','
                << (result.violating_dimension ? std::to_string(*result.violating_dimension) : "") << '\n';
            break;
        case OutputFormat::Text:
            out << "stable=" << flag(result.stable) << '\n';
            if (result.violating_subspace) {
                out << "violating subspace of dimension " << *result.violating_dimension << " contains points "
                    << join(*result.violating_subspace) << '\n';
            }
            break;
    }
    return Ok;
}

int cmd_condition(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    auto input = read_input(c, in);
    if (input.matrices.empty()) throw UsageError("condition needs an omega matrix");
    std::optional<OmegaMatrix> omega;
    try {
        omega.emplace(input.matrices.front());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    if (c.seed || c.trials) {
        if (!c.seed) throw UsageError("sampling needs an explicit --seed");
        SamplingGrid grid;
        if (c.grid_bound) grid.numerator_bound = *c.grid_bound;
        if (grid.numerator_bound < 0) throw UsageError("--grid-bound must be non-negative");
        const std::size_t trials = c.trials.value_or(100);
        const auto r = sample_generic_transformation_parallel(*omega, *c.seed, trials, grid);
        if (!r.omega_generic) err << "omega is not generic; condition A rate not reported\n";
        switch (c.output_format) {
            case OutputFormat::Json: {
                ojson o;
                o["seed"] = *c.seed;
                o["trials"] = r.trials;
                o["empty"] = r.empty;
                o["omega_generic"] = r.omega_generic;
                o["condition_a_rate"] = r.condition_a_rate ? ojson(to_string(*r.condition_a_rate)) : ojson(nullptr);
                o["condition_b_rate"] = to_string(r.condition_b_rate);
                ojson fa = ojson::array(), fb = ojson::array();
                for (const auto& m : r.condition_a_failures) fa.push_back(matrix_json(m));
                for (const auto& m : r.condition_b_failures) fb.push_back(matrix_json(m));
                o["condition_a_failures"] = std::move(fa);
                o["condition_b_failures"] = std::move(fb);
                out << o.dump() << '\n';
                break;
            }
            case OutputFormat::Csv:
                out << "seed,trials,omega_generic,condition_a_rate,condition_b_rate,a_failures,b_failures\n"
                    << *c.seed << ',' << r.trials << ',' << flag(r.omega_generic) << ','
                    << (r.condition_a_rate ? to_string(*r.condition_a_rate) : "") << ','
                    << to_string(r.condition_b_rate) << ',' << r.condition_a_failures.size() << ','
                    << r.condition_b_failures.size() << '\n';
                break;
            case OutputFormat::Text:
                out << "trials: " << r.trials << (r.empty ? " (empty, rates are 1 by convention)" : "") << '\n';
                out << "omega generic: " << flag(r.omega_generic) << '\n';
                out << "condition A rate: " << (r.condition_a_rate ? to_string(*r.condition_a_rate) : "n/a") << '\n';
                out << "condition B rate: " << to_string(r.condition_b_rate) << '\n';
                for (const auto& m : r.condition_a_failures) {
                    out << "condition A fails for\n";
                    write_matrix_csv(out, m);
                }
                for (const auto& m : r.condition_b_failures) {
                    out << "condition B fails for\n";
                    write_matrix_csv(out, m);
                }
                break;
        }
        return Ok;
    }

    if (input.matrices.size() != 2) throw UsageError("condition expects omega then phi (or --seed to sample phi)");
    const RationalMatrix& phi = input.matrices[1];
    RationalMatrix a_matrix;
    ConditionBResult b;
    try {
        a_matrix = condition_a_matrix(*omega, phi);
        b = condition_b(phi);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const Rational det = determinant(a_matrix);
    const auto identity = coefficient_identity(*omega);
    switch (c.output_format) {
        case OutputFormat::Json: {
            ojson o;
            o["g"] = omega->g();
            o["d"] = omega->d();
            o["n"] = omega->n();
            o["omega_generic"] = omega->generic();
            o["condition_a"] = det != 0;
            o["determinant"] = to_string(det);
            o["condition_b"] = b.holds;
            o["violating_rows"] = indices_json(b.violating_rows);
            ojson id;
            id["coefficient"] = to_string(identity.coefficient);
            id["minor_product"] = to_string(identity.minor_product);
            id["equal"] = identity.equal;
            o["coefficient_identity"] = std::move(id);
            out << o.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "g,d,n,omega_generic,condition_a,determinant,condition_b,violating_rows,coefficient,"
                   "minor_product,identity\n"
                << omega->g() << ',' << omega->d() << ',' << omega->n() << ',' << flag(omega->generic()) << ','
                << flag(det != 0) << ',' << to_string(det) << ',' << flag(b.holds) << ','
                << (b.violating_rows ? join(*b.violating_rows) : "") << ',' << to_string(identity.coefficient) << ','
                << to_string(identity.minor_product) << ',' << flag(identity.equal) << '\n';
            break;
        case OutputFormat::Text:
            out << "omega " << omega->g() << "x" << omega->d() << ", generic: " << flag(omega->generic()) << '\n';
            out << "condition A: " << flag(det != 0) << " (det = " << to_string(det) << ")\n";
            out << "condition B: " << flag(b.holds);
            if (b.violating_rows) out << " (dependent rows " << join(*b.violating_rows) << ")";
            out << '\n';
            out << "coefficient identity: " << to_string(identity.coefficient) << " = "
                << to_string(identity.minor_product) << " (" << (identity.equal ? "holds" : "FAILS") << ")\n";
            break;
    }
    return Ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    PropertyBounds bounds;
    if (c.genus) bounds.genus_max = require_genus(c).value().get_si();
    if (c.n_max) bounds.n_max = require_n_max(c).get_si();
    if (c.seed) bounds.seed = *c.seed;
    if (c.trials) bounds.random_chains = *c.trials;
    bool all = true;
    const auto results = run_property_suite(bounds);
    for (const auto& r : results) {
        all = all && r.passed;
        switch (c.output_format) {
            case OutputFormat::Json: {
                ojson o;
                o["property"] = r.name;
                o["passed"] = r.passed;
                o["checked"] = r.checked;
                o["counterexample"] = r.counterexample;
                out << o.dump() << '\n';
                break;
            }
            case OutputFormat::Csv:
                out << '"' << r.name << "\"," << flag(r.passed) << ',' << r.checked << ",\"" << r.counterexample
                    << "\"\n";
                break;
            case OutputFormat::Text:
                out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)";
                if (!r.passed) out << ": " << r.counterexample;
                out << '\n';
                break;
        }
    }
    return all ? Ok : Failure;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Classify: return cmd_classify(config, out);
            case Command::Chain: return cmd_chain(config, out);
            case Command::Enumerate: return cmd_enumerate(config, out);
            case Command::Fine: return cmd_fine(config, out);
            case Command::Predecessors: return cmd_predecessors(config, out);
            case Command::Stability: return cmd_stability(config, in, out);
            case Command::Condition: return cmd_condition(config, in, out, err);
            case Command::Verify: return cmd_verify(config, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return Failure;
    }
    return Failure;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig config;
    bool help = false;
    std::string help_text;
    try {
        config = parse_args(args, help, help_text);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Invalid;
    }
    if (help) {
        out << help_text;
        return Ok;
    }
    return run(config, in, out, err);
}

}  // namespace modrat::cli
