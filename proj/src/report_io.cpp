#include "modrat/report_io.hpp"

#include "modrat/matrix_io.hpp"

#include <sstream>

namespace modrat {

using ojson = nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "text") return OutputFormat::Text;
    return std::nullopt;
}

ojson integer_to_json(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.get_str();
}

Integer integer_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
        if (auto parsed = parse_integer(v.get<std::string>())) return *parsed;
    }
    throw ParseError(1, 1, "expected an integer, got " + v.dump());
}

namespace {

ojson pair_to_json(const Pair& p) {
    ojson o;
    o["n"] = integer_to_json(p.n);
    o["d"] = integer_to_json(p.d);
    return o;
}

const nlohmann::json& field(const nlohmann::json& v, const char* key) {
    if (!v.is_object() || !v.contains(key)) throw ParseError(1, 1, std::string("missing key '") + key + "'");
    return v.at(key);
}

Pair pair_from_json(const nlohmann::json& v) {
    try {
        return Pair(integer_from_json(field(v, "n")), integer_from_json(field(v, "d")));
    } catch (const DomainError& e) {
        throw ParseError(1, 1, e.what());
    }
}

bool bool_from_json(const nlohmann::json& v) {
    if (!v.is_boolean()) throw ParseError(1, 1, "expected a boolean, got " + v.dump());
    return v.get<bool>();
}

}  // namespace

ojson chain_to_json(const ReductionChain& chain) {
    ojson arr = ojson::array();
    for (const auto& s : chain.steps) {
        ojson o;
        o["kind"] = s.kind == StepKind::Reduce ? "reduce" : "dual";
        o["n"] = integer_to_json(s.target.n);
        o["d"] = integer_to_json(s.target.d);
        o["k"] = integer_to_json(s.k);
        arr.push_back(std::move(o));
    }
    return arr;
}

ReductionChain chain_from_json(const Genus& g, const Pair& start, const nlohmann::json& v) {
    if (!v.is_array()) throw ParseError(1, 1, "chain must be an array");
    ReductionChain chain(g);
    Pair current = start;
    for (const auto& item : v) {
        const auto& kind = field(item, "kind");
        if (!kind.is_string() || (kind != "reduce" && kind != "dual")) {
            throw ParseError(1, 1, "step kind must be \"reduce\" or \"dual\"");
        }
        ReductionStep step{kind == "reduce" ? StepKind::Reduce : StepKind::DualReduce, current, pair_from_json(item),
                           integer_from_json(field(item, "k"))};
        current = step.target;
        chain.steps.push_back(std::move(step));
    }
    if (auto error = replay_chain(chain, start)) throw ParseError(1, 1, "invalid chain: " + *error);
    return chain;
}

ojson diagram_to_json(const AdmissibleDiagram& diagram) {
    ojson o;
    ojson top = ojson::array();
    for (const auto& p : diagram.top) top.push_back(pair_to_json(p));
    o["top"] = std::move(top);
    ojson links = ojson::array();
    for (const auto& link : diagram.links) {
        ojson l;
        l["meet"] = pair_to_json(link.meet);
        l["left"] = chain_to_json(link.left_chain);
        l["right"] = chain_to_json(link.right_chain);
        links.push_back(std::move(l));
    }
    o["links"] = std::move(links);
    o["terminal"] = chain_to_json(diagram.terminal_nice_witness);
    return o;
}

AdmissibleDiagram diagram_from_json(const Genus& g, const nlohmann::json& v) {
    AdmissibleDiagram diagram{g, {}, {}, ReductionChain(g)};
    const auto& top = field(v, "top");
    if (!top.is_array() || top.empty()) throw ParseError(1, 1, "diagram top must be a non-empty array");
    for (const auto& p : top) diagram.top.push_back(pair_from_json(p));
    const auto& links = field(v, "links");
    if (!links.is_array() || links.size() + 1 != diagram.top.size()) {
        throw ParseError(1, 1, "diagram needs one link per consecutive top pair");
    }
    for (std::size_t i = 0; i < links.size(); ++i) {
        diagram.links.push_back(DiagramLink{chain_from_json(g, diagram.top[i], field(links[i], "left")),
                                            chain_from_json(g, diagram.top[i + 1], field(links[i], "right")),
                                            pair_from_json(field(links[i], "meet"))});
    }
    diagram.terminal_nice_witness = chain_from_json(g, diagram.top.back(), field(v, "terminal"));
    return diagram;
}

ojson report_to_json(const ClassificationReport& r) {
    ojson o;
    o["genus"] = integer_to_json(r.genus.value());
    o["n"] = integer_to_json(r.pair.n);
    o["d"] = integer_to_json(r.pair.d);
    o["window"] = to_string(r.window);
    o["gcd"] = integer_to_json(r.gcd_nd);
    o["nice"] = r.is_nice;
    o["nice_chain"] = r.nice_witness ? chain_to_json(*r.nice_witness) : ojson(nullptr);
    o["fine"] = r.is_fine;
    o["fine_diagram"] = r.fine_witness ? diagram_to_json(*r.fine_witness) : ojson(nullptr);
    o["newstead"] = r.newstead_condition;
    ojson dims;
    dims["moduli"] = integer_to_json(r.moduli_dimension);
    ojson identity;
    identity["lhs"] = integer_to_json(r.quotient_identity.lhs);
    identity["rhs"] = integer_to_json(r.quotient_identity.rhs);
    identity["equal"] = r.quotient_identity.equal;
    dims["quotient_identity"] = std::move(identity);
    o["dims"] = std::move(dims);
    return o;
}

ClassificationReport report_from_json(const nlohmann::json& v) {
    try {
        const Genus g(integer_from_json(field(v, "genus")));
        const Pair p(integer_from_json(field(v, "n")), integer_from_json(field(v, "d")));
        const auto& window_text = field(v, "window");
        auto window = window_text.is_string() ? parse_window_status(window_text.get<std::string>()) : std::nullopt;
        if (!window) throw ParseError(1, 1, "unknown window status " + window_text.dump());
        const auto& dims = field(v, "dims");
        const auto& identity = field(dims, "quotient_identity");

        ClassificationReport r{g,
                               p,
                               *window,
                               integer_from_json(field(v, "gcd")),
                               bool_from_json(field(v, "nice")),
                               std::nullopt,
                               bool_from_json(field(v, "fine")),
                               std::nullopt,
                               bool_from_json(field(v, "newstead")),
                               gcd_corollary(g, p),
                               integer_from_json(field(dims, "moduli")),
                               {integer_from_json(field(identity, "lhs")), integer_from_json(field(identity, "rhs")),
                                bool_from_json(field(identity, "equal"))}};
        if (const auto& c = field(v, "nice_chain"); !c.is_null()) r.nice_witness = chain_from_json(g, p, c);
        if (const auto& f = field(v, "fine_diagram"); !f.is_null()) r.fine_witness = diagram_from_json(g, f);
        return r;
    } catch (const DomainError& e) {
        throw ParseError(1, 1, e.what());
    }
}

std::string csv_header() {
    return "genus,n,d,window,gcd,nice,nice_chain,fine,fine_top,fine_meets,newstead,gcd_corollary,moduli_dim,"
           "quotient_identity";
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

std::string colon_pairs(const std::vector<Pair>& pairs) {
    std::string out;
    for (const auto& p : pairs) {
        if (!out.empty()) out += ';';
        out += to_string(p.n) + ":" + to_string(p.d);
    }
    return out;
}

}  // namespace

std::string csv_row(const ClassificationReport& r) {
    std::ostringstream out;
    out << to_string(r.genus.value()) << ',' << to_string(r.pair.n) << ',' << to_string(r.pair.d) << ','
        << to_string(r.window) << ',' << to_string(r.gcd_nd) << ',' << flag(r.is_nice) << ','
        << (r.nice_witness ? step_codes(*r.nice_witness) : "") << ',' << flag(r.is_fine) << ',';
    if (r.fine_witness) {
        std::vector<Pair> meets;
        for (const auto& l : r.fine_witness->links) meets.push_back(l.meet);
        out << colon_pairs(r.fine_witness->top) << ',' << colon_pairs(meets);
    } else {
        out << ',';
    }
    out << ',' << flag(r.newstead_condition) << ',' << flag(r.gcd_corollary_holds) << ','
        << to_string(r.moduli_dimension) << ',' << flag(r.quotient_identity.equal);
    return out.str();
}

std::string chain_arrows(const ReductionChain& chain, const Pair& start) {
    std::string out = to_string(start);
    for (const auto& s : chain.steps) out += " -> " + to_string(s.target);
    return out;
}

std::string text_report(const ClassificationReport& r) {
    const Integer& g = r.genus.value();
    std::ostringstream out;
    out << "pair " << to_string(r.pair) << " at genus " << to_string(g) << '\n';
    out << "  window:             " << to_string(r.window) << '\n';
    out << "  gcd(n,d):           " << to_string(r.gcd_nd) << '\n';
    out << "  gcd(d,g):           " << to_string(gcd(r.pair.d, g)) << '\n';
    out << "  gcd(d+n,g):         " << to_string(gcd(Integer(r.pair.d + r.pair.n), g)) << '\n';
    out << "  nice:               " << flag(r.is_nice) << '\n';
    if (r.nice_witness) {
        out << "  nice chain:         " << chain_arrows(*r.nice_witness, r.pair) << '\n';
        out << "  steps:              " << step_codes(*r.nice_witness) << '\n';
    }
    out << "  fine:               " << flag(r.is_fine) << '\n';
    if (r.fine_witness) {
        const auto& dgm = *r.fine_witness;
        out << "  fine top row:       ";
        for (std::size_t i = 0; i < dgm.top.size(); ++i) out << (i ? " ~ " : "") << to_string(dgm.top[i]);
        out << '\n';
        for (std::size_t i = 0; i < dgm.links.size(); ++i) {
            const auto& l = dgm.links[i];
            out << "  link " << i + 1 << " meet " << to_string(l.meet) << ": "
                << chain_arrows(l.left_chain, dgm.top[i]) << " | " << chain_arrows(l.right_chain, dgm.top[i + 1])
                << '\n';
        }
    }
    out << "  newstead condition: " << flag(r.newstead_condition) << '\n';
    out << "  gcd corollary:      " << flag(r.gcd_corollary_holds) << '\n';
    out << "  moduli dimension:   " << to_string(r.moduli_dimension) << '\n';
    out << "  quotient identity:  " << to_string(r.quotient_identity.lhs) << " = "
        << to_string(r.quotient_identity.rhs) << " (" << (r.quotient_identity.equal ? "holds" : "FAILS") << ")\n";
    return out.str();
}

std::string serialize_report(const ClassificationReport& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return report_to_json(r).dump() + "\n";
        case OutputFormat::Csv: return csv_row(r) + "\n";
        case OutputFormat::Text: return text_report(r);
    }
    return {};
}

}  // namespace modrat
