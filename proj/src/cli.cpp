#include "lcas/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcas/ca_shift.hpp"
#include "lcas/evolve.hpp"
#include "lcas/factor.hpp"
#include "lcas/homs.hpp"
#include "lcas/language.hpp"
#include "lcas/mixing.hpp"
#include "lcas/version.hpp"

namespace lcas {
namespace {

using nlohmann::json;

// ---- literal parsers -------------------------------------------------------
// Shapes and offsets are ';'-separated tuples: "(0,0);(1,0)". Events are
// '|'-separated lists of cell=value assignments with an optional translation:
// "(0,0)=1,(1,0)=0@(2,0)". Value lists and dilations are comma-separated.

void skip_ws(std::string_view s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int64_t parse_int(std::string_view s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected an integer", start);
    int64_t v = 0;
    auto r = std::from_chars(s.data() + start, s.data() + i, v);
    if (r.ec != std::errc()) throw ParseError("integer out of range", start);
    return v;
}

void expect(std::string_view s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
}

ExpVec parse_tuple(std::string_view s, size_t& i, size_t dim) {
    expect(s, i, '(');
    ExpVec v;
    v.push_back(parse_int(s, i));
    skip_ws(s, i);
    while (i < s.size() && s[i] == ',') {
        ++i;
        v.push_back(parse_int(s, i));
        skip_ws(s, i);
    }
    expect(s, i, ')');
    if (v.size() != dim)
        throw ParseError("tuple has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(dim),
                         i);
    return v;
}

std::vector<ExpVec> parse_tuple_list(std::string_view s, size_t dim) {
    std::vector<ExpVec> out;
    size_t i = 0;
    out.push_back(parse_tuple(s, i, dim));
    skip_ws(s, i);
    while (i < s.size() && s[i] == ';') {
        ++i;
        out.push_back(parse_tuple(s, i, dim));
        skip_ws(s, i);
    }
    if (i != s.size()) throw ParseError("trailing characters after the tuple list", i);
    return out;
}

uint32_t residue(int64_t v, uint32_t p) {
    int64_t r = v % int64_t(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

std::vector<uint32_t> parse_value_list(std::string_view s, uint32_t p) {
    std::vector<uint32_t> out;
    size_t i = 0;
    out.push_back(residue(parse_int(s, i), p));
    skip_ws(s, i);
    while (i < s.size() && s[i] == ',') {
        ++i;
        out.push_back(residue(parse_int(s, i), p));
        skip_ws(s, i);
    }
    if (i != s.size()) throw ParseError("trailing characters after the value list", i);
    return out;
}

std::vector<int64_t> parse_int_list(std::string_view s) {
    std::vector<int64_t> out;
    size_t i = 0;
    out.push_back(parse_int(s, i));
    skip_ws(s, i);
    while (i < s.size() && s[i] == ',') {
        ++i;
        out.push_back(parse_int(s, i));
        skip_ws(s, i);
    }
    if (i != s.size()) throw ParseError("trailing characters after the list", i);
    return out;
}

// Reorder literal cell=value pairs into window (sorted) order.
std::pair<Window, std::vector<uint32_t>> assemble_window(const std::vector<ExpVec>& cells,
                                                         const std::vector<uint32_t>& values) {
    Window w{std::vector<ExpVec>(cells)};
    if (w.size() != cells.size()) throw DomainError("a cell is listed twice");
    std::vector<uint32_t> vals(w.size());
    for (size_t i = 0; i < cells.size(); ++i) vals[*w.index_of(cells[i])] = values[i];
    return {std::move(w), std::move(vals)};
}

struct EventLiteral {
    std::vector<ExpVec> cells;
    std::vector<uint32_t> values;
    ExpVec offset;
};

std::vector<EventLiteral> parse_event_list(std::string_view s, size_t dim, uint32_t p) {
    std::vector<EventLiteral> out;
    size_t i = 0;
    while (true) {
        EventLiteral ev;
        ev.offset = ExpVec(dim, 0);
        while (true) {
            ev.cells.push_back(parse_tuple(s, i, dim));
            expect(s, i, '=');
            ev.values.push_back(residue(parse_int(s, i), p));
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i < s.size() && s[i] == '@') {
            ++i;
            ev.offset = parse_tuple(s, i, dim);
            skip_ws(s, i);
        }
        out.push_back(std::move(ev));
        if (i < s.size() && s[i] == '|') {
            ++i;
            continue;
        }
        break;
    }
    if (i != s.size()) throw ParseError("trailing characters after the event list", i);
    return out;
}

std::string event_list_text(const std::vector<EventLiteral>& events) {
    std::string s;
    for (size_t e = 0; e < events.size(); ++e) {
        if (e) s += "|";
        for (size_t i = 0; i < events[e].cells.size(); ++i) {
            if (i) s += ",";
            s += vec_to_string(events[e].cells[i]) + "=" + std::to_string(events[e].values[i]);
        }
        if (!vec_is_zero(events[e].offset)) s += "@" + vec_to_string(events[e].offset);
    }
    return s;
}

// ---- json helpers ----------------------------------------------------------

json measure_json(MeasureValue m) {
    if (m.is_zero) return json{{"zero", true}};
    return json{{"p_exp", m.exponent}};
}

json window_json(const Window& w) {
    json a = json::array();
    for (const auto& c : w.cells()) a.push_back(vec_to_string(c));
    return a;
}

std::string shape_text(const std::vector<ExpVec>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ";";
        s += vec_to_string(cells[i]);
    }
    return s;
}

json budget_json(const Budget& b) {
    return json{{"max_window_cells", b.max_window_cells},
                {"max_top_sites", b.max_top_sites},
                {"max_rule_candidates", b.max_rule_candidates},
                {"max_enumeration", b.max_enumeration}};
}

// ---- option plumbing -------------------------------------------------------

struct Common {
    uint32_t p = 2;
    size_t d = 2;
    uint64_t budget = 0; // 0 keeps the library defaults
    uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "prime modulus")->required();
    cmd->add_option("--d", c.d, "number of variables, time axis last");
    cmd->add_option("--budget", c.budget, "cap on enumerations and rule candidates");
    cmd->add_option("--seed", c.seed, "seed for sampled checks");
    cmd->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"json", "text", "pgm"}));
    cmd->add_option("--out", c.out_path, "write the report to this file instead of stdout");
}

Budget make_budget(const Common& c) {
    Budget b;
    if (c.budget != 0) {
        b.max_enumeration = c.budget;
        b.max_rule_candidates = c.budget;
    }
    return b;
}

json common_config(const Common& c) {
    return json{{"p", c.p},
                {"d", c.d},
                {"seed", c.seed},
                {"format", c.format},
                {"budget", budget_json(make_budget(c))}};
}

struct Report {
    std::string payload;
    int code = 0;
};

Report json_report(const std::string& command, const json& config, const json& result,
                   int code = 0) {
    json doc{{"command", command},
             {"config", config},
             {"result", result},
             {"version", version_string}};
    return {doc.dump(2) + "\n", code};
}

// ---- subcommand handlers ---------------------------------------------------

Report run_normalize(const Common& c, const std::string& poly_text) {
    LaurentPoly a = parse_poly(poly_text, Prime(c.p), c.d);
    NormalizeResult nr = ca_normalize(a);
    json config = common_config(c);
    config["poly"] = to_string(a);
    json inverted = json::array();
    for (size_t i = 0; i < c.d; ++i)
        if (nr.transform.axis_mask & (1u << i)) inverted.push_back(i + 1);
    json result{{"phi", to_string(nr.shift.phi())},
                {"annihilator", to_string(nr.shift.annihilator())},
                {"transform",
                 {{"axis_mask", nr.transform.axis_mask},
                  {"inverted_axes", inverted},
                  {"unit", nr.transform.unit},
                  {"monomial", vec_to_string(nr.transform.monomial)}}}};
    return json_report("normalize", config, result);
}

Report run_evolve(const Common& c, const std::string& phi_text, int64_t steps,
                  const std::optional<std::string>& shape_text_opt,
                  const std::optional<std::string>& values_text) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    std::vector<ExpVec> cells = shape_text_opt
                                    ? parse_tuple_list(*shape_text_opt, c.d - 1)
                                    : std::vector<ExpVec>{ExpVec(c.d - 1, 0)};
    std::vector<uint32_t> values =
        values_text ? parse_value_list(*values_text, c.p) : std::vector<uint32_t>(cells.size(), 1);
    if (values.size() != cells.size())
        throw DomainError("value list length does not match the top layer cells");
    auto [window, vals] = assemble_window(cells, values);
    SpaceTimeGrid grid = evolve(ca, Configuration(std::move(window), std::move(vals)), steps);

    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    config["steps"] = steps;
    config["shape"] = shape_text(cells);
    config["values"] = values;

    if (c.format == "text") return {render_text(grid) + "\n", 0};
    if (c.format == "pgm") {
        std::vector<uint8_t> bytes = render_pgm(grid);
        return {std::string(bytes.begin(), bytes.end()), 0};
    }
    json layers = json::array();
    for (size_t k = 0; k < grid.layers.size(); ++k) {
        json cells_json = json::array();
        for (const auto& [cell, v] : grid.layers[k])
            cells_json.push_back(json{{"cell", vec_to_string(cell)}, {"value", v}});
        layers.push_back(json{{"time", grid.top_time - int64_t(k)}, {"cells", cells_json}});
    }
    json result{{"space_dim", grid.space_dim}, {"top_time", grid.top_time}, {"layers", layers}};
    return json_report("evolve", config, result);
}

Report run_language(const Common& c, const std::string& phi_text, const std::string& shape_lit) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    std::vector<ExpVec> cells = parse_tuple_list(shape_lit, c.d);
    Window w{std::vector<ExpVec>(cells)};
    LanguageSubspace lang = language(ca, w, make_budget(c));
    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    config["shape"] = shape_text(cells);
    json basis = json::array();
    for (size_t i = 0; i < lang.rank(); ++i) basis.push_back(lang.basis().row(i));
    json result{{"window", window_json(lang.window())},
                {"rank", lang.rank()},
                {"size", lang.size()},
                {"basis", basis}};
    return json_report("language", config, result);
}

Report run_measure(const Common& c, const std::string& phi_text, const std::string& events_lit) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    std::vector<EventLiteral> literals = parse_event_list(events_lit, c.d, c.p);
    std::vector<CylinderEvent> events;
    for (const EventLiteral& ev : literals) {
        auto [w, vals] = assemble_window(ev.cells, ev.values);
        events.push_back(CylinderEvent{std::move(w), std::move(vals), ev.offset});
    }
    MeasureValue m = cylinder_measure(ca, events, make_budget(c));
    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    config["events"] = event_list_text(literals);
    json result{{"measure", measure_json(m)}, {"event_count", events.size()}};
    return json_report("measure", config, result);
}

std::vector<BaseEvent> base_events(const std::vector<EventLiteral>& literals) {
    std::vector<BaseEvent> events;
    for (const EventLiteral& ev : literals) {
        if (!vec_is_zero(ev.offset))
            throw DomainError("base events take no translation; offsets supply it");
        auto [w, vals] = assemble_window(ev.cells, ev.values);
        events.push_back(BaseEvent{std::move(w), std::move(vals)});
    }
    return events;
}

// Single cell at the origin: value 1 for the first event, 0 for the rest.
std::vector<EventLiteral> default_event_literals(size_t count, size_t dim) {
    std::vector<EventLiteral> out;
    for (size_t i = 0; i < count; ++i)
        out.push_back(EventLiteral{{ExpVec(dim, 0)}, {i == 0 ? 1u : 0u}, ExpVec(dim, 0)});
    return out;
}

Report run_mixing_scan(const Common& c, const std::string& phi_text,
                       const std::string& offsets_lit,
                       const std::optional<std::string>& events_lit,
                       const std::optional<std::string>& dilations_lit, int64_t mmax) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    PrimitiveSet offsets{parse_tuple_list(offsets_lit, c.d)};
    std::vector<EventLiteral> literals =
        events_lit ? parse_event_list(*events_lit, c.d, c.p)
                   : default_event_literals(offsets.offsets.size(), c.d);
    std::vector<int64_t> dilations =
        dilations_lit ? parse_int_list(*dilations_lit) : default_dilations(c.p, mmax);
    DilationReport report =
        mixing_scan(ca, base_events(literals), offsets, dilations, make_budget(c));

    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    config["offsets"] = shape_text(offsets.offsets);
    config["events"] = event_list_text(literals);
    config["dilations"] = dilations;
    config["mmax"] = mmax;
    json rows = json::array();
    for (const DilationRow& r : report.rows)
        rows.push_back(json{{"m", r.m},
                            {"joint", measure_json(r.joint)},
                            {"product", measure_json(r.product)},
                            {"equal", r.equal}});
    json factors = json::array();
    for (MeasureValue f : report.factors) factors.push_back(measure_json(f));
    json result{{"factors", factors}, {"rows", rows}};
    return json_report("mixing-scan", config, result);
}

Report run_nonmix_cert(const Common& c, const std::string& phi_text, const std::string& r_text,
                       uint32_t jmax) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    LaurentPoly r = parse_poly(r_text, Prime(c.p), c.d);
    CertificateReport report = nonmixing_certificate(ca, r, jmax, make_budget(c));
    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    config["r"] = to_string(r);
    config["jmax"] = jmax;
    json rows = json::array();
    for (const CertificateRow& row : report.rows)
        rows.push_back(json{{"j", row.j}, {"m", row.m}, {"joint", measure_json(row.joint)}});
    json result{{"q", to_string(report.q)},
                {"offsets", shape_text(report.offsets.offsets)},
                {"rows", rows},
                {"product", measure_json(report.product)},
                {"witnessed", report.witnessed}};
    return json_report("nonmix-cert", config, result, report.witnessed ? 0 : 1);
}

Report run_horizontal(const Common& c, const std::string& phi_text,
                      const std::string& offsets_lit,
                      const std::optional<std::string>& events_lit, int64_t mmax) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    PrimitiveSet offsets{parse_tuple_list(offsets_lit, c.d)};
    std::vector<EventLiteral> literals =
        events_lit ? parse_event_list(*events_lit, c.d, c.p)
                   : default_event_literals(offsets.offsets.size(), c.d);
    HorizontalReport report =
        horizontal_mixing_check(ca, offsets, base_events(literals), mmax, make_budget(c));
    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    config["offsets"] = shape_text(offsets.offsets);
    config["events"] = event_list_text(literals);
    config["mmax"] = mmax;
    json rows = json::array();
    for (const HorizontalRow& row : report.rows)
        rows.push_back(json{{"m", row.m},
                            {"joint", measure_json(row.joint)},
                            {"product", measure_json(row.product)},
                            {"equal", row.equal}});
    json result{{"rows", rows}, {"found", report.found}};
    if (report.found) result["m0"] = report.m0;
    return json_report("horizontal-check", config, result, report.found ? 0 : 1);
}

Report run_hom_search(const Common& c, const std::string& phi_text,
                      const std::optional<std::string>& psi_text, const std::string& shape_lit) {
    CAShift src = make_ca_shift(c.p, c.d, phi_text);
    CAShift dst = psi_text ? make_ca_shift(c.p, c.d, *psi_text) : src;
    std::vector<ExpVec> cells = parse_tuple_list(shape_lit, c.d);
    Shape s(cells.begin(), cells.end());
    HomSearchResult res = hom_search(src, dst, s, make_budget(c));
    json config = common_config(c);
    config["phi"] = to_string(src.phi());
    config["psi"] = to_string(dst.phi());
    config["shape"] = shape_text(cells);
    json rules = json::array();
    for (const FoundRule& fr : res.rules) {
        json entry{{"table", fr.rule.table}, {"additive", fr.additive}};
        entry["representative"] =
            fr.representative ? json(to_string(*fr.representative)) : json(nullptr);
        rules.push_back(std::move(entry));
    }
    json result{{"candidates", res.candidates},
                {"expected_trivial", res.expected_trivial},
                {"rule_count", res.rules.size()},
                {"rules", rules}};
    return json_report("hom-search", config, result);
}

Report run_dual_homs(const Common& c, const std::string& phi_text,
                     const std::optional<std::string>& psi_text, const std::string& shape_lit) {
    CAShift src = make_ca_shift(c.p, c.d, phi_text);
    CAShift dst = psi_text ? make_ca_shift(c.p, c.d, *psi_text) : src;
    std::vector<ExpVec> cells = parse_tuple_list(shape_lit, c.d);
    Shape bound(cells.begin(), cells.end());
    std::vector<DualHom> classes = dual_hom_search(src, dst, bound, make_budget(c));
    json config = common_config(c);
    config["phi"] = to_string(src.phi());
    config["psi"] = to_string(dst.phi());
    config["shape"] = shape_text(cells);
    json list = json::array();
    for (const DualHom& h : classes) list.push_back(to_string(h));
    json result{{"classes", list}, {"class_count", classes.size()}};
    return json_report("dual-homs", config, result);
}

Report run_aut(const Common& c, const std::string& phi_text) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    AutDescription aut = aut_group(ca);
    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    json gens = json::array();
    for (const UnitGenerator& g : aut.free_generators)
        gens.push_back(json{{"name", g.name},
                            {"element", to_string(g.element)},
                            {"inverse_witness", to_string(g.inverse_witness)}});
    json factors = json::array();
    for (const auto& [f, mult] : aut.phi_factors.factors)
        factors.push_back(json{{"poly", to_string(f)}, {"multiplicity", mult}});
    json result{{"torsion_order", aut.torsion_order},
                {"torsion_generator", aut.torsion_generator},
                {"rank", aut.rank},
                {"monomial_only", aut.monomial_only},
                {"factors_verified", aut.factors_verified},
                {"free_generators", gens},
                {"phi_factors",
                 {{"unit", aut.phi_factors.unit},
                  {"monomial", vec_to_string(aut.phi_factors.monomial)},
                  {"factors", factors}}}};
    return json_report("aut", config, result);
}

Report run_collinear(const Common& c, const std::string& poly_text) {
    LaurentPoly a = parse_poly(poly_text, Prime(c.p), c.d);
    std::optional<CollinearSupport> cs = collinear_support(a);
    json config = common_config(c);
    config["poly"] = to_string(a);
    json result;
    if (cs) {
        result = json{{"collinear", true},
                      {"direction", vec_to_string(cs->direction)},
                      {"step", cs->step}};
    } else {
        result = json{{"collinear", false}};
    }
    return json_report("collinear", config, result, cs ? 0 : 1);
}

Report run_factor(const Common& c, const std::string& poly_text) {
    LaurentPoly a = parse_poly(poly_text, Prime(c.p), c.d);
    Factorization fac = univariate_factor(a);
    json config = common_config(c);
    config["poly"] = to_string(a);
    json factors = json::array();
    for (const auto& [f, mult] : fac.factors)
        factors.push_back(json{{"poly", to_string(f)}, {"multiplicity", mult}});
    json result{{"unit", fac.unit},
                {"monomial", vec_to_string(fac.monomial)},
                {"factors", factors}};
    return json_report("factor", config, result);
}

Report run_constants(const Common& c, const std::string& phi_text) {
    CAShift ca = make_ca_shift(c.p, c.d, phi_text);
    std::set<uint32_t> points = constant_points(ca);
    json config = common_config(c);
    config["phi"] = to_string(ca.phi());
    json result{{"points", points}, {"all_residues", points.size() == c.p}};
    return json_report("constants", config, result);
}

int write_report(const Report& report, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        f.write(report.payload.data(), std::streamsize(report.payload.size()));
    } else {
        out.write(report.payload.data(), std::streamsize(report.payload.size()));
    }
    return report.code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for linear cellular automaton shifts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string);

    Common c;
    std::string poly_text, phi_text, shape_lit, offsets_lit, events_req;
    std::optional<std::string> psi_text, events_lit, dilations_lit, values_text, top_shape;
    std::string r_text = "1";
    int64_t steps = 16, mmax = 64;
    uint32_t jmax = 5;

    CLI::App* normalize = app.add_subcommand("normalize", "bring an annihilator to CA form");
    add_common(normalize, c);
    normalize->add_option("--poly", poly_text, "candidate annihilator")->required();

    CLI::App* evolve_cmd = app.add_subcommand("evolve", "run the automaton downward");
    add_common(evolve_cmd, c);
    evolve_cmd->add_option("--phi", phi_text, "local rule polynomial")->required();
    evolve_cmd->add_option("--steps", steps, "number of layers below the top");
    evolve_cmd->add_option("--shape", top_shape, "top layer cells, spatial tuples");
    evolve_cmd->add_option("--values", values_text, "top layer values, comma separated");

    CLI::App* language_cmd = app.add_subcommand("language", "window language of the shift");
    add_common(language_cmd, c);
    language_cmd->add_option("--phi", phi_text, "local rule polynomial")->required();
    language_cmd->add_option("--shape", shape_lit, "window cells")->required();

    CLI::App* measure = app.add_subcommand("measure", "joint cylinder measure");
    add_common(measure, c);
    measure->add_option("--phi", phi_text, "local rule polynomial")->required();
    measure->add_option("--events", events_req, "cylinder events")->required();

    CLI::App* scan = app.add_subcommand("mixing-scan", "joint vs product along dilations");
    add_common(scan, c);
    scan->add_option("--phi", phi_text, "local rule polynomial")->required();
    scan->add_option("--offsets", offsets_lit, "primitive offsets, first at the origin")
        ->required();
    scan->add_option("--events", events_lit, "base events, one per offset");
    scan->add_option("--dilations", dilations_lit, "dilations to test, comma separated");
    scan->add_option("--mmax", mmax, "largest default dilation");

    CLI::App* cert = app.add_subcommand("nonmix-cert", "witness a non-mixing triple");
    add_common(cert, c);
    cert->add_option("--phi", phi_text, "local rule polynomial")->required();
    cert->add_option("--r", r_text, "multiplier for the annihilator");
    cert->add_option("--jmax", jmax, "test dilations p^1 .. p^jmax");

    CLI::App* horizontal = app.add_subcommand("horizontal-check", "mixing along one layer");
    add_common(horizontal, c);
    horizontal->add_option("--phi", phi_text, "local rule polynomial")->required();
    horizontal->add_option("--offsets", offsets_lit, "offsets with zero final coordinate")
        ->required();
    horizontal->add_option("--events", events_lit, "base events, one per offset");
    horizontal->add_option("--mmax", mmax, "scan dilations 1..mmax");

    CLI::App* homs = app.add_subcommand("hom-search", "local rules carrying one shift into another");
    add_common(homs, c);
    homs->add_option("--phi", phi_text, "source local rule polynomial")->required();
    homs->add_option("--psi", psi_text, "destination polynomial, defaults to phi");
    homs->add_option("--shape", shape_lit, "coding shape")->required();

    CLI::App* duals = app.add_subcommand("dual-homs", "polynomial maps between the duals");
    add_common(duals, c);
    duals->add_option("--phi", phi_text, "source local rule polynomial")->required();
    duals->add_option("--psi", psi_text, "destination polynomial, defaults to phi");
    duals->add_option("--shape", shape_lit, "support bound for the multiplier")->required();

    CLI::App* aut = app.add_subcommand("aut", "automorphism group description");
    add_common(aut, c);
    aut->add_option("--phi", phi_text, "local rule polynomial")->required();

    CLI::App* collinear = app.add_subcommand("collinear", "is the support on one line");
    add_common(collinear, c);
    collinear->add_option("--poly", poly_text, "polynomial to inspect")->required();

    CLI::App* factor = app.add_subcommand("factor", "factor a univariate polynomial");
    add_common(factor, c);
    factor->add_option("--poly", poly_text, "polynomial to factor")->required();

    CLI::App* constants = app.add_subcommand("constants", "constant points of the shift");
    add_common(constants, c);
    constants->add_option("--phi", phi_text, "local rule polynomial")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << version_string << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (c.format == "pgm" && !app.got_subcommand(evolve_cmd)) {
        err << "error: pgm output only applies to evolve\n";
        return 2;
    }

    try {
        Report report;
        if (app.got_subcommand(normalize)) {
            report = run_normalize(c, poly_text);
        } else if (app.got_subcommand(evolve_cmd)) {
            report = run_evolve(c, phi_text, steps, top_shape, values_text);
        } else if (app.got_subcommand(language_cmd)) {
            report = run_language(c, phi_text, shape_lit);
        } else if (app.got_subcommand(measure)) {
            report = run_measure(c, phi_text, events_req);
        } else if (app.got_subcommand(scan)) {
            report = run_mixing_scan(c, phi_text, offsets_lit, events_lit, dilations_lit, mmax);
        } else if (app.got_subcommand(cert)) {
            report = run_nonmix_cert(c, phi_text, r_text, jmax);
        } else if (app.got_subcommand(horizontal)) {
            report = run_horizontal(c, phi_text, offsets_lit, events_lit, mmax);
        } else if (app.got_subcommand(homs)) {
            report = run_hom_search(c, phi_text, psi_text, shape_lit);
        } else if (app.got_subcommand(duals)) {
            report = run_dual_homs(c, phi_text, psi_text, shape_lit);
        } else if (app.got_subcommand(aut)) {
            report = run_aut(c, phi_text);
        } else if (app.got_subcommand(collinear)) {
            report = run_collinear(c, poly_text);
        } else if (app.got_subcommand(factor)) {
            report = run_factor(c, poly_text);
        } else {
            report = run_constants(c, phi_text);
        }
        return write_report(report, c.out_path, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

} // namespace lcas
