#pragma once

// Command-line front end: bound tables and queries, class expansions,
// Newton-primitivity reports, sequence statistics, heights, and exact
// regularity verification.
//
// Exit codes: 0 on success, 1 when a check reports FAIL (a primitivity
// defect, a sample on which a candidate map drops rank), 2 on usage or
// domain errors.  One process, no state outside the arguments; randomized
// commands require an explicit --seed.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <regemb/bounds.hpp>
#include <regemb/chern.hpp>
#include <regemb/errors.hpp>
#include <regemb/graded.hpp>
#include <regemb/hopf.hpp>
#include <regemb/map_io.hpp>
#include <regemb/modp.hpp>
#include <regemb/regular.hpp>

namespace regemb::cli {

using nlohmann::json;

enum class Format { text, json, csv };

namespace detail {

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

inline json to_json(const BoundReport& r) {
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    json inter = json::object();
    for (const auto& [k, v] : r.intermediates) inter[k] = v;
    return {{"theorem", r.theorem_id},
            {"inputs", inputs},
            {"least_admissible_N", r.least_admissible_N},
            {"excluded_up_to", r.excluded_up_to},
            {"intermediates", inter},
            {"notes", r.notes}};
}

inline std::string join_notes(const std::vector<std::string>& notes) {
    std::string s;
    for (const auto& n : notes) {
        if (!s.empty()) s += "; ";
        s += n;
    }
    return s;
}

inline std::vector<i64> parse_int_list(const std::string& csv, const char* what) {
    std::vector<i64> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + item + "' is not an integer");
        }
    }
    return out;
}

struct Sink {
    std::ostringstream payload;
    Format format = Format::text;
    std::string out_file;

    int flush(std::ostream& out, std::ostream& err, int code) {
        std::string text = payload.str();
        if (!out_file.empty()) {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) {
                err << "error: cannot open output file '" << out_file << "'\n";
                return 2;
            }
            f << text;
        } else {
            out << text;
        }
        return code;
    }
};

inline void add_common_flags(CLI::App* cmd, std::string* format, std::string* out_file) {
    cmd->add_option("--format", *format, "output format: text, json or csv")
        ->default_val("text");
    cmd->add_option("--out", *out_file, "write the output to a file instead of stdout");
}

// ---------------------------------------------------------------- bounds

inline std::string table_cell(const std::optional<BoundReport>& r) {
    return r ? std::to_string(r->least_admissible_N) : "-";
}

inline int emit_bounds_table(const std::vector<std::array<i64, 3>>& triples, Sink& sink) {
    auto rows = comparison_table(triples);
    if (sink.format == Format::csv) {
        sink.payload << "d,k,p,thmA,thmB,thmC,notes\n";
        for (const auto& r : rows) {
            sink.payload << r.d << "," << r.k << "," << r.p << ","
                         << r.real_bound.least_admissible_N << ","
                         << (r.prime_bound ? std::to_string(r.prime_bound->least_admissible_N) : "")
                         << ","
                         << (r.chisholm ? std::to_string(r.chisholm->least_admissible_N) : "")
                         << "," << join_notes(r.notes) << "\n";
        }
    } else if (sink.format == Format::json) {
        json jrows = json::array();
        for (const auto& r : rows) {
            json row = {{"d", r.d},           {"k", r.k},
                        {"p", r.p},           {"thmA", to_json(r.real_bound)},
                        {"thmB", nullptr},    {"thmC", nullptr},
                        {"notes", r.notes}};
            if (r.prime_bound) row["thmB"] = to_json(*r.prime_bound);
            if (r.chisholm) row["thmC"] = to_json(*r.chisholm);
            jrows.push_back(row);
        }
        json doc = {{"command", "bounds table"}, {"rows", jrows}, {"note", upper_bound_note()}};
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << std::setw(3) << "d" << std::setw(4) << "k" << std::setw(4) << "p"
                     << " |" << std::setw(6) << "thmA" << std::setw(6) << "thmB"
                     << std::setw(6) << "thmC" << " | notes\n";
        for (const auto& r : rows) {
            sink.payload << std::setw(3) << r.d << std::setw(4) << r.k << std::setw(4)
                         << r.p << " |" << std::setw(6) << r.real_bound.least_admissible_N
                         << std::setw(6) << table_cell(r.prime_bound) << std::setw(6)
                         << table_cell(r.chisholm) << " | " << join_notes(r.notes) << "\n";
        }
        sink.payload << "note: " << upper_bound_note() << "\n";
    }
    return 0;
}

inline void emit_report_text(const BoundReport& r, Sink& sink) {
    sink.payload << "theorem: " << r.theorem_id << "\n";
    for (const auto& [k, v] : r.inputs) sink.payload << "  " << k << " = " << v << "\n";
    sink.payload << "least_admissible_N: " << r.least_admissible_N << "\n";
    sink.payload << "excluded_up_to: " << r.excluded_up_to << "\n";
    for (const auto& [k, v] : r.intermediates)
        sink.payload << "  " << k << " = " << v << "\n";
    for (const auto& n : r.notes) sink.payload << "note: " << n << "\n";
}

inline int emit_bound_query(const BoundReport& r, Sink& sink) {
    if (sink.format == Format::json) {
        json doc = {{"command", "bounds query"}, {"report", to_json(r)}};
        sink.payload << doc.dump(2) << "\n";
    } else if (sink.format == Format::csv) {
        sink.payload << "theorem,least_admissible_N,excluded_up_to,notes\n"
                     << r.theorem_id << "," << r.least_admissible_N << ","
                     << r.excluded_up_to << "," << join_notes(r.notes) << "\n";
    } else {
        emit_report_text(r, sink);
    }
    return 0;
}

// ---------------------------------------------------------------- classes

inline int emit_classes_cyclic(i64 p, i64 d_real, i64 mult, Sink& sink) {
    auto model = make_cyclic_model(p, d_real);
    Element total = total_chern_cyclic(p, mult, model);
    Element inverse = invert_unit(total);
    bool product_one = (total * inverse == model.one());
    std::optional<bool> wilson;
    if (mult == 1) {
        // T^(p-1) is already the zero element when the truncation is lower
        Element expect = model.one() + model.T(static_cast<std::int32_t>(p - 1)) * (p - 1);
        wilson = (total == expect);
    }
    i64 max_deg = max_nonvanishing_inverse_degree(inverse);
    std::vector<std::string> notes = {
        "the literal product (1+T)(1+2T)...(1+(p-1)T) carries top coefficient p-1; "
        "closed forms are often quoted with coefficient +1 instead"};

    if (sink.format == Format::json) {
        json checks = {{"product_with_total_is_one", product_one}};
        if (wilson) checks["wilson_form"] = *wilson;
        json doc = {{"command", "classes cyclic"},
                    {"model",
                     {{"p", p}, {"d_real", d_real}, {"max_power", model.max_power}}},
                    {"mult", mult},
                    {"total_terms", total.to_string()},
                    {"element_terms", inverse.to_string()},
                    {"max_nonvanishing_degree", max_deg},
                    {"checks", checks},
                    {"notes", notes}};
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << "cyclic model: p=" << p << " d_real=" << d_real
                     << " (T^i != 0 iff i <= " << model.max_power << ")\n"
                     << "mult: " << mult << "\n"
                     << "total:   " << total.to_string() << "\n"
                     << "inverse: " << inverse.to_string() << "\n"
                     << "max_nonvanishing_degree: " << max_deg << "\n"
                     << "checks: product_with_total_is_one="
                     << (product_one ? "yes" : "NO");
        if (wilson) sink.payload << " wilson_form=" << (*wilson ? "yes" : "NO");
        sink.payload << "\n";
        for (const auto& n : notes) sink.payload << "note: " << n << "\n";
    }
    return product_one ? 0 : 1;
}

inline int emit_classes_config(i64 p, i64 t, i64 k, Sink& sink) {
    auto model = make_config_model(p, t, k);
    auto rep = analyze_config_model(model);
    bool top_is_one = rep.top_dual_coefficient == 1;
    auto top_height = element_height(model.c(k - 1), 4 * model.d);
    bool height_is_d = top_height == std::optional<i64>(model.d);

    if (sink.format == Format::json) {
        json doc = {{"command", "classes config"},
                    {"model", {{"p", p}, {"t", t}, {"d", model.d}, {"k", k}}},
                    {"element_terms", rep.inverse_chern.to_string()},
                    {"top_dual_coefficient", rep.top_dual_coefficient},
                    {"max_nonvanishing_degree", rep.max_degree},
                    {"c_top_height", top_height ? json(*top_height) : json(nullptr)},
                    {"checks",
                     {{"zero_above_top", rep.zero_above_top},
                      {"top_dual_is_one", top_is_one},
                      {"c_top_height_is_d", height_is_d}}}};
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << "config model: p=" << p << " t=" << t << " d=" << model.d
                     << " k=" << k << " (c_i^" << model.d << " = 0, degree cap "
                     << 2 * (model.d - 1) * (k - 1) << ")\n"
                     << "inverse: " << rep.inverse_chern.to_string() << "\n"
                     << "top_dual_coefficient: " << rep.top_dual_coefficient << "\n"
                     << "max_nonvanishing_degree: " << rep.max_degree << "\n"
                     << "height of c_" << (k - 1) << ": "
                     << (top_height ? std::to_string(*top_height) : "> cap") << "\n"
                     << "checks: zero_above_top=" << (rep.zero_above_top ? "yes" : "NO")
                     << " top_dual_is_one=" << (top_is_one ? "yes" : "NO")
                     << " c_top_height_is_d=" << (height_is_d ? "yes" : "NO") << "\n";
    }
    return (rep.zero_above_top && top_is_one && height_is_d) ? 0 : 1;
}

// ---------------------------------------------------------------- newton

inline int emit_newton_check(i64 p, i64 d, std::optional<i64> n, Sink& sink) {
    auto spec = n ? make_cofiber_spec(p, d, *n) : make_coalgebra_spec(p, d);
    auto v = n ? extended_newton_polynomials(spec) : newton_polynomials(spec);

    struct Row {
        i64 l;
        std::string v_str, defect_str;
        bool v_prim, dv_prim;
    };
    std::vector<Row> rows;
    bool all_pass = true;
    for (i64 l = 1; l <= spec.hi; ++l) {
        const Element& vl = v[static_cast<std::size_t>(l - 1)];
        auto defect = coproduct_defect(vl, spec);
        bool v_prim = defect.is_zero();
        bool dv_prim = is_primitive(bockstein(vl, spec), spec);
        all_pass = all_pass && v_prim && dv_prim;
        rows.push_back({l, vl.to_string(), defect.to_string(), v_prim, dv_prim});
    }

    bool support_ok = true;
    if (n) {
        for (i64 l = 1; l <= spec.hi; ++l) {
            bool nonzero = !v[static_cast<std::size_t>(l - 1)].is_zero();
            support_ok = support_ok && (nonzero == (l >= (*n + 1) / 2));
        }
        all_pass = all_pass && support_ok;
    }

    if (sink.format == Format::json) {
        json jrows = json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"l", r.l},
                             {"v", r.v_str},
                             {"defect", r.defect_str},
                             {"v_primitive", r.v_prim},
                             {"bockstein_primitive", r.dv_prim}});
        }
        json doc = {{"command", "newton check"},
                    {"p", p},
                    {"d", d},
                    {"variant", n ? "cofiber" : "plain"},
                    {"rows", jrows},
                    {"all_pass", all_pass}};
        if (n) {
            doc["n"] = *n;
            doc["support_pattern_ok"] = support_ok;
        }
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << "newton check: p=" << p << " d=" << d;
        if (n) sink.payload << " n=" << *n << " (cofiber)";
        else sink.payload << " (plain)";
        sink.payload << "\n";
        for (const auto& r : rows) {
            sink.payload << " l=" << r.l << "  v=" << r.v_str << "  defect=" << r.defect_str
                         << "  v:" << (r.v_prim ? "PASS" : "FAIL")
                         << "  dv:" << (r.dv_prim ? "PASS" : "FAIL") << "\n";
        }
        if (n)
            sink.payload << "support pattern: " << (support_ok ? "PASS" : "FAIL") << "\n";
        sink.payload << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- dl stats

inline int emit_dl_stats(i64 p, const std::string& seq_csv, Sink& sink) {
    std::vector<i64> flat = parse_int_list(seq_csv, "--seq");
    DLSequence seq;
    if (p == 2) {
        seq = make_dl_sequence(2, flat);
    } else {
        if (flat.size() % 2 != 0)
            throw contract_violation(
                "odd-prime sequences are flat (eps_1,s_1,...,eps_k,s_k) pairs");
        std::vector<i64> s, eps;
        for (std::size_t i = 0; i < flat.size(); i += 2) {
            eps.push_back(flat[i]);
            s.push_back(flat[i + 1]);
        }
        seq = make_dl_sequence(p, s, eps);
    }
    auto st = dl_sequence_stats(seq);

    std::string excess = st.excess ? std::to_string(*st.excess) : "inf";
    if (sink.format == Format::json) {
        json doc = {{"command", "dl stats"},
                    {"p", p},
                    {"sequence", flat},
                    {"degree", st.degree},
                    {"length", st.length},
                    {"excess", st.excess ? json(*st.excess) : json(nullptr)},
                    {"b", st.b},
                    {"admissible", st.admissible}};
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << "dl stats: p=" << p << " I=(" << seq_csv << ")\n"
                     << "degree=" << st.degree << " length=" << st.length
                     << " excess=" << excess << " b=" << st.b
                     << " admissible=" << (st.admissible ? "yes" : "no") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- heights

inline int emit_heights(i64 d, i64 p, Sink& sink) {
    auto res = height_bound(d, p);
    if (sink.format == Format::json) {
        json doc = {{"command", "heights"},
                    {"d", d},
                    {"p", p},
                    {"height_bound", res.value},
                    {"notes", res.notes}};
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << "height bound: d=" << d << " p=" << p << "\n"
                     << "value: " << res.value << "\n";
        for (const auto& n : res.notes) sink.payload << "note: " << n << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

inline int emit_verify(const PolyMapC& f, const std::string& label, i64 k, i64 samples,
                       std::uint64_t seed, i64 box, Sink& sink) {
    auto outcome = verify_on_samples(f, k, samples, seed, box);
    const char* asymmetry =
        "a failing sample certifies the map is not k-regular; passing samples are "
        "evidence, not proof";
    if (sink.format == Format::json) {
        json doc = {{"command", "verify"},
                    {"map", label},
                    {"k", k},
                    {"N", f.dimension()},
                    {"samples", outcome.samples},
                    {"seed", static_cast<i64>(seed)},
                    {"box", box},
                    {"passes", outcome.passes},
                    {"failures", outcome.failures},
                    {"regular_on_all_samples", outcome.all_pass()},
                    {"note", asymmetry}};
        sink.payload << doc.dump(2) << "\n";
    } else {
        sink.payload << "verify: " << label << " k=" << k << " (N=" << f.dimension()
                     << ") samples=" << outcome.samples << " seed=" << seed
                     << " box=" << box << "\n"
                     << "regular on all samples: " << (outcome.all_pass() ? "yes" : "no")
                     << " (" << outcome.passes << "/" << outcome.samples << ")\n"
                     << "note: " << asymmetry << "\n";
    }
    return outcome.all_pass() ? 0 : 1;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    using namespace detail;

    CLI::App app{"exact mod-p bound calculators and verifiers for regular and skew "
                 "embedding obstructions"};
    app.require_subcommand(1);

    // bounds ----------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "lower-bound calculators");
    bounds_cmd->require_subcommand(1);

    auto* table_cmd = bounds_cmd->add_subcommand("table", "comparison table rows (d,k,p)");
    std::vector<std::string> row_specs;
    std::string table_format, table_out;
    table_cmd->add_option("--rows", row_specs, "rows as d,k,p triples")
        ->required()
        ->expected(-1);
    add_common_flags(table_cmd, &table_format, &table_out);

    auto* query_cmd = bounds_cmd->add_subcommand("query", "evaluate one bound");
    std::string theorem, query_format, query_out;
    i64 q_d = 0, q_d_real = 0, q_k = 0, q_p = 0, q_ell = 0, q_m = 0, q_dual = -1;
    query_cmd
        ->add_option("--theorem", theorem,
                     "one of: kregular_real kregular_prime kregular_chisholm "
                     "kregular_brs skew_real skew_prime skew_chisholm cat_lower "
                     "secat_range height_bound derived_kregular derived_skew")
        ->required();
    query_cmd->add_option("--d", q_d, "complex dimension");
    query_cmd->add_option("--d-real", q_d_real, "real dimension");
    query_cmd->add_option("--k", q_k, "number of points / regularity");
    query_cmd->add_option("--p", q_p, "prime");
    query_cmd->add_option("--ell", q_ell, "skew parameter");
    query_cmd->add_option("--m", q_m, "prime-power exponent for secat_range");
    query_cmd->add_option("--dual-degree", q_dual,
                          "non-vanishing inverse-class degree for derived_* queries");
    add_common_flags(query_cmd, &query_format, &query_out);

    // classes ---------------------------------------------------------
    auto* classes_cmd = app.add_subcommand("classes", "class expansions in the models");
    classes_cmd->require_subcommand(1);

    auto* cyclic_cmd = classes_cmd->add_subcommand("cyclic", "truncated cyclic model");
    i64 cy_p = 0, cy_d_real = 0, cy_mult = 1;
    std::string cy_format, cy_out;
    cyclic_cmd->add_option("--p", cy_p, "odd prime")->required();
    cyclic_cmd->add_option("--d-real", cy_d_real, "real source dimension")->required();
    cyclic_cmd->add_option("--mult", cy_mult, "number of bundle copies");
    add_common_flags(cyclic_cmd, &cy_format, &cy_out);

    auto* config_cmd = classes_cmd->add_subcommand("config", "configuration model");
    i64 cf_p = 0, cf_t = 0, cf_k = 0;
    std::string cf_format, cf_out;
    config_cmd->add_option("--p", cf_p, "odd prime")->required();
    config_cmd->add_option("--t", cf_t, "power: d = p^t")->required();
    config_cmd->add_option("--k", cf_k, "number of points")->required();
    add_common_flags(config_cmd, &cf_format, &cf_out);

    // newton ----------------------------------------------------------
    auto* newton_cmd = app.add_subcommand("newton", "newton polynomial reports");
    newton_cmd->require_subcommand(1);
    auto* ncheck_cmd = newton_cmd->add_subcommand("check", "primitivity check");
    i64 nw_p = 0, nw_d = 0;
    std::optional<i64> nw_n;
    std::string nw_format, nw_out;
    ncheck_cmd->add_option("--p", nw_p, "odd prime")->required();
    ncheck_cmd->add_option("--d", nw_d, "odd dimension >= 3")->required();
    ncheck_cmd->add_option("--n", nw_n, "cofiber bottom dimension (odd)");
    add_common_flags(ncheck_cmd, &nw_format, &nw_out);

    // dl --------------------------------------------------------------
    auto* dl_cmd = app.add_subcommand("dl", "admissible sequence statistics");
    dl_cmd->require_subcommand(1);
    auto* dstats_cmd = dl_cmd->add_subcommand("stats", "degree, length, excess");
    i64 dl_p = 0;
    std::string dl_seq, dl_format, dl_out;
    dstats_cmd->add_option("--p", dl_p, "prime")->required();
    dstats_cmd
        ->add_option("--seq", dl_seq,
                     "comma list: s_1,...,s_k for p=2; eps_1,s_1,...,eps_k,s_k for p>2")
        ->required();
    add_common_flags(dstats_cmd, &dl_format, &dl_out);

    // heights ---------------------------------------------------------
    auto* heights_cmd = app.add_subcommand("heights", "height bound calculator");
    i64 h_d = 0, h_p = 0;
    std::string h_format, h_out;
    heights_cmd->add_option("--d", h_d, "dimension >= 2")->required();
    heights_cmd->add_option("--p", h_p, "prime")->required();
    add_common_flags(heights_cmd, &h_format, &h_out);

    // verify ----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "sampled regularity verification");
    verify_cmd->require_subcommand(1);

    auto* vv_cmd = verify_cmd->add_subcommand("vandermonde", "the monomial curve map");
    i64 vv_k = 0, vv_samples = 100, vv_box = 10;
    i64 vv_seed = 0;
    bool vv_negative = false;
    std::string vv_format, vv_out;
    vv_cmd->add_option("--k", vv_k, "regularity to test")->required();
    vv_cmd->add_option("--samples", vv_samples, "number of seeded samples");
    vv_cmd->add_option("--seed", vv_seed, "sample seed (required)")->required();
    vv_cmd->add_option("--box", vv_box, "numerator/denominator bound");
    vv_cmd->add_flag("--truncated", vv_negative,
                     "use the truncated control (1, z, ..., z^(k-2)) instead");
    add_common_flags(vv_cmd, &vv_format, &vv_out);

    auto* vm_cmd = verify_cmd->add_subcommand("map", "a polynomial map from a json file");
    std::string vm_file, vm_format, vm_out;
    i64 vm_k = 0, vm_samples = 100, vm_box = 10;
    i64 vm_seed = 0;
    vm_cmd->add_option("--file", vm_file, "map description json")->required();
    vm_cmd->add_option("--k", vm_k, "regularity to test")->required();
    vm_cmd->add_option("--samples", vm_samples, "number of seeded samples");
    vm_cmd->add_option("--seed", vm_seed, "sample seed (required)")->required();
    vm_cmd->add_option("--box", vm_box, "numerator/denominator bound");
    add_common_flags(vm_cmd, &vm_format, &vm_out);

    // -------------------------------------------------------------- parse
    std::vector<const char*> argv;
    argv.push_back("regemb");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        Sink sink;
        if (table_cmd->parsed()) {
            sink.format = parse_format(table_format);
            sink.out_file = table_out;
            std::vector<std::array<i64, 3>> triples;
            for (const auto& spec : row_specs) {
                auto v = parse_int_list(spec, "--rows");
                if (v.size() != 3)
                    throw CLI::ValidationError("--rows", "each row is a d,k,p triple");
                triples.push_back({v[0], v[1], v[2]});
            }
            return sink.flush(out, err, emit_bounds_table(triples, sink));
        }
        if (query_cmd->parsed()) {
            sink.format = parse_format(query_format);
            sink.out_file = query_out;
            if (theorem == "secat_range") {
                auto [lo, hi] = secat_range(q_d, q_p, q_m);
                if (sink.format == Format::json) {
                    json doc = {{"command", "bounds query"},
                                {"report",
                                 {{"theorem", "secat_range"},
                                  {"inputs", {{"d", q_d}, {"p", q_p}, {"m", q_m}}},
                                  {"lower", lo},
                                  {"upper", hi}}}};
                    sink.payload << doc.dump(2) << "\n";
                } else {
                    sink.payload << "theorem: secat_range\nlower: " << lo
                                 << "\nupper: " << hi << "\n";
                }
                return sink.flush(out, err, 0);
            }
            if (theorem == "height_bound") {
                auto res = height_bound(q_d, q_p);
                if (sink.format == Format::json) {
                    json doc = {{"command", "bounds query"},
                                {"report",
                                 {{"theorem", "height_bound"},
                                  {"inputs", {{"d", q_d}, {"p", q_p}}},
                                  {"height_bound", res.value},
                                  {"notes", res.notes}}}};
                    sink.payload << doc.dump(2) << "\n";
                } else {
                    sink.payload << "theorem: height_bound\nvalue: " << res.value << "\n";
                    for (const auto& n : res.notes) sink.payload << "note: " << n << "\n";
                }
                return sink.flush(out, err, 0);
            }
            BoundReport report;
            if (theorem == "kregular_real") report = bound_kregular_real(q_d_real, q_k);
            else if (theorem == "kregular_prime") report = bound_kregular_prime(q_d_real, q_p);
            else if (theorem == "kregular_chisholm") report = bound_kregular_chisholm(q_d, q_k, q_p);
            else if (theorem == "kregular_brs") report = bound_brs(q_d_real, q_k);
            else if (theorem == "skew_real") report = bound_skew_real(q_d, q_ell);
            else if (theorem == "skew_prime") report = bound_skew_prime(q_d, q_ell);
            else if (theorem == "skew_chisholm") report = bound_skew_chisholm(q_d, q_ell, q_p);
            else if (theorem == "cat_lower") report = cat_lower(q_d, q_k);
            else if (theorem == "derived_kregular") report = derive_bound_kregular(q_dual, q_k);
            else if (theorem == "derived_skew") report = derive_bound_skew(q_dual, q_d, q_ell);
            else {
                err << "error: unknown theorem '" << theorem << "'\n";
                return 2;
            }
            return sink.flush(out, err, emit_bound_query(report, sink));
        }
        if (cyclic_cmd->parsed()) {
            sink.format = parse_format(cy_format);
            sink.out_file = cy_out;
            return sink.flush(out, err, emit_classes_cyclic(cy_p, cy_d_real, cy_mult, sink));
        }
        if (config_cmd->parsed()) {
            sink.format = parse_format(cf_format);
            sink.out_file = cf_out;
            return sink.flush(out, err, emit_classes_config(cf_p, cf_t, cf_k, sink));
        }
        if (ncheck_cmd->parsed()) {
            sink.format = parse_format(nw_format);
            sink.out_file = nw_out;
            return sink.flush(out, err, emit_newton_check(nw_p, nw_d, nw_n, sink));
        }
        if (dstats_cmd->parsed()) {
            sink.format = parse_format(dl_format);
            sink.out_file = dl_out;
            return sink.flush(out, err, emit_dl_stats(dl_p, dl_seq, sink));
        }
        if (heights_cmd->parsed()) {
            sink.format = parse_format(h_format);
            sink.out_file = h_out;
            return sink.flush(out, err, emit_heights(h_d, h_p, sink));
        }
        if (vv_cmd->parsed()) {
            sink.format = parse_format(vv_format);
            sink.out_file = vv_out;
            PolyMapC f = vv_negative ? truncated_vandermonde_map(vv_k) : vandermonde_map(vv_k);
            std::string label = vv_negative ? "truncated-vandermonde" : "vandermonde";
            return sink.flush(out, err,
                              emit_verify(f, label, vv_k, vv_samples,
                                          static_cast<std::uint64_t>(vv_seed), vv_box, sink));
        }
        if (vm_cmd->parsed()) {
            sink.format = parse_format(vm_format);
            sink.out_file = vm_out;
            std::ifstream in_file(vm_file);
            if (!in_file) {
                err << "error: cannot open map file '" << vm_file << "'\n";
                return 2;
            }
            json j = json::parse(in_file);
            PolyMapC f = poly_map_from_json(j);
            return sink.flush(out, err,
                              emit_verify(f, vm_file, vm_k, vm_samples,
                                          static_cast<std::uint64_t>(vm_seed), vm_box, sink));
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const regemb::error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace regemb::cli
