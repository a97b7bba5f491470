#include "affadm/cli.hpp"

#include "affadm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace affadm::cli {

namespace {

using nlohmann::json;

struct Report {
    json doc;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int exit_code = kPass;
};

// Invalid configuration: surfaced as a structured message with exit code 2.
struct UsageError : std::runtime_error {
    std::string kind;
    UsageError(std::string k, const std::string& what) : std::runtime_error(what), kind(std::move(k)) {}
};

json rat(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

json rats(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat(x));
    return a;
}

json cplx_json(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string rat_str(const Rational& r) { return to_string(r); }

template <class Range, class F>
std::string join(const Range& r, F f, const char* sep = ";") {
    std::string s;
    bool first = true;
    for (const auto& x : r) {
        if (!first) s += sep;
        s += f(x);
        first = false;
    }
    return s;
}

std::string ints(const std::vector<std::int64_t>& v) { return join(v, [](auto x) { return std::to_string(x); }); }
std::string ints(const std::vector<int>& v) { return join(v, [](auto x) { return std::to_string(x); }); }

RootSystemPtr parse_kind(const std::string& text) {
    try {
        return build_root_system(CartanKind::parse(text));
    } catch (const std::invalid_argument& e) {
        throw UsageError("kind", e.what());
    }
}

std::vector<int> parse_levi(const RootSystem& rs, const std::string& text, int u) {
    std::vector<int> subset;
    if (text.rfind("fixture:", 0) == 0) {
        try {
            subset = levi_fixture(rs, text.substr(8), u);
        } catch (const std::invalid_argument& e) {
            throw UsageError("levi", e.what());
        }
    } else if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                subset.push_back(std::stoi(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw UsageError("levi", "cannot parse Levi node '" + item + "'");
            }
        }
    }
    try {
        levi_datum(rs, subset);
    } catch (const std::exception& e) {
        throw UsageError("levi", e.what());
    }
    std::sort(subset.begin(), subset.end());
    return subset;
}

json levi_json(const LeviDatum& L) {
    return json{{"subset", L.subset}, {"label", L.label()}, {"j", L.j}, {"exponents", L.exponents}, {"order", L.order}};
}

json weight_record(const RootSystem& rs, const LevelData& lv, const AdmissibleClass& c) {
    const PiElement& p = c.rep;
    return json{{"kind", rs.kind.name()},
                {"rank", rs.rank},
                {"u", lv.u},
                {"k", rat(lv.k)},
                {"class_id", c.class_id},
                {"b", coweight_key(rs, p.b)},
                {"b_minus", coweight_key(rs, p.b_minus)},
                {"u_b_word", p.u_b.word},
                {"length", p.length},
                {"epsilon", p.sign},
                {"weight", rats(c.weight.finite_part)},
                {"anomaly", rat(c.weight.anomaly)}};
}

json matrix_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(cplx_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json matrix_record(const std::vector<int>& index, const Eigen::MatrixXcd& m, const json& residuals) {
    return json{{"index", index}, {"entries", matrix_json(m)}, {"residuals", residuals}};
}

void add_matrix_rows(Report& r, const std::string& name, const std::vector<int>& index, const Eigen::MatrixXcd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::ostringstream re, im;
            re << std::setprecision(17) << m(i, j).real();
            im << std::setprecision(17) << m(i, j).imag();
            r.rows.push_back({name, std::to_string(index[i]), std::to_string(index[j]), re.str(), im.str()});
        }
}

// ---------------------------------------------------------------------------------------------

Report cmd_roots(const RootSystem& rs) {
    Report r;
    json coroots = json::array();
    for (const auto& c : rs.positive_coroots) coroots.push_back(c);
    r.doc = json{{"kind", rs.kind.name()},
                 {"rank", rs.rank},
                 {"cartan", rs.cartan},
                 {"marks", rs.marks},
                 {"comarks", rs.comarks},
                 {"coxeter", rs.coxeter},
                 {"dual_coxeter", rs.dual_coxeter},
                 {"lacing", rs.lacing},
                 {"e", rs.e},
                 {"m", rs.m},
                 {"J", rs.J},
                 {"exponents", rs.exponents},
                 {"weyl_order", rs.weyl_order},
                 {"theta_coroot", rs.theta_coroot},
                 {"rho_norm2", rat(rs.rho_norm2)},
                 {"positive_coroots", coroots}};
    r.header = {"key", "value"};
    r.rows = {{"kind", rs.kind.name()},
              {"rank", std::to_string(rs.rank)},
              {"coxeter", std::to_string(rs.coxeter)},
              {"dual_coxeter", std::to_string(rs.dual_coxeter)},
              {"lacing", std::to_string(rs.lacing)},
              {"e", std::to_string(rs.e)},
              {"m", std::to_string(rs.m)},
              {"marks", ints(rs.marks)},
              {"comarks", ints(rs.comarks)},
              {"J", ints(rs.J)},
              {"exponents", ints(rs.exponents)},
              {"weyl_order", std::to_string(rs.weyl_order)},
              {"theta_coroot", ints(rs.theta_coroot)},
              {"rho_norm2", rat_str(rs.rho_norm2)},
              {"positive_coroots", std::to_string(rs.positive_coroots.size())}};
    return r;
}

Report cmd_adm(const RootSystem& rs, int u) {
    const LevelData lv = validate_level(rs, u);
    const auto classes = enumerate_admissible(rs, u);
    Report r;
    json records = json::array();
    std::size_t members = 0;
    r.header = {"class_id", "b", "b_minus", "u_b_word", "length", "epsilon", "weight", "anomaly"};
    for (const auto& c : classes) {
        members += c.orbit.size();
        records.push_back(weight_record(rs, lv, c));
        r.rows.push_back({std::to_string(c.class_id), ints(coweight_key(rs, c.rep.b)), ints(coweight_key(rs, c.rep.b_minus)),
                          ints(c.rep.u_b.word), std::to_string(c.rep.length), std::to_string(c.rep.sign),
                          join(c.weight.finite_part, rat_str), rat_str(c.weight.anomaly)});
    }
    r.doc = json{{"kind", rs.kind.name()}, {"rank", rs.rank},       {"u", u},
                 {"k", rat(lv.k)},         {"sigma_u_size", members}, {"class_count", classes.size()},
                 {"records", records}};
    return r;
}

Report cmd_fixedpoints(const RootSystem& rs, int u, const std::optional<std::vector<int>>& levi) {
    const LevelData lv = validate_level(rs, u);
    const PiUSet pu = pi_u_set(rs, u);
    Report r;
    if (!levi) {
        const auto classes = enumerate_admissible(rs, u);
        json pts = json::array();
        r.header = {"class_id", "b", "w_translation", "w_word", "images_positive"};
        bool all = true;
        for (const auto& c : classes) {
            // Fixed point w = pi_b^{-1}; the test is w^{-1}(Pi_u) in the positive coroots.
            const AffineWeylElement w = invert(rs, c.rep.element);
            json images = json::array();
            bool ok = true;
            for (const auto& a : pu.coroots) {
                AffineCoroot img = act(rs, c.rep.element, a);
                ok = ok && img.positive();
                images.push_back(json{{"finite", img.finite}, {"level", img.level}});
            }
            all = all && ok;
            pts.push_back(json{{"class_id", c.class_id},
                               {"b", coweight_key(rs, c.rep.b)},
                               {"w", json{{"translation", coweight_key(rs, w.b)}, {"word", w.w.word}}},
                               {"images", images},
                               {"positive", ok}});
            r.rows.push_back({std::to_string(c.class_id), ints(coweight_key(rs, c.rep.b)), ints(coweight_key(rs, w.b)),
                              ints(w.w.word), ok ? "true" : "false"});
        }
        r.doc = json{{"kind", rs.kind.name()}, {"u", u}, {"count", classes.size()}, {"fixed_points", pts}};
        if (!all) r.exit_code = kCheckFailure;
        return r;
    }
    const LeviDatum L = levi_datum(rs, *levi);
    const LeviEnumeration e = enumerate_levi_admissible(rs, u, L);
    json reps = json::array();
    r.header = {"orbit", "representative", "members"};
    for (std::size_t i = 0; i < e.orbits.size(); ++i) {
        reps.push_back(weight_record(rs, lv, e.representatives[i]));
        r.rows.push_back({std::to_string(i), std::to_string(e.representatives[i].class_id), ints(e.orbits[i])});
    }
    r.doc = json{{"kind", rs.kind.name()},
                 {"u", u},
                 {"levi", levi_json(L)},
                 {"admissible", e.admissible},
                 {"orbits", e.orbits},
                 {"orbit_count", e.orbits.size()},
                 {"representatives", reps}};
    return r;
}

Report cmd_count(const RootSystem& rs, int u, const std::vector<int>& subset) {
    validate_level(rs, u);
    const LeviDatum L = levi_datum(rs, subset);
    Report r;
    const std::int64_t cf = count_closed_form(rs, u, L);
    json bf = nullptr;
    std::string status;
    try {
        bf = count_brute_force(rs, u, L);
        status = bf.get<std::int64_t>() == cf ? "agrees" : "disagrees";
    } catch (const GateExceeded& e) {
        status = std::string("gated: ") + e.what();
    }
    r.doc = json{{"kind", rs.kind.name()}, {"u", u},         {"levi", levi_json(L)}, {"closed_form", cf},
                 {"brute_force", bf},       {"brute_force_status", status}};
    r.header = {"key", "value"};
    r.rows = {{"kind", rs.kind.name()},
              {"u", std::to_string(u)},
              {"levi", L.label()},
              {"subset", ints(L.subset)},
              {"closed_form", std::to_string(cf)},
              {"brute_force", bf.is_null() ? "" : std::to_string(bf.get<std::int64_t>())},
              {"brute_force_status", status}};
    if (status == "disagrees") r.exit_code = kCheckFailure;
    return r;
}

json lift_json(const LiftReport& l) {
    return json{{"s_scalar", cplx_json(l.s_scalar)},
                {"t_scalar", cplx_json(l.t_scalar)},
                {"st3_minus_s2", l.st3_residual},
                {"s4_minus_identity", l.s4_residual},
                {"s4_proportionality", l.s4_proportionality}};
}

Report cmd_modular(const RootSystem& rs, int u, const std::optional<std::vector<int>>& levi, bool check) {
    const LevelData lv = validate_level(rs, u);
    const auto classes = enumerate_admissible(rs, u);
    const ModularMatrices kw = kw_matrices(rs, lv, classes);
    const ModularMatrices daha = daha_specialized_matrices(rs, lv, classes);
    const ComparisonReport cmp = intertwiner_comparison(rs, lv, classes, kw, daha);
    const ComparisonReport rk = sl2z_residuals(kw, u, rs.rank);
    const ComparisonReport rd = sl2z_residuals(daha, u, rs.rank);
    const LiftReport lift = sl2z_lift(kw.S, kw.T);
    double mu = 0.0;
    for (const auto& c : classes)
        for (const auto& p : c.orbit) mu = std::max(mu, std::abs(mu_bullet_at_specialization(rs, lv, p) - 1.0));

    json kw_res(rk.residuals), daha_res(rd.residuals);
    for (const auto& [k, v] : daha.construction) daha_res[k] = v;
    json signs = json::array();
    for (const auto& s : cmp.sign_diagnostics)
        signs.push_back(json{{"row", s.row}, {"col", s.col}, {"ratio", cplx_json(s.ratio)}});
    Report r;
    r.doc = json{{"kind", rs.kind.name()},
                 {"u", u},
                 {"k", rat(lv.k)},
                 {"kw", json{{"S", matrix_record(kw.index, kw.S, kw_res)}, {"T", matrix_record(kw.index, kw.T, json::object())}}},
                 {"daha", json{{"S", matrix_record(daha.index, daha.S, daha_res)},
                               {"T", matrix_record(daha.index, daha.T, json::object())}}},
                 {"comparison", json{{"a", cplx_json(cmp.a)},
                                     {"residuals", cmp.residuals},
                                     {"flags", cmp.flags},
                                     {"literal_sign_entries", signs}}},
                 {"daha_s2_permutation", rd.permutation},
                 {"sl2z_lift", lift_json(lift)},
                 {"mu_bullet_max_deviation", mu}};
    r.header = {"matrix", "row", "col", "re", "im"};
    add_matrix_rows(r, "kw_S", kw.index, kw.S);
    add_matrix_rows(r, "kw_T", kw.index, kw.T);
    add_matrix_rows(r, "daha_S", daha.index, daha.S);
    add_matrix_rows(r, "daha_T", daha.index, daha.T);

    const auto n = kw.S.rows();
    Tolerances tol;
    bool ok = cmp.residuals.at("t_relation") <= scaled_tolerance(tol.identity, n) &&
              cmp.max_deviation <= scaled_tolerance(tol.ratio, n) &&
              std::abs(cmp.residuals.at("abs_a_squared_times_u_pow_l") - 1.0) <= scaled_tolerance(tol.ratio, n) &&
              lift.st3_residual <= scaled_tolerance(tol.relation, n) && lift.s4_residual <= scaled_tolerance(tol.relation, n) &&
              mu <= tol.identity;
    if (levi) {
        const LeviDatum L = levi_datum(rs, *levi);
        json ef = json::object();
        for (const ModularMatrices* m : {&kw, &daha}) {
            const EfRestriction e = ef_projector_and_restriction(rs, lv, L, classes, *m);
            const LiftReport el = e.rank > 0 ? sl2z_lift(e.restricted.S, e.restricted.T) : LiftReport{};
            const ComparisonReport lit = sl2z_residuals(e.restricted);
            ef[m->flavor == Flavor::KW ? "kw" : "daha"] =
                json{{"levi", levi_json(L)},
                     {"rank", e.rank},
                     {"closed_form", e.closed_form},
                     {"basis", e.basis},
                     {"commutator_S", e.commutator_S},
                     {"commutator_T", e.commutator_T},
                     {"projector_defect", e.projector_defect},
                     {"restriction_defect", e.restriction_defect},
                     {"restricted_S", matrix_record(e.restricted.index, e.restricted.S, lit.residuals)},
                     {"restricted_T", matrix_record(e.restricted.index, e.restricted.T, json::object())},
                     {"sl2z_lift", lift_json(el)}};
            ok = ok && e.commutator_S <= scaled_tolerance(tol.ratio, n) && e.commutator_T <= scaled_tolerance(tol.ratio, n) &&
                 el.st3_residual <= scaled_tolerance(tol.relation, n);
        }
        r.doc["ef"] = ef;
    }
    r.doc["checks_passed"] = ok;
    if (check && !ok) r.exit_code = kCheckFailure;
    return r;
}

Report cmd_table1(int max_rank, int max_u) {
    const Table1Report t = table1_scan(max_rank, max_u);
    Report r;
    json hits = json::array();
    r.header = {"kind", "u", "subset", "levi", "row"};
    std::size_t unmatched = 0;
    for (const auto& h : t.hits) {
        hits.push_back(json{{"kind", h.kind.name()}, {"u", h.u}, {"subset", h.subset}, {"levi", h.levi}, {"row", h.row}});
        r.rows.push_back({h.kind.name(), std::to_string(h.u), ints(h.subset), h.levi, h.row});
        if (h.row.empty()) ++unmatched;
    }
    r.doc = json{{"max_rank", t.max_rank}, {"max_u", t.max_u}, {"hits", hits}, {"unmatched", unmatched}};
    return r;
}

Report cmd_verify(const RootSystem& rs, int u, const std::optional<std::vector<int>>& levi) {
    validate_level(rs, u);
    VerifyOptions opt;
    opt.levi = levi;
    const auto results = verify_suite(rs, u, opt);
    Report r;
    json arr = json::array();
    r.header = {"module", "check", "status", "detail"};
    std::map<std::string, int> tally;
    for (const auto& c : results) {
        arr.push_back(json{{"module", c.module}, {"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        r.rows.push_back({c.module, c.name, to_string(c.status), c.detail});
        ++tally[to_string(c.status)];
    }
    const bool ok = all_passed(results);
    r.doc = json{{"kind", rs.kind.name()}, {"u", u}, {"results", arr}, {"tally", tally}, {"passed", ok}};
    if (!ok) r.exit_code = kCheckFailure;
    return r;
}

// ---------------------------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << r.doc.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out << join(r.header, csv_field, ",") << "\n";
        for (const auto& row : r.rows) out << join(row, csv_field, ",") << "\n";
        return;
    }
    for (const auto& [k, v] : r.doc.items())
        if (v.is_primitive()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    std::vector<std::size_t> width(r.header.size());
    for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
    for (const auto& row : r.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size()) cell.resize(width[i] + 2, ' ');
            s += cell;
        }
        out << s << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
}

void error(std::ostream& err, const std::string& kind, const std::string& message, const json& extra = json::object()) {
    json e{{"error", kind}, {"message", message}};
    for (const auto& [k, v] : extra.items()) e[k] = v;
    err << e.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundary admissible levels: enumeration, counting and modular data"};
    app.name("affadm");
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

    std::string kind, levi_spec;
    int u = 0, max_u = 11, max_rank = 8;
    bool check = false;

    auto* roots = app.add_subcommand("roots", "Root datum of a finite type");
    roots->add_option("type", kind)->required();
    auto* adm = app.add_subcommand("adm", "Admissible classes, weights and anomalies");
    auto* fixed = app.add_subcommand("fixedpoints", "Fixed points in the affine flag variety or Spaltenstein variety");
    auto* count = app.add_subcommand("count", "Closed-form and brute-force fixed-point counts");
    auto* modular = app.add_subcommand("modular", "Modular matrices and residuals");
    auto* verify = app.add_subcommand("verify", "Full invariant suite");
    for (auto* sc : {adm, fixed, count, modular, verify}) {
        sc->add_option("type", kind)->required();
        sc->add_option("u", u)->required();
    }
    for (auto* sc : {fixed, modular, verify}) sc->add_option("--levi", levi_spec, "Nodes like 1,3 or fixture:NAME");
    count->add_option("--levi", levi_spec, "Nodes like 1,3 or fixture:NAME")->required();
    modular->add_flag("--check", check, "Exit 1 unless all gating residuals pass");
    auto* table1 = app.add_subcommand("table1", "Scan for Levi subsets with exactly one fixed point");
    table1->add_option("--max-u", max_u)->check(CLI::PositiveNumber);
    table1->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));
    for (auto* sc : {roots, adm, fixed, count, modular, verify, table1})
        sc->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        error(err, "usage", e.what());
        return kUsage;
    }

    try {
        Report r;
        std::optional<std::vector<int>> levi;
        auto load = [&]() {
            auto rs = parse_kind(kind);
            if (!levi_spec.empty()) levi = parse_levi(*rs, levi_spec, u);
            return rs;
        };
        if (*roots) {
            r = cmd_roots(*parse_kind(kind));
        } else if (*adm) {
            r = cmd_adm(*load(), u);
        } else if (*fixed) {
            auto rs = load();
            r = cmd_fixedpoints(*rs, u, levi);
        } else if (*count) {
            auto rs = load();
            r = cmd_count(*rs, u, levi.value_or(std::vector<int>{}));
        } else if (*modular) {
            auto rs = load();
            r = cmd_modular(*rs, u, levi, check);
        } else if (*verify) {
            auto rs = load();
            r = cmd_verify(*rs, u, levi);
        } else {
            r = cmd_table1(max_rank, max_u);
        }
        emit(r, format, out);
        return r.exit_code;
    } catch (const LevelError& e) {
        error(err, "level", e.what(), json{{"violated", e.violated()}});
        return kUsage;
    } catch (const UsageError& e) {
        error(err, e.kind, e.what());
        return kUsage;
    } catch (const std::exception& e) {
        error(err, "failure", e.what());
        return kCheckFailure;
    }
}

}  // namespace affadm::cli
