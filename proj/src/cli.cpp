#include "riordan/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "riordan/catalog.hpp"
#include "riordan/central.hpp"
#include "riordan/errors.hpp"
#include "riordan/verify.hpp"

namespace riordan {
namespace {

// ---- series literals: "p0,p1,..[/q0,q1,..]" ------------------------------

std::vector<long> parse_coeff_list(const std::string& text) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        std::size_t used = 0;
        long value = 0;
        bool good = !item.empty();
        if (good) {
            try {
                value = std::stol(item, &used);
            } catch (const std::exception&) {
                good = false;
            }
        }
        if (!good || used != item.size()) {
            throw UsageError("bad coefficient literal \"" + item +
                             "\" in \"" + text + "\"");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

Series parse_series_literal(const std::string& text, int order) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return polynomial(parse_coeff_list(text), order);
    }
    if (text.find('/', slash + 1) != std::string::npos) {
        throw UsageError("series literal \"" + text +
                         "\" has more than one '/'");
    }
    const std::vector<long> num = parse_coeff_list(text.substr(0, slash));
    const std::vector<long> den = parse_coeff_list(text.substr(slash + 1));
    if (den[0] == 0) {
        throw UsageError("series literal \"" + text +
                         "\": denominator constant term must be nonzero");
    }
    return rational_function(num, den, order);
}

// ---- shared flag groups ---------------------------------------------------

struct ArrayFlags {
    std::string name;
    std::string g_spec;
    std::string f_spec;
    int order = 24;

    void attach(CLI::App* cmd, int default_order) {
        order = default_order;
        auto* a = cmd->add_option("--array", name, "catalog array name");
        auto* g = cmd->add_option(
            "--g", g_spec,
            "g as integer coefficients \"p0,p1,..[/q0,q1,..]\"");
        auto* f = cmd->add_option(
            "--f", f_spec,
            "f as integer coefficients; the array multiplier is x*f");
        cmd->add_option("--order", order,
                        "certified truncation order (default " +
                            std::to_string(default_order) + ")");
        a->excludes(g);
        a->excludes(f);
        g->needs(f);
        f->needs(g);
    }

    bool is_catalog() const { return !name.empty(); }

    RiordanArray resolve(int effective_order) const {
        if (effective_order < 1) {
            throw UsageError("order must be positive");
        }
        if (is_catalog()) {
            return get(name, effective_order);
        }
        if (g_spec.empty() && f_spec.empty()) {
            throw UsageError("provide --array NAME or --g LIT --f LIT");
        }
        return make_array(parse_series_literal(g_spec, effective_order),
                          parse_series_literal(f_spec, effective_order));
    }

    std::string describe() const {
        if (is_catalog()) {
            return name;
        }
        return "g=" + g_spec + "; f=" + f_spec;
    }
};

struct ShiftFlags {
    int shift = 0;
    int label = 1;
    CLI::Option* shift_opt = nullptr;
    CLI::Option* label_opt = nullptr;

    void attach(CLI::App* cmd) {
        shift_opt =
            cmd->add_option("--shift", shift, "canonical shift s (s >= 0)");
        label_opt = cmd->add_option(
            "--paper-label", label,
            "label r as an alias for --shift with s = r - 1");
        shift_opt->excludes(label_opt);
        label_opt->excludes(shift_opt);
    }

    bool given() const {
        return shift_opt->count() > 0 || label_opt->count() > 0;
    }

    // Resolves to the canonical shift, echoing the alias mapping when the
    // label form was used.
    int resolve(std::ostream& err) const {
        if (label_opt->count() > 0) {
            if (label < 1) {
                throw UsageError("label must be at least 1 (it aliases "
                                 "shift s = r - 1)");
            }
            err << "label r=" << label << " corresponds to shift s="
                << (label - 1) << "\n";
            return label - 1;
        }
        return shift;
    }
};

// ---- rendering -------------------------------------------------------------

using RationalRows = std::vector<std::vector<Rational>>;

struct RenderContext {
    std::string format = "table";
    bool meta = false;
    std::string array_desc;
    std::optional<int> shift;
    nlohmann::json meta_obj;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "table|csv|json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_flag("--meta", meta, "include provenance in json output");
    }
};

void render(const RenderContext& ctx, const RationalRows& data,
            std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(data.size());
    for (const auto& r : data) {
        std::vector<std::string> line;
        line.reserve(r.size());
        for (const auto& v : r) {
            line.push_back(to_string(v));
        }
        rows.push_back(std::move(line));
    }

    if (ctx.format == "json") {
        nlohmann::json j;
        j["array"] = ctx.array_desc;
        j["shift"] =
            ctx.shift ? nlohmann::json(*ctx.shift) : nlohmann::json(nullptr);
        j["rows"] = rows;
        if (ctx.meta) {
            j["meta"] = ctx.meta_obj;
        }
        out << j.dump(2) << "\n";
        return;
    }
    if (ctx.format == "csv") {
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) {
                    out << ',';
                }
                out << r[i];
            }
            out << '\n';
        }
        return;
    }
    // table: right-aligned columns, single-space separators
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (width.size() < r.size()) {
            width.resize(r.size(), 0);
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            width[i] = std::max(width[i], r[i].size());
        }
    }
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) {
                out << ' ';
            }
            out << std::string(width[i] - r[i].size(), ' ') << r[i];
        }
        out << '\n';
    }
}

// ---- verify report aggregation ---------------------------------------------

struct ReportLine {
    std::string name;
    CheckStatus status;
    std::string detail;
};

// Folds per-shift results into one line per identity: any failure wins (with
// its shift named), otherwise a pass, otherwise the skip reason.
std::vector<ReportLine> aggregate(const std::vector<CheckResult>& results) {
    std::vector<ReportLine> lines;
    const auto find_line = [&](const std::string& n) -> ReportLine* {
        for (auto& l : lines) {
            if (l.name == n) {
                return &l;
            }
        }
        return nullptr;
    };
    for (const auto& r : results) {
        std::string base = r.name;
        std::string tag;
        const std::size_t p = r.name.find("[s=");
        if (p != std::string::npos && r.name.back() == ']') {
            base = r.name.substr(0, p);
            tag = r.name.substr(p + 1, r.name.size() - p - 2);
        }
        std::string detail = r.detail;
        if (r.status == CheckStatus::fail && !tag.empty()) {
            detail = detail.empty() ? tag : tag + ": " + detail;
        }
        ReportLine* line = find_line(base);
        if (line == nullptr) {
            lines.push_back({std::move(base), r.status, std::move(detail)});
            continue;
        }
        if (line->status == CheckStatus::fail) {
            continue;
        }
        if (r.status == CheckStatus::fail) {
            line->status = r.status;
            line->detail = std::move(detail);
            continue;
        }
        if (line->status == CheckStatus::pass) {
            if (line->detail.empty() && r.status == CheckStatus::pass) {
                line->detail = std::move(detail);
            }
            continue;
        }
        if (r.status == CheckStatus::pass) {
            line->status = r.status;
            line->detail = std::move(detail);
        }
    }
    return lines;
}

const char* status_name(CheckStatus st) {
    switch (st) {
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::skipped:
        return "SKIPPED";
    default:
        return "PASS";
    }
}

RationalRows one_row(const Series& s, int count) {
    RationalRows rows(1);
    rows[0].reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        rows[0].push_back(s.coeff(i));
    }
    return rows;
}

// ---- subcommand bodies ------------------------------------------------------

int run_triangle(const ArrayFlags& af, int rows, RenderContext ctx,
                 std::ostream& out) {
    const RiordanArray a = af.resolve(af.order);
    const Triangle t = triangle(a, rows);
    ctx.array_desc = af.describe();
    ctx.meta_obj = {{"command", "triangle"}, {"order", af.order}};
    render(ctx, t.data(), out);
    return 0;
}

int run_central(const ArrayFlags& af, const ShiftFlags& sf, int rows,
                RenderContext ctx, std::ostream& out, std::ostream& err) {
    const int s = sf.resolve(err);
    const Shift shift(s);
    // Catalog arrays regenerate at whatever order the request needs; literal
    // arrays keep the explicit --order and report a shortfall honestly.
    int order = af.order;
    if (af.is_catalog() && rows >= 1) {
        order = std::max(order, 2 * rows + s);
    }
    const RiordanArray a = af.resolve(order);

    const Triangle direct = central_direct(a, shift, rows);
    try {
        const Phi phi = phi_of(a);
        const CentralDecomposition dec = central_array(a, shift, phi);
        if (direct != triangle(dec.combined, rows)) {
            throw ConsistencyError(
                "direct central triangle and factorized construction "
                "disagree (kernel bug)");
        }
    } catch (const IdentityError& e) {
        // inside this command an identity violation can only mean the
        // kernel contradicted itself
        throw ConsistencyError(
            std::string("central factorization identity violated "
                        "(kernel bug): ") +
            e.what());
    }

    err << "central triangle at shift s=" << s
        << "; the r = s + 1 labeling calls this c(A;" << (s + 1) << ")\n";
    ctx.array_desc = af.describe();
    ctx.shift = s;
    ctx.meta_obj = {{"command", "central"},
                    {"order", order},
                    {"label", s + 1}};
    render(ctx, direct.data(), out);
    return 0;
}

int run_sequence(const std::string& which, const ArrayFlags& af,
                 const ShiftFlags& sf, int count, RenderContext ctx,
                 std::ostream& out, std::ostream& err) {
    if (count < 1) {
        throw UsageError("rows must be positive");
    }
    std::optional<int> s;
    if (sf.given()) {
        s = sf.resolve(err);
    }
    const RiordanArray a = af.resolve(af.order);
    Series seq = [&] {
        if (which == "aseq") {
            return s ? a_of_central(a, Shift(*s)) : a_sequence_gf(a);
        }
        return s ? z_of_central(a, Shift(*s)) : z_sequence_gf(a);
    }();
    ctx.array_desc = af.describe();
    ctx.shift = s;
    ctx.meta_obj = {{"command", which}, {"order", af.order}};
    render(ctx, one_row(seq, count), out);
    return 0;
}

int run_prodmat(const ArrayFlags& af, const ShiftFlags& sf, int rows,
                RenderContext ctx, std::ostream& out, std::ostream& err) {
    std::optional<int> s;
    if (sf.given()) {
        s = sf.resolve(err);
    }
    const RiordanArray a = af.resolve(af.order);
    const RiordanArray base =
        s ? central_array(a, Shift(*s)).combined : a;
    const ProductionMatrix p = production_matrix(base, rows);
    ctx.array_desc = af.describe();
    ctx.shift = s;
    ctx.meta_obj = {{"command", "prodmat"}, {"order", af.order}};
    render(ctx, p.data(), out);
    return 0;
}

int run_verify(const ArrayFlags& af, int shift_max, int rows,
               std::ostream& out) {
    const RiordanArray a = af.resolve(af.order);
    const std::vector<CheckResult> results =
        run_identity_suite(a, shift_max, rows);
    for (const ReportLine& line : aggregate(results)) {
        out << line.name << ": " << status_name(line.status);
        if (!line.detail.empty()) {
            out << " (" << line.detail << ")";
        }
        out << "\n";
    }
    return all_passed(results) ? 0 : 1;
}

int run_fuzz_cmd(const FuzzConfig& cfg, std::ostream& out) {
    const FuzzOutcome outcome = run_fuzz(cfg);
    std::set<int> failing;
    for (const TrialFailure& f : outcome.failures) {
        out << "FAIL (seed=" << f.seed << ", trial=" << f.trial
            << ", identity=" << f.identity << "): " << f.detail << "\n";
        failing.insert(f.trial);
    }
    out << (outcome.trials_run - static_cast<int>(failing.size())) << "/"
        << outcome.trials_run << " PASS\n";
    return failing.empty() ? 0 : 1;
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact central-triangle toolkit for Riordan arrays",
                 "riordan"};
    app.require_subcommand(1);

    // triangle
    CLI::App* tri = app.add_subcommand("triangle", "print rows of the array");
    ArrayFlags tri_af;
    tri_af.attach(tri, 24);
    int tri_rows = 8;
    tri->add_option("--rows", tri_rows, "number of rows (default 8)");
    RenderContext tri_ctx;
    tri_ctx.attach(tri);

    // central
    CLI::App* cen = app.add_subcommand(
        "central", "print the shifted central triangle c(A;s)");
    ArrayFlags cen_af;
    cen_af.attach(cen, 24);
    ShiftFlags cen_sf;
    cen_sf.attach(cen);
    int cen_rows = 8;
    cen->add_option("--rows", cen_rows, "number of rows (default 8)");
    RenderContext cen_ctx;
    cen_ctx.attach(cen);

    // aseq / zseq
    CLI::App* aseq = app.add_subcommand(
        "aseq", "A-sequence of the array (of its central triangle with "
                "--shift)");
    ArrayFlags aseq_af;
    aseq_af.attach(aseq, 24);
    ShiftFlags aseq_sf;
    aseq_sf.attach(aseq);
    int aseq_rows = 8;
    aseq->add_option("--rows", aseq_rows,
                     "number of coefficients (default 8)");
    RenderContext aseq_ctx;
    aseq_ctx.attach(aseq);

    CLI::App* zseq = app.add_subcommand(
        "zseq", "Z-sequence of the array (of its central triangle with "
                "--shift)");
    ArrayFlags zseq_af;
    zseq_af.attach(zseq, 24);
    ShiftFlags zseq_sf;
    zseq_sf.attach(zseq);
    int zseq_rows = 8;
    zseq->add_option("--rows", zseq_rows,
                     "number of coefficients (default 8)");
    RenderContext zseq_ctx;
    zseq_ctx.attach(zseq);

    // prodmat
    CLI::App* pm = app.add_subcommand(
        "prodmat", "production matrix of the array (of its central triangle "
                   "with --shift)");
    ArrayFlags pm_af;
    pm_af.attach(pm, 24);
    ShiftFlags pm_sf;
    pm_sf.attach(pm);
    int pm_rows = 8;
    pm->add_option("--rows", pm_rows, "number of rows (default 8)");
    RenderContext pm_ctx;
    pm_ctx.attach(pm);

    // verify
    CLI::App* ver =
        app.add_subcommand("verify", "run the identity suite on one array");
    ArrayFlags ver_af;
    ver_af.attach(ver, 24);
    int ver_shift_max = 3;
    int ver_rows = 8;
    ver->add_option("--shift-max", ver_shift_max,
                    "largest shift exercised (default 3)");
    ver->add_option("--rows", ver_rows,
                    "rows compared against the oracle (default 8)");

    // fuzz
    CLI::App* fz = app.add_subcommand(
        "fuzz", "run the identity suite on random integer arrays");
    FuzzConfig fz_cfg;
    fz->add_option("--seed", fz_cfg.seed, "RNG seed (default 42)");
    fz->add_option("--trials", fz_cfg.trials,
                   "number of random arrays (default 100)");
    fz->add_option("--max-coeff", fz_cfg.max_coeff,
                   "coefficients drawn from [-N, N] (default 5)");
    fz->add_option("--order", fz_cfg.order,
                   "series order per trial (default 16)");
    fz->add_option("--shift-max", fz_cfg.shift_max,
                   "largest shift exercised (default 3)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 64;
    }

    try {
        if (tri->parsed()) {
            return run_triangle(tri_af, tri_rows, tri_ctx, out);
        }
        if (cen->parsed()) {
            return run_central(cen_af, cen_sf, cen_rows, cen_ctx, out, err);
        }
        if (aseq->parsed()) {
            return run_sequence("aseq", aseq_af, aseq_sf, aseq_rows, aseq_ctx,
                                out, err);
        }
        if (zseq->parsed()) {
            return run_sequence("zseq", zseq_af, zseq_sf, zseq_rows, zseq_ctx,
                                out, err);
        }
        if (pm->parsed()) {
            return run_prodmat(pm_af, pm_sf, pm_rows, pm_ctx, out, err);
        }
        if (ver->parsed()) {
            return run_verify(ver_af, ver_shift_max, ver_rows, out);
        }
        if (fz->parsed()) {
            return run_fuzz_cmd(fz_cfg, out);
        }
        err << "error: no subcommand selected\n";
        return 64;
    } catch (const IdentityError& e) {
        err << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionError& e) {
        err << "precision shortfall: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    }
}

} // namespace riordan
