// hlat: exact lattice invariants (coset minima, eta, e) and the certified
// h-invariant bounds built on them.

#include "hlat/detline.hpp"
#include "hlat/enumerate.hpp"
#include "hlat/errors.hpp"
#include "hlat/hbounds.hpp"
#include "hlat/invariants.hpp"
#include "hlat/json_io.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hlat::Int;
using hlat::Vec;
using nlohmann::json;

constexpr const char* kScopeLine =
    "scope: certifies the lattice-side arithmetic only (extremality, parity, eta); "
    "topological consequences are stated, not computed.";

struct AppState {
    hlat::RunConfig config;
    std::string format = "text";
    std::string report_path;
    json report;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
}

Int parse_int_token(const std::string& raw, const std::string& what) {
    std::size_t b = raw.find_first_not_of(" \t");
    std::size_t e = raw.find_last_not_of(" \t");
    if (b == std::string::npos) throw hlat::invalid_input(what + ": empty entry");
    const std::string tok = raw.substr(b, e - b + 1);
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) throw hlat::invalid_input(what + ": bad integer '" + tok + "'");
    for (std::size_t k = i; k < tok.size(); ++k) {
        if (tok[k] < '0' || tok[k] > '9') {
            throw hlat::invalid_input(what + ": bad integer '" + tok + "'");
        }
    }
    return Int(tok);
}

Vec parse_int_csv(const std::string& s, const std::string& what) {
    Vec out;
    for (const auto& tok : split_csv(s)) out.push_back(parse_int_token(tok, what));
    return out;
}

// Ambient entries are plain coordinates; "k/2" tokens give the half-integer
// entries of the gamma family.  Returned doubled.
Vec parse_ambient_doubled(const std::string& s) {
    Vec out;
    for (const auto& tok : split_csv(s)) {
        const std::size_t slash = tok.find('/');
        if (slash == std::string::npos) {
            out.push_back(2 * parse_int_token(tok, "--w-ambient"));
            continue;
        }
        const std::string den = tok.substr(slash + 1);
        std::size_t e = den.find_last_not_of(" \t");
        if (den.substr(0, e == std::string::npos ? 0 : e + 1) != "2") {
            throw hlat::invalid_input("--w-ambient: only halves are allowed, got '" + tok + "'");
        }
        out.push_back(parse_int_token(tok.substr(0, slash), "--w-ambient"));
    }
    return out;
}

// Ambient coordinate from its doubled value, in the same syntax --w-ambient
// accepts.
std::string ambient_token(const Int& doubled) {
    if (hlat::is_even(doubled)) return Int(doubled / 2).str();
    return doubled.str() + "/2";
}

std::string format_vec(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

std::string format_ambient(const Vec& doubled) {
    std::string out = "(";
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        if (i) out += ", ";
        out += ambient_token(doubled[i]);
    }
    return out + ")";
}

// One-line rendering of an eta expansion, e.g. "16" or "384*a1*a2*a3*a4".
std::string format_polynomial(const hlat::EtaPolynomial& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, coeff] : poly.coeffs) {
        std::string term = coeff.str();
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            term += "*a" + std::to_string(i + 1);
            if (alpha[i] > 1) term += "^" + std::to_string(alpha[i]);
        }
        if (!out.empty() && term[0] != '-') out += " + ";
        if (!out.empty() && term[0] == '-') {
            out += " - ";
            term = term.substr(1);
        }
        out += term;
    }
    return out;
}

struct WFlags {
    std::string w_csv;
    std::string w_ambient_csv;
};

// Resolves --w / --w-ambient to basis coordinates.
Vec resolve_w(const hlat::Lattice& lattice, const WFlags& flags, json& inputs) {
    const bool have_basis = !flags.w_csv.empty();
    const bool have_ambient = !flags.w_ambient_csv.empty();
    if (have_basis == have_ambient) {
        throw hlat::invalid_input("exactly one of --w and --w-ambient is required");
    }
    if (have_basis) {
        Vec w = parse_int_csv(flags.w_csv, "--w");
        if (w.size() != lattice.rank()) {
            throw hlat::invalid_input("--w: expected " + std::to_string(lattice.rank()) +
                                      " entries, got " + std::to_string(w.size()));
        }
        inputs["w"] = hlat::vec_to_json(w);
        return w;
    }
    if (!lattice.has_ambient() || lattice.rank() == 0) {
        throw hlat::invalid_input(
            "--w-ambient: this lattice carries no ambient coordinates; use --w");
    }
    Vec doubled = parse_ambient_doubled(flags.w_ambient_csv);
    if (doubled.size() != lattice.ambient_dim()) {
        throw hlat::invalid_input("--w-ambient: expected " + std::to_string(lattice.ambient_dim()) +
                                  " entries, got " + std::to_string(doubled.size()));
    }
    auto w = lattice.ambient_to_basis(doubled);
    if (!w) {
        throw hlat::invalid_input("--w-ambient: " + format_ambient(doubled) +
                                  " is not a lattice vector");
    }
    inputs["w"] = hlat::vec_to_json(*w);
    inputs["w_ambient_doubled"] = hlat::vec_to_json(doubled);
    return *w;
}

json lattice_summary(const hlat::Lattice& lattice) {
    json out;
    out["name"] = lattice.name();
    out["rank"] = lattice.rank();
    out["sign"] = to_string(lattice.sign());
    out["det"] = hlat::int_to_json(lattice.det());
    out["unimodular"] = lattice.is_unimodular();
    out["even"] = lattice.is_even();
    return out;
}

void emit(AppState& st) {
    st.report["config"] = hlat::config_to_json(st.config);
    if (st.format == "json") std::cout << st.report.dump(2) << "\n";
    if (!st.report_path.empty()) {
        std::ofstream out(st.report_path);
        if (!out) throw hlat::invalid_input("cannot write report file '" + st.report_path + "'");
        out << st.report.dump(2) << "\n";
    }
}

void cmd_info(AppState& st, const std::string& spec) {
    hlat::Lattice lattice = hlat::parse_lattice_spec(spec);
    st.report["command"] = "info";
    st.report["lattice"] = lattice_summary(lattice);
    st.report["lattice"]["gram"] = hlat::lattice_to_json(lattice)["gram"];
    if (st.format == "text") {
        std::cout << "name:       " << (lattice.name().empty() ? "(unnamed)" : lattice.name())
                  << "\n"
                  << "rank:       " << lattice.rank() << "\n"
                  << "sign:       " << to_string(lattice.sign()) << "\n"
                  << "|det|:      " << lattice.det().str() << "\n"
                  << "unimodular: " << (lattice.is_unimodular() ? "yes" : "no") << "\n"
                  << "even:       " << (lattice.is_even() ? "yes" : "no") << "\n";
    }
    emit(st);
}

void cmd_coset_min(AppState& st, const std::string& spec, const WFlags& flags, bool list) {
    hlat::Lattice lattice = hlat::parse_lattice_spec(spec);
    st.report["command"] = "coset-min";
    st.report["lattice"] = lattice_summary(lattice);
    json inputs;
    Vec w = resolve_w(lattice, flags, inputs);
    st.report["inputs"] = inputs;

    auto res = hlat::coset_min(lattice, w, {st.config.max_nodes});
    json result;
    result["w_norm"] = hlat::int_to_json(lattice.norm(w));
    result["min_norm"] = hlat::int_to_json(res.min_norm);
    result["minimizer_count"] = res.minimizers.size();
    result["nodes"] = res.nodes_visited;
    if (list) {
        json zs = json::array();
        for (const auto& z : res.minimizers) zs.push_back(hlat::vec_to_json(z));
        result["minimizers"] = std::move(zs);
    }
    st.report["result"] = std::move(result);

    if (st.format == "text") {
        std::cout << "|w^2|:          " << lattice.norm(w).str() << "\n"
                  << "coset minimum:  " << res.min_norm.str() << "\n"
                  << "minimizers:     " << res.minimizers.size() << "\n"
                  << "nodes:          " << res.nodes_visited << "\n";
        if (list) {
            for (const auto& z : res.minimizers) {
                std::cout << "  " << format_vec(z);
                if (lattice.has_ambient() && lattice.rank() > 0) {
                    std::cout << "  ambient " << format_ambient(lattice.to_ambient_doubled(z));
                }
                std::cout << "\n";
            }
        }
    }
    emit(st);
}

void cmd_extremal(AppState& st, const std::string& spec, const WFlags& flags) {
    hlat::Lattice lattice = hlat::parse_lattice_spec(spec);
    st.report["command"] = "extremal";
    st.report["lattice"] = lattice_summary(lattice);
    json inputs;
    Vec w = resolve_w(lattice, flags, inputs);
    st.report["inputs"] = inputs;

    auto res = hlat::coset_min(lattice, w, {st.config.max_nodes});
    const Int w_norm = lattice.norm(w);
    const bool extremal = res.min_norm == w_norm;
    json result;
    result["extremal"] = extremal;
    result["w_norm"] = hlat::int_to_json(w_norm);
    result["min_norm"] = hlat::int_to_json(res.min_norm);
    if (!extremal) result["witness"] = hlat::vec_to_json(res.minimizers.front());
    st.report["result"] = std::move(result);

    if (st.format == "text") {
        std::cout << "extremal: " << (extremal ? "yes" : "no") << "  (|w^2| = " << w_norm.str()
                  << ", coset minimum = " << res.min_norm.str() << ")\n";
        if (!extremal) {
            std::cout << "shorter coset vector: " << format_vec(res.minimizers.front()) << "\n";
        }
    }
    emit(st);
}

void cmd_eta(AppState& st, const std::string& spec, const WFlags& flags, const std::string& a_csv,
             int m, bool polynomial) {
    hlat::Lattice lattice = hlat::parse_lattice_spec(spec);
    st.report["command"] = "eta";
    st.report["lattice"] = lattice_summary(lattice);
    json inputs;
    Vec w = resolve_w(lattice, flags, inputs);
    inputs["m"] = m;

    const hlat::EnumBudget budget{st.config.max_nodes};
    json result;
    if (polynomial) {
        auto poly = hlat::eta_polynomial(lattice, w, m, budget, st.config.m_max);
        result["polynomial"] = hlat::polynomial_to_json(poly);
        if (st.format == "text") std::cout << "eta = " << format_polynomial(poly) << "\n";
    } else {
        Vec a(lattice.rank(), Int(0));
        if (!a_csv.empty()) {
            a = parse_int_csv(a_csv, "--a");
            if (a.size() != lattice.rank()) {
                throw hlat::invalid_input("--a: expected " + std::to_string(lattice.rank()) +
                                          " entries, got " + std::to_string(a.size()));
            }
            inputs["a"] = hlat::vec_to_json(a);
        } else if (m != 0) {
            throw hlat::invalid_input("eta at m > 0 needs --a (or --polynomial)");
        }
        Int value = hlat::eta(lattice, w, a, m, budget);
        result["value"] = hlat::int_to_json(value);
        if (st.format == "text") std::cout << "eta = " << value.str() << "\n";
    }
    st.report["inputs"] = inputs;
    st.report["result"] = std::move(result);
    emit(st);
}

void cmd_e_invariant(AppState& st, const std::string& spec, bool full_table) {
    hlat::Lattice lattice = hlat::parse_lattice_spec(spec);
    st.report["command"] = "e-invariant";
    st.report["lattice"] = lattice_summary(lattice);

    hlat::EInvariantOptions options;
    options.m_max = st.config.m_max;
    options.rank_guard = st.config.rank_guard;
    options.threads = st.config.threads;
    options.keep_table = full_table;
    auto cert = hlat::e_invariant(lattice, {st.config.max_nodes}, options);
    st.report["result"] = hlat::certificate_to_json(cert, full_table);

    if (st.format == "text") {
        std::cout << "e = " << cert.value.str() << "\n"
                  << "witness class: " << format_vec(cert.witness_class) << "  (mask "
                  << cert.witness_mask << ")\n"
                  << "witness w:     " << format_vec(cert.witness_w) << "\n"
                  << "|w^2| = " << cert.witness_min_norm.str() << ", m = " << cert.witness_m
                  << ", eta = " << format_polynomial(cert.witness_eta) << "\n"
                  << "classes: " << cert.num_classes << ", nodes: " << cert.nodes_visited << "\n";
        if (full_table) {
            std::cout << "per-class table (mask, min |z^2|, least m, contribution, minimizers):\n";
            for (const auto& row : cert.table) {
                std::cout << "  " << row.rep_mask << ", " << row.min_norm.str() << ", "
                          << (row.min_m ? std::to_string(*row.min_m) : "-") << ", "
                          << (row.contribution ? row.contribution->str() : "-") << ", "
                          << row.minimizer_count << "\n";
            }
        }
    }
    emit(st);
}

void cmd_brieskorn(AppState& st, int k) {
    st.report["command"] = "h-bound brieskorn";
    st.report["inputs"] = json{{"k", k}};
    auto res = hlat::brieskorn_h(k, {st.config.max_nodes});
    json result;
    result["k"] = res.k;
    result["ell"] = hlat::int_to_json(res.ell);
    result["lower"] = hlat::int_to_json(res.lower);
    result["upper"] = hlat::int_to_json(res.upper);
    result["value"] = hlat::int_to_json(res.value);
    result["w"] = hlat::vec_to_json(res.w_basis);
    result["w_ambient_doubled"] = hlat::vec_to_json(res.w_ambient_doubled);
    result["w_norm"] = hlat::int_to_json(res.w_norm);
    result["eta0"] = hlat::int_to_json(res.eta0);
    result["minimizer_count"] = res.minimizer_count;
    result["nodes"] = res.nodes;
    result["scope"] = kScopeLine;
    st.report["result"] = std::move(result);

    if (st.format == "text") {
        std::cout << "h = " << res.value.str() << "  (lower bound " << res.lower.str()
                  << " meets upper bound " << res.upper.str() << ")\n"
                  << "w = " << format_ambient(res.w_ambient_doubled) << ", |w^2| = "
                  << res.w_norm.str() << ", eta = " << res.eta0.str() << " over "
                  << res.minimizer_count << " minimizers\n"
                  << kScopeLine << "\n";
    }
    emit(st);
}

void cmd_certificate(AppState& st, const std::string& spec, const WFlags& flags,
                     const std::string& a_csv, int m, std::int64_t g, std::int64_t b_plus) {
    hlat::Lattice lattice = hlat::parse_lattice_spec(spec);
    st.report["command"] = "h-bound certificate";
    st.report["lattice"] = lattice_summary(lattice);
    json inputs;
    Vec w = resolve_w(lattice, flags, inputs);
    inputs["m"] = m;
    inputs["g"] = g;
    inputs["b_plus"] = b_plus;

    hlat::HBoundInput input;
    input.lattice = lattice;
    input.w = w;
    input.m = m;
    input.g = Int(g);
    input.b_plus = Int(b_plus);
    if (!a_csv.empty()) {
        input.a = parse_int_csv(a_csv, "--a");
        if (input.a.size() != lattice.rank()) {
            throw hlat::invalid_input("--a: expected " + std::to_string(lattice.rank()) +
                                      " entries, got " + std::to_string(input.a.size()));
        }
        inputs["a"] = hlat::vec_to_json(input.a);
    }
    st.report["inputs"] = inputs;

    hlat::HCertificate cert;
    Int bound = hlat::h_lower_from_certificate(input, {st.config.max_nodes}, &cert);
    json result;
    result["lower"] = hlat::int_to_json(bound);
    result["w_norm"] = hlat::int_to_json(cert.w_norm);
    result["m"] = cert.m;
    result["eta"] = hlat::int_to_json(cert.eta_value);
    result["minimizer_count"] = cert.minimizer_count;
    result["nodes"] = cert.nodes;
    result["scope"] = kScopeLine;
    st.report["result"] = std::move(result);

    if (st.format == "text") {
        std::cout << "h >= " << bound.str() << "\n"
                  << "certificate: |w^2| = " << cert.w_norm.str() << ", m = " << cert.m
                  << ", eta = " << cert.eta_value.str() << " over " << cert.minimizer_count
                  << " minimizers\n"
                  << kScopeLine << "\n";
    }
    emit(st);
}

void cmd_surgery(AppState& st, std::int64_t genus) {
    st.report["command"] = "h-bound surgery";
    st.report["inputs"] = json{{"genus", genus}};
    auto bounds = hlat::surgery_upper(Int(genus));
    json result;
    result["lower"] = hlat::int_to_json(bounds.first);
    result["upper"] = hlat::int_to_json(bounds.second);
    result["scope"] = kScopeLine;
    st.report["result"] = std::move(result);
    if (st.format == "text") {
        std::cout << "h-difference across the surgery lies in [" << bounds.first.str() << ", "
                  << bounds.second.str() << "]  (slice genus " << genus << ")\n"
                  << kScopeLine << "\n";
    }
    emit(st);
}

void cmd_detline_check(AppState& st, std::uint64_t trials, std::size_t max_dim,
                       std::uint64_t seed) {
    st.report["command"] = "detline-check";
    st.report["inputs"] = json{{"trials", trials}, {"max_dim", max_dim}, {"seed", seed}};
    auto rep = hlat::detline::detline_check(trials, max_dim, seed);
    json result;
    result["square_pass"] = rep.square_pass;
    result["square_total"] = rep.square_total;
    result["square_odd_cases"] = rep.square_odd_cases;
    result["gamma_pass"] = rep.gamma_pass;
    result["gamma_total"] = rep.gamma_total;
    result["exact3_pass"] = rep.exact3_pass;
    result["exact3_total"] = rep.exact3_total;
    result["all_passed"] = rep.all_passed();
    st.report["result"] = std::move(result);

    if (st.format == "text") {
        std::cout << "square-sign: " << rep.square_pass << "/" << rep.square_total
                  << "  (odd-product cases: " << rep.square_odd_cases << ")\n"
                  << "gamma-sign:  " << rep.gamma_pass << "/" << rep.gamma_total << "\n"
                  << "exact3:      " << rep.exact3_pass << "/" << rep.exact3_total << "\n"
                  << (rep.all_passed() ? "all passed\n" : "FAILURES\n");
    }
    emit(st);
    if (!rep.all_passed()) {
        throw hlat::certificate_failure("determinant-line verification found failing instances");
    }
}

int error_exit_code(hlat::ErrorKind kind) {
    switch (kind) {
        case hlat::ErrorKind::invalid_input: return 2;
        case hlat::ErrorKind::budget_exceeded: return 3;
        case hlat::ErrorKind::certificate: return 4;
        case hlat::ErrorKind::internal: return 5;
    }
    return 5;
}

const char* error_kind_name(hlat::ErrorKind kind) {
    switch (kind) {
        case hlat::ErrorKind::invalid_input: return "invalid_input";
        case hlat::ErrorKind::budget_exceeded: return "budget_exceeded";
        case hlat::ErrorKind::certificate: return "certificate";
        case hlat::ErrorKind::internal: return "internal";
    }
    return "internal";
}

int report_error(const AppState& st, hlat::ErrorKind kind, const std::string& message) {
    std::cerr << "error (" << error_kind_name(kind) << "): " << message << "\n";
    if (st.format == "json") {
        json out;
        out["error"] = json{{"kind", error_kind_name(kind)}, {"message", message}};
        out["config"] = hlat::config_to_json(st.config);
        std::cout << out.dump(2) << "\n";
    }
    return error_exit_code(kind);
}

}  // namespace

int main(int argc, char** argv) {
    AppState st;

    CLI::App app{"exact lattice invariants and certified h-invariant bounds"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--format, --seed, ...) work after the subcommand too
    app.get_formatter()->column_width(28);

    app.add_option("--max-nodes", st.config.max_nodes, "enumeration node budget")
        ->envname("HLAT_MAX_NODES")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--m-max", st.config.m_max, "eta-degree scan cap")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--rank-guard", st.config.rank_guard, "cap on rank for full class sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--threads", st.config.threads, "worker threads (0: all cores)")
        ->capture_default_str();
    app.add_option("--seed", st.config.seed, "seed for randomized verification")
        ->capture_default_str();
    app.add_option("--format", st.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--report", st.report_path, "also write the JSON report to this file");

    std::string spec;
    WFlags wflags;
    std::string a_csv;
    int m = 0;
    bool list = false, polynomial = false, full_table = false;
    int k = 2;
    std::int64_t g = 0, b_plus = 1, genus = 0;
    std::uint64_t trials = 1000;
    std::size_t max_dim = 5;

    auto add_lattice_arg = [&spec](CLI::App* cmd) {
        cmd->add_option("lattice", spec, "lattice: e8 | diag:N | gamma:N | sums with + | JSON file")
            ->required();
    };
    auto add_w_flags = [&wflags](CLI::App* cmd) {
        cmd->add_option("--w", wflags.w_csv, "vector in basis coordinates (csv)");
        cmd->add_option("--w-ambient", wflags.w_ambient_csv,
                        "vector in ambient coordinates (csv; k/2 tokens allowed)");
    };

    auto* info = app.add_subcommand("info", "print rank, determinant, parity, unimodularity");
    add_lattice_arg(info);
    info->callback([&] { cmd_info(st, spec); });

    auto* cmin = app.add_subcommand("coset-min", "minimum norm over w + 2L with all minimizers");
    add_lattice_arg(cmin);
    add_w_flags(cmin);
    cmin->add_flag("--list", list, "list every minimizer");
    cmin->callback([&] { cmd_coset_min(st, spec, wflags, list); });

    auto* extr = app.add_subcommand("extremal", "is |w^2| minimal in its coset w + 2L?");
    add_lattice_arg(extr);
    add_w_flags(extr);
    extr->callback([&] { cmd_extremal(st, spec, wflags); });

    auto* eta = app.add_subcommand("eta", "signed minimizer sum eta(L, w, a, m)");
    add_lattice_arg(eta);
    add_w_flags(eta);
    eta->add_option("--a", a_csv, "dual vector (csv of pairings with the basis)");
    eta->add_option("--m", m, "homogeneous degree")->required();
    eta->add_flag("--polynomial", polynomial, "print the full degree-m expansion");
    eta->callback([&] { cmd_eta(st, spec, wflags, a_csv, m, polynomial); });

    auto* einv = app.add_subcommand("e-invariant", "e(L) with winning-class certificate");
    add_lattice_arg(einv);
    einv->add_flag("--full-table", full_table, "include the full per-class table");
    einv->callback([&] { cmd_e_invariant(st, spec, full_table); });

    auto* hb = app.add_subcommand("h-bound", "certified h-invariant bounds");
    hb->require_subcommand(1);

    auto* brieskorn = hb->add_subcommand("brieskorn", "certified value for the rank-4k family");
    brieskorn->add_option("--k", k, "family parameter (k >= 2)")->required();
    brieskorn->callback([&] { cmd_brieskorn(st, k); });

    auto* certificate =
        hb->add_subcommand("certificate", "lower bound from an extremal vector with eta != 0");
    add_lattice_arg(certificate);
    add_w_flags(certificate);
    certificate->add_option("--a", a_csv, "dual vector (csv); omit to use the full expansion");
    certificate->add_option("--m", m, "homogeneous degree")->required();
    certificate->add_option("--g", g, "genus of the embedded surface")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    certificate->add_option("--bplus", b_plus, "b2+ of the 4-manifold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    certificate->callback([&] { cmd_certificate(st, spec, wflags, a_csv, m, g, b_plus); });

    auto* surgery = hb->add_subcommand("surgery", "h-difference bounds across a -1-surgery");
    surgery->add_option("--genus", genus, "slice genus of the knot")
        ->check(CLI::NonNegativeNumber)
        ->required();
    surgery->callback([&] { cmd_surgery(st, genus); });

    auto* dlc = app.add_subcommand("detline-check", "randomized determinant-line sign verification");
    dlc->add_option("--trials", trials, "instances per family")->capture_default_str();
    dlc->add_option("--max-dim", max_dim, "max space dimension")->capture_default_str();
    dlc->callback([&] { cmd_detline_check(st, trials, max_dim, st.config.seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hlat::Error& e) {
        return report_error(st, e.kind(), e.what());
    } catch (const std::exception& e) {
        return report_error(st, hlat::ErrorKind::internal, e.what());
    }
    return 0;
}
