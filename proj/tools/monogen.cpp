// monogen: construct the shifted-factorial polynomial family, certify
// monogenicity through the discriminant identity, and certify
// non-monogenicity of the Stirling-coefficient family through Newton
// polygons and index bounds.
//
// Exit codes: 0 success / positive verdict, 2 hypothesis violation,
// 3 inconclusive verdict, 64 usage error.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "monogen/monogen.hpp"

namespace {

using monogen::Int;
using monogen::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;

struct Output {
    std::string format = "json"; // "json" | "text"

    void emit(const Json& j) const {
        if (format == "json") {
            std::cout << j.dump(2) << "\n";
            return;
        }
        print_text(j, 0);
    }

    // Text rendering walks the JSON document; nothing is computed twice.
    static void print_text(const Json& j, int indent) {
        std::string pad(static_cast<std::size_t>(indent), ' ');
        if (j.is_object()) {
            for (const auto& [key, value] : j.items()) {
                if (value.is_object() || (value.is_array() && !scalar_array(value))) {
                    std::cout << pad << key << ":\n";
                    print_text(value, indent + 2);
                } else {
                    std::cout << pad << key << ": " << scalar(value) << "\n";
                }
            }
        } else if (j.is_array()) {
            for (const auto& value : j) {
                if (value.is_object() || value.is_array()) {
                    std::cout << pad << "-\n";
                    print_text(value, indent + 2);
                } else {
                    std::cout << pad << "- " << scalar(value) << "\n";
                }
            }
        } else {
            std::cout << pad << scalar(j) << "\n";
        }
    }

    static bool scalar_array(const Json& a) {
        for (const auto& v : a)
            if (v.is_object() || v.is_array()) return false;
        return true;
    }

    static std::string scalar(const Json& v) {
        if (v.is_string()) {
            const std::string& s = v.get_ref<const std::string&>();
            if (s.find('\n') == std::string::npos) return s;
            std::string block = "\n";
            std::size_t start = 0;
            while (start < s.size()) {
                std::size_t end = s.find('\n', start);
                if (end == std::string::npos) end = s.size();
                block += "    " + s.substr(start, end - start) + "\n";
                start = end + 1;
            }
            if (!block.empty() && block.back() == '\n') block.pop_back();
            return block;
        }
        if (v.is_array()) {
            std::string line = "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) line += ", ";
                line += scalar(v[i]);
            }
            return line + "]";
        }
        return v.dump();
    }
};

struct ParamFlags {
    std::string q0, q1, m = "1", q2, p;
    unsigned d = 1;

    void attach(CLI::App* cmd, bool with_p = true) {
        cmd->add_option("--q0", q0, "first prime, q0 < q1")->required();
        cmd->add_option("--q1", q1, "second prime")->required();
        cmd->add_option("--d", d, "factor degree, >= 1")->capture_default_str();
        cmd->add_option("--m", m, "squarefree shift multiplier")->capture_default_str();
        cmd->add_option("--q2", q2, "prime congruent to -1 mod q")->required();
        if (with_p) cmd->add_option("--p", p, "constant-term prime, > m and != q");
    }

    // Exit-2 on violation; prints the itemized list first.
    monogen::ConstructionParams validate(const Output& out) const {
        Int iq0(q0), iq1(q1);
        std::optional<Int> ip;
        if (!p.empty()) ip = Int(p);
        auto v = monogen::validate_params(iq0, iq1, iq0 + iq1 - 1, d, Int(m), Int(q2), ip);
        if (!v.ok()) {
            out.emit(monogen::encode(v.violations));
            std::exit(kExitViolation);
        }
        return *v.params;
    }
};

Json polynomial_report(const monogen::Polynomial& f) {
    return Json{{"coefficients", monogen::encode(f)}, {"pretty", f.str()}};
}

int cmd_construct(const ParamFlags& pf, const Output& out) {
    auto P = pf.validate(out);
    auto built = monogen::build_construction(P);
    auto cd = monogen::compute_cd(P, built);
    Json j{{"cd_values", monogen::encode(cd)},
           {"params", monogen::encode(P)},
           {"shift", monogen::encode(built.shift)}};
    if (P.p) {
        j["polynomial"] = polynomial_report(monogen::assemble_F(P, built));
    } else {
        j["antiderivative"] = polynomial_report(built.F0);
    }
    out.emit(j);
    return kExitOk;
}

int cmd_verify_monogenic(const ParamFlags& pf, const monogen::FactorBudget& budget,
                         const Output& out) {
    auto P = pf.validate(out);
    if (!P.p) {
        std::cerr << "verify-monogenic: --p is required\n";
        return kExitUsage;
    }
    auto cert = monogen::certify_monogenic(P, budget);
    out.emit(monogen::encode(cert));
    return cert.verdict == monogen::MonogenicVerdict::monogenic ? kExitOk : kExitInconclusive;
}

int cmd_non_monogenic(const std::string& p, unsigned s, std::uint64_t witness_bound,
                      const Output& out) {
    std::vector<Int> moduli;
    for (std::uint64_t r : monogen::primes_below(witness_bound)) moduli.emplace_back(r);
    auto cert = monogen::certify_non_monogenic(Int(p), s, moduli);
    out.emit(monogen::encode(cert));
    return cert.verdict == monogen::IndexVerdict::non_monogenic ? kExitOk : kExitInconclusive;
}

int cmd_newton(const std::string& f_lit, const std::string& phi_lit, const std::string& p,
               const std::string& svg_path, const Output& out) {
    auto f = monogen::parse_polynomial_literal(f_lit);
    auto phi = monogen::parse_polynomial_literal(phi_lit);
    auto polygon = monogen::phi_newton_polygon(f, phi, Int(p));
    Json j{{"ascii", monogen::ascii_polygon(polygon)},
           {"phi", monogen::encode(phi)},
           {"phi_index", monogen::encode(monogen::phi_index(polygon))},
           {"polygon", monogen::encode(polygon)}};
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw std::runtime_error("cannot write " + svg_path);
        svg << monogen::svg_polygon(polygon);
        j["svg_file"] = svg_path;
    }
    out.emit(j);
    return kExitOk;
}

int cmd_index_bound(const std::string& f_lit, const std::string& p, const Output& out) {
    auto f = monogen::parse_polynomial_literal(f_lit);
    Int ip(p);
    Json j{{"ore", monogen::encode(monogen::ore_bound(f, ip))}};
    try {
        j["jk"] = monogen::encode(monogen::jk_bound(f, ip));
    } catch (const std::domain_error& e) {
        j["jk_error"] = e.what(); // degenerate: f equals the lifted factor product
    }
    out.emit(j);
    return kExitOk;
}

int cmd_stirling(std::int64_t row, const std::string& p, unsigned a, std::uint64_t table_cap,
                 const Output& out) {
    if (row >= 0) {
        if (static_cast<std::uint64_t>(row) > table_cap)
            throw std::domain_error("stirling: row exceeds the configured table cap");
        monogen::StirlingTable table(static_cast<std::size_t>(row));
        Json values = Json::array();
        for (std::int64_t k = 0; k <= row; ++k)
            values.push_back(monogen::encode(
                table.value(static_cast<std::size_t>(row), static_cast<std::size_t>(k))));
        out.emit(Json{{"n", monogen::encode(row)}, {"row", values}});
        return kExitOk;
    }
    auto report = monogen::stirling_valuation_report(Int(p), a);
    out.emit(monogen::encode(report));
    return report.mismatches == 0 ? kExitOk : kExitInconclusive;
}

int cmd_bernoulli(std::int64_t n, const std::string& regular_p, std::uint64_t table_cap,
                  const Output& out) {
    if (!regular_p.empty()) {
        Int p(regular_p);
        bool regular = monogen::is_regular_prime(p);
        out.emit(Json{{"p", monogen::encode(p)}, {"regular", regular}});
        return kExitOk;
    }
    if (n < 0) throw std::domain_error("bernoulli: pass --n or --regular");
    if (static_cast<std::uint64_t>(n) > table_cap)
        throw std::domain_error("bernoulli: index exceeds the configured table cap");
    monogen::BernoulliCache cache(static_cast<std::size_t>(n));
    out.emit(Json{{"index", monogen::encode(n)},
                  {"value", monogen::encode(cache.value(static_cast<std::size_t>(n)))}});
    return kExitOk;
}

int cmd_density(const ParamFlags& pf, const std::string& bound, const Output& out) {
    auto P = pf.validate(out);
    auto built = monogen::build_construction(P);
    auto cd = monogen::compute_cd(P, built);
    auto fp = monogen::build_f_product(P, cd);
    auto report = monogen::density_constant(fp.f, Int(bound));
    Json j{{"density", monogen::encode(report)},
           {"params", monogen::encode(P)},
           {"polynomial", polynomial_report(fp.f)}};
    out.emit(j);
    return kExitOk;
}

int cmd_discriminant(const std::string& f_lit, const Output& out) {
    auto f = monogen::parse_polynomial_literal(f_lit);
    Json j{{"discriminant", monogen::encode(monogen::discriminant(f))},
           {"polynomial", polynomial_report(f)}};
    out.emit(j);
    return kExitOk;
}

int cmd_search_primes(const ParamFlags& pf, const std::string& limit,
                      const monogen::FactorBudget& budget, const Output& out) {
    auto P = pf.validate(out);
    auto built = monogen::build_construction(P);
    auto cd = monogen::compute_cd(P, built);
    auto fp = monogen::build_f_product(P, cd);
    auto hits = monogen::search_admissible_prime(P, fp, Int(limit), budget);
    Json j = monogen::encode(hits);
    j["limit"] = monogen::encode(Int(limit));
    j["params"] = monogen::encode(P);
    out.emit(j);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monogenic polynomial family constructor and certifier"};
    app.require_subcommand(1);

    std::string config_path, format_flag;
    app.add_option("--config", config_path, "config file (JSON); else $MONOGEN_CONFIG");
    app.add_option("--format", format_flag, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));

    ParamFlags construct_pf, verify_pf, density_pf, search_pf;
    std::string np_p, st_p, bern_regular;
    unsigned np_s = 2, st_a = 1;
    std::uint64_t witness_bound = 300;
    std::string nw_f, nw_phi = "[0, 1]", nw_p, nw_svg;
    std::string ib_f, ib_p, disc_f;
    std::int64_t st_row = -1, bern_n = -1;
    std::string density_bound = "100", search_limit;
    std::uint64_t trial_bound = 0, rho_iterations = 0;

    auto* c_construct = app.add_subcommand("construct", "build the polynomial and its constants");
    construct_pf.attach(c_construct);

    auto* c_verify = app.add_subcommand("verify-monogenic", "emit a monogenicity certificate");
    verify_pf.attach(c_verify);
    c_verify->add_option("--trial-bound", trial_bound, "trial division bound override");
    c_verify->add_option("--rho-iterations", rho_iterations, "rho iteration cap override");

    auto* c_nonmono =
        app.add_subcommand("non-monogenic", "certify the Stirling family non-monogenic");
    c_nonmono->add_option("--p", np_p, "regular prime >= 7")->required();
    c_nonmono->add_option("--s", np_s, "constant-term exponent, >= 2")->required();
    c_nonmono->add_option("--witness-bound", witness_bound, "scan primes below this")
        ->capture_default_str();

    auto* c_newton = app.add_subcommand("newton", "Newton polygon of f with respect to phi");
    c_newton->add_option("f", nw_f, "polynomial literal, ascending coefficients")->required();
    c_newton->add_option("--p", nw_p, "prime")->required();
    c_newton->add_option("--phi", nw_phi, "monic base polynomial literal")->capture_default_str();
    c_newton->add_option("--svg", nw_svg, "also write an SVG rendering here");

    auto* c_index = app.add_subcommand("index-bound", "index lower bounds at p");
    c_index->add_option("f", ib_f, "polynomial literal, ascending coefficients")->required();
    c_index->add_option("--p", ib_p, "prime")->required();

    auto* c_stirling = app.add_subcommand("stirling", "Stirling table rows and valuations");
    c_stirling->add_option("--row", st_row, "print unsigned first-kind row n");
    c_stirling->add_option("--p", st_p, "valuation report prime");
    c_stirling->add_option("--a", st_a, "valuation report multiplier")->capture_default_str();

    auto* c_bern = app.add_subcommand("bernoulli", "Bernoulli numbers and prime regularity");
    c_bern->add_option("--n", bern_n, "print B_n");
    c_bern->add_option("--regular", bern_regular, "test a prime for regularity");

    auto* c_density = app.add_subcommand("density", "local density factors of the family f");
    density_pf.attach(c_density, false);
    c_density->add_option("--bound", density_bound, "prime bound")->capture_default_str();

    auto* c_disc = app.add_subcommand("discriminant", "discriminant of a polynomial");
    c_disc->add_option("f", disc_f, "polynomial literal, ascending coefficients")->required();

    auto* c_search = app.add_subcommand("search-primes", "scan for admissible constant primes");
    search_pf.attach(c_search, false);
    c_search->add_option("--limit", search_limit, "scan primes up to this bound");
    c_search->add_option("--trial-bound", trial_bound, "trial division bound override");
    c_search->add_option("--rho-iterations", rho_iterations, "rho iteration cap override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        auto config = monogen::load_config(
            config_path.empty() ? std::nullopt : std::optional<std::string>(config_path));
        Output out;
        out.format = format_flag.empty() ? config.output_format : format_flag;
        monogen::FactorBudget budget = config.budget;
        if (trial_bound) budget.trial_bound = trial_bound;
        if (rho_iterations) budget.rho_iterations = rho_iterations;

        if (app.got_subcommand(c_construct)) return cmd_construct(construct_pf, out);
        if (app.got_subcommand(c_verify)) return cmd_verify_monogenic(verify_pf, budget, out);
        if (app.got_subcommand(c_nonmono))
            return cmd_non_monogenic(np_p, np_s, witness_bound, out);
        if (app.got_subcommand(c_newton)) return cmd_newton(nw_f, nw_phi, nw_p, nw_svg, out);
        if (app.got_subcommand(c_index)) return cmd_index_bound(ib_f, ib_p, out);
        if (app.got_subcommand(c_stirling))
            return cmd_stirling(st_row, st_p, st_a, config.table_cap, out);
        if (app.got_subcommand(c_bern))
            return cmd_bernoulli(bern_n, bern_regular, config.table_cap, out);
        if (app.got_subcommand(c_density)) return cmd_density(density_pf, density_bound, out);
        if (app.got_subcommand(c_disc)) return cmd_discriminant(disc_f, out);
        if (app.got_subcommand(c_search)) {
            std::string limit =
                search_limit.empty() ? std::to_string(config.search_limit) : search_limit;
            return cmd_search_primes(search_pf, limit, budget, out);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage; // malformed literals
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitViolation; // violated mathematical hypotheses
    } catch (const monogen::ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitViolation;
    }
}
