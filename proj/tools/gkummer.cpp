// Command-line front end: build descended Kummer polynomials from curve
// specs, count points on double covers, evaluate CM newform coefficients and
// verify the per-prime relations between them.
//
// Exit codes: 0 on success (verify: all rows pass), 1 when any verification
// row fails, 2 on usage or input errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gkummer/counting.hpp"
#include "gkummer/hecke.hpp"
#include "gkummer/io.hpp"
#include "gkummer/kummer.hpp"
#include "gkummer/verify.hpp"

namespace {

using namespace gkummer;

std::vector<std::uint64_t> parse_prime_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty()) {
            std::uint64_t p = std::stoull(tok);
            if (!is_prime(p)) throw std::invalid_argument("not a prime: " + tok);
            out.push_back(p);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty prime list");
    return out;
}

std::vector<std::uint64_t> select_primes(std::uint64_t pmax, const std::string& primes_csv) {
    if (!primes_csv.empty()) return parse_prime_list(primes_csv);
    if (pmax == 0) throw std::invalid_argument("one of --pmax or --primes is required");
    return primes_up_to(pmax);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << text;
    }
}

int cmd_build(const std::string& curve_path, const std::string& out_path) {
    WeierstrassCurve curve = curve_from_json(load_json_file(curve_path));
    KummerModel model = build_kummer(curve);
    emit(model_to_json(model).dump(2) + "\n", out_path);
    return 0;
}

int cmd_count(const std::string& poly_path, const std::string& primes_csv, int workers,
              const std::string& format, const std::string& out_path) {
    Json j = load_json_file(poly_path);
    RatPoly g = poly_from_json(j);
    std::vector<std::uint64_t> bad;
    if (j.contains("bad_primes")) bad = j.at("bad_primes").get<std::vector<std::uint64_t>>();

    auto primes = parse_prime_list(primes_csv);
    Json rows = Json::array();
    std::ostringstream table;
    table << "p\tcount\tcharacter_sum\n";
    for (std::uint64_t p : primes) {
        for (std::uint64_t b : bad)
            if (b == p) throw std::invalid_argument("p = " + std::to_string(p) + " is a bad prime for this model");
        QuadraticCharacter chi(p);
        CountResult r = count_double_cover(reduce_mod_p(g, p), chi, workers);
        rows.push_back(Json{{"p", r.p}, {"count", r.count}, {"character_sum", r.character_sum}});
        table << r.p << "\t" << r.count << "\t" << r.character_sum << "\n";
    }
    emit(format == "json" ? Json{{"rows", std::move(rows)}}.dump(2) + "\n" : table.str(), out_path);
    return 0;
}

int cmd_ap(const std::string& scenario_name, std::uint64_t pmax, const std::string& primes_csv,
           const std::string& format, const std::string& out_path) {
    Scenario s = make_scenario(scenario_name);
    Json rows = Json::array();
    std::ostringstream table;
    table << "p\ta_p\n";
    for (std::uint64_t p : select_primes(pmax, primes_csv)) {
        auto split = prime_above(s.character.order, p);
        if (split.kind == PrimeKind::Ramified) {
            rows.push_back(Json{{"p", p}, {"ap", nullptr}, {"note", "ramified"}});
            table << p << "\t" << "ramified\n";
            continue;
        }
        long long ap = newform_ap(s.character, p);
        rows.push_back(Json{{"p", p}, {"ap", ap}});
        table << p << "\t" << ap << "\n";
    }
    Json out{{"scenario", scenario_name}, {"rows", std::move(rows)}};
    emit(format == "json" ? out.dump(2) + "\n" : table.str(), out_path);
    return 0;
}

int cmd_verify(const std::string& scenario_name, std::uint64_t pmax, const std::string& primes_csv,
               int workers, const std::string& format, const std::string& out_path) {
    Scenario s = make_scenario(scenario_name);
    KummerModel model = build_kummer(s.curve);
    auto rows = run_scenario(s, model, select_primes(pmax, primes_csv), workers);
    emit(format == "json" ? report_json(s, rows).dump(2) + "\n" : report_table(s, rows), out_path);
    for (const auto& r : rows)
        if (r.status == VerifyRow::Status::Fail) return 1;
    return 0;
}

int cmd_info(const std::string& format, const std::string& out_path) {
    TopologicalInvariants inv = expected_invariants(3);
    if (format == "json") {
        Json j{{"n", 3},
               {"euler", inv.euler},
               {"betti", Json{{"b0", inv.b0}, {"b1", inv.b1}, {"b2", inv.b2}, {"b3", inv.b3},
                              {"b4", inv.b2}, {"b5", inv.b1}, {"b6", inv.b0}}},
               {"hodge", Json{{"h11", inv.h11}, {"h21", inv.h21}}}};
        emit(j.dump(2) + "\n", out_path);
    } else {
        std::ostringstream os;
        os << "smooth generalised Kummer threefold (n = 3)\n"
           << "euler number e = " << inv.euler << "\n"
           << "betti numbers: b0 = " << inv.b0 << ", b1 = " << inv.b1 << ", b2 = " << inv.b2
           << ", b3 = " << inv.b3 << ", b4 = " << inv.b2 << ", b5 = " << inv.b1
           << ", b6 = " << inv.b0 << "\n"
           << "hodge numbers: h11 = " << inv.h11 << ", h21 = " << inv.h21 << "\n";
        emit(os.str(), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised Kummer models of Weil restrictions: construction, point counts and modularity checks"};
    app.require_subcommand(1);

    std::string curve_path, poly_path, out_path, primes_csv, format = "table";
    std::string scenario_name;
    std::uint64_t pmax = 0;
    int workers = 1;

    auto* build = app.add_subcommand("build", "construct the Kummer polynomial from a curve spec");
    build->add_option("--curve", curve_path, "curve spec JSON")->required();
    build->add_option("--out", out_path, "output path (default stdout)");

    auto* count = app.add_subcommand("count", "count points on a double cover mod p");
    count->add_option("--poly", poly_path, "polynomial JSON")->required();
    count->add_option("--primes", primes_csv, "comma-separated primes")->required();
    count->add_option("--workers", workers, "worker threads (output-identical)");
    count->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    count->add_option("--out", out_path, "output path (default stdout)");

    auto* ap = app.add_subcommand("ap", "CM newform coefficients from the Hecke character");
    ap->add_option("--scenario", scenario_name, "scenario name")->required();
    ap->add_option("--pmax", pmax, "all primes up to this bound");
    ap->add_option("--primes", primes_csv, "comma-separated primes");
    ap->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    ap->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify the per-prime point-count relations");
    verify->add_option("--scenario", scenario_name, "scenario name")->required();
    verify->add_option("--pmax", pmax, "all primes up to this bound");
    verify->add_option("--primes", primes_csv, "comma-separated primes");
    verify->add_option("--workers", workers, "worker threads (output-identical)");
    verify->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--out", out_path, "output path (default stdout)");

    auto* info = app.add_subcommand("info", "topological invariants of the threefold model");
    info->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    info->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (build->parsed()) return cmd_build(curve_path, out_path);
        if (count->parsed()) return cmd_count(poly_path, primes_csv, workers, format, out_path);
        if (ap->parsed()) return cmd_ap(scenario_name, pmax, primes_csv, format, out_path);
        if (verify->parsed())
            return cmd_verify(scenario_name, pmax, primes_csv, workers, format, out_path);
        if (info->parsed()) return cmd_info(format, out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
