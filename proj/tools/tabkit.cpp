#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tabkit/bijections.hpp"
#include "tabkit/csp.hpp"
#include "tabkit/io.hpp"
#include "tabkit/paths.hpp"
#include "tabkit/promotion.hpp"
#include "tabkit/tableau.hpp"
#include "tabkit/verify.hpp"

namespace {

using namespace tabkit;

constexpr int kCacheFormatVersion = 1;

std::optional<std::filesystem::path> cache_location(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("TABKIT_CACHE_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::nullopt;
}

std::string shape_slug(const Partition& shape) {
    std::string slug;
    for (int part : shape.parts()) {
        if (!slug.empty()) slug.push_back('_');
        slug += std::to_string(part);
    }
    return slug;
}

std::vector<IncreasingTableau> load_family(const Partition& shape, int k,
                                           const std::string& cache_flag) {
    const auto dir = cache_location(cache_flag);
    std::filesystem::path file;
    if (dir) {
        file = *dir / ("inc-v" + std::to_string(kCacheFormatVersion) + "-" + shape_slug(shape) +
                       "-k" + std::to_string(k) + ".json");
        std::ifstream in(file);
        if (in) {
            try {
                nlohmann::json j;
                in >> j;
                if (j.at("format").get<int>() == kCacheFormatVersion &&
                    j.at("shape").get<std::vector<int>>() == shape.parts() &&
                    j.at("k").get<int>() == k) {
                    std::vector<IncreasingTableau> family;
                    for (const auto& rows : j.at("tableaux"))
                        family.push_back(IncreasingTableau::from_rows(
                            rows.get<std::vector<std::vector<int>>>()));
                    return family;
                }
            } catch (const std::exception&) {
                // Unreadable or stale cache entry: fall through and recompute.
            }
        }
    }
    std::vector<IncreasingTableau> family = enumerate_increasing(shape, k);
    if (dir) {
        std::error_code ec;
        std::filesystem::create_directories(*dir, ec);
        nlohmann::json j{{"format", kCacheFormatVersion}, {"shape", shape.parts()}, {"k", k}};
        nlohmann::json& list = j["tableaux"] = nlohmann::json::array();
        for (const auto& t : family) list.push_back(t.rows());
        std::ofstream out(file);
        out << j.dump() << "\n";
    }
    return family;
}

std::string csv_cells(const IncreasingTableau& t) {
    std::string out;
    for (const auto& row : t.rows())
        for (int v : row) {
            if (!out.empty()) out.push_back(',');
            out += std::to_string(v);
        }
    return out;
}

std::string complex_str(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f%+.4fi", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

std::string gaussian_str(const BigInt& re, const BigInt& im) {
    if (im == 0) return re.str();
    std::string out = re.str();
    out += im < 0 ? " - " : " + ";
    if (const BigInt a = abs(im); a != 1) out += a.str();
    out += "i";
    return out;
}

nlohmann::json csp_to_json(const CspReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CspRow& row : report.rows)
        rows.push_back({{"exponent", row.exponent},
                        {"exact", row.exact_display},
                        {"integral", row.exact.has_value()},
                        {"approx", complex_str(row.approx)},
                        {"fixed", row.fixed.str()},
                        {"match", row.match}});
    return {{"set", report.set_name},
            {"order", report.order},
            {"polynomial", report.polynomial.to_string()},
            {"rows", rows},
            {"holds", report.holds}};
}

void print_csp_text(const CspReport& report) {
    std::cout << "set " << report.set_name << "\n";
    std::cout << "order " << report.order << "\n";
    std::cout << "polynomial " << report.polynomial.to_string() << "\n";
    std::cout << "exponent exact fixed match approx\n";
    for (const CspRow& row : report.rows)
        std::cout << row.exponent << " " << row.exact_display << " " << row.fixed << " "
                  << (row.match ? "yes" : "no") << " " << complex_str(row.approx) << "\n";
    std::cout << "result " << (report.holds ? "holds" : "fails") << "\n";
}

void print_csp_csv(const CspReport& report) {
    std::cout << "exponent,exact,fixed,match\n";
    for (const CspRow& row : report.rows)
        std::cout << row.exponent << "," << row.exact_display << "," << row.fixed << ","
                  << (row.match ? "yes" : "no") << "\n";
}

int infeasible(const std::string& message) {
    std::cerr << "infeasible: " << message << "\n";
    return 3;
}

int cmd_enumerate(const std::string& shape_text, int k, bool count_only,
                  const std::string& format, const std::string& cache_flag) {
    const Partition shape = parse_shape(shape_text);
    if (k < 0 || k > shape.max_deficit())
        return infeasible("deficit " + std::to_string(k) + " is out of range for shape " +
                          shape.to_string());
    const auto family = load_family(shape, k, cache_flag);
    if (count_only) {
        std::cout << family.size() << "\n";
        return 0;
    }
    for (const auto& t : family) {
        if (format == "json")
            std::cout << to_json(t).dump() << "\n";
        else if (format == "csv")
            std::cout << csv_cells(t) << "\n";
        else
            std::cout << to_text(t) << "\n";
    }
    return 0;
}

int cmd_count(const std::string& shape_text, std::optional<int> k, const std::string& format,
              const std::string& cache_flag) {
    const Partition shape = parse_shape(shape_text);
    if (k) {
        if (*k < 0 || *k > shape.max_deficit())
            return infeasible("deficit " + std::to_string(*k) + " is out of range for shape " +
                              shape.to_string());
        std::cout << load_family(shape, *k, cache_flag).size() << "\n";
        return 0;
    }
    std::vector<size_t> counts;
    size_t total = 0;
    for (int deficit = 0; deficit <= shape.max_deficit(); ++deficit) {
        counts.push_back(load_family(shape, deficit, cache_flag).size());
        total += counts.back();
    }
    if (format == "json") {
        nlohmann::json j{{"shape", shape.parts()}, {"counts", counts}, {"total", total}};
        std::cout << j.dump() << "\n";
    } else {
        const char* sep = format == "csv" ? "," : " ";
        for (size_t deficit = 0; deficit < counts.size(); ++deficit)
            std::cout << deficit << sep << counts[deficit] << "\n";
        std::cout << "total" << sep << total << "\n";
    }
    return 0;
}

int cmd_narayana(int m, int n, const std::string& format) {
    const QPolynomial poly = narayana_polynomial(m, n);
    const int top = (m - 1) * (n - 1);
    if (format == "csv") {
        for (int ell = 0; ell <= top; ++ell)
            std::cout << ell << "," << poly.coefficient(ell) << "\n";
        return 0;
    }
    if (format == "json") {
        std::vector<std::string> row;
        for (int ell = 0; ell <= top; ++ell) row.push_back(poly.coefficient(ell).str());
        nlohmann::json j{{"row", row},
                         {"at1", poly.evaluate(1).str()},
                         {"at2", poly.evaluate(2).str()},
                         {"symmetric", poly.is_palindromic()}};
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "row ";
    for (int ell = 0; ell <= top; ++ell)
        std::cout << (ell > 0 ? "," : "") << poly.coefficient(ell);
    std::cout << "\n";
    std::cout << "at1 " << poly.evaluate(1) << "\n";
    std::cout << "at2 " << poly.evaluate(2) << "\n";
    std::cout << "symmetric " << (poly.is_palindromic() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_schroder(int m, int n, bool large, bool count_only, const std::string& format) {
    if (m < 1 || n < 1) return infeasible("dimensions must be positive");
    const auto paths = enumerate_schroder(m, n, !large);
    if (count_only) {
        std::cout << paths.size() << "\n";
        return 0;
    }
    for (const auto& p : paths) {
        if (format == "json")
            std::cout << to_json(p).dump() << "\n";
        else
            std::cout << to_text(p) << "\n";
    }
    return 0;
}

void print_tableau(const IncreasingTableau& t, const std::string& format) {
    if (format == "json")
        std::cout << to_json(t).dump() << "\n";
    else if (format == "csv")
        std::cout << csv_cells(t) << "\n";
    else
        std::cout << to_text(t) << "\n";
}

int cmd_biject_phi(const std::string& tableau_text, const std::string& format) {
    print_tableau(standardize(tableau_from_text(tableau_text)), format);
    return 0;
}

int cmd_biject_fiber(const std::string& tableau_text, int k, const std::string& format) {
    const auto s = tableau_from_text(tableau_text);
    if (k < 0) return infeasible("deficit must be nonnegative");
    for (const auto& t : standardize_fiber(s, k)) print_tableau(t, format);
    return 0;
}

int cmd_biject_path(const std::string& tableau_text, const std::string& word,
                    const std::string& format) {
    if (tableau_text.empty() == word.empty())
        throw ParseError("pass exactly one of --tableau and --word");
    if (!tableau_text.empty()) {
        const LatticePath p = tableau_to_path(tableau_from_text(tableau_text));
        std::cout << (format == "json" ? to_json(p).dump() : to_text(p)) << "\n";
        return 0;
    }
    print_tableau(path_to_tableau(lattice_path_from_text(word)), format);
    return 0;
}

int cmd_biject_schroder(const std::string& tableau_text, const std::string& masks,
                        const std::string& format) {
    if (tableau_text.empty() == masks.empty())
        throw ParseError("pass exactly one of --tableau and --masks");
    if (!tableau_text.empty()) {
        const SchroderPath p = tableau_to_schroder(tableau_from_text(tableau_text));
        std::cout << (format == "json" ? to_json(p).dump() : to_text(p)) << "\n";
        return 0;
    }
    print_tableau(schroder_to_tableau(schroder_path_from_text(masks)), format);
    return 0;
}

int cmd_promote(const std::string& shape_text, int k, int steps,
                const std::string& tableau_text, const std::string& format) {
    if (steps < 0) return infeasible("steps must be nonnegative");
    if (!tableau_text.empty()) {
        const auto t = tableau_from_text(tableau_text);
        if (!shape_text.empty() && parse_shape(shape_text) != t.shape())
            return infeasible("--shape disagrees with the given tableau");
        print_tableau(promote_steps(t, steps), format);
        return 0;
    }
    if (shape_text.empty()) throw ParseError("pass --tableau or --shape");
    const Partition shape = parse_shape(shape_text);
    if (k < 0 || k > shape.max_deficit())
        return infeasible("deficit " + std::to_string(k) + " is out of range for shape " +
                          shape.to_string());
    for (const auto& t : enumerate_increasing(shape, k)) {
        const auto image = promote_steps(t, steps);
        if (format == "json")
            std::cout << nlohmann::json{{"from", to_text(t)}, {"to", to_text(image)}}.dump()
                      << "\n";
        else
            std::cout << to_text(t) << " -> " << to_text(image) << "\n";
    }
    return 0;
}

int cmd_orbits(const std::string& shape_text, int k, const std::string& format) {
    const Partition shape = parse_shape(shape_text);
    if (k < 0 || k > shape.max_deficit())
        return infeasible("deficit " + std::to_string(k) + " is out of range for shape " +
                          shape.to_string());
    for (const auto& orbit : orbit_decomposition(shape, k)) {
        if (format == "text")
            std::cout << "period=" << orbit.period << " size=" << orbit.members.size()
                      << " representative=" << to_text(orbit.representative) << "\n";
        else
            std::cout << nlohmann::json{{"period", orbit.period},
                                        {"size", orbit.members.size()},
                                        {"representative", to_text(orbit.representative)}}
                             .dump()
                      << "\n";
    }
    return 0;
}

int cmd_csp_hook(int n_cells, int leg, int k, const std::string& format) {
    if (n_cells < 3 || leg < 1 || leg > n_cells - 2 || k < 0 ||
        k > std::min(leg, n_cells - leg - 1))
        return infeasible("hook family parameters out of range");
    const int order = n_cells - k - 1;
    const auto family = enumerate_increasing(Partition::hook(n_cells, leg), k);
    const CspReport report = csp_verify(
        family, [](const IncreasingTableau& t) { return promote_steps(t, 1); }, order,
        hook_csp_polynomial(n_cells, leg, k),
        "hook N=" + std::to_string(n_cells) + " r=" + std::to_string(leg) +
            " k=" + std::to_string(k));
    if (format == "json")
        std::cout << csp_to_json(report).dump() << "\n";
    else if (format == "csv")
        print_csp_csv(report);
    else
        print_csp_text(report);
    return report.holds ? 0 : 1;
}

int cmd_csp_rect33(const std::string& format) {
    const Rect33Report report = rect33_report();
    if (format == "json") {
        nlohmann::json j{{"polynomial", report.polynomial.to_string()},
                         {"at1", report.at_one.str()},
                         {"order", report.order},
                         {"fixed_by_two_steps", report.fixed_by_square.str()},
                         {"at_omega2",
                          gaussian_str(report.at_omega_sq.first, report.at_omega_sq.second)},
                         {"csp", csp_to_json(report.csp)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "at1 " << report.at_one << "\n";
        std::cout << "promotion-order " << report.order << "\n";
        std::cout << "fixed-by-two-steps " << report.fixed_by_square << "\n";
        std::cout << "at-omega2 "
                  << gaussian_str(report.at_omega_sq.first, report.at_omega_sq.second) << "\n";
        if (format == "csv")
            print_csp_csv(report.csp);
        else
            print_csp_text(report.csp);
    }
    return report.csp.holds ? 0 : 1;
}

int cmd_verify_all(int max_cells, const std::string& only) {
    bool all_pass = true;
    for (const CriterionResult& result : run_acceptance(max_cells, only)) {
        const char* tag = result.skipped ? "[SKIP]" : result.pass ? "[PASS]" : "[FAIL]";
        std::cout << tag << " " << result.id << " - " << result.title << "\n";
        for (const std::string& failure : result.failures)
            std::cout << "       " << failure << "\n";
        if (!result.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Increasing tableaux: enumeration, path bijections, promotion, sieving"};
    app.require_subcommand(1);

    std::string shape_text, format = "text", cache_flag, tableau_text, word, masks, only;
    int k = 0, m = 2, n = 1, steps = 1, hook_cells = 3, hook_leg = 1;
    std::optional<int> count_k;
    int max_cells = 12;
    bool count_only = false, large = false;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List a deficit-k family");
    enumerate_cmd->add_option("--shape", shape_text, "3x3, hook:6,2, or parts like 4,1,1")
        ->required();
    enumerate_cmd->add_option("--k", k, "Deficit");
    enumerate_cmd->add_flag("--count-only", count_only, "Print only the cardinality");
    enumerate_cmd->add_option("--cache-dir", cache_flag, "Enumeration cache directory");
    add_format(enumerate_cmd);

    CLI::App* count_cmd = app.add_subcommand("count", "Family sizes per deficit");
    count_cmd->add_option("--shape", shape_text, "Shape")->required();
    count_cmd->add_option("--k", count_k, "Single deficit (default: all)");
    count_cmd->add_option("--cache-dir", cache_flag, "Enumeration cache directory");
    add_format(count_cmd);

    CLI::App* narayana_cmd = app.add_subcommand("narayana", "Ascent-count polynomial row");
    narayana_cmd->add_option("--m", m, "Dimension (at least 2)")->required();
    narayana_cmd->add_option("--n", n, "Endpoint coordinate")->required();
    add_format(narayana_cmd);

    CLI::App* schroder_cmd = app.add_subcommand("schroder", "List 0/1-step chain paths");
    schroder_cmd->add_option("--m", m, "Dimension")->required();
    schroder_cmd->add_option("--n", n, "Endpoint coordinate")->required();
    schroder_cmd->add_flag("--large", large, "Drop the small-step restriction");
    schroder_cmd->add_flag("--count-only", count_only, "Print only the cardinality");
    add_format(schroder_cmd);

    CLI::App* biject_cmd = app.add_subcommand("biject", "Apply the correspondences");
    biject_cmd->require_subcommand(1);
    CLI::App* phi_cmd = biject_cmd->add_subcommand("phi", "Standardize a tableau");
    phi_cmd->add_option("--tableau", tableau_text, "Tableau text like 1,2;2,3")->required();
    add_format(phi_cmd);
    CLI::App* fiber_cmd = biject_cmd->add_subcommand("fiber", "Deficit-k preimages");
    fiber_cmd->add_option("--tableau", tableau_text, "Standard tableau")->required();
    fiber_cmd->add_option("--k", k, "Deficit")->required();
    add_format(fiber_cmd);
    CLI::App* path_cmd = biject_cmd->add_subcommand("path", "Standard tableau <-> step word");
    path_cmd->add_option("--tableau", tableau_text, "Standard rectangular tableau");
    path_cmd->add_option("--word", word, "Step word like 121212");
    add_format(path_cmd);
    CLI::App* schrbij_cmd =
        biject_cmd->add_subcommand("schroder", "Increasing tableau <-> small path");
    schrbij_cmd->add_option("--tableau", tableau_text, "Increasing rectangular tableau");
    schrbij_cmd->add_option("--masks", masks, "Step bitmask list like 1,3,2");
    add_format(schrbij_cmd);

    CLI::App* promote_cmd = app.add_subcommand("promote", "Apply promotion steps");
    promote_cmd->add_option("--shape", shape_text, "Shape (maps the whole family)");
    promote_cmd->add_option("--k", k, "Deficit");
    promote_cmd->add_option("--steps", steps, "Number of promotion steps");
    promote_cmd->add_option("--tableau", tableau_text, "Single tableau to promote");
    add_format(promote_cmd);

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "Promotion orbit decomposition");
    orbits_cmd->add_option("--shape", shape_text, "Shape")->required();
    orbits_cmd->add_option("--k", k, "Deficit");
    std::string orbit_format = "json";
    orbits_cmd->add_option("--format", orbit_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* csp_cmd = app.add_subcommand("csp", "Cyclic sieving verification");
    csp_cmd->require_subcommand(1);
    CLI::App* hook_cmd = csp_cmd->add_subcommand("hook", "Hook family sieving report");
    hook_cmd->add_option("--N", hook_cells, "Cell count")->required();
    hook_cmd->add_option("--r", hook_leg, "Leg length")->required();
    hook_cmd->add_option("--k", k, "Deficit");
    add_format(hook_cmd);
    CLI::App* rect33_cmd =
        csp_cmd->add_subcommand("rect33", "Deficit-1 3x3 counterexample report");
    add_format(rect33_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify-all", "Run the verification battery");
    verify_cmd->add_option("--max-cells", max_cells, "Skip grid cases above this cell count");
    verify_cmd->add_option("--only", only, "Keep criteria whose id contains this text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate_cmd->parsed())
            return cmd_enumerate(shape_text, k, count_only, format, cache_flag);
        if (count_cmd->parsed()) return cmd_count(shape_text, count_k, format, cache_flag);
        if (narayana_cmd->parsed()) return cmd_narayana(m, n, format);
        if (schroder_cmd->parsed()) return cmd_schroder(m, n, large, count_only, format);
        if (phi_cmd->parsed()) return cmd_biject_phi(tableau_text, format);
        if (fiber_cmd->parsed()) return cmd_biject_fiber(tableau_text, k, format);
        if (path_cmd->parsed()) return cmd_biject_path(tableau_text, word, format);
        if (schrbij_cmd->parsed()) return cmd_biject_schroder(tableau_text, masks, format);
        if (promote_cmd->parsed())
            return cmd_promote(shape_text, k, steps, tableau_text, format);
        if (orbits_cmd->parsed()) return cmd_orbits(shape_text, k, orbit_format);
        if (hook_cmd->parsed()) return cmd_csp_hook(hook_cells, hook_leg, k, format);
        if (rect33_cmd->parsed()) return cmd_csp_rect33(format);
        if (verify_cmd->parsed()) return cmd_verify_all(max_cells, only);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
