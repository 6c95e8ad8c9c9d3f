#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "isogrowth.h"

using json = nlohmann::ordered_json;

namespace {

struct cli_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void die(const std::string& why) { throw cli_error(why); }

void check(isogrowth_status st) {
    if (st != ISOGROWTH_OK) die(isogrowth_last_error());
}

std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    isogrowth_free(s);
    return out;
}

struct Curve {
    isogrowth_curve* h = nullptr;
    ~Curve() { isogrowth_curve_release(h); }
};

struct Pair {
    isogrowth_pair* h = nullptr;
    ~Pair() { isogrowth_pair_release(h); }
};

struct Tower {
    isogrowth_tower* h = nullptr;
    ~Tower() { isogrowth_tower_release(h); }
};

long default_digits() {
    const char* env = std::getenv("ISOGROWTH_DIGITS");
    if (env == nullptr) return 50;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') return 50;
    return v;
}

void require_precision(long digits) {
    if (digits < 30) die("precision must be at least 30 digits");
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

void make_curve(const std::string& label, const std::string& coeffs,
                Curve& out) {
    if (!label.empty() && !coeffs.empty())
        die("give either a label or coefficients, not both");
    if (!label.empty()) {
        check(isogrowth_curve_by_label(label.c_str(), &out.h));
        return;
    }
    if (coeffs.empty()) die("no curve given");
    std::vector<std::string> a = split(coeffs, ",");
    if (a.size() != 5)
        die("expected five comma-separated coefficients: a1,a2,a3,a4,a6");
    check(isogrowth_curve_new(a[0].c_str(), a[1].c_str(), a[2].c_str(),
                              a[3].c_str(), a[4].c_str(), &out.h));
}

std::string take_degree(const Pair& p) {
    char* raw = nullptr;
    check(isogrowth_pair_degree(p.h, &raw));
    return take(raw);
}

// --pair label:label, or explicit coefficient lists with a stated degree
void make_pair(const std::string& pair_spec, const std::string& from_coeffs,
               const std::string& to_coeffs, const std::string& degree,
               Pair& out) {
    if (!pair_spec.empty()) {
        if (!from_coeffs.empty() || !to_coeffs.empty())
            die("give either --pair or coefficient lists, not both");
        std::vector<std::string> labels = split(pair_spec, ":");
        if (labels.size() != 2 || labels[0].empty() || labels[1].empty())
            die("expected --pair <label>:<label>");
        check(isogrowth_pair_by_labels(labels[0].c_str(), labels[1].c_str(),
                                       &out.h));
        if (!degree.empty()) {
            std::string found = take_degree(out);
            if (found != degree)
                die("stated degree " + degree +
                    " does not match the table chain (degree " + found + ")");
        }
        return;
    }
    if (from_coeffs.empty() || to_coeffs.empty())
        die("no curve pair given");
    if (degree.empty()) die("explicit curve pairs need --deg");
    Curve from, to;
    make_curve("", from_coeffs, from);
    make_curve("", to_coeffs, to);
    check(isogrowth_pair_new(from.h, to.h, degree.c_str(), &out.h));
}

void make_tower(const std::string& name, const std::string& file, Tower& out) {
    if (!name.empty() && !file.empty())
        die("give either --tower or --tower-file, not both");
    if (!name.empty()) {
        check(isogrowth_tower_by_name(name.c_str(), &out.h));
        return;
    }
    if (file.empty()) die("no tower given");
    std::ifstream in(file);
    if (!in) die("cannot read tower file: " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    check(isogrowth_tower_from_json(buf.str().c_str(), &out.h));
}

void parse_layers(const std::string& spec, long& lo, long& hi) {
    auto whole = [](const std::string& s) {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    };
    std::vector<std::string> parts = split(spec, "..");
    try {
        if (parts.size() == 1) {
            lo = hi = whole(parts[0]);
        } else if (parts.size() == 2) {
            lo = whole(parts[0]);
            hi = whole(parts[1]);
        } else {
            die("expected --layers <n> or --layers <a>..<b>");
        }
    } catch (const std::invalid_argument&) {
        die("expected --layers <n> or --layers <a>..<b>");
    }
    if (hi < lo) die("layer range is empty");
}

std::string interval_text(const json& v) {
    if (v.at("exact").get<bool>()) return v.at("value").get<std::string>();
    std::string out = "center " + v.at("center").get<std::string>() +
                      ", halfwidth " + v.at("halfwidth").get<std::string>();
    return out;
}

bool interval_exact(const json& v) { return v.at("exact").get<bool>(); }

void print_notes(const json& v, const std::string& indent) {
    if (!v.contains("notes")) return;
    for (const auto& note : v.at("notes"))
        std::cout << indent << "note: " << note.get<std::string>() << "\n";
}

void print_report_table(const json& r) {
    long lo = r.at("layers").at("from").get<long>();
    std::cout << "p           " << r.at("p").get<std::string>() << "\n";
    std::cout << "tower       " << r.at("tower").at("kind").get<std::string>()
              << "\n";
    std::cout << "layers      " << lo << ".."
              << r.at("layers").at("to").get<long>() << "\n";
    const json& exps = r.at("exponents");
    const json& sha = r.at("sha");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long n = lo + static_cast<long>(i);
        std::cout << "exponent  n=" << n << "   " << interval_text(exps[i])
                  << "\n";
        print_notes(exps[i], "    ");
    }
    for (std::size_t i = 0; i < sha.size(); ++i) {
        long n = lo + static_cast<long>(i);
        std::cout << "sha ord   n=" << n << "   " << interval_text(sha[i])
                  << "\n";
        print_notes(sha[i], "    ");
    }
    const json& mu = r.at("mu");
    std::cout << "mu          " << mu.at("value").get<std::string>()
              << (mu.at("exact").get<bool>() ? " (exact)" : " (approximate)");
    if (mu.contains("eps_bound") &&
        mu.at("eps_bound").get<std::string>() != "0")
        std::cout << "  |eps| <= " << mu.at("eps_bound").get<std::string>();
    std::cout << "\n";
    if (r.contains("mu_places")) {
        for (const auto& entry : r.at("mu_places"))
            std::cout << "mu at " << entry.at("place").get<std::string>()
                      << "    " << interval_text(entry.at("value")) << "\n";
    }
    if (r.contains("coefficients")) {
        for (const auto& c : r.at("coefficients")) {
            std::cout << "mu_" << c.at("index").get<int>() << "        ";
            if (c.at("fluctuating").get<bool>())
                std::cout << "even " << c.at("even").get<std::string>()
                          << ", odd " << c.at("odd").get<std::string>()
                          << " (fluctuating)";
            else
                std::cout << c.at("value").get<std::string>();
            std::cout << "\n";
        }
    }
    std::cout << "fluctuation " << (r.at("fluctuation").get<bool>() ? "yes" : "no")
              << "\n";
    std::cout << "constant    " << interval_text(r.at("constant_observed"))
              << "\n";
    print_notes(r.at("constant_observed"), "    ");
    for (const auto& a : r.at("assumptions"))
        std::cout << "assuming    " << a.get<std::string>() << "\n";
}

bool report_all_exact(const json& r) {
    for (const auto& v : r.at("exponents"))
        if (!interval_exact(v)) return false;
    for (const auto& v : r.at("sha"))
        if (!interval_exact(v)) return false;
    if (!r.at("mu").at("exact").get<bool>()) return false;
    return interval_exact(r.at("constant_observed"));
}

int run(int argc, char** argv) {
    CLI::App app{"growth of p-primary invariants for isogenous curves"};
    app.require_subcommand(1);

    std::string curve_label, curve_coeffs, prime;
    std::string pair_spec, from_coeffs, to_coeffs, degree;
    std::string tower_name, tower_file, growth_p, layers, place;
    std::string ram, ell, e_stable;
    long v_l = 1, rk = 0;
    long digits = default_digits();
    bool torsion_unknown = false, require_exact = false, roundtrip = false;
    std::string format = "table";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table or machine")
            ->check(CLI::IsMember({"table", "machine"}));
        sub->add_option("--digits", digits,
                        "working precision in decimal digits");
    };

    CLI::App* local = app.add_subcommand("local", "reduction data at a prime");
    local->add_option("--curve", curve_label, "bundled curve label");
    local->add_option("--coeffs", curve_coeffs, "a1,a2,a3,a4,a6");
    local->add_option("--prime", prime, "residue characteristic")->required();
    add_format(local);

    CLI::App* periods =
        app.add_subcommand("periods", "real periods and their quotients");
    periods->add_option("--curve", curve_label, "bundled curve label");
    periods->add_option("--coeffs", curve_coeffs, "a1,a2,a3,a4,a6");
    periods->add_option("--pair", pair_spec, "source:target labels");
    periods->add_option("--p", growth_p, "prime for the valuations");
    add_format(periods);

    CLI::App* omega =
        app.add_subcommand("omega-phi", "period correction above a prime");
    omega->add_option("--pair", pair_spec, "source:target labels");
    omega->add_option("--from-coeffs", from_coeffs, "source coefficients");
    omega->add_option("--to-coeffs", to_coeffs, "target coefficients");
    omega->add_option("--deg", degree, "isogeny degree");
    omega->add_option("--prime", prime, "residue characteristic")->required();
    omega->add_option("--e", ram, "ramification degree of the place")
        ->required();
    omega->add_flag("--require-exact", require_exact,
                    "fail if the result is an interval");
    add_format(omega);

    CLI::App* growth =
        app.add_subcommand("growth", "layer-by-layer growth report");
    growth->add_option("--pair", pair_spec, "source:target labels");
    growth->add_option("--from-coeffs", from_coeffs, "source coefficients");
    growth->add_option("--to-coeffs", to_coeffs, "target coefficients");
    growth->add_option("--deg", degree, "isogeny degree");
    growth->add_option("--tower", tower_name,
                       "tower preset, e.g. cyclotomic:5 or false-tate:3:7");
    growth->add_option("--tower-file", tower_file, "tower description file");
    growth->add_option("--p", growth_p, "growth prime")->required();
    growth->add_option("--layers", layers, "layer range a..b")->required();
    growth->add_option("--rk", rk, "asserted p-corank bound (default 0)");
    growth->add_flag("--torsion-unknown", torsion_unknown,
                     "widen for possibly unstable torsion");
    growth->add_flag("--require-exact", require_exact,
                     "fail if any reported quantity is an interval");
    growth->add_flag("--check-roundtrip", roundtrip,
                     "re-parse the report and verify the serialization");
    add_format(growth);

    CLI::App* bound = app.add_subcommand(
        "conductor-bound", "stable conductor ceiling up the tower");
    bound->add_option("--l", ell, "residue characteristic")->required();
    bound->add_option("--v", v_l, "l-valuation of the stable ramification")
        ->required();
    bound->add_option("--e", e_stable, "stable ramification degree")
        ->required();
    add_format(bound);

    CLI11_PARSE(app, argc, argv);
    require_precision(digits);
    bool machine = format == "machine";

    if (local->parsed()) {
        Curve c;
        make_curve(curve_label, curve_coeffs, c);
        char* raw = nullptr;
        check(isogrowth_local_data(c.h, prime.c_str(), &raw));
        std::string text = take(raw);
        if (machine) {
            std::cout << text << "\n";
            return 0;
        }
        json j = json::parse(text);
        std::cout << "p           " << j.at("p").get<std::string>() << "\n";
        std::cout << "kodaira     " << j.at("kodaira").get<std::string>()
                  << "\n";
        std::cout << "reduction   " << j.at("reduction").get<std::string>();
        if (j.at("reduction").get<std::string>() == "additive")
            std::cout << " (" << j.at("potential").get<std::string>()
                      << ", " << (j.at("tame").get<bool>() ? "tame" : "wild")
                      << ")";
        std::cout << "\n";
        std::cout << "f           " << j.at("f").get<long>() << "\n";
        std::cout << "m           " << j.at("m").get<long>() << "\n";
        std::cout << "c           " << j.at("c").get<long>() << "\n";
        std::cout << "ord(disc)   " << j.at("delta").get<long>() << "\n";
        return 0;
    }

    if (periods->parsed()) {
        if (!pair_spec.empty()) {
            if (growth_p.empty()) die("--pair needs --p for the valuations");
            Pair pr;
            make_pair(pair_spec, "", "", "", pr);
            char* raw = nullptr;
            check(isogrowth_period_quotients(pr.h, growth_p.c_str(), digits,
                                             &raw));
            std::string text = take(raw);
            if (machine) {
                std::cout << text << "\n";
                return 0;
            }
            json j = json::parse(text);
            std::cout << "omega_quotient        "
                      << j.at("omega_quotient").get<std::string>() << "\n";
            std::cout << "omega_star_quotient   "
                      << j.at("omega_star_quotient").get<std::string>() << "\n";
            std::cout << "ord at " << growth_p << "    omega "
                      << j.at("omega_ord").get<long>() << ", omega* "
                      << j.at("omega_star_ord").get<long>() << "\n";
            return 0;
        }
        Curve c;
        make_curve(curve_label, curve_coeffs, c);
        char* raw = nullptr;
        check(isogrowth_periods(c.h, digits, &raw));
        std::string text = take(raw);
        if (machine) {
            std::cout << text << "\n";
            return 0;
        }
        json j = json::parse(text);
        std::cout << "omega       " << j.at("omega").get<std::string>() << "\n";
        std::cout << "omega*      " << j.at("omega_star").get<std::string>()
                  << "\n";
        std::cout << "components  " << j.at("components").get<int>() << "\n";
        return 0;
    }

    if (omega->parsed()) {
        Pair pr;
        make_pair(pair_spec, from_coeffs, to_coeffs, degree, pr);
        char* raw = nullptr;
        check(isogrowth_omega_phi(pr.h, prime.c_str(), ram.c_str(), &raw));
        std::string text = take(raw);
        json j = json::parse(text);
        if (require_exact && !interval_exact(j))
            die("interval-only result when --require-exact is set");
        if (machine) {
            std::cout << text << "\n";
            return 0;
        }
        std::cout << "omega_phi   " << interval_text(j) << "\n";
        print_notes(j, "    ");
        return 0;
    }

    if (growth->parsed()) {
        Pair pr;
        make_pair(pair_spec, from_coeffs, to_coeffs, degree, pr);
        Tower t;
        make_tower(tower_name, tower_file, t);
        long lo = 0, hi = 0;
        parse_layers(layers, lo, hi);
        if (rk < 0) die("--rk must be nonnegative");
        char* raw = nullptr;
        check(isogrowth_growth_report(pr.h, t.h, growth_p.c_str(), lo, hi, rk,
                                      torsion_unknown ? 0 : 1, digits, &raw));
        std::string text = take(raw);
        json j = json::parse(text);
        if (require_exact && !report_all_exact(j))
            die("interval-only result when --require-exact is set");
        if (machine)
            std::cout << text << "\n";
        else
            print_report_table(j);
        if (roundtrip) {
            char* again = nullptr;
            check(isogrowth_report_roundtrip(text.c_str(), &again));
            if (take(again) != text) die("report serialization round-trip drifted");
            std::cout << "roundtrip ok\n";
        }
        return 0;
    }

    if (bound->parsed()) {
        char* raw = nullptr;
        check(isogrowth_conductor_ceiling(ell.c_str(), v_l, e_stable.c_str(),
                                          &raw));
        std::string value = take(raw);
        if (machine) {
            json j;
            j["ceiling"] = value;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "ceiling     " << value << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
