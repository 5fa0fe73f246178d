// theaterperm command line tool. Talks to the shared library exclusively
// through the C API in theaterperm.h; all presentation (text/JSON) lives here.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "theaterperm.h"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success (including "false" predicate results), 1 verification
// or operational failure, 2 usage/parse error, 3 infeasible-size refusal.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct PermDeleter {
    void operator()(tp_perm* p) const { tp_perm_free(p); }
};
using PermPtr = std::unique_ptr<tp_perm, PermDeleter>;

struct StringDeleter {
    void operator()(char* s) const { tp_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(tp_status st) {
    switch (st) {
        case TP_OK:
            return kExitOk;
        case TP_ERR_PARSE:
        case TP_ERR_ARGUMENT:
            return kExitUsage;
        case TP_ERR_TOO_LARGE:
            return kExitInfeasible;
        default:
            return kExitFailure;
    }
}

// On failure prints the library message and exits.
void check(tp_status st) {
    if (st == TP_OK) return;
    std::cerr << "error: " << tp_last_error() << '\n';
    std::exit(exit_code_for(st));
}

PermPtr parse_perm_arg(const std::string& text) {
    tp_perm* raw = nullptr;
    check(tp_perm_parse(text.c_str(), &raw));
    return PermPtr(raw);
}

std::vector<uint32_t> word_of(const tp_perm* p) {
    std::vector<uint32_t> w(tp_perm_size(p));
    check(tp_perm_word(p, w.data()));
    return w;
}

std::string perm_text(const tp_perm* p) {
    char* s = nullptr;
    check(tp_perm_format(p, 2, &s));  // auto: compact when L <= 9
    CStr holder(s);
    return std::string(s);
}

json perm_json(const tp_perm* p) {
    return json{{"size", tp_perm_size(p)}, {"word", word_of(p)}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

bool is_json(const std::string& format) {
    if (format == "json") return true;
    if (format == "text") return false;
    std::cerr << "error: --format must be text or json\n";
    std::exit(kExitUsage);
}

int class_id(const std::string& name) {
    if (name == "bounded_cycles") return TP_CLASS_BOUNDED_CYCLES;
    if (name == "theater_admissible") return TP_CLASS_THEATER_ADMISSIBLE;
    if (name == "anomaly_free") return TP_CLASS_ANOMALY_FREE;
    std::cerr << "error: unknown class '" << name << "'\n";
    std::exit(kExitUsage);
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << content)) {
        std::cerr << "error: cannot write " << out_path << '\n';
        std::exit(kExitFailure);
    }
}

json witness_json(const tp_perm* w, const tp_anomaly_witness& a) {
    std::vector<uint32_t> positions, letters;
    for (uint32_t k = 1; k <= a.b; ++k) {
        positions.push_back(a.block_start + k);
        letters.push_back(tp_perm_at(w, a.block_start + k));
    }
    return json{{"block_start", a.block_start},
                {"block_positions", positions},
                {"block_letters", letters},
                {"blocker_position", a.blocker_position},
                {"blocker_value", a.blocker_value}};
}

std::string witness_text(const tp_perm* w, const tp_anomaly_witness& a) {
    std::string letters;
    for (uint32_t k = 1; k <= a.b; ++k) {
        if (k > 1) letters += ' ';
        letters += std::to_string(tp_perm_at(w, a.block_start + k));
    }
    return "block positions " + std::to_string(a.block_start + 1) + ".." +
           std::to_string(a.block_start + a.b) + " (letters " + letters + "); blocker " +
           std::to_string(a.blocker_value) + " at position " +
           std::to_string(a.blocker_position);
}

// ---- subcommand bodies ----------------------------------------------------

int run_unary_map(const std::string& perm_arg, const std::string& format,
                  tp_status (*fn)(const tp_perm*, tp_perm**)) {
    PermPtr p = parse_perm_arg(perm_arg);
    tp_perm* raw = nullptr;
    check(fn(p.get(), &raw));
    PermPtr result(raw);
    if (is_json(format))
        emit(perm_json(result.get()));
    else
        std::cout << perm_text(result.get()) << '\n';
    return kExitOk;
}

int run_cycles(const std::string& perm_arg, const std::string& format) {
    PermPtr p = parse_perm_arg(perm_arg);
    if (is_json(format)) {
        const uint32_t n = tp_perm_size(p.get());
        std::vector<uint32_t> elements(n), lengths(n);
        uint32_t n_cycles = 0;
        check(tp_cycle_decomposition(p.get(), elements.data(), lengths.data(), &n_cycles));
        json cycles = json::array();
        size_t at = 0;
        for (uint32_t c = 0; c < n_cycles; ++c) {
            json cyc = json::array();
            for (uint32_t k = 0; k < lengths[c]; ++k) cyc.push_back(elements[at++]);
            cycles.push_back(cyc);
        }
        emit(cycles);
    } else {
        char* s = nullptr;
        check(tp_cycles_format(p.get(), 0, &s));
        CStr holder(s);
        std::cout << s << '\n';
    }
    return kExitOk;
}

int run_anomaly(const std::string& perm_arg, uint32_t b, bool all,
                const std::string& format) {
    PermPtr p = parse_perm_arg(perm_arg);
    const bool as_json = is_json(format);
    if (all) {
        uint32_t count = 0;
        check(tp_find_anomaly_all(p.get(), b, nullptr, 0, &count));
        std::vector<tp_anomaly_witness> witnesses(count);
        if (count)
            check(tp_find_anomaly_all(p.get(), b, witnesses.data(), count, &count));
        if (as_json) {
            json out{{"b", b}, {"found", count > 0}};
            json arr = json::array();
            for (const auto& a : witnesses) arr.push_back(witness_json(p.get(), a));
            out["witnesses"] = arr;
            emit(out);
        } else {
            std::cout << (count > 0 ? "true" : "false") << '\n';
            for (const auto& a : witnesses)
                std::cout << witness_text(p.get(), a) << '\n';
        }
    } else {
        int found = 0;
        tp_anomaly_witness a{};
        check(tp_find_anomaly_first(p.get(), b, &found, &a));
        if (as_json) {
            json out{{"b", b}, {"found", found != 0}};
            if (found) out["witness"] = witness_json(p.get(), a);
            emit(out);
        } else {
            std::cout << (found ? "true" : "false") << '\n';
            if (found) std::cout << witness_text(p.get(), a) << '\n';
        }
    }
    return kExitOk;
}

int run_admissible(const std::string& perm_arg, uint32_t b, const std::string& format) {
    PermPtr p = parse_perm_arg(perm_arg);
    int admissible = 0, has_violation = 0;
    tp_theater_violation v{};
    check(tp_is_theater_admissible(p.get(), b, &admissible, &v, &has_violation));
    if (is_json(format)) {
        json out{{"b", b}, {"admissible", admissible != 0}};
        if (has_violation) {
            std::vector<uint32_t> positions, letters;
            for (uint32_t k = 1; k <= b; ++k) {
                positions.push_back(v.block_start + k);
                letters.push_back(tp_perm_at(p.get(), v.block_start + k));
            }
            out["violation"] = json{{"block_start", v.block_start},
                                    {"block_positions", positions},
                                    {"block_letters", letters},
                                    {"victim_position", v.victim_position},
                                    {"victim_value", tp_perm_at(p.get(), v.victim_position)}};
        }
        emit(out);
    } else {
        std::cout << (admissible ? "true" : "false") << '\n';
        if (has_violation)
            std::cout << "violation: block positions " << v.block_start + 1 << ".."
                      << v.block_start + b << " all exceed position " << v.victim_position
                      << " (value " << tp_perm_at(p.get(), v.victim_position) << ")\n";
    }
    return kExitOk;
}

int run_biject(const std::string& perm_arg, const std::string& direction,
               const std::string& format) {
    if (direction == "to-theater")
        return run_unary_map(perm_arg, format, tp_bounded_to_theater);
    if (direction == "to-bounded")
        return run_unary_map(perm_arg, format, tp_theater_to_bounded);
    std::cerr << "error: --direction must be to-theater or to-bounded\n";
    return kExitUsage;
}

int run_count(uint32_t length, uint32_t b, const std::string& cls,
              const std::string& method, uint32_t cap, const std::string& format) {
    std::string recurrence, brute;
    if (method == "recurrence" || method == "both") {
        tp_count_table* table = tp_count_table_new();
        char* s = nullptr;
        tp_status st = tp_count_bounded_cycles(table, length, b, &s);
        tp_count_table_free(table);
        check(st);
        CStr holder(s);
        recurrence = s;
    }
    if (method == "brute" || method == "both") {
        char* s = nullptr;
        check(tp_count_class_brute(length, b, class_id(cls), cap, &s));
        CStr holder(s);
        brute = s;
    }
    if (method != "recurrence" && method != "brute" && method != "both") {
        std::cerr << "error: --method must be recurrence, brute or both\n";
        return kExitUsage;
    }

    if (is_json(format)) {
        json out{{"L", length}, {"b", b}, {"class", cls}, {"method", method}};
        if (!recurrence.empty()) out["recurrence"] = recurrence;
        if (!brute.empty()) out["brute"] = brute;
        out["count"] = method == "brute" ? brute : recurrence;
        emit(out);
    } else if (method == "both") {
        std::cout << "recurrence " << recurrence << '\n' << "brute " << brute << '\n';
    } else {
        std::cout << (method == "brute" ? brute : recurrence) << '\n';
    }
    if (method == "both" && recurrence != brute) {
        std::cerr << "error: recurrence and brute-force counts disagree\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_enumerate(uint32_t length, uint32_t b, const std::string& cls, uint32_t cap,
                  const std::string& format) {
    tp_class_iter* raw = nullptr;
    check(tp_enumerate_begin(length, b, class_id(cls), cap, &raw));
    std::unique_ptr<tp_class_iter, decltype(&tp_enumerate_free)> it(raw,
                                                                    tp_enumerate_free);
    if (is_json(format)) {
        json words = json::array();
        tp_perm* p = nullptr;
        while (tp_enumerate_next(it.get(), &p)) {
            PermPtr holder(p);
            words.push_back(word_of(p));
        }
        emit(json{{"L", length},
                  {"b", b},
                  {"class", cls},
                  {"count", words.size()},
                  {"words", words}});
    } else {
        tp_perm* p = nullptr;
        while (tp_enumerate_next(it.get(), &p)) {
            PermPtr holder(p);
            std::cout << perm_text(p) << '\n';
        }
    }
    return kExitOk;
}

int run_sample(uint32_t length, uint32_t b, uint64_t seed, uint64_t trials,
               const std::string& format) {
    const bool as_json = is_json(format);
    json samples = json::array();
    for (uint64_t t = 0; t < trials; ++t) {
        tp_perm* raw = nullptr;
        check(tp_sample_bounded(length, b, seed + t, &raw));
        PermPtr p(raw);
        if (as_json)
            samples.push_back(word_of(p.get()));
        else
            std::cout << perm_text(p.get()) << '\n';
    }
    if (as_json)
        emit(json{{"L", length},
                  {"b", b},
                  {"seed", seed},
                  {"trials", trials},
                  {"rng", tp_rng_algorithm()},
                  {"samples", samples}});
    return kExitOk;
}

int run_simulate(uint32_t length, uint32_t b, const std::string& mode, uint64_t seed,
                 uint64_t trials, const std::string& format) {
    const bool as_json = is_json(format);
    if (mode == "exhaustive") {
        tp_trace_set* raw = nullptr;
        check(tp_exhaustive_full_occupancy(length, b, &raw));
        std::unique_ptr<tp_trace_set, decltype(&tp_trace_set_free)> ts(raw,
                                                                       tp_trace_set_free);
        const uint32_t n = tp_trace_set_size(ts.get());
        std::vector<uint32_t> choices(length);
        if (as_json) {
            json traces = json::array();
            for (uint32_t k = 0; k < n; ++k) {
                check(tp_trace_set_get(ts.get(), k, choices.data()));
                traces.push_back(json{{"choices", choices}, {"outcome", "full"}});
            }
            emit(json{{"L", length},
                      {"b", b},
                      {"mode", "exhaustive"},
                      {"count", n},
                      {"traces", traces}});
        } else {
            for (uint32_t k = 0; k < n; ++k) {
                check(tp_trace_set_get(ts.get(), k, choices.data()));
                tp_perm* praw = nullptr;
                check(tp_perm_from_word(choices.data(), length, &praw));
                PermPtr p(praw);
                std::cout << perm_text(p.get()) << '\n';
            }
        }
        return kExitOk;
    }
    if (mode == "monte-carlo") {
        if (trials == 1) {
            // A single run reports its trace rather than a batch summary, so
            // jammed configurations are directly observable.
            std::vector<uint32_t> run(length);
            uint32_t seated = 0;
            int full = 0;
            check(tp_simulate_random(length, b, seed, run.data(), &seated, &full));
            run.resize(seated);
            const char* outcome = full ? "full" : "jammed";
            if (as_json) {
                emit(json{{"L", length},
                          {"b", b},
                          {"mode", "monte-carlo"},
                          {"policy", "uniform_reachable"},
                          {"rng", tp_rng_algorithm()},
                          {"seed", seed},
                          {"trace", json{{"choices", run}, {"outcome", outcome}}}});
            } else {
                std::string choices;
                for (size_t k = 0; k < run.size(); ++k) {
                    if (k) choices += ',';
                    choices += std::to_string(run[k]);
                }
                std::cout << "choices " << choices << '\n' << "outcome " << outcome << '\n';
            }
            return kExitOk;
        }
        uint64_t full_count = 0;
        double mean_fraction = 0.0;
        check(tp_simulate_batch(length, b, seed, trials, &full_count, &mean_fraction));
        const double full_rate =
            trials == 0 ? 0.0 : static_cast<double>(full_count) / static_cast<double>(trials);
        if (as_json) {
            emit(json{{"L", length},
                      {"b", b},
                      {"mode", "monte-carlo"},
                      {"policy", "uniform_reachable"},
                      {"rng", tp_rng_algorithm()},
                      {"seed", seed},
                      {"trials", trials},
                      {"full_count", full_count},
                      {"full_rate", full_rate},
                      {"mean_seated_fraction", mean_fraction}});
        } else {
            std::printf("trials %llu\n", static_cast<unsigned long long>(trials));
            std::printf("full %llu (%.6f)\n", static_cast<unsigned long long>(full_count),
                        full_rate);
            std::printf("mean_seated_fraction %.6f\n", mean_fraction);
            std::printf("policy uniform_reachable\n");
            std::printf("rng %s\n", tp_rng_algorithm());
            std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
        }
        return kExitOk;
    }
    std::cerr << "error: --mode must be exhaustive or monte-carlo\n";
    return kExitUsage;
}

int run_verify(uint32_t max_length, const std::string& format) {
    tp_verify_report* raw = nullptr;
    check(tp_verify_run(max_length, &raw));
    std::unique_ptr<tp_verify_report, decltype(&tp_verify_report_free)> report(
        raw, tp_verify_report_free);
    max_length = tp_verify_max_length(report.get());
    const uint32_t n = tp_verify_count(report.get());
    const bool ok = tp_verify_all_passed(report.get()) != 0;
    if (is_json(format)) {
        json results = json::array();
        for (uint32_t k = 0; k < n; ++k)
            results.push_back(json{{"name", tp_verify_name(report.get(), k)},
                                   {"range", tp_verify_range(report.get(), k)},
                                   {"passed", tp_verify_passed(report.get(), k) != 0},
                                   {"detail", tp_verify_detail(report.get(), k)}});
        emit(json{{"max_length", max_length}, {"all_passed", ok}, {"results", results}});
    } else {
        for (uint32_t k = 0; k < n; ++k) {
            const bool passed = tp_verify_passed(report.get(), k) != 0;
            std::cout << (passed ? "PASS " : "FAIL ") << tp_verify_name(report.get(), k)
                      << " (" << tp_verify_range(report.get(), k) << ')';
            if (!passed) std::cout << ": " << tp_verify_detail(report.get(), k);
            std::cout << '\n';
        }
        std::cout << (ok ? "OK" : "FAILED") << " - " << n
                  << " properties at max length " << max_length << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

int run_diagram(const std::string& perm_arg, const std::string& format,
                const std::string& out_path) {
    int fmt;
    if (format == "ascii")
        fmt = 0;
    else if (format == "svg")
        fmt = 1;
    else {
        std::cerr << "error: diagram --format must be ascii or svg\n";
        return kExitUsage;
    }
    PermPtr p = parse_perm_arg(perm_arg);
    char* s = nullptr;
    check(tp_render_diagram(p.get(), fmt, &s));
    CStr holder(s);
    write_output(s, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation combinatorics for the theater seating model"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tp_version()));

    struct {
        std::string perm;
        std::string format = "text";
        std::string diagram_format = "ascii";
        std::string cls = "bounded_cycles";
        std::string method = "recurrence";
        std::string direction;
        std::string mode;
        std::string out_path;
        uint32_t b = 1;
        uint32_t length = 0;
        uint32_t max_length = 6;
        uint32_t cap = 9;
        uint64_t seed = 0;
        uint64_t trials = 1;
        bool all = false;
    } opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: text or json")
            ->default_val("text");
    };

    CLI::App* foata = app.add_subcommand("foata", "apply the Foata correspondence");
    foata->add_option("perm", opt.perm, "permutation (one-line word)")->required();
    add_format(foata);

    CLI::App* foata_inv = app.add_subcommand("foata-inv", "invert the Foata correspondence");
    foata_inv->add_option("perm", opt.perm, "permutation (one-line word)")->required();
    add_format(foata_inv);

    CLI::App* cycles = app.add_subcommand("cycles", "canonical cycle decomposition");
    cycles->add_option("perm", opt.perm, "permutation (one-line word)")->required();
    add_format(cycles);

    CLI::App* anomaly = app.add_subcommand("anomaly", "find b-anomalies");
    anomaly->add_option("perm", opt.perm, "word to scan")->required();
    anomaly->add_option("--b", opt.b, "block width b >= 1")->required();
    anomaly->add_flag("--all", opt.all, "report every anomalous block, not just the first");
    add_format(anomaly);

    CLI::App* admissible = app.add_subcommand("admissible", "theater admissibility test");
    admissible->add_option("perm", opt.perm, "occupancy-time permutation")->required();
    admissible->add_option("--b", opt.b, "blocking cluster size b >= 1")->required();
    add_format(admissible);

    CLI::App* biject = app.add_subcommand(
        "biject", "bounded-cycle <-> theater-admissible bijection");
    biject->add_option("perm", opt.perm, "permutation to map")->required();
    biject->add_option("--direction", opt.direction, "to-theater or to-bounded")->required();
    add_format(biject);

    CLI::App* count = app.add_subcommand("count", "count a permutation class");
    count->add_option("--length", opt.length, "permutation length L")->required();
    count->add_option("--b", opt.b, "cycle-length / blocking parameter")->required();
    count->add_option("--class", opt.cls,
                      "bounded_cycles, theater_admissible or anomaly_free");
    count->add_option("--method", opt.method, "recurrence, brute or both");
    count->add_option("--max-length", opt.cap, "cap for brute-force enumeration (<= 12)");
    add_format(count);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a class in lexicographic order");
    enumerate->add_option("--length", opt.length, "permutation length L")->required();
    enumerate->add_option("--b", opt.b, "cycle-length / blocking parameter")->required();
    enumerate->add_option("--class", opt.cls,
                          "bounded_cycles, theater_admissible or anomaly_free")
        ->required();
    enumerate->add_option("--max-length", opt.cap, "enumeration cap (<= 12)");
    add_format(enumerate);

    CLI::App* sample = app.add_subcommand("sample", "uniform bounded-cycle samples");
    sample->add_option("--length", opt.length, "permutation length L")->required();
    sample->add_option("--b", opt.b, "maximum cycle length")->required();
    sample->add_option("--seed", opt.seed, "base seed; trial t uses seed+t")->required();
    sample->add_option("--trials", opt.trials, "number of draws");
    add_format(sample);

    CLI::App* simulate = app.add_subcommand("simulate", "theater seating dynamics");
    simulate->add_option("--length", opt.length, "row length L")->required();
    simulate->add_option("--b", opt.b, "blocking cluster size")->required();
    simulate->add_option("--mode", opt.mode, "exhaustive or monte-carlo")->required();
    simulate->add_option("--trials", opt.trials, "monte-carlo trial count");
    simulate->add_option("--seed", opt.seed, "base seed; trial t uses seed+t");
    add_format(simulate);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--max-length", opt.max_length,
                       "exhaustive sweep bound (default 6; 7 is slower)");
    add_format(verify);

    CLI::App* diagram = app.add_subcommand("diagram", "render the point diagram");
    diagram->add_option("perm", opt.perm, "permutation to draw")->required();
    diagram->add_option("--format", opt.diagram_format, "ascii or svg")
        ->default_val("ascii");
    diagram->add_option("--out", opt.out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (foata->parsed()) return run_unary_map(opt.perm, opt.format, tp_foata_forward);
    if (foata_inv->parsed()) return run_unary_map(opt.perm, opt.format, tp_foata_inverse);
    if (cycles->parsed()) return run_cycles(opt.perm, opt.format);
    if (anomaly->parsed()) return run_anomaly(opt.perm, opt.b, opt.all, opt.format);
    if (admissible->parsed()) return run_admissible(opt.perm, opt.b, opt.format);
    if (biject->parsed()) return run_biject(opt.perm, opt.direction, opt.format);
    if (count->parsed())
        return run_count(opt.length, opt.b, opt.cls, opt.method, opt.cap, opt.format);
    if (enumerate->parsed())
        return run_enumerate(opt.length, opt.b, opt.cls, opt.cap, opt.format);
    if (sample->parsed())
        return run_sample(opt.length, opt.b, opt.seed, opt.trials, opt.format);
    if (simulate->parsed()) {
        if (simulate->count("--trials") == 0) opt.trials = 1000;
        return run_simulate(opt.length, opt.b, opt.mode, opt.seed, opt.trials, opt.format);
    }
    if (verify->parsed()) return run_verify(opt.max_length, opt.format);
    if (diagram->parsed()) return run_diagram(opt.perm, opt.diagram_format, opt.out_path);

    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
