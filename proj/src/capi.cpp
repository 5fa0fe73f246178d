#include "theaterperm.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "theaterperm/anomaly.hpp"
#include "theaterperm/counting.hpp"
#include "theaterperm/errors.hpp"
#include "theaterperm/foata.hpp"
#include "theaterperm/permutation.hpp"
#include "theaterperm/rng.hpp"
#include "theaterperm/theater_sim.hpp"
#include "theaterperm/verify.hpp"

using namespace theaterperm;

struct tp_perm {
    Permutation value;
};

struct tp_count_table {
    CountTable table;
};

struct tp_class_iter {
    ClassEnumerator en;
};

struct tp_trace_set {
    std::vector<SeatingTrace> traces;
};

struct tp_verify_report {
    VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs the body and folds any thrown error into a status code.
template <typename Fn>
tp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(e.what());
        return TP_ERR_PARSE;
    } catch (const InfeasibleSizeError& e) {
        set_error(e.what());
        return TP_ERR_TOO_LARGE;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return TP_ERR_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return TP_ERR_ARGUMENT;
    } catch (const std::logic_error& e) {
        set_error(e.what());
        return TP_ERR_STATE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return TP_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return TP_ERR_INTERNAL;
    }
}

tp_status require(bool cond, const char* msg) {
    if (cond) return TP_OK;
    set_error(msg);
    return TP_ERR_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tp_status out_string(const std::string& s, char** out) {
    *out = dup_string(s);
    if (!*out) {
        set_error("out of memory");
        return TP_ERR_NOMEM;
    }
    return TP_OK;
}

tp_status out_perm(Permutation p, tp_perm** out) {
    *out = new (std::nothrow) tp_perm{std::move(p)};
    if (!*out) {
        set_error("out of memory");
        return TP_ERR_NOMEM;
    }
    return TP_OK;
}

PermClass to_class(int perm_class) {
    switch (perm_class) {
        case TP_CLASS_BOUNDED_CYCLES:
            return PermClass::BoundedCycles;
        case TP_CLASS_THEATER_ADMISSIBLE:
            return PermClass::TheaterAdmissible;
        case TP_CLASS_ANOMALY_FREE:
            return PermClass::AnomalyFree;
        default:
            throw std::invalid_argument("unknown permutation class");
    }
}

}  // namespace

extern "C" {

const char* tp_version(void) { return "1.0.0"; }

const char* tp_rng_algorithm(void) { return SeededRng::algorithm(); }

const char* tp_last_error(void) { return g_last_error.c_str(); }

void tp_string_free(char* s) { std::free(s); }

/* ---- permutations ------------------------------------------------------ */

tp_status tp_perm_parse(const char* text, tp_perm** out) {
    if (tp_status st = require(text && out, "null argument")) return st;
    return guarded([&] { return out_perm(parse_permutation(text), out); });
}

tp_status tp_perm_from_word(const uint32_t* word, uint32_t size, tp_perm** out) {
    if (tp_status st = require(word && out && size > 0, "null or empty word")) return st;
    return guarded([&] {
        std::vector<int> w(word, word + size);
        return out_perm(Permutation::from_word(std::move(w)), out);
    });
}

tp_status tp_perm_identity(uint32_t size, tp_perm** out) {
    if (tp_status st = require(out && size > 0, "size must be positive")) return st;
    return guarded([&] { return out_perm(Permutation::identity(static_cast<int>(size)), out); });
}

void tp_perm_free(tp_perm* p) { delete p; }

uint32_t tp_perm_size(const tp_perm* p) {
    return p ? static_cast<uint32_t>(p->value.size()) : 0;
}

uint32_t tp_perm_at(const tp_perm* p, uint32_t position) {
    if (!p || position < 1 || position > static_cast<uint32_t>(p->value.size())) return 0;
    return static_cast<uint32_t>(p->value(static_cast<int>(position)));
}

tp_status tp_perm_word(const tp_perm* p, uint32_t* out) {
    if (tp_status st = require(p && out, "null argument")) return st;
    const std::vector<int>& w = p->value.word();
    for (size_t k = 0; k < w.size(); ++k) out[k] = static_cast<uint32_t>(w[k]);
    return TP_OK;
}

int tp_perm_equal(const tp_perm* a, const tp_perm* b) {
    if (!a || !b) return 0;
    return a->value == b->value ? 1 : 0;
}

tp_status tp_perm_format(const tp_perm* p, int style, char** out) {
    if (tp_status st = require(p && out && style >= 0 && style <= 2, "bad format style"))
        return st;
    return guarded([&] {
        SerializeStyle s = style == 0   ? SerializeStyle::Comma
                           : style == 1 ? SerializeStyle::Compact
                                        : SerializeStyle::Auto;
        return out_string(to_string(p->value, s), out);
    });
}

tp_status tp_perm_invert(const tp_perm* p, tp_perm** out) {
    if (tp_status st = require(p && out, "null argument")) return st;
    return guarded([&] { return out_perm(invert(p->value), out); });
}

tp_status tp_perm_rotate180(const tp_perm* p, tp_perm** out) {
    if (tp_status st = require(p && out, "null argument")) return st;
    return guarded([&] { return out_perm(rotate180(p->value), out); });
}

tp_status tp_perm_complement(const tp_perm* p, tp_perm** out) {
    if (tp_status st = require(p && out, "null argument")) return st;
    return guarded([&] { return out_perm(complement(p->value), out); });
}

tp_status tp_render_diagram(const tp_perm* p, int format, char** out) {
    if (tp_status st = require(p && out && (format == 0 || format == 1), "bad diagram format"))
        return st;
    return guarded([&] {
        return out_string(format == 0 ? render_diagram_ascii(p->value)
                                      : render_diagram_svg(p->value),
                          out);
    });
}

/* ---- Foata correspondence ---------------------------------------------- */

tp_status tp_foata_forward(const tp_perm* p, tp_perm** out) {
    if (tp_status st = require(p && out, "null argument")) return st;
    return guarded([&] { return out_perm(foata_forward(p->value), out); });
}

tp_status tp_foata_inverse(const tp_perm* w, tp_perm** out) {
    if (tp_status st = require(w && out, "null argument")) return st;
    return guarded([&] { return out_perm(foata_inverse(w->value), out); });
}

tp_status tp_cycle_decomposition(const tp_perm* p, uint32_t* elements, uint32_t* lengths,
                                 uint32_t* n_cycles) {
    if (tp_status st = require(p && elements && lengths && n_cycles, "null argument"))
        return st;
    return guarded([&]() -> tp_status {
        const CycleDecomposition dec = cycle_decomposition(p->value);
        size_t e = 0;
        for (size_t c = 0; c < dec.cycles.size(); ++c) {
            lengths[c] = static_cast<uint32_t>(dec.cycles[c].elements.size());
            for (int v : dec.cycles[c].elements) elements[e++] = static_cast<uint32_t>(v);
        }
        *n_cycles = static_cast<uint32_t>(dec.cycles.size());
        return TP_OK;
    });
}

tp_status tp_cycles_format(const tp_perm* p, int compact, char** out) {
    if (tp_status st = require(p && out, "null argument")) return st;
    return guarded(
        [&] { return out_string(cycle_decomposition(p->value).to_string(compact != 0), out); });
}

tp_status tp_cycles_parse(const char* text, tp_perm** out) {
    if (tp_status st = require(text && out, "null argument")) return st;
    return guarded([&] { return out_perm(parse_cycles(text).to_permutation(), out); });
}

uint32_t tp_max_cycle_length(const tp_perm* p) {
    if (!p) return 0;
    return static_cast<uint32_t>(max_cycle_length(p->value));
}

tp_status tp_cycle_head_of(const tp_perm* w, uint32_t position, uint32_t* out) {
    if (tp_status st = require(w && out, "null argument")) return st;
    return guarded([&]() -> tp_status {
        *out = static_cast<uint32_t>(cycle_head_of(w->value, static_cast<int>(position)));
        return TP_OK;
    });
}

/* ---- anomalies and admissibility --------------------------------------- */

namespace {

tp_anomaly_witness pack(const AnomalyWitness& a) {
    return tp_anomaly_witness{static_cast<uint32_t>(a.block_start),
                              static_cast<uint32_t>(a.b),
                              static_cast<uint32_t>(a.blocker_position),
                              static_cast<uint32_t>(a.blocker_value)};
}

}  // namespace

tp_status tp_find_anomaly_first(const tp_perm* w, uint32_t b, int* found,
                                tp_anomaly_witness* out) {
    if (tp_status st = require(w && found, "null argument")) return st;
    return guarded([&]() -> tp_status {
        auto a = find_b_anomaly_first(w->value, static_cast<int>(b));
        *found = a.has_value() ? 1 : 0;
        if (a && out) *out = pack(*a);
        return TP_OK;
    });
}

tp_status tp_find_anomaly_all(const tp_perm* w, uint32_t b, tp_anomaly_witness* out,
                              uint32_t capacity, uint32_t* count) {
    if (tp_status st = require(w && count, "null argument")) return st;
    return guarded([&]() -> tp_status {
        auto all = find_b_anomaly_all(w->value, static_cast<int>(b));
        *count = static_cast<uint32_t>(all.size());
        if (out) {
            const uint32_t n = std::min<uint32_t>(capacity, *count);
            for (uint32_t k = 0; k < n; ++k) out[k] = pack(all[k]);
        }
        return TP_OK;
    });
}

tp_status tp_has_anomaly(const tp_perm* w, uint32_t b, int* out) {
    if (tp_status st = require(w && out, "null argument")) return st;
    return guarded([&]() -> tp_status {
        *out = has_b_anomaly(w->value, static_cast<int>(b)) ? 1 : 0;
        return TP_OK;
    });
}

tp_status tp_is_theater_admissible(const tp_perm* s, uint32_t b, int* admissible,
                                   tp_theater_violation* violation_out,
                                   int* has_violation) {
    if (tp_status st = require(s && admissible, "null argument")) return st;
    return guarded([&]() -> tp_status {
        auto v = find_theater_violation(s->value, static_cast<int>(b));
        *admissible = v.has_value() ? 0 : 1;
        if (has_violation) *has_violation = v.has_value() ? 1 : 0;
        if (v && violation_out)
            *violation_out = tp_theater_violation{static_cast<uint32_t>(v->block_start),
                                                  static_cast<uint32_t>(v->victim_position)};
        return TP_OK;
    });
}

tp_status tp_bounded_to_theater(const tp_perm* s, tp_perm** out) {
    if (tp_status st = require(s && out, "null argument")) return st;
    return guarded([&] { return out_perm(bounded_to_theater(s->value), out); });
}

tp_status tp_theater_to_bounded(const tp_perm* s, tp_perm** out) {
    if (tp_status st = require(s && out, "null argument")) return st;
    return guarded([&] { return out_perm(theater_to_bounded(s->value), out); });
}

/* ---- counting, enumeration, sampling ------------------------------------ */

tp_count_table* tp_count_table_new(void) { return new (std::nothrow) tp_count_table{}; }

void tp_count_table_free(tp_count_table* t) { delete t; }

tp_status tp_count_bounded_cycles(tp_count_table* t, uint32_t length, uint32_t b,
                                  char** decimal_out) {
    if (tp_status st = require(t && decimal_out, "null argument")) return st;
    return guarded([&] {
        return out_string(
            t->table.count(static_cast<int>(length), static_cast<int>(b)).to_decimal(),
            decimal_out);
    });
}

tp_status tp_count_class_brute(uint32_t length, uint32_t b, int perm_class, uint32_t cap,
                               char** decimal_out) {
    if (tp_status st = require(decimal_out != nullptr, "null argument")) return st;
    return guarded([&] {
        const int effective = cap == 0 ? kEnumerateDefaultCap : static_cast<int>(cap);
        return out_string(count_class_brute(static_cast<int>(length), static_cast<int>(b),
                                            to_class(perm_class), effective)
                              .to_decimal(),
                          decimal_out);
    });
}

tp_status tp_enumerate_begin(uint32_t length, uint32_t b, int perm_class, uint32_t cap,
                             tp_class_iter** out) {
    if (tp_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&]() -> tp_status {
        const int effective = cap == 0 ? kEnumerateDefaultCap : static_cast<int>(cap);
        *out = new tp_class_iter{ClassEnumerator(static_cast<int>(length),
                                                 static_cast<int>(b), to_class(perm_class),
                                                 effective)};
        return TP_OK;
    });
}

int tp_enumerate_next(tp_class_iter* it, tp_perm** out) {
    if (!it || !out) return 0;
    auto p = it->en.next();
    if (!p) return 0;
    return out_perm(std::move(*p), out) == TP_OK ? 1 : 0;
}

void tp_enumerate_free(tp_class_iter* it) { delete it; }

tp_status tp_sample_bounded(uint32_t length, uint32_t b, uint64_t seed, tp_perm** out) {
    if (tp_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        return out_perm(sample_bounded(static_cast<int>(length), static_cast<int>(b), seed),
                        out);
    });
}

/* ---- theater seating simulation ----------------------------------------- */

tp_status tp_reachable_seats(const uint8_t* occupancy, uint32_t length, uint32_t b,
                             uint8_t* reachable) {
    if (tp_status st = require(occupancy && reachable && length > 0, "null or empty row"))
        return st;
    return guarded([&]() -> tp_status {
        SeatingState state = empty_row(static_cast<int>(length));
        for (uint32_t x = 0; x < length; ++x) {
            if (occupancy[x]) {
                state.occupancy[x] = true;
                ++state.time;
            }
        }
        std::fill(reachable, reachable + length, 0);
        for (int seat : reachable_seats(state, static_cast<int>(b)))
            reachable[seat - 1] = 1;
        return TP_OK;
    });
}

tp_status tp_exhaustive_full_occupancy(uint32_t length, uint32_t b, tp_trace_set** out) {
    if (tp_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&]() -> tp_status {
        *out = new tp_trace_set{
            exhaustive_full_occupancy(static_cast<int>(length), static_cast<int>(b))};
        return TP_OK;
    });
}

uint32_t tp_trace_set_size(const tp_trace_set* ts) {
    return ts ? static_cast<uint32_t>(ts->traces.size()) : 0;
}

tp_status tp_trace_set_get(const tp_trace_set* ts, uint32_t index, uint32_t* choices) {
    if (tp_status st = require(ts && choices, "null argument")) return st;
    if (tp_status st = require(index < ts->traces.size(), "trace index out of range"))
        return st;
    const SeatingTrace& t = ts->traces[index];
    for (size_t k = 0; k < t.choices.size(); ++k)
        choices[k] = static_cast<uint32_t>(t.choices[k]);
    return TP_OK;
}

void tp_trace_set_free(tp_trace_set* ts) { delete ts; }

tp_status tp_simulate_random(uint32_t length, uint32_t b, uint64_t seed, uint32_t* choices,
                             uint32_t* n_seated, int* full) {
    if (tp_status st = require(choices && n_seated && full, "null argument")) return st;
    return guarded([&]() -> tp_status {
        SeatingTrace t = simulate_random(static_cast<int>(length), static_cast<int>(b), seed);
        *n_seated = static_cast<uint32_t>(t.choices.size());
        *full = t.full ? 1 : 0;
        for (size_t k = 0; k < t.choices.size(); ++k)
            choices[k] = static_cast<uint32_t>(t.choices[k]);
        return TP_OK;
    });
}

tp_status tp_trace_time_permutation(const uint32_t* choices, uint32_t length,
                                    tp_perm** out) {
    if (tp_status st = require(choices && out && length > 0, "null or empty trace"))
        return st;
    return guarded([&] {
        SeatingTrace t;
        t.choices.assign(choices, choices + length);
        t.full = true;  // validated by the word check inside
        return out_perm(trace_to_time_permutation(t), out);
    });
}

tp_status tp_simulate_batch(uint32_t length, uint32_t b, uint64_t seed, uint64_t trials,
                            uint64_t* full_count, double* mean_seated_fraction) {
    if (tp_status st = require(full_count && mean_seated_fraction, "null argument"))
        return st;
    return guarded([&]() -> tp_status {
        MonteCarloSummary s =
            simulate_batch(static_cast<int>(length), static_cast<int>(b), seed, trials);
        *full_count = s.full_count;
        *mean_seated_fraction = s.mean_seated_fraction;
        return TP_OK;
    });
}

/* ---- verification ------------------------------------------------------- */

tp_status tp_verify_run(uint32_t max_length, tp_verify_report** out) {
    if (tp_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&]() -> tp_status {
        *out = new tp_verify_report{run_verification(static_cast<int>(max_length))};
        return TP_OK;
    });
}

uint32_t tp_verify_max_length(const tp_verify_report* r) {
    return r ? static_cast<uint32_t>(r->report.max_length) : 0;
}

uint32_t tp_verify_count(const tp_verify_report* r) {
    return r ? static_cast<uint32_t>(r->report.results.size()) : 0;
}

const char* tp_verify_name(const tp_verify_report* r, uint32_t index) {
    if (!r || index >= r->report.results.size()) return "";
    return r->report.results[index].name.c_str();
}

const char* tp_verify_range(const tp_verify_report* r, uint32_t index) {
    if (!r || index >= r->report.results.size()) return "";
    return r->report.results[index].range.c_str();
}

const char* tp_verify_detail(const tp_verify_report* r, uint32_t index) {
    if (!r || index >= r->report.results.size()) return "";
    return r->report.results[index].detail.c_str();
}

int tp_verify_passed(const tp_verify_report* r, uint32_t index) {
    if (!r || index >= r->report.results.size()) return 0;
    return r->report.results[index].passed ? 1 : 0;
}

int tp_verify_all_passed(const tp_verify_report* r) {
    return r && r->report.all_passed() ? 1 : 0;
}

void tp_verify_report_free(tp_verify_report* r) { delete r; }

}  // extern "C"
