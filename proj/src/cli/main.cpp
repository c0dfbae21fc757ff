// hyposhift: exact hyponormality tests for 2-variable weighted shifts.
//
// Subcommands: det-hilbert, classify, sweep, verify.
// Exit codes: 0 ok, 1 usage/domain error, 2 verification mismatch.

#include "hyposhift/hilbert.hpp"
#include "hyposhift/hypotests.hpp"
#include "hyposhift/rational.hpp"
#include "hyposhift/shift_model.hpp"
#include "hyposhift/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using hyposhift::Rational;
namespace hilb = hyposhift::hilbert;
namespace tests = hyposhift::hypotests;
namespace shifts = hyposhift::shifts;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational need_rational(const std::string& where, const std::string& text) {
    auto r = hyposhift::parse_rational(text);
    if (!r)
        throw UsageError(where + ": expected a rational \"num/den\", got \"" + text +
                         "\" (decimal input is rejected)");
    return *r;
}

int need_int(const std::string& where, const std::string& text) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(text, &pos);
    } catch (...) {
        pos = 0;
    }
    if (text.empty() || pos != text.size())
        throw UsageError(where + ": expected an integer, got \"" + text + "\"");
    return v;
}

std::string trim(std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string verdict_line(const std::string& label, const shifts::Verdict& v, int decimal) {
    std::ostringstream os;
    os << label << ": " << shifts::property_name(v.property, v.k)
       << (v.holds ? " holds" : " fails") << "; threshold2 = ";
    if (v.threshold_sq) {
        os << hyposhift::to_string(*v.threshold_sq);
        if (decimal >= 0) os << " (" << hyposhift::render_decimal(*v.threshold_sq, decimal) << ")";
    } else {
        os << "-";
    }
    if (v.window_limited) os << "; window-limited";
    os << "; rule: " << v.rule;
    return os.str();
}

// ---------------------------------------------------------------- det-hilbert

int cmd_det_hilbert(int k, const std::string& x_text, const std::string& h_text, bool oracle,
                    int decimal) {
    hilb::GenHilbertParams p;
    p.k = k;
    p.x = need_rational("--x", x_text);
    p.h = need_rational("--h", h_text);
    hilb::validate(p);
    Rational closed = hilb::det_generalized_hilbert(p);
    std::string line = hyposhift::to_string(closed);
    if (decimal >= 0) line += " " + hyposhift::render_decimal(closed, decimal);
    bool match = true;
    if (oracle) {
        Rational brute = hyposhift::det(hilb::build_generalized_hilbert(p));
        match = (brute == closed);
        line += match ? " MATCH" : " MISMATCH";
    }
    std::cout << line << "\n";
    return match ? 0 : 2;
}

// ------------------------------------------------------------------- classify

struct ClassifyCli {
    std::string family;
    std::string kappa2, a2, x2, y2, p, q;
    std::string k;
    int h = 1;
    int l = 1;
    int decimal = -1;
    CLI::Option* o_a2 = nullptr;
    CLI::Option* o_k = nullptr;
    CLI::Option* o_h = nullptr;
    CLI::Option* o_l = nullptr;
};

int cmd_classify(const ClassifyCli& c) {
    std::vector<std::string> lines;
    if (c.family == "kappa") {
        if (c.kappa2.empty()) throw UsageError("classify --family kappa needs --kappa2");
        Rational ksq = need_rational("--kappa2", c.kappa2);
        if (c.o_a2->count() > 0) {
            // General a2 runs the exact pair test for the (2,1) power.
            if (c.o_k->count() || c.o_h->count() || c.o_l->count())
                throw UsageError(
                    "--a2 selects the 2-hyponormality pair test for the (2,1) power; "
                    "--k/--h/--l do not apply");
            Rational asq = need_rational("--a2", c.a2);
            auto v = tests::classify_kappa_h2(asq, ksq);
            lines.push_back(verdict_line("original", v.original, c.decimal));
            lines.push_back(verdict_line("power21", v.power21, c.decimal));
        } else {
            int k = c.k.empty() ? 1 : need_int("--k", c.k);
            auto v = tests::classify_kappa(ksq, k, c.h);
            lines.push_back(verdict_line("original", v.original, c.decimal));
            lines.push_back(verdict_line("power", v.power, c.decimal));
        }
    } else if (c.family == "s1") {
        if (c.x2.empty() || c.y2.empty() || c.a2.empty())
            throw UsageError("classify --family s1 needs --x2, --y2, --a2");
        auto v = tests::classify_s1(need_rational("--x2", c.x2), need_rational("--y2", c.y2),
                                    need_rational("--a2", c.a2));
        lines.push_back(verdict_line("h1", v.h1, c.decimal));
        lines.push_back(verdict_line("h2", v.h2_equals_subnormal, c.decimal));
    } else if (c.family == "classA") {
        if (c.p.empty() || c.q.empty() || c.y2.empty() || c.a2.empty())
            throw UsageError("classify --family classA needs --p, --q, --y2, --a2");
        Rational p = need_rational("--p", c.p);
        Rational q = need_rational("--q", c.q);
        Rational ysq = need_rational("--y2", c.y2);
        Rational asq = need_rational("--a2", c.a2);
        std::vector<std::pair<std::string, tests::NecessityLevel>> levels;
        if (c.k.empty()) {
            levels = {{"k=1", tests::NecessityLevel::h1},
                      {"k=2", tests::NecessityLevel::h2},
                      {"k=inf", tests::NecessityLevel::hinf}};
        } else if (c.k == "1") {
            levels = {{"k=1", tests::NecessityLevel::h1}};
        } else if (c.k == "2") {
            levels = {{"k=2", tests::NecessityLevel::h2}};
        } else if (c.k == "inf") {
            levels = {{"k=inf", tests::NecessityLevel::hinf}};
        } else {
            throw UsageError("classify --family classA: --k must be 1, 2, or inf");
        }
        for (const auto& [label, level] : levels)
            lines.push_back(
                verdict_line(label, tests::classify_classA_necessary(p, q, ysq, asq, level),
                             c.decimal));
    } else {
        throw UsageError("classify: --family must be kappa, s1, or classA");
    }
    for (const auto& l : lines) std::cout << l << "\n";
    return 0;
}

// ---------------------------------------------------------------------- sweep

// Column label: the spec string with structural characters flattened,
// e.g. "power:k=1,h=2" -> "power_k1_h2".
std::string column_label(const std::string& spec) {
    std::string out;
    for (char ch : spec) {
        if (ch == ':' || ch == ',' || ch == '/') out += '_';
        else if (ch != '=') out += ch;
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_kv_list(const std::string& where,
                                                               const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = (comma == std::string::npos) ? text.size() + 1 : comma + 1;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError(where + ": expected key=value, got \"" + item + "\"");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

struct TestSpec {
    enum class Kind { kappa_original, kappa_power, s1_h1, s1_subnormal, classa_nec };
    std::string label;
    Kind kind = Kind::kappa_original;
    int k = 1;
    int h = 1;
    tests::NecessityLevel level = tests::NecessityLevel::hinf;
    const char* family = "kappa";
};

TestSpec parse_test(const std::string& text) {
    TestSpec t;
    t.label = column_label(text);
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<std::pair<std::string, std::string>> kvs;
    if (colon != std::string::npos)
        kvs = parse_kv_list("--test " + text, text.substr(colon + 1));
    auto reject_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, val] : kvs) {
            bool ok = false;
            for (const char* a : allowed)
                if (key == a) ok = true;
            if (!ok)
                throw UsageError("--test " + text + ": unknown key \"" + key + "\"");
            (void)val;
        }
    };
    if (name == "original" || name == "power") {
        t.kind = (name == "power") ? TestSpec::Kind::kappa_power : TestSpec::Kind::kappa_original;
        t.family = "kappa";
        reject_keys(name == "power" ? std::initializer_list<const char*>{"k", "h"}
                                    : std::initializer_list<const char*>{"k"});
        for (const auto& [key, val] : kvs) {
            if (key == "k") t.k = need_int("--test " + text, val);
            if (key == "h") t.h = need_int("--test " + text, val);
        }
    } else if (name == "h1" || name == "h2" || name == "subnormal") {
        t.kind = (name == "h1") ? TestSpec::Kind::s1_h1 : TestSpec::Kind::s1_subnormal;
        t.family = "s1";
        reject_keys({});
    } else if (name == "nec") {
        t.kind = TestSpec::Kind::classa_nec;
        t.family = "classA";
        reject_keys({"k"});
        bool have_k = false;
        for (const auto& [key, val] : kvs) {
            if (key != "k") continue;
            have_k = true;
            if (val == "1") t.level = tests::NecessityLevel::h1;
            else if (val == "2") t.level = tests::NecessityLevel::h2;
            else if (val == "inf") t.level = tests::NecessityLevel::hinf;
            else throw UsageError("--test " + text + ": k must be 1, 2, or inf");
        }
        if (!have_k) throw UsageError("--test " + text + ": needs k=1, k=2, or k=inf");
    } else {
        throw UsageError("--test " + text +
                         ": unknown test (use original, power, h1, h2, subnormal, nec)");
    }
    return t;
}

struct ThresholdSpec {
    std::string label;
    tests::ThresholdName name = tests::ThresholdName::h1;
    std::optional<int> k;
    std::optional<Rational> h;
};

ThresholdSpec parse_threshold(const std::string& text) {
    ThresholdSpec t;
    t.label = column_label(text) + "_sq";
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    auto parsed = tests::threshold_by_name(name);
    if (!parsed)
        throw UsageError("--threshold " + text + ": unknown threshold \"" + name + "\"");
    t.name = *parsed;
    if (colon != std::string::npos) {
        for (const auto& [key, val] : parse_kv_list("--threshold " + text, text.substr(colon + 1))) {
            if (key == "k") t.k = need_int("--threshold " + text, val);
            else if (key == "h") t.h = need_rational("--threshold " + text, val);
            else throw UsageError("--threshold " + text + ": unknown key \"" + key + "\"");
        }
    }
    return t;
}

struct SweepCli {
    std::string family, sweep, from, to, step, format = "csv", out, config;
    std::vector<std::string> tests, thresholds;
    // fixed rational parameters by flag name
    std::vector<std::pair<std::string, std::string>> fixed_names;  // name -> value text
    std::map<std::string, CLI::Option*> opts;
};

struct ConfigData {
    std::vector<std::pair<std::string, std::string>> scalars;
    std::vector<std::string> tests, thresholds;
};

ConfigData read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    ConfigData cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        if (key == "test") cfg.tests.push_back(val);
        else if (key == "threshold") cfg.thresholds.push_back(val);
        else cfg.scalars.emplace_back(key, val);
    }
    return cfg;
}

struct Cell {
    bool holds = false;
    std::optional<Rational> thr2;
};

struct Row {
    Rational value;
    std::vector<Cell> cells;
    std::vector<Rational> thresholds;
};

Rational get_param(const std::map<std::string, Rational>& ps, const std::string& name) {
    auto it = ps.find(name);
    if (it == ps.end())
        throw UsageError("missing parameter --" + name + " (fix it with a flag or sweep it)");
    return it->second;
}

Cell eval_test(const TestSpec& t, const std::map<std::string, Rational>& ps) {
    shifts::Verdict v;
    switch (t.kind) {
        case TestSpec::Kind::kappa_original:
            v = tests::classify_kappa(get_param(ps, "kappa2"), t.k, t.h).original;
            break;
        case TestSpec::Kind::kappa_power:
            v = tests::classify_kappa(get_param(ps, "kappa2"), t.k, t.h).power;
            break;
        case TestSpec::Kind::s1_h1:
            v = tests::classify_s1(get_param(ps, "x2"), get_param(ps, "y2"), get_param(ps, "a2"))
                    .h1;
            break;
        case TestSpec::Kind::s1_subnormal:
            v = tests::classify_s1(get_param(ps, "x2"), get_param(ps, "y2"), get_param(ps, "a2"))
                    .h2_equals_subnormal;
            break;
        case TestSpec::Kind::classa_nec:
            v = tests::classify_classA_necessary(get_param(ps, "p"), get_param(ps, "q"),
                                                 get_param(ps, "y2"), get_param(ps, "a2"),
                                                 t.level);
            break;
    }
    return Cell{v.holds, v.threshold_sq};
}

Rational eval_threshold(const ThresholdSpec& t, const std::map<std::string, Rational>& ps) {
    tests::ThresholdParams tp;
    auto maybe = [&](const char* name) -> std::optional<Rational> {
        auto it = ps.find(name);
        if (it == ps.end()) return std::nullopt;
        return it->second;
    };
    tp.a_sq = maybe("a2");
    tp.p = maybe("p");
    tp.q = maybe("q");
    tp.h = t.h ? t.h : maybe("h");
    tp.k = t.k;
    return tests::threshold_sq(t.name, tp);
}

int cmd_sweep(SweepCli& sc) {
    // Config first, flags override; conflicts are reported, not silently resolved.
    if (!sc.config.empty()) {
        ConfigData cfg = read_config(sc.config);
        std::map<std::string, std::string> cfg_map;
        for (const auto& [k, v] : cfg.scalars) {
            if (!sc.opts.count(k))
                throw UsageError(sc.config + ": unknown key \"" + k + "\"");
            cfg_map[k] = v;  // last occurrence wins
        }
        static const char* kScalarOrder[] = {"family", "sweep", "from",   "to", "step",
                                             "format", "out",   "kappa2", "a2", "x2",
                                             "y2",     "p",     "q",      "h"};
        auto target = [&](const std::string& key) -> std::string* {
            if (key == "family") return &sc.family;
            if (key == "sweep") return &sc.sweep;
            if (key == "from") return &sc.from;
            if (key == "to") return &sc.to;
            if (key == "step") return &sc.step;
            if (key == "format") return &sc.format;
            if (key == "out") return &sc.out;
            for (auto& [name, value] : sc.fixed_names)
                if (name == key) return &value;
            return nullptr;
        };
        for (const char* key : kScalarOrder) {
            auto it = cfg_map.find(key);
            if (it == cfg_map.end()) continue;
            std::string* slot = target(key);
            if (sc.opts.at(key)->count() > 0)
                std::cerr << "note: --" << key << " " << *slot
                          << " from the command line overrides config value " << it->second
                          << "\n";
            else
                *slot = it->second;
        }
        if (!cfg.tests.empty()) {
            if (!sc.tests.empty())
                std::cerr << "note: command-line --test entries override the config test list\n";
            else
                sc.tests = cfg.tests;
        }
        if (!cfg.thresholds.empty()) {
            if (!sc.thresholds.empty())
                std::cerr << "note: command-line --threshold entries override the config "
                             "threshold list\n";
            else
                sc.thresholds = cfg.thresholds;
        }
    }

    static const char* kSweepable[] = {"kappa2", "a2", "x2", "y2", "p", "q", "h"};
    if (sc.sweep.empty()) throw UsageError("sweep needs --sweep <param>");
    bool sweepable = false;
    for (const char* name : kSweepable)
        if (sc.sweep == name) sweepable = true;
    if (!sweepable)
        throw UsageError("--sweep must name a rational parameter: kappa2, a2, x2, y2, p, q, h");
    if (sc.from.empty() || sc.to.empty()) throw UsageError("sweep needs --from and --to");
    if (sc.format != "csv" && sc.format != "json")
        throw UsageError("--format must be csv or json");
    if (sc.tests.empty() && sc.thresholds.empty())
        throw UsageError("sweep needs at least one --test or --threshold");

    Rational from = need_rational("--from", sc.from);
    Rational to = need_rational("--to", sc.to);
    if (from > to) throw UsageError("--from must be <= --to");
    Rational step(1);
    if (!sc.step.empty()) {
        step = need_rational("--step", sc.step);
        if (step <= 0) throw UsageError("--step must be > 0");
    } else if (from != to) {
        throw UsageError("sweep needs --step when --from < --to");
    }

    std::map<std::string, Rational> fixed;
    for (const auto& [name, value] : sc.fixed_names) {
        bool set = sc.opts.at(name)->count() > 0 || !value.empty();
        if (!set) continue;
        if (name == sc.sweep)
            throw UsageError("--" + name + " is the swept parameter; do not also fix it");
        fixed.emplace(name, need_rational("--" + name, value));
    }

    std::vector<TestSpec> test_specs;
    for (const std::string& text : sc.tests) {
        TestSpec t = parse_test(text);
        if (sc.family.empty())
            throw UsageError("sweep with --test needs --family");
        if (sc.family != t.family)
            throw UsageError("--test " + text + " belongs to family " + t.family + ", not " +
                             sc.family);
        if (t.family == std::string("kappa")) {
            // The kappa classifiers pin a2 = 1/2.
            if (sc.sweep == "a2")
                throw UsageError("the kappa tests pin a2 = 1/2; sweep another parameter");
            auto it = fixed.find("a2");
            if (it != fixed.end() && it->second != hyposhift::frac(1, 2))
                throw UsageError("the kappa tests pin a2 = 1/2");
        }
        test_specs.push_back(std::move(t));
    }
    std::vector<ThresholdSpec> threshold_specs;
    threshold_specs.reserve(sc.thresholds.size());
    for (const std::string& text : sc.thresholds) threshold_specs.push_back(parse_threshold(text));

    std::vector<Rational> grid;
    for (Rational v = from; v <= to; v += step) grid.push_back(v);

    auto eval_row = [&](const Rational& v) {
        std::map<std::string, Rational> ps = fixed;
        ps[sc.sweep] = v;
        Row row;
        row.value = v;
        row.cells.reserve(test_specs.size());
        for (const TestSpec& t : test_specs) row.cells.push_back(eval_test(t, ps));
        row.thresholds.reserve(threshold_specs.size());
        for (const ThresholdSpec& t : threshold_specs)
            row.thresholds.push_back(eval_threshold(t, ps));
        return row;
    };

    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("HYPOSHIFT_THREADS")) {
        std::size_t cap = 0;
        try {
            std::size_t pos = 0;
            cap = std::stoul(env, &pos);
            if (pos != std::string(env).size()) cap = 0;
        } catch (...) {
            cap = 0;
        }
        if (cap == 0) throw UsageError("HYPOSHIFT_THREADS must be a positive integer");
        workers = std::min(workers, cap);
    }
    workers = std::min(workers, grid.size());

    std::vector<Row> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                rows[i] = eval_row(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<std::string> header;
    header.push_back(sc.sweep);
    for (const TestSpec& t : test_specs) {
        header.push_back(t.label + "_holds");
        header.push_back(t.label + "_thr2");
    }
    for (const ThresholdSpec& t : threshold_specs) header.push_back(t.label);

    std::ostringstream body;
    if (sc.format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i)
            body << (i ? "," : "") << header[i];
        body << "\n";
        for (const Row& row : rows) {
            body << hyposhift::to_string(row.value);
            for (const Cell& c : row.cells) {
                body << "," << (c.holds ? "true" : "false") << ",";
                if (c.thr2) body << hyposhift::to_string(*c.thr2);
            }
            for (const Rational& t : row.thresholds) body << "," << hyposhift::to_string(t);
            body << "\n";
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Row& row : rows) {
            nlohmann::ordered_json o;
            std::size_t col = 0;
            o[header[col++]] = hyposhift::to_string(row.value);
            for (const Cell& c : row.cells) {
                o[header[col++]] = c.holds;
                o[header[col++]] =
                    c.thr2 ? nlohmann::ordered_json(hyposhift::to_string(*c.thr2))
                           : nlohmann::ordered_json(nullptr);
            }
            for (const Rational& t : row.thresholds)
                o[header[col++]] = hyposhift::to_string(t);
            arr.push_back(std::move(o));
        }
        body << arr.dump(2) << "\n";
    }

    if (sc.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(sc.out, std::ios::binary);
        if (!out) throw UsageError("cannot open output file " + sc.out);
        out << body.str();
    }
    return 0;
}

// --------------------------------------------------------------------- verify

int cmd_verify(const std::string& only_csv) {
    std::vector<std::string> groups;
    std::size_t pos = 0;
    while (pos <= only_csv.size() && !only_csv.empty()) {
        auto comma = only_csv.find(',', pos);
        std::string item = trim(
            only_csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!item.empty()) groups.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto results = hyposhift::verify::run_checks(groups);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.group << "/" << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.group << "/" << r.name << ": " << r.detail << "\n";
            ++failed;
        }
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
    return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hyponormality, k-hyponormality, and subnormality tests for "
                 "2-variable weighted shifts"};
    app.require_subcommand(1);
    // -h stays free for the --h step parameter; help is --help everywhere
    app.set_help_flag("--help", "print help");

    // det-hilbert
    auto* det = app.add_subcommand("det-hilbert",
                                   "closed-form determinant of the generalized Hilbert matrix");
    det->set_help_flag("--help", "print help");
    int det_k = 1;
    std::string det_x, det_h = "1";
    bool det_oracle = false;
    int det_decimal = -1;
    det->add_option("--k", det_k, "matrix size parameter (order k+1)")->required();
    det->add_option("--x", det_x, "corner entry, rational num/den")->required();
    det->add_option("--h", det_h, "step parameter, rational num/den (default 1)");
    det->add_flag("--oracle", det_oracle, "also run fraction-free elimination and compare");
    det->add_option("--decimal", det_decimal, "append a decimal rendering with N digits");

    // classify
    auto* cls = app.add_subcommand("classify", "run the exact family classifiers");
    cls->set_help_flag("--help", "print help");
    ClassifyCli cc;
    cls->add_option("--family", cc.family, "kappa, s1, or classA")->required();
    cls->add_option("--kappa2", cc.kappa2, "kappa^2 as num/den");
    cc.o_a2 = cls->add_option("--a2", cc.a2,
                              "a^2 as num/den; for family kappa this selects the exact "
                              "2-hyponormality pair test of the (2,1) power");
    cls->add_option("--x2", cc.x2, "x^2 as num/den");
    cls->add_option("--y2", cc.y2, "y^2 as num/den");
    cls->add_option("--p", cc.p, "mass at 0, num/den");
    cls->add_option("--q", cc.q, "mass at 1, num/den");
    cc.o_k = cls->add_option("--k", cc.k, "hyponormality order (classA also accepts inf)");
    cc.o_h = cls->add_option("--h", cc.h, "first power exponent");
    cc.o_l = cls->add_option("--l", cc.l, "second power exponent (verdicts do not depend on it)");
    cls->add_option("--decimal", cc.decimal, "append decimal renderings with N digits");

    // sweep
    auto* swp = app.add_subcommand("sweep", "evaluate tests and thresholds over a parameter grid");
    swp->set_help_flag("--help", "print help");
    SweepCli sc;
    sc.opts["family"] = swp->add_option("--family", sc.family, "kappa, s1, or classA");
    sc.opts["sweep"] = swp->add_option("--sweep", sc.sweep,
                                       "parameter to sweep: kappa2, a2, x2, y2, p, q, h");
    sc.opts["from"] = swp->add_option("--from", sc.from, "start value, num/den");
    sc.opts["to"] = swp->add_option("--to", sc.to, "stop value (inclusive), num/den");
    sc.opts["step"] = swp->add_option("--step", sc.step, "grid step, num/den > 0");
    sc.opts["format"] = swp->add_option("--format", sc.format, "csv (default) or json");
    sc.opts["out"] = swp->add_option("--out", sc.out, "output file (default stdout)");
    swp->add_option("--config", sc.config, "flat key = value config file; flags override");
    swp->add_option("--test", sc.tests,
                    "verdict column: original:k=K | power:k=K,h=H | h1 | h2 | subnormal | "
                    "nec:k=1|2|inf (repeatable)");
    swp->add_option("--threshold", sc.thresholds,
                    "threshold column: name[:k=K,h=H] with name h1, F, hinf, G, power, m1, m2, "
                    "minf, h2, h2_21 (repeatable)");
    sc.fixed_names = {{"kappa2", ""}, {"a2", ""}, {"x2", ""}, {"y2", ""},
                      {"p", ""},      {"q", ""},  {"h", ""}};
    for (auto& [name, value] : sc.fixed_names)
        sc.opts[name] = swp->add_option("--" + name, value, "fixed value of " + name + ", num/den");

    // verify
    auto* ver = app.add_subcommand("verify", "run the self-check suite");
    ver->set_help_flag("--help", "print help");
    std::string only;
    ver->add_option("--only", only, "comma-separated check groups (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (det->parsed()) return cmd_det_hilbert(det_k, det_x, det_h, det_oracle, det_decimal);
        if (cls->parsed()) return cmd_classify(cc);
        if (swp->parsed()) return cmd_sweep(sc);
        if (ver->parsed()) return cmd_verify(only);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
