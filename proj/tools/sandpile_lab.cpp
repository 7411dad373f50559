// Command line front end: enumerate, stats, poly, verify, render.

#include "sandlab/core_asm.hpp"
#include "sandlab/cycle_lemma.hpp"
#include "sandlab/error.hpp"
#include "sandlab/io.hpp"
#include "sandlab/parallel.hpp"
#include "sandlab/polyomino.hpp"
#include "sandlab/qt_poly.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/svg.hpp"
#include "sandlab/toppling.hpp"
#include "sandlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sandlab;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kDomain = 3, kMismatch = 4, kCounterexample = 10 };

std::string csv_list(const std::vector<int>& v, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

Json sizes_json(const std::vector<int>& v) { return Json(v); }

int run_enumerate(int n, int d, const std::string& what, const std::string& format) {
    Shape s(n, d);
    const bool json = format == "json";
    Json arr = Json::array();
    std::ostringstream csv;
    if (what == "recurrent") {
        csv << "configuration,height,level\n";
        for (const auto& c : enumerate_sorted_recurrent(s)) {
            if (json) {
                Json j = to_json(s, c);
                j["height"] = height(c);
                j["level"] = level(s, c);
                arr.push_back(j);
            } else {
                csv << '"' << to_text(c) << "\"," << height(c) << ',' << level(s, c) << '\n';
            }
        }
    } else if (what == "words") {
        csv << "word,area,bounce\n";
        for (const auto& w : enumerate_schroder_words(s.n, s.d)) {
            if (json) arr.push_back(Json{{"word", w.str()}, {"area", area(w)}, {"bounce", schroder_bounce(w)}});
            else csv << w.str() << ',' << area(w) << ',' << schroder_bounce(w) << '\n';
        }
    } else if (what == "polyominoes") {
        csv << "configuration,upper,lower,area\n";
        for (const auto& c : enumerate_sorted_recurrent(s)) {
            auto p = from_config(s, c);
            if (json) {
                Json j = to_json(p);
                j["configuration"] = to_text(c);
                j["area"] = area(p);
                arr.push_back(j);
            } else {
                csv << '"' << to_text(c) << "\"," << p.upper << ',' << p.lower << ',' << area(p) << '\n';
            }
        }
    } else if (what == "itc-sequences") {
        csv << "k,b,a\n";
        for (const auto& q : enumerate_itc_sequences(s.n, s.d)) {
            if (json) arr.push_back(to_json(q));
            else csv << q.length() << ',' << csv_list(q.b) << ',' << csv_list(q.a) << '\n';
        }
    } else if (what == "quasistable") {
        csv << "configuration,sink\n";
        for (const auto& u : enumerate_quasistable_nonneg(s)) {
            if (json) arr.push_back(Json{{"clique", u.clique}, {"independent", u.independent}, {"sink", u.sink()}});
            else csv << '"' << to_text(u) << "\"," << u.sink() << '\n';
        }
    }
    if (json) std::cout << arr.dump(2) << '\n';
    else std::cout << csv.str();
    return kOk;
}

Json stats_json(const Shape& s, const Configuration& c) {
    if (!is_sorted(c) || !is_nonnegative(c) || !is_stable(s, c) || !is_recurrent(s, c))
        throw PreconditionError("not a sorted recurrent configuration: " + to_display(c));
    auto cti = topple_cti(s, c);
    auto itc = topple_itc(s, c);
    SchroderWord word = phi_inv(s, c);
    SchroderWord hag = mirror(word);
    Json j = to_json(s, c);
    j["word"] = word.str();
    j["haglund_word"] = hag.str();
    j["height"] = height(c);
    j["level"] = level(s, c);
    j["topple_cti"] = sizes_json(cti.sizes());
    j["topple_itc"] = sizes_json(itc.sizes());
    j["wtopple_cti"] = wtopple(cti);
    j["wtopple_itc"] = wtopple(itc);
    j["itc_sequence"] = to_json(itc_sequence_of(itc));
    j["area"] = area(hag);
    j["bounce"] = schroder_bounce(hag);
    Json peaks = Json::array();
    for (const auto& p : schroder_peaks(hag)) peaks.push_back({p.x, p.y});
    j["peaks"] = peaks;
    j["polyomino_area"] = area(from_config(s, c));
    return j;
}

void print_stats_text(const Shape& s, const Configuration& c, const Json& j) {
    auto seq = [](const Json& a) {
        std::string out;
        for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + a[i].dump();
        return out;
    };
    std::string peaks;
    for (std::size_t i = 0; i < j["peaks"].size(); ++i)
        peaks += (i ? " (" : "(") + seq(j["peaks"][i]) + ")";
    std::cout << "configuration  " << to_display(c) << " on S_{" << s.n << "," << s.d << "}\n"
              << "word           " << j["word"].get<std::string>() << '\n'
              << "haglund word   " << j["haglund_word"].get<std::string>() << '\n'
              << "height         " << j["height"] << '\n'
              << "level          " << j["level"] << '\n'
              << "topple_cti     " << seq(j["topple_cti"]) << '\n'
              << "topple_itc     " << seq(j["topple_itc"]) << '\n'
              << "wtopple_cti    " << j["wtopple_cti"] << '\n'
              << "wtopple_itc    " << j["wtopple_itc"] << '\n'
              << "itc sequence   " << to_string(itc_sequence_of(topple_itc(s, c))) << '\n'
              << "area           " << j["area"] << '\n'
              << "bounce         " << j["bounce"] << '\n'
              << "peaks          " << peaks << '\n'
              << "polyomino area " << j["polyomino_area"] << '\n';
}

// "-" reads a JSON configuration or an array of them from stdin.
int run_stats(const std::string& config_text, const std::string& word, int n, int d, const std::string& format) {
    std::vector<std::pair<Shape, Configuration>> inputs;
    if (!word.empty()) {
        SchroderWord w(word);
        inputs.emplace_back(Shape(w.n(), w.d()), phi(mirror(w)));
    } else if (config_text == "-") {
        Json in;
        try {
            in = Json::parse(std::cin);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON on stdin: ") + e.what());
        }
        if (!in.is_array()) in = Json::array({in});
        for (const auto& item : in) {
            Shape s;
            Configuration c = configuration_from_json(item, &s);
            inputs.emplace_back(s, c);
        }
    } else {
        if (config_text.empty()) throw CLI::ValidationError("stats", "give a configuration or --word");
        Configuration c = parse_configuration(config_text);
        Shape s(n < 0 ? static_cast<int>(c.clique.size()) : n, d < 0 ? static_cast<int>(c.independent.size()) : d);
        require_fits(s, c);
        inputs.emplace_back(s, c);
    }
    Json all = Json::array();
    for (const auto& [s, c] : inputs) {
        Json j = stats_json(s, c);
        if (format == "json") all.push_back(j);
        else print_stats_text(s, c, j);
    }
    if (format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    return kOk;
}

int run_poly(int n, int d, const std::string& method, const std::string& format) {
    std::vector<std::pair<std::string, QtPolynomial (*)(int, int)>> methods = {
        {"cti", f_cti}, {"itc", f_itc}, {"schroder", qt_schroder}, {"egge", egge_sum}, {"itc-sum", itc_sum}};
    auto emit = [&](const QtPolynomial& p) {
        if (format == "latex") std::cout << to_latex(p) << '\n';
        else std::cout << to_json(p).dump() << '\n';
    };
    if (method != "all") {
        for (const auto& [name, f] : methods)
            if (name == method) emit(f(n, d));
        return kOk;
    }
    std::vector<QtPolynomial> polys;
    for (const auto& [name, f] : methods) polys.push_back(f(n, d));
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i] != polys[0]) {
            Json cert{{"n", n}, {"d", d}, {"mismatch", {methods[0].first, methods[i].first}},
                      {methods[0].first, to_json(polys[0])}, {methods[i].first, to_json(polys[i])}};
            std::cout << cert.dump(2) << '\n';
            return kMismatch;
        }
    }
    std::cout << "5 methods agree\n";
    emit(polys[0]);
    return kOk;
}

int run_verify(const std::string& suite, int max_n, int max_d, unsigned jobs, const std::string& format) {
    auto reports = run_suite(parse_suite(suite), max_n, max_d, jobs);
    int code = kOk;
    Json arr = Json::array();
    for (const auto& r : reports) {
        if (!r.passed) code = r.conjecture ? kCounterexample : (code == kCounterexample ? code : kMismatch);
        if (format == "json") {
            arr.push_back(Json{{"suite", r.suite}, {"check", r.check}, {"range", r.range}, {"passed", r.passed},
                               {"counterexample", r.counterexample}});
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.check << " [" << r.range << "]";
            if (!r.passed) std::cout << "  " << r.counterexample;
            std::cout << '\n';
        }
        std::clog << r.suite << '/' << r.check << ' ' << r.seconds << "s\n";
    }
    if (format == "json") std::cout << arr.dump(2) << '\n';
    return code;
}

int run_render(const std::string& config_text, const std::string& word, int n, int d, const std::string& kind,
               const std::vector<std::string>& overlays, const std::string& label, const std::string& output) {
    std::string svg;
    if (kind == "schroder") {
        SchroderWord w = word.empty() ? SchroderWord() : SchroderWord(word);
        if (word.empty()) {
            Configuration c = parse_configuration(config_text);
            Shape s(n < 0 ? static_cast<int>(c.clique.size()) : n, d < 0 ? static_cast<int>(c.independent.size()) : d);
            w = mirror(phi_inv(s, c));
        }
        svg = render_svg(w, PathStyle{true, true, true, label});
    } else {
        SawtoothPolyomino p;
        if (!word.empty()) {
            p = sts(word);
        } else {
            Configuration c = parse_configuration(config_text);
            Shape s(n < 0 ? static_cast<int>(c.clique.size()) : n, d < 0 ? static_cast<int>(c.independent.size()) : d);
            p = from_config(s, c);
        }
        PolyominoStyle style;
        style.label = label;
        for (const auto& o : overlays) {
            if (o == "cti") style.cti_overlay = true;
            else if (o == "itc") style.itc_overlay = true;
        }
        svg = render_svg(p, style);
    }
    if (output.empty() || output == "-") {
        std::cout << svg;
    } else {
        std::ofstream f(output);
        if (!f) throw DomainError("cannot write " + output);
        f << svg;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sorted recurrent sandpile configurations on split graphs"};
    app.require_subcommand(1);
    unsigned jobs = 0;
    app.add_option("--jobs", jobs, "Worker threads (SANDPILE_LAB_JOBS overrides)");

    int n = -1, d = -1;
    std::string format, what, method, suite, config_text, word, kind = "polyomino", label, output;
    int max_n = 4, max_d = 3;
    std::vector<std::string> overlays;

    auto* en = app.add_subcommand("enumerate", "List objects for one graph");
    en->add_option("-n", n, "Clique size")->required()->check(CLI::PositiveNumber);
    en->add_option("-d", d, "Independent set size")->required()->check(CLI::NonNegativeNumber);
    en->add_option("what", what, "recurrent | words | polyominoes | itc-sequences | quasistable")
        ->required()
        ->check(CLI::IsMember({"recurrent", "words", "polyominoes", "itc-sequences", "quasistable"}));
    en->add_option("--format", format, "csv | json")->default_val("csv")->check(CLI::IsMember({"csv", "json"}));

    auto* st = app.add_subcommand("stats", "Statistics of one sorted recurrent configuration");
    st->add_option("config", config_text, "Configuration text a1,...,an;b1,...,bd, or - for JSON on stdin");
    st->add_option("-n", n, "Clique size");
    st->add_option("-d", d, "Independent set size");
    st->add_option("--word", word, "Schroder word carrying area and bounce; the configuration is phi(mirror(w))");
    st->add_option("--format", format, "text | json")->default_val("text")->check(CLI::IsMember({"text", "json"}));

    auto* po = app.add_subcommand("poly", "q,t-polynomial of one graph");
    po->add_option("-n", n, "Clique size")->required()->check(CLI::PositiveNumber);
    po->add_option("-d", d, "Independent set size")->required()->check(CLI::NonNegativeNumber);
    po->add_option("--method", method, "cti | itc | schroder | egge | itc-sum | all")
        ->default_val("all")
        ->check(CLI::IsMember({"cti", "itc", "schroder", "egge", "itc-sum", "all"}));
    po->add_option("--format", format, "json | latex")->default_val("json")->check(CLI::IsMember({"json", "latex"}));

    auto* ve = app.add_subcommand("verify", "Run verification suites");
    ve->add_option("suite", suite, "bijections | theorems | cycle-lemma | conjectures | appendix | all")
        ->default_val("all")
        ->check(CLI::IsMember({"bijections", "theorems", "cycle-lemma", "conjectures", "appendix", "all"}));
    ve->add_option("--max-n", max_n, "Largest clique size")->check(CLI::PositiveNumber);
    ve->add_option("--max-d", max_d, "Largest independent set size")->check(CLI::NonNegativeNumber);
    ve->add_option("--format", format, "text | json")->default_val("text")->check(CLI::IsMember({"text", "json"}));

    auto* re = app.add_subcommand("render", "Draw a polyomino or Schroder path as SVG");
    re->add_option("config", config_text, "Configuration text");
    re->add_option("-n", n, "Clique size");
    re->add_option("-d", d, "Independent set size");
    re->add_option("--word", word, "Word instead of a configuration");
    re->add_option("--kind", kind, "polyomino | schroder")->check(CLI::IsMember({"polyomino", "schroder"}));
    re->add_option("--overlay", overlays, "cti and/or itc bounce paths")->delimiter(',');
    re->add_option("--label", label, "Caption");
    re->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        unsigned workers = resolve_jobs(jobs);
        if (*en) return run_enumerate(n, d, what, format);
        if (*st) return run_stats(config_text, word, n, d, format);
        if (*po) return run_poly(n, d, method, format);
        if (*ve) return run_verify(suite, max_n, max_d, workers, format);
        if (*re) {
            if (config_text.empty() && word.empty()) throw CLI::ValidationError("render", "give a configuration or --word");
            return run_render(config_text, word, n, d, kind, overlays, label, output);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}
