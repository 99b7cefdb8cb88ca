#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mulink/diagram.hpp"
#include "mulink/errors.hpp"
#include "mulink/freegroup.hpp"
#include "mulink/magnus.hpp"
#include "mulink/milnor.hpp"
#include "mulink/moves.hpp"
#include "mulink/names.hpp"
#include "mulink/skein.hpp"
#include "mulink/wirtinger.hpp"

namespace {

using namespace mulink;

struct Common {
    std::string mode = "gauss";
    int strands = 0;
    int cap = 0;
    std::string text;
    bool text_given = false;
    std::string file;
    std::string format = "text";
    std::string convention = "subseq";
};

void add_input_options(CLI::App* sub, Common& c, bool with_longitudes) {
    std::string modes = with_longitudes ? "braid, gauss, or longitudes" : "braid or gauss";
    sub->add_option("--mode", c.mode, "input mode: " + modes)->capture_default_str();
    sub->add_option("--strands", c.strands, "strand count for braid mode");
    sub->add_option("--text", c.text, "inline input text")
        ->each([&c](const std::string&) { c.text_given = true; });
    sub->add_option("input", c.file, "input file, - for stdin");
}

void add_cap_option(CLI::App* sub, Common& c) {
    sub->add_option("--cap", c.cap,
                    "series degree cap; sequences shorter than cap are tabulated "
                    "(0 = components + 1)")
        ->capture_default_str();
}

std::string load_input(const Common& c) {
    if (c.text_given) return c.text;
    if (!c.file.empty() && c.file != "-") {
        std::ifstream in(c.file);
        if (!in) throw ParseError("cannot open input file '" + c.file + "'");
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    }
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

Diagram load_diagram(const Common& c) {
    std::string in = load_input(c);
    if (c.mode == "braid") {
        if (c.strands < 1) throw ParseError("braid mode needs --strands");
        return close_braid(parse_braid(in, c.strands));
    }
    if (c.mode == "gauss") {
        Diagram d = parse_gauss(in);
        validate(d);
        return d;
    }
    throw ParseError("mode '" + c.mode + "' not usable here; expected braid or gauss");
}

std::vector<GroupWord> load_longitudes(const std::string& text) {
    std::vector<std::string> segments;
    if (text.find('|') != std::string::npos) {
        std::string seg;
        std::istringstream in(text);
        while (std::getline(in, seg, '|')) segments.push_back(seg);
    } else {
        std::string line;
        std::istringstream in(text);
        while (std::getline(in, line)) segments.push_back(line);
    }
    std::vector<std::string> kept;
    for (std::string& s : segments) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = s.find_last_not_of(" \t\r");
        kept.push_back(s.substr(b, e - b + 1));
    }
    int k = static_cast<int>(kept.size());
    if (k == 0) throw ParseError("no longitudes given");
    auto resolver = [k](const std::string& name) {
        if (name.size() != 1)
            throw ParseError("longitude letters are single components, got '" + name + "'");
        int i = comp_from_letter(name[0]);
        if (i >= k)
            throw ParseError("longitude references component '" + name + "' but only " +
                             std::to_string(k) + " longitudes were given");
        return i;
    };
    std::vector<GroupWord> words;
    words.reserve(kept.size());
    for (const std::string& s : kept) words.push_back(parse_word(s, resolver));
    return words;
}

int resolve_cap(int cap, int k) {
    if (cap == 0) cap = k + 1;
    if (cap < 2) throw ParseError("cap must be at least 2");
    return cap;
}

DeltaConvention parse_convention(const std::string& s) {
    if (s == "subseq") return DeltaConvention::Subsequences;
    if (s == "cyclic") return DeltaConvention::CyclicSubsequences;
    throw ParseError("delta convention must be subseq or cyclic");
}

MuTable build_table(const Common& c, bool* used_longitudes = nullptr) {
    DeltaConvention conv = parse_convention(c.convention);
    if (c.mode == "longitudes") {
        if (used_longitudes) *used_longitudes = true;
        std::vector<GroupWord> words = load_longitudes(load_input(c));
        int cap = resolve_cap(c.cap, static_cast<int>(words.size()));
        return mu_from_longitudes(words, cap, conv);
    }
    Diagram d = load_diagram(c);
    int cap = resolve_cap(c.cap, static_cast<int>(d.components.size()));
    return mu_table(d, cap, conv);
}

void print_series(const MuTable& t) {
    auto namer = [](int v) { return "x_" + comp_name(v); };
    for (int i = 0; i < t.k; ++i)
        std::cout << "psi(w_" << comp_letter(i)
                  << ") = " << render_series(t.longitude_series[i], namer) << "\n";
}

bool fuzz_tables_consistent(MoveClass cls, const MuTable& before, const MuTable& after) {
    bool scc = cls == MoveClass::Homotopy || cls == MoveClass::WeldedHomotopy;
    if (!scc) return mubar_equal(before, after);
    for (const auto& [key, e] : before.entries) {
        if (e.repeated) continue;
        if (after.entries.at(key).mubar != e.mubar) return false;
    }
    for (int i = 0; i < before.k; ++i) {
        Integer diff = before.mu(i, {i}) - after.mu(i, {i});
        if (diff % 2 != 0) return false;
    }
    return true;
}

int run(int argc, char** argv) {
    CLI::App app{"Milnor invariants of virtual and welded link diagrams"};
    app.require_subcommand(1);

    Common c;
    bool series = false;
    bool link_group = false;
    int mark = 0;
    int steps = 10;
    std::uint64_t seed = 1;
    std::string move_class = "isotopy";
    std::string log_file;
    bool check_mu = false;

    CLI::App* mu = app.add_subcommand("mu", "mu/delta/mubar table of a diagram");
    add_input_options(mu, c, true);
    add_cap_option(mu, c);
    mu->add_option("--format", c.format, "text or records")->capture_default_str();
    mu->add_option("--delta-convention", c.convention, "subseq or cyclic")
        ->capture_default_str();
    mu->add_flag("--series", series, "also print the longitude expansions");

    CLI::App* mubar = app.add_subcommand("mubar", "mubar table only");
    add_input_options(mubar, c, true);
    add_cap_option(mubar, c);
    mubar->add_option("--format", c.format, "text or records")->capture_default_str();
    mubar->add_option("--delta-convention", c.convention, "subseq or cyclic")
        ->capture_default_str();

    CLI::App* linking = app.add_subcommand("linking", "pairwise linking numbers");
    add_input_options(linking, c, false);

    CLI::App* present = app.add_subcommand("present", "Wirtinger presentation and longitudes");
    add_input_options(present, c, false);
    present->add_flag("--link-group", link_group,
                      "append commutators making each component's meridians commute");

    CLI::App* skein = app.add_subcommand("skein-check", "verify skein families at a mark");
    skein->add_option("--strands", c.strands, "strand count")->required();
    skein->add_option("--text", c.text, "inline braid word")
        ->each([&c](const std::string&) { c.text_given = true; });
    skein->add_option("input", c.file, "input file, - for stdin");
    add_cap_option(skein, c);
    skein->add_option("--mark", mark, "0-based index of the marked braid letter")->required();

    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "apply random moves, print the log");
    add_input_options(fuzz_cmd, c, false);
    add_cap_option(fuzz_cmd, c);
    fuzz_cmd->add_option("--steps", steps, "number of moves")->capture_default_str();
    fuzz_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    fuzz_cmd->add_option("--class", move_class,
                         "isotopy, welded, homotopy, or welded-homotopy")
        ->capture_default_str();
    fuzz_cmd->add_flag("--check-mu", check_mu,
                       "verify the invariant tables before and after");

    CLI::App* replay_cmd = app.add_subcommand("replay", "re-apply a recorded move log");
    add_input_options(replay_cmd, c, false);
    replay_cmd->add_option("--log", log_file, "move log file")->required();

    CLI::App* flatten_cmd = app.add_subcommand("flatten", "erase over/under information");
    add_input_options(flatten_cmd, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (mu->parsed()) {
        MuTable t = build_table(c);
        if (series) print_series(t);
        if (c.format == "records")
            std::cout << to_records(t);
        else
            std::cout << render_table(t);
        return 0;
    }
    if (mubar->parsed()) {
        MuTable t = build_table(c);
        if (c.format == "records")
            std::cout << to_records(t);
        else
            std::cout << render_mubar(t);
        return 0;
    }
    if (linking->parsed()) {
        Diagram d = load_diagram(c);
        int k = static_cast<int>(d.components.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                std::cout << "link(" << comp_letter(i) << ',' << comp_letter(j)
                          << ")=" << linking_number(d, i, j) << "\n";
        return 0;
    }
    if (present->parsed()) {
        Diagram d = load_diagram(c);
        Presentation p = link_group ? link_group_presentation(d) : presentation(d);
        std::cout << render_presentation(p);
        return 0;
    }
    if (skein->parsed()) {
        if (c.strands < 1) throw ParseError("skein-check needs --strands");
        MarkedBraid mb{parse_braid(load_input(c), c.strands), mark};
        Diagram d = close_braid(mb.braid);
        int cap = resolve_cap(c.cap, static_cast<int>(d.components.size()));
        SkeinReport rep = check_skein(mb, cap);
        std::cout << render_skein_report(rep);
        return rep.all_pass ? 0 : 1;
    }
    if (fuzz_cmd->parsed()) {
        Diagram d = load_diagram(c);
        MoveClass cls = parse_move_class(move_class);
        FuzzResult fr = mulink::fuzz(d, cls, steps, seed);
        for (const std::string& line : fr.log) std::cout << line << "\n";
        std::cout << "result: " << render_gauss(fr.diagram) << "\n";
        if (check_mu) {
            int cap = resolve_cap(c.cap, static_cast<int>(d.components.size()));
            MuTable before = mu_table(d, cap);
            MuTable after = mu_table(fr.diagram, cap);
            bool ok = fuzz_tables_consistent(cls, before, after);
            std::cout << "mu check: " << (ok ? "PASS" : "FAIL") << "\n";
            if (!ok) return 1;
        }
        return 0;
    }
    if (replay_cmd->parsed()) {
        Diagram d = load_diagram(c);
        std::ifstream in(log_file);
        if (!in) throw ParseError("cannot open log file '" + log_file + "'");
        // Accept a raw move log or a full `fuzz` transcript: a "result:" line
        // becomes the expected outcome, "mu check:" lines are ignored.
        std::vector<std::string> lines;
        std::string expected;
        bool have_expected = false;
        std::string line;
        auto strip = [](std::string s) {
            while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
            std::size_t i = s.find_first_not_of(' ');
            return i == std::string::npos ? std::string() : s.substr(i);
        };
        while (std::getline(in, line)) {
            if (line.rfind("result:", 0) == 0) {
                expected = strip(line.substr(7));
                have_expected = true;
                continue;
            }
            if (line.rfind("mu check:", 0) == 0) continue;
            lines.push_back(line);
        }
        Diagram out = replay(d, lines);
        validate(out);
        std::string got = render_gauss(out);
        if (have_expected && got != expected)
            throw ValidationError("replay produced '" + got +
                                  "' but the log records result '" + expected + "'");
        std::cout << got << "\n";
        return 0;
    }
    if (flatten_cmd->parsed()) {
        Diagram d = load_diagram(c);
        std::cout << render_gauss(flatten(d)) << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
