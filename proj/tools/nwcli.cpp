// Command-line front end; talks to the engine only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "numwall/numwall.h"

using json = nlohmann::json;

namespace {

struct Opts {
    std::string field, seq, seq_file, pf, embed, growth = "const:1", mode = "column", pt, experiment, params, output;
    std::string csv, render, out;
    std::int64_t random_len = 0, l = 0, deg = -1, pow = -1, prec = -1, target = 3, max_len = 20, seed = 1;
    unsigned jobs = 1;
    bool audit = false, brute = false, verify = false, count_all = false;
    bool seq_given = false;
};

int usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

json parse_params(const std::string& text) {
    json p = json::object();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--params", "expected k=v, got '" + item + "'");
        std::string k = item.substr(0, eq), v = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            long long iv = std::stoll(v, &used);
            if (used == v.size()) {
                p[k] = iv;
                continue;
            }
            double dv = std::stod(v, &used);
            if (used == v.size()) {
                p[k] = dv;
                continue;
            }
        } catch (const std::exception&) {
        }
        p[k] = v;
    }
    return p;
}

json parse_embedding(const std::string& text) {
    json e = json::object();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--embed", "expected SYMBOL:CODE, got '" + item + "'");
        e[item.substr(0, colon)] = std::stoll(item.substr(colon + 1));
    }
    return e;
}

json sequence_config(const Opts& o) {
    int sources = (o.seq_given ? 1 : 0) + (!o.seq_file.empty() ? 1 : 0) + (!o.pf.empty() ? 1 : 0) + (o.random_len > 0 ? 1 : 0);
    if (sources == 0) return nullptr;
    if (sources > 1) throw CLI::ValidationError("sequence", "give exactly one of --seq, --seq-file, --pf, --random");
    json s;
    if (o.seq_given) {
        s = {{"kind", "literal"}, {"text", o.seq}};
    } else if (!o.seq_file.empty()) {
        std::ifstream in(o.seq_file);
        if (!in) throw CLI::ValidationError("--seq-file", "cannot read '" + o.seq_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        s = {{"kind", "literal"}, {"text", buf.str()}, {"source", o.seq_file}};
    } else if (!o.pf.empty()) {
        auto colon = o.pf.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--pf", "expected LEVEL:LENGTH");
        s = {{"kind", "paper_folding"}, {"level", std::stoll(o.pf.substr(0, colon))}, {"length", std::stoll(o.pf.substr(colon + 1))}};
    } else {
        s = {{"kind", "random"}, {"length", o.random_len}, {"seed", o.seed}};
    }
    if (!o.embed.empty()) s["embedding"] = parse_embedding(o.embed);
    return s;
}

void add_sequence_opts(CLI::App* c, Opts& o) {
    c->add_option("--field", o.field, "Field: p, p^k or p^k/modulus-code");
    c->add_option_function<std::string>("--seq", [&o](const std::string& v) { o.seq = v; o.seq_given = true; }, "Inline comma-separated symbols");
    c->add_option("--seq-file", o.seq_file, "Symbol file (optional '# field: ...' header)");
    c->add_option("--pf", o.pf, "Paper-folding recipe LEVEL:LENGTH");
    c->add_option("--random", o.random_len, "Random sequence of this length (see --seed)");
    c->add_option("--embed", o.embed, "Symbol embedding SYMBOL:CODE,...");
    c->add_option("--seed", o.seed, "Seed for random sequences and sweeps");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Number walls over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_option("--output", o.output, "Write the report here instead of stdout");
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* wall = app.add_subcommand("wall", "Compute a wall; report windows, optional CSV and PPM");
    add_sequence_opts(wall, o);
    wall->add_option("--csv", o.csv, "Write the wall as CSV");
    wall->add_option("--render", o.render, "Write a PPM image");
    wall->add_flag("--verify", o.verify, "Compare against the determinant oracle");

    auto* render = app.add_subcommand("render", "Render a wall to PPM");
    add_sequence_opts(render, o);
    render->add_option("--out", o.out, "PPM path")->required();

    auto* lc = app.add_subcommand("check-lc", "Window check against l + b_f(k), optional two-sided audit");
    add_sequence_opts(lc, o);
    lc->add_option("--l", o.l, "Exponent l")->required();
    lc->add_option("--growth", o.growth, "Growth function: const:C, log2, loglog, table:b0,b1,...");
    lc->add_option("--mode", o.mode, "Window addressing: column or diagonal");
    lc->add_flag("--audit", o.audit, "Run the Diophantine/window audit");
    lc->add_flag("--brute", o.brute, "Audit also by brute force over all M");
    lc->add_option("--deg", o.deg, "Audit degree bound D");

    auto* tr = app.add_subcommand("transfer", "Compare truncated infima of Theta(t) and Theta(p(t))");
    add_sequence_opts(tr, o);
    tr->add_option("--pt", o.pt, "Irreducible p(t), e.g. t^2+1")->required();
    tr->add_option("--coeffs", o.seq_file, "File of coefficients b_i (same format as --seq-file)");
    tr->add_option("--deg", o.deg, "Degree bound D for M");
    tr->add_option("--pow", o.pow, "Power bound K");
    tr->add_option("--prec", o.prec, "Precision in t (default deg(p) * length)");

    auto* census = app.add_subcommand("census", "Enumerate sequence spaces against closed-form counts");
    census->add_option("--field", o.field, "Field")->required();
    census->add_option("--experiment", o.experiment, "contain-full, rect, q-table, tree-diagrams, two-window, window-continue")->required();
    census->add_option("--params", o.params, "k=v,... parameters");
    census->add_option("--seed", o.seed, "Seed for randomized sweeps");

    auto* search = app.add_subcommand("search", "Search for sequences without windows of a given size");
    search->add_option("--field", o.field, "Field")->required();
    search->add_option("--target-window", o.target, "Window size to avoid");
    search->add_option("--max-len", o.max_len, "Maximum length");
    search->add_flag("--count-all", o.count_all, "Count every survivor instead of stopping at the first witness");

    auto* self = app.add_subcommand("selftest", "Small-scale invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    json cfg;
    try {
        auto* sub = app.get_subcommands().front();
        cfg["subcommand"] = sub->get_name();
        cfg["jobs"] = o.jobs;
        cfg["seed"] = o.seed;
        if (!o.field.empty()) cfg["field"] = o.field;
        json outs = json::object();
        if (sub == wall || sub == render || sub == lc || sub == tr) {
            json s = sequence_config(o);
            if (!s.is_null()) cfg["sequence"] = s;
        }
        if (sub == wall) {
            if (!o.csv.empty()) outs["csv"] = o.csv;
            if (!o.render.empty()) outs["ppm"] = o.render;
            cfg["verify"] = o.verify;
        }
        if (sub == render) outs["ppm"] = o.out;
        if (sub == lc) {
            cfg["l"] = o.l;
            cfg["growth"] = o.growth;
            cfg["mode"] = o.mode;
            cfg["audit"] = o.audit;
            cfg["brute"] = o.brute;
            if (o.deg >= 0) cfg["deg"] = o.deg;
        }
        if (sub == tr) {
            cfg["pt"] = o.pt;
            if (o.deg >= 0) cfg["deg"] = o.deg;
            if (o.pow >= 0) cfg["pow"] = o.pow;
            if (o.prec >= 0) cfg["prec"] = o.prec;
        }
        if (sub == census) {
            cfg["experiment"] = o.experiment;
            cfg["params"] = parse_params(o.params);
        }
        if (sub == search) {
            cfg["target_window"] = o.target;
            cfg["max_len"] = o.max_len;
            cfg["count_all"] = o.count_all;
        }
        (void)self;
        cfg["outputs"] = outs;
    } catch (const CLI::Error& e) {
        return usage(e.what());
    } catch (const std::exception& e) {
        return usage(e.what());
    }

    char* report = nullptr;
    int verdict = 0;
    int st = nw_run(cfg.dump().c_str(), &report, &verdict);
    if (st != NW_OK) {
        std::cerr << "error: " << nw_last_error() << "\n";
        return 2;
    }
    std::string text(report);
    nw_string_free(report);
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (o.output.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream os(o.output, std::ios::binary);
        if (!os || !(os << text)) {
            std::cerr << "error: cannot write '" << o.output << "'\n";
            return 2;
        }
    }
    return verdict == 0 ? 0 : 1;
}
