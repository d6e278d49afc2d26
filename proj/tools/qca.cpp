// qca — exact verifier for quantum cluster characters and derived Hall
// algebra identities over small finite fields.
//
// Subcommands: validate | catalog | character | hall-mul | psi | check | example

#include "qca/example.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace qca;

namespace {

QuiverContext load_context(const std::string& arg, int q0_override) {
    nlohmann::json j;
    if (arg == "kronecker" || arg == "k2") {
        j = kronecker_context(q0_override > 0 ? q0_override : 2).to_json();
    } else if (arg == "a2") {
        j = a2_valued_context(q0_override > 0 ? q0_override : 2).to_json();
    } else {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot open context file '" + arg + "'");
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("context file '" + arg + "': " + e.what());
        }
    }
    if (q0_override > 0) j["q0"] = q0_override;
    return QuiverContext::from_json(j);
}

std::string context_label(const std::string& arg, const QuiverContext& ctx) {
    if (arg == "kronecker" || arg == "k2") return "kronecker-q" + std::to_string(ctx.q0);
    if (arg == "a2") return "a2-q" + std::to_string(ctx.q0);
    return arg;
}

// Object descriptor: "I:1,2;M:(1,1)#0;P:1". The M part may also be a named
// class (0, S1, P2, I1).
DecoratedObject parse_object(Catalog& cat, HallAlgebra& alg, const std::string& desc) {
    std::vector<int> inj, proj;
    ClassId mod = cat.zero_class();
    std::stringstream ss(desc);
    std::string part;
    auto parse_list = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream ls(s);
        std::string tok;
        while (std::getline(ls, tok, ','))
            if (!tok.empty()) out.push_back(std::stoi(tok));
        return out;
    };
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad object descriptor part '" + part + "'");
        std::string key = part.substr(0, colon), rest = part.substr(colon + 1);
        if (key == "I") inj = parse_list(rest);
        else if (key == "P") proj = parse_list(rest);
        else if (key == "M") {
            if (rest.empty() || rest == "0") {
                mod = cat.zero_class();
            } else if (rest[0] == '(') {
                auto close = rest.find(')');
                auto hashp = rest.find('#');
                if (close == std::string::npos || hashp == std::string::npos)
                    throw std::invalid_argument("bad module descriptor '" + rest + "'");
                DimVec dim = parse_list(rest.substr(1, close - 1));
                if (static_cast<int>(dim.size()) != cat.ctx().m)
                    throw std::invalid_argument("module dimension vector has wrong length");
                mod = cat.class_by_ordinal(dim, std::stoi(rest.substr(hashp + 1)));
            } else if (rest[0] == 'S' || rest[0] == 'P' || rest[0] == 'I') {
                int v = std::stoi(rest.substr(1));
                mod = rest[0] == 'S' ? cat.simple_class(v)
                      : rest[0] == 'P' ? cat.proj_class(v)
                                       : cat.inj_class(v);
            } else {
                throw std::invalid_argument("bad module descriptor '" + rest + "'");
            }
        } else {
            throw std::invalid_argument("unknown object key '" + key + "'");
        }
    }
    for (int v : inj)
        if (v < 1 || v > cat.ctx().m) throw std::invalid_argument("injective vertex out of range");
    for (int v : proj)
        if (v < 1 || v > cat.ctx().m) throw std::invalid_argument("projective vertex out of range");
    return alg.object(inj, mod, proj);
}

nlohmann::json scalar_json(const ExactScalar& s) {
    auto rat = [](const Rational& r) {
        std::string t = boost::multiprecision::numerator(r).str();
        if (boost::multiprecision::denominator(r) != 1)
            t += "/" + boost::multiprecision::denominator(r).str();
        return t;
    };
    return {{"a", rat(s.rat_part())}, {"b", rat(s.root_part())}};
}

nlohmann::json torus_json(const TorusElement& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, c] : t) out.push_back({{"coeff", scalar_json(c)}, {"exp", a}});
    return out;
}

nlohmann::json hall_json(Catalog& cat, const HallElement& h) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [o, c] : h)
        out.push_back({{"coeff", scalar_json(c)},
                       {"inj", o.inj},
                       {"mod", {{"dim", cat.rec(o.mod).dim}, {"ordinal", cat.ordinal(o.mod)}}},
                       {"proj", o.proj}});
    return out;
}

std::string cache_path(const std::string& dir, const QuiverContext& ctx) {
    return dir + "/qca-" + ctx.hash() + ".json";
}

std::string resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("QCA_CACHE_DIR");
    return env ? env : "";
}

void maybe_load_cache(Catalog& cat, const std::string& dir) {
    if (dir.empty()) return;
    std::ifstream in(cache_path(dir, cat.ctx()));
    if (!in) return;
    try {
        nlohmann::json j;
        in >> j;
        cat.load_cache_json(j);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unreadable cache: " << e.what() << "\n";
    }
}

struct CommonOpts {
    std::string context = "kronecker";
    int q0 = 0;
    int cap = 1;
    int total_cap = -1;
    long long bound_rep = 1LL << 20, bound_hom = 1LL << 20, bound_tuples = 1LL << 22,
              bound_sweep = 1LL << 20;
    uint64_t seed = 1;
    int jobs = 1;
    bool json = false;
    bool no_timestamp = false;
    std::string out;
    std::string cache_dir;
    std::string bounds_csv;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_context = true) {
    if (with_context)
        cmd->add_option("context", o.context, "context file, or builtin 'kronecker'/'a2'");
    cmd->add_option("--q0", o.q0, "override the base prime (2,3,5,7)");
    cmd->add_option("--cap", o.cap, "per-vertex dimension cap for module beds");
    cmd->add_option("--total-cap", o.total_cap, "total-dimension cap for module beds");
    cmd->add_option("--bounds", o.bounds_csv, "enumeration bounds: rep,hom,tuples,sweep");
    cmd->add_option("--seed", o.seed, "seed for sampled invariant suites");
    cmd->add_option("--jobs", o.jobs, "worker pool size for suite execution");
    cmd->add_flag("--json", o.json, "emit a machine-readable JSON report");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
    cmd->add_option("--out", o.out, "write the JSON report to this file");
    cmd->add_option("--cache-dir", o.cache_dir, "catalog cache directory (or QCA_CACHE_DIR)");
}

Bounds bounds_of(CommonOpts& o) {
    if (!o.bounds_csv.empty()) {
        std::stringstream ss(o.bounds_csv);
        std::string tok;
        std::vector<long long> bs;
        while (std::getline(ss, tok, ',')) bs.push_back(std::stoll(tok));
        if (bs.size() != 4)
            throw std::runtime_error("--bounds wants rep,hom,tuples,sweep");
        o.bound_rep = bs[0];
        o.bound_hom = bs[1];
        o.bound_tuples = bs[2];
        o.bound_sweep = bs[3];
    }
    Bounds b;
    b.rep_space = o.bound_rep;
    b.hom_space = o.bound_hom;
    b.subspace_tuples = o.bound_tuples;
    b.group_sweep = o.bound_sweep;
    return b;
}

void emit(const CommonOpts& o, const nlohmann::json& j, const std::string& text) {
    if (o.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << j.dump(2) << "\n";
    }
}

int cmd_validate(CommonOpts& o) {
    QuiverContext ctx = load_context(o.context, o.q0);
    std::cout << ctx.render_matrices();
    // Lemma 4.2 spot checks on seeded random vectors
    std::mt19937_64 rng(o.seed);
    auto Bv = [&](const DimVec& x) {
        DimVec y(ctx.m, 0);
        for (int i = 0; i < ctx.m; ++i) {
            long s = 0;
            for (int j = 0; j < ctx.m; ++j) s += ctx.B[i][j] * x[j];
            y[i] = static_cast<int>(s);
        }
        return y;
    };
    for (int t = 0; t < 50; ++t) {
        DimVec a(ctx.m), b(ctx.m);
        for (int i = 0; i < ctx.m; ++i) {
            a[i] = static_cast<int>(rng() % 13) - 6;
            b[i] = static_cast<int>(rng() % 13) - 6;
        }
        if (ctx.lambda_form(Bv(a), ctx.star_left(b)) != ctx.euler(a, b) ||
            ctx.lambda_form(Bv(a), ctx.star_right(b)) != ctx.euler(b, a) ||
            ctx.lambda_form(Bv(a), Bv(b)) != ctx.euler(b, a) - ctx.euler(a, b) ||
            ctx.lambda_form(ctx.star_right(a), ctx.star_right(b)) !=
                ctx.lambda_form(ctx.star_left(a), ctx.star_left(b))) {
            std::cerr << "Lemma 4.2 spot check failed\n";
            return 1;
        }
    }
    std::cout << "context ok: hash " << ctx.hash() << "\n";
    return 0;
}

int cmd_catalog(CommonOpts& o, long long max_entries) {
    QuiverContext ctx = load_context(o.context, o.q0);
    std::string dir = resolve_cache_dir(o.cache_dir);
    std::string path = o.out.empty() ? (dir.empty() ? "" : cache_path(dir, ctx)) : o.out;
    if (path.empty()) throw std::runtime_error("catalog: need --out or a cache dir");
    // idempotence: same hash and bounds means nothing to do
    {
        std::ifstream in(path);
        if (in) {
            nlohmann::json j;
            try {
                in >> j;
                Catalog probe(ctx, bounds_of(o));
                if (probe.load_cache_json(j)) {
                    std::cout << "cache hit: " << path << "\n";
                    return 0;
                }
            } catch (const std::exception&) {
            }
        }
    }
    Catalog cat(ctx, bounds_of(o));
    DimVec cap(ctx.m, o.cap);
    DimVec cur(ctx.m, 0);
    long classified = 0;
    while (true) {
        if (o.total_cap < 0 || dim_total(cur) <= o.total_cap) {
            cat.classify(cur); // resource errors abort with the offending dim
            classified += static_cast<long>(cat.classes_of_dim(cur).size());
            if (max_entries > 0 && classified > max_entries)
                throw std::runtime_error("catalog: --max-entries " +
                                         std::to_string(max_entries) + " exceeded at dim " +
                                         dim_str(cur));
            for (ClassId id : cat.classes_of_dim(cur)) cat.aut_order(id);
        }
        int v = 0;
        while (v < ctx.m && cur[v] == cap[v]) cur[v++] = 0;
        if (v == ctx.m) break;
        ++cur[v];
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << cat.to_cache_json().dump() << "\n";
    std::cout << "catalog written: " << path << " (" << classified << " classes)\n";
    return 0;
}

int cmd_element(CommonOpts& o, const std::string& kind, const std::string& left,
                const std::string& right) {
    QuiverContext ctx = load_context(o.context, o.q0);
    Catalog cat(ctx, bounds_of(o));
    maybe_load_cache(cat, resolve_cache_dir(o.cache_dir));
    HallAlgebra alg(cat);
    nlohmann::json j;
    std::string text;
    if (kind == "character") {
        DecoratedObject obj = parse_object(cat, alg, left);
        TorusElement t = character(cat, obj.inj, obj.mod, obj.proj);
        text = "X[" + suites::obj_str(cat, obj) + "] = " + torus_str(t) + "\n";
        j = {{"object", suites::obj_str(cat, obj)}, {"character", torus_json(t)}};
    } else if (kind == "hall-mul") {
        DecoratedObject a = parse_object(cat, alg, left);
        DecoratedObject b = parse_object(cat, alg, right);
        HallElement p = alg.hall_mul(alg.basis(a), alg.basis(b));
        text = "u[" + suites::obj_str(cat, a) + "] * u[" + suites::obj_str(cat, b) + "] = " +
               suites::hall_str(cat, p) + "\n";
        j = {{"left", suites::obj_str(cat, a)},
             {"right", suites::obj_str(cat, b)},
             {"product", hall_json(cat, p)}};
    } else { // psi
        DecoratedObject obj = parse_object(cat, alg, left);
        TorusElement closed = alg.psi_closed(alg.basis(obj));
        TorusElement composed = alg.psi_composed(alg.basis(obj));
        bool agree = closed == composed;
        text = "psi[" + suites::obj_str(cat, obj) + "] = " + torus_str(closed) + "\n" +
               (agree ? "factorization: closed = mu.(int x int).Delta\n"
                      : "FACTORIZATION MISMATCH: composed = " + torus_str(composed) + "\n");
        j = {{"object", suites::obj_str(cat, obj)},
             {"psi", torus_json(closed)},
             {"factorization_agrees", agree}};
        if (!agree) {
            emit(o, j, text);
            return 1;
        }
    }
    emit(o, j, text);
    return 0;
}

int cmd_check(CommonOpts& o, std::vector<std::string> suites_requested) {
    QuiverContext ctx = load_context(o.context, o.q0);
    Bounds bounds = bounds_of(o);
    if (suites_requested.empty() ||
        (suites_requested.size() == 1 && suites_requested[0] == "all"))
        suites_requested = suite_names();
    for (const auto& s : suites_requested) {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw std::runtime_error("unknown suite '" + s + "' (see --help)");
    }

    SuiteConfig cfg;
    cfg.cap = o.cap;
    cfg.total_cap = o.total_cap;
    cfg.seed = o.seed;
    cfg.context_name = context_label(o.context, ctx);

    std::string dir = resolve_cache_dir(o.cache_dir);
    std::vector<Report> reports(suites_requested.size());
    int jobs = std::max(1, o.jobs);
    auto worker = [&](int w) {
        Catalog cat(ctx, bounds);
        maybe_load_cache(cat, dir);
        HallAlgebra alg(cat);
        for (size_t i = w; i < suites_requested.size(); i += jobs)
            reports[i] = run_suite(suites_requested[i], cat, alg, cfg);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    long failed = 0, skipped = 0, passed = 0, instances = 0;
    nlohmann::json jreports = nlohmann::json::array();
    std::string text;
    for (const Report& r : reports) {
        failed += r.failed;
        skipped += r.skipped;
        passed += r.passed;
        instances += r.instances;
        jreports.push_back(r.to_json());
        text += r.summary() + "\n";
    }
    nlohmann::json j = {{"context", cfg.context_name},
                        {"context_hash", ctx.hash()},
                        {"config",
                         {{"cap", o.cap},
                          {"total_cap", o.total_cap},
                          {"seed", o.seed},
                          {"jobs", jobs},
                          {"bounds",
                           {o.bound_rep, o.bound_hom, o.bound_tuples, o.bound_sweep}}}},
                        {"instances", instances},
                        {"passed", passed},
                        {"failed", failed},
                        {"skipped", skipped},
                        {"suites", jreports}};
    if (!o.no_timestamp)
        j["timestamp"] = static_cast<long long>(
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count());
    text += "total: " + std::to_string(passed) + "/" + std::to_string(instances) +
            " passed, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
            " skipped\n";
    emit(o, j, text);
    return failed == 0 ? 0 : 1;
}

int cmd_example(CommonOpts& o) {
    int q0 = o.q0 > 0 ? o.q0 : 2;
    ExampleResult res = kronecker_example(q0);
    std::string text;
    for (const auto& line : res.lines) text += line + "\n";
    text += res.report.summary() + "\n";
    nlohmann::json j = res.report.to_json();
    if (!o.no_timestamp)
        j["timestamp"] = static_cast<long long>(
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count());
    emit(o, j, text);
    return res.report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum cluster character and derived Hall algebra verifier"};
    app.require_subcommand(1);

    CommonOpts vo, co, xo, ho, po, ko, eo;
    long long max_entries = 0;
    std::vector<std::string> suites_requested;
    std::string obj_left, obj_right;

    auto* validate = app.add_subcommand("validate", "validate a quiver context file");
    add_common(validate, vo);

    auto* catalog = app.add_subcommand("catalog", "classify and persist a class catalog");
    add_common(catalog, co);
    catalog->add_option("--max-entries", max_entries, "abort after this many classes");

    auto* character = app.add_subcommand("character", "print a quantum cluster character");
    add_common(character, xo);
    character->add_option("--obj", obj_left, "object descriptor, e.g. I:1;M:(1,1)#0;P:2")
        ->required();

    auto* hallmul = app.add_subcommand("hall-mul", "multiply two Hall basis elements");
    add_common(hallmul, ho);
    hallmul->add_option("--left", obj_left, "left object descriptor")->required();
    hallmul->add_option("--right", obj_right, "right object descriptor")->required();

    auto* psi = app.add_subcommand("psi", "evaluate psi on a decorated object");
    add_common(psi, po);
    psi->add_option("--obj", obj_left, "object descriptor")->required();

    auto* check = app.add_subcommand("check", "run verification suites");
    add_common(check, ko);
    std::string suite_help = "suite name(s), or 'all':";
    for (const auto& n : suite_names()) suite_help += " " + n;
    check->add_option("--suite", suites_requested, suite_help);

    auto* example = app.add_subcommand("example", "run the embedded worked example");
    example->add_option("name", eo.context, "example name (kronecker)");
    example->add_option("--q0", eo.q0, "base prime");
    example->add_flag("--json", eo.json, "emit JSON");
    example->add_flag("--no-timestamp", eo.no_timestamp, "omit the timestamp field");
    example->add_option("--out", eo.out, "write the JSON report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(vo);
        if (catalog->parsed()) return cmd_catalog(co, max_entries);
        if (character->parsed()) return cmd_element(xo, "character", obj_left, "");
        if (hallmul->parsed()) return cmd_element(ho, "hall-mul", obj_left, obj_right);
        if (psi->parsed()) return cmd_element(po, "psi", obj_left, "");
        if (check->parsed()) return cmd_check(ko, suites_requested);
        if (example->parsed()) {
            if (eo.context != "kronecker" && eo.context != "k2")
                throw std::runtime_error("unknown example '" + eo.context + "'");
            return cmd_example(eo);
        }
    } catch (const ContextError& e) {
        std::cerr << "context error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
