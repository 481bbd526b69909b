#include "qlrc/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qlrc/bounds.hpp"
#include "qlrc/io.hpp"

namespace qlrc {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::RankDeficient:
        case ErrorCode::OrthogonalityFailure:
        case ErrorCode::NoConvergence:
        case ErrorCode::NotRegular:
        case ErrorCode::NotSymmetricGeneratingSet:
        case ErrorCode::ZeroInverse:
        case ErrorCode::DivisionByZeroPoly:
        case ErrorCode::DuplicateNode:
        case ErrorCode::BlockIncomplete:
            return kExitConstruction;
        case ErrorCode::TooLarge:
            return kExitResource;
        default:
            return kExitInput;
    }
}

namespace {

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
}

std::string summary_line(const CodeInstance& inst, const Field& base) {
    const auto q = std::to_string(inst.field().q());
    const auto n = std::to_string(inst.n());
    std::string s = "[" + n + "," + std::to_string(inst.k()) + "]_" + q + " locality " + std::to_string(inst.r()) +
                    ", dual-containing: OK, qLRC [[" + n + "," + std::to_string(2 * inst.k() - inst.n()) + "]]_" + q;
    if (inst.eval.extended_field)
        s += ", extended field GF(" + std::to_string(base.q()) + ") -> GF(" + q + ")";
    return s;
}

std::map<long long, std::string> read_gg_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::map<long long, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'kappa,value' in " + path);
        try {
            out[std::stoll(line.substr(0, comma))] = line.substr(comma + 1);
        } catch (const std::invalid_argument&) {
            continue;  // header
        }
    }
    return out;
}

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> cap;
    std::string output;
};

class Runner {
public:
    Runner(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

    void emit(const std::string& text) {
        if (g_.output.empty())
            out_ << text;
        else
            write_file(g_.output, text);
    }

    int construct(const std::string& spec_path) {
        InstanceSpec spec = spec_from_json(read_json(spec_path));
        if (g_.seed) spec.seed = *g_.seed;
        if (g_.cap) spec.cap = *g_.cap;
        const Field base = make_field(spec.field);
        const CodeInstance inst = build_instance(spec);
        const std::string dump = instance_to_json(inst, spec).dump(2) + "\n";
        const std::string summary = summary_line(inst, base) + "\n";
        if (g_.output.empty()) {
            err_ << summary;
            out_ << dump;
        } else {
            write_file(g_.output, dump);
            out_ << summary;
        }
        return kExitOk;
    }

    int verify(const std::string& path, std::size_t trials) {
        const LoadedInstance loaded = instance_from_json(read_json(path));
        Rng rng(g_.seed.value_or(loaded.spec.seed));
        const auto checks = verify_instance(loaded, rng, trials);
        std::ostringstream report;
        std::size_t passed = 0;
        for (const auto& c : checks) {
            report << (c.ok ? "PASS " : "FAIL ") << c.name;
            if (!c.ok) report << ": " << c.detail;
            report << '\n';
            passed += c.ok ? 1 : 0;
        }
        report << passed << "/" << checks.size() << " checks passed\n";
        emit(report.str());
        return passed == checks.size() ? kExitOk : kExitVerification;
    }

    int bounds_instance(const std::string& path, bool brute_force, unsigned threads) {
        const LoadedInstance loaded = instance_from_json(read_json(path));
        QlrcParams params = css_params(loaded.instance);
        if (brute_force)
            params.delta_exact =
                distance_bruteforce(loaded.instance, g_.cap.value_or(loaded.spec.cap), threads).distance;
        emit(to_json(params).dump(2) + "\n");
        return kExitOk;
    }

    int bounds_table(std::optional<std::size_t> n, std::optional<std::size_t> r, std::optional<std::uint64_t> q,
                     const std::string& gg_path) {
        if (!n || !r) throw Error(ErrorCode::InvalidArgument, "--sweep-kappa needs --n and --r");
        if (q && *n > *q) throw Error(ErrorCode::InvalidArgument, "n exceeds the field size q");
        const auto rows = bound_table(*n, *r);
        std::map<long long, std::string> gg;
        if (!gg_path.empty()) gg = read_gg_column(gg_path);
        std::ostringstream csv;
        csv << "kappa,degree_bound,agl_bound" << (gg_path.empty() ? "" : ",gg_bound") << '\n';
        for (const auto& row : rows) {
            csv << row.kappa << ',' << row.degree_bound << ',' << row.agl_bound;
            if (!gg_path.empty()) {
                auto it = gg.find(row.kappa);
                csv << ',' << (it == gg.end() ? "" : it->second);
            }
            csv << '\n';
        }
        emit(csv.str());
        return kExitOk;
    }

    int repair_demo(const std::string& path, const std::string& erase, std::size_t trials) {
        const LoadedInstance loaded = instance_from_json(read_json(path));
        const CodeInstance& inst = loaded.instance;
        const std::size_t n = inst.n();
        std::optional<std::size_t> fixed;
        const bool all = erase == "all";
        if (!erase.empty() && !all) {
            std::size_t used = 0;
            long long z = -1;
            try {
                z = std::stoll(erase, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != erase.size() || z < 0 || static_cast<std::size_t>(z) >= n)
                throw Error(ErrorCode::InvalidArgument,
                            "--erase must be 'all' or a position in [0, " + std::to_string(n - 1) + "], got " + erase);
            fixed = static_cast<std::size_t>(z);
        }

        Rng rng(g_.seed.value_or(loaded.spec.seed));
        std::vector<std::size_t> exact(n, 0);
        std::vector<std::size_t> attempts(n, 0);
        std::size_t min_reads = SIZE_MAX;
        std::size_t max_reads = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Element> msg;
            for (std::size_t i = 0; i < inst.k(); ++i) msg.push_back(rng.element(inst.field()));
            const auto word = encode(inst, msg);
            std::vector<std::size_t> positions;
            if (all) {
                for (std::size_t z = 0; z < n; ++z) positions.push_back(z);
            } else {
                positions.push_back(fixed ? *fixed : static_cast<std::size_t>(rng.below(n)));
            }
            for (auto z : positions) {
                std::vector<std::optional<Element>> received(word.begin(), word.end());
                received[z].reset();
                const auto res = repair(inst, received, z);
                ++attempts[z];
                exact[z] += res.value == word[z] ? 1 : 0;
                min_reads = std::min(min_reads, res.reads.size());
                max_reads = std::max(max_reads, res.reads.size());
            }
        }

        std::ostringstream report;
        std::size_t total = 0;
        std::size_t ok = 0;
        if (all) report << "position,exact,trials\n";
        for (std::size_t z = 0; z < n; ++z) {
            total += attempts[z];
            ok += exact[z];
            if (all) report << z << ',' << exact[z] << ',' << attempts[z] << '\n';
        }
        report << ok << "/" << total << " repairs exact, ";
        if (total == 0)
            report << "no reads\n";
        else if (min_reads == max_reads)
            report << min_reads << " reads each\n";
        else
            report << min_reads << " to " << max_reads << " reads\n";
        emit(report.str());
        return ok == total ? kExitOk : kExitVerification;
    }

    int search(std::uint32_t p, std::uint32_t m, std::uint64_t max_q) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > max_q)
                throw Error(ErrorCode::TooLarge, "search is limited to fields of order <= " + std::to_string(max_q));
        }
        std::ostringstream csv;
        csv << "# {ax+b : a in M, b in B}, M cyclic in K*, B = K-span of 1, b, ..., b^(dim-1); other subgroups not listed\n";
        csv << "subfield_degree,M_order,B_dim,r_plus_1,r,regular_orbits,max_n\n";
        for (const auto& f : search_subgroups(Field::create(p, m)))
            csv << f.subfield_degree << ',' << f.m_order << ',' << f.b_dim << ',' << f.order << ',' << f.order - 1 << ','
                << f.regular_orbits << ',' << f.max_n() << '\n';
        emit(csv.str());
        return kExitOk;
    }

private:
    const Globals& g_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual-containing locally recoverable codes and their quantum (CSS) codes", "qlrc"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for every randomized audit");
    app.add_option("--cap", g.cap, "Largest q^k enumerated by --brute-force");
    app.add_option("-o,--output", g.output, "Write the main output to this file");

    std::string path;
    std::size_t trials = 100;

    auto* cmd_construct = app.add_subcommand("construct", "Build an instance from a JSON spec");
    cmd_construct->add_option("spec", path, "Instance spec JSON")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Re-check every property of an instance dump");
    cmd_verify->add_option("instance", path, "Instance JSON")->required();
    cmd_verify->add_option("--trials", trials, "Random trials for ring and repair checks");

    bool brute_force = false;
    bool sweep = false;
    unsigned threads = 0;
    std::optional<std::size_t> n;
    std::optional<std::size_t> r;
    std::optional<std::uint64_t> q;
    std::string gg;
    auto* cmd_bounds = app.add_subcommand("bounds", "Distance bounds for an instance, or a table over kappa");
    cmd_bounds->add_option("instance", path, "Instance JSON");
    cmd_bounds->add_flag("--brute-force", brute_force, "Also enumerate the exact distance");
    cmd_bounds->add_option("--threads", threads, "Worker threads for --brute-force (0: automatic)");
    cmd_bounds->add_flag("--sweep-kappa", sweep, "Emit a CSV table over every valid k");
    cmd_bounds->add_option("--n", n, "Code length for --sweep-kappa");
    cmd_bounds->add_option("--r", r, "Locality for --sweep-kappa");
    cmd_bounds->add_option("--q", q, "Field size for --sweep-kappa");
    cmd_bounds->add_option("--gg", gg, "CSV of kappa,value pairs appended as a gg_bound column");

    std::string erase;
    auto* cmd_repair = app.add_subcommand("repair", "Erase and locally repair symbols of random codewords");
    cmd_repair->add_option("instance", path, "Instance JSON")->required();
    cmd_repair->add_option("--erase", erase, "Position to erase, or 'all' (default: random)");
    cmd_repair->add_option("--trials", trials, "Number of random codewords");

    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t max_q = 1 << 12;
    auto* cmd_search = app.add_subcommand("search", "List (M, B) affine subgroups of GF(p^m) with regular orbits");
    cmd_search->add_option("--p", p, "Characteristic")->required();
    cmd_search->add_option("--m", m, "Extension degree")->required();
    cmd_search->add_option("--max-q", max_q, "Refuse fields larger than this");

    for (auto* sub : {cmd_construct, cmd_verify, cmd_bounds, cmd_repair, cmd_search}) sub->fallthrough();

    std::vector<std::string> argv_store{"qlrc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Runner run(g, out, err);
    try {
        if (cmd_construct->parsed()) return run.construct(path);
        if (cmd_verify->parsed()) return run.verify(path, trials);
        if (cmd_bounds->parsed()) {
            if (sweep) return run.bounds_table(n, r, q, gg);
            if (path.empty()) throw Error(ErrorCode::InvalidArgument, "bounds needs an instance file or --sweep-kappa");
            return run.bounds_instance(path, brute_force, threads);
        }
        if (cmd_repair->parsed()) return run.repair_demo(path, erase, trials);
        if (cmd_search->parsed()) return run.search(p, m, max_q);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConstruction;
    }
    return kExitInput;
}

}  // namespace qlrc
