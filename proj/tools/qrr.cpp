// qrr: command-line front end.
//
// Exit status: 0 when every check passes (for `counterexample`, when the
// failure is reproduced), 1 on any mismatch or error verdict, 2 on a
// configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qrr/qrr.hpp"

namespace {

using namespace qrr;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Output {
    std::string format{"text"};
    std::string out;
    bool timing{false};
};

int default_trunc()
{
    if (const char *env = std::getenv("QRR_TRUNC")) {
        try {
            return std::stoi(env);
        } catch (const std::exception &) {
            throw ConfigError(std::string("QRR_TRUNC is not an integer: ") + env);
        }
    }
    return 60;
}

long parse_long(const std::string &s)
{
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

/// "n=0..8,l=1..3" or "n=4".
std::vector<ParamRange> parse_ranges(const std::string &spec)
{
    std::vector<ParamRange> out;
    if (spec.empty()) {
        return out;
    }
    for (const auto &item : split(spec, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("bad range '" + item + "', expected name=a..b");
        }
        const std::string name = item.substr(0, eq);
        const std::string body = item.substr(eq + 1);
        const auto dots = body.find("..");
        ParamRange r{name, 0, 0};
        if (dots == std::string::npos) {
            r.lo = r.hi = parse_long(body);
        } else {
            r.lo = parse_long(body.substr(0, dots));
            r.hi = parse_long(body.substr(dots + 2));
        }
        out.push_back(r);
    }
    return out;
}

std::optional<RecordMutation> parse_mutation(const std::string &spec)
{
    if (spec.empty()) {
        return std::nullopt;
    }
    // side[:pre]:site:delta
    const auto parts = split(spec, ':');
    if (parts.size() < 3 || parts.size() > 4 || (parts[0] != "lhs" && parts[0] != "rhs")) {
        throw ConfigError("bad --mutate value '" + spec + "'");
    }
    RecordMutation m;
    m.side = parts[0] == "lhs" ? Side::lhs : Side::rhs;
    m.prefactor = parts.size() == 4 && parts[1] == "pre";
    m.site.site = static_cast<int>(parse_long(parts[parts.size() - 2]));
    m.site.delta = parse_long(parts.back());
    return m;
}

void check_trunc(int trunc)
{
    if (trunc < 1) {
        throw ConfigError("--trunc must be >= 1");
    }
}

void check_format(const Output &o)
{
    if (o.format != "text" && o.format != "json") {
        throw ConfigError("--format must be text or json");
    }
}

/// Writes the reports and returns 0 if all passed, else 1.
int emit(const std::string &command, const Json &config, const std::vector<VerificationReport> &rs, const Output &o)
{
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto &r : rs) {
        passed += r.passed() ? 1 : 0;
    }
    if (o.format == "json") {
        os << document_json(command, config, rs, o.timing).dump(2) << "\n";
    } else {
        for (const auto &r : rs) {
            os << report_line(r, o.timing) << "\n";
        }
        os << "total " << rs.size() << " passed " << passed << " failed " << rs.size() - passed << "\n";
    }
    if (o.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            throw ConfigError("cannot open " + o.out);
        }
        f << os.str();
    }
    return passed == rs.size() ? 0 : 1;
}

void add_output(CLI::App *cmd, Output &o)
{
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "write the report to a file");
    cmd->add_flag("--timing", o.timing, "record wall-clock times");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification of finite Rogers-Ramanujan identities and Bailey machinery"};
    app.require_subcommand(1);

    Output out;
    std::optional<int> trunc_opt;
    unsigned jobs = 1;
    std::string id;
    std::string range;
    std::string mutate;

    auto *list = app.add_subcommand("list", "list registered identities");
    bool grids = false;
    list->add_flag("--grids", grids, "also print each default grid");

    auto *verify = app.add_subcommand("verify", "verify one identity over a parameter grid");
    verify->add_option("--id", id, "identity id")->required();
    verify->add_option("--range", range, "comma-separated name=a..b");
    verify->add_option("--trunc", trunc_opt, "truncation order T");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--mutate", mutate)->group("");
    add_output(verify, out);

    auto *verify_all = app.add_subcommand("verify-all", "verify every identity on its default grid");
    verify_all->add_option("--trunc", trunc_opt, "truncation order T");
    verify_all->add_option("--jobs", jobs, "worker threads");
    verify_all->add_option("--mutate", mutate)->group("");
    add_output(verify_all, out);

    auto *bailey = app.add_subcommand("bailey", "unit pairs, lemma and lattice steps, chain routes");
    long n_max = 10;
    bailey->add_option("--n-max", n_max, "largest n for pair checks");
    bailey->add_option("--trunc", trunc_opt, "truncation order T");
    bailey->add_option("--range", range, "grid for the chain routes (n,l,m,u,v)");
    add_output(bailey, out);

    auto *telescope = app.add_subcommand("telescope", "telescoping certificate and S_k = T_k checks");
    std::string tparams;
    bool tgrid = false;
    telescope->add_option("--params", tparams, "l,m,n,u,v");
    telescope->add_flag("--grid", tgrid, "sweep l,m,n in 0..3 and u,v in 1..3");
    telescope->add_option("--trunc", trunc_opt, "truncation order T");
    add_output(telescope, out);

    auto *binomial = app.add_subcommand("binomial", "q -> 1 binomial identities");
    bool b5 = false, b4 = false, c57 = false, c58 = false, div = false;
    std::string general;
    std::optional<long> bn;
    std::string bparams;
    binomial->add_flag("--bino5", b5, "fifth-power sum");
    binomial->add_flag("--bino4", b4, "fourth-power sum");
    binomial->add_flag("--cor57", c57, "five-binomial identity");
    binomial->add_flag("--cor58", c58, "four-binomial identities");
    binomial->add_flag("--divisibility", div, "divisibility by C(2n,n), powers 4 and 5");
    binomial->add_option("--general", general, "n_1,...,n_m for the cyclic alternating sum");
    binomial->add_option("--n", bn, "n (default: every n in 0..20)");
    binomial->add_option("--params", bparams, "l,m,n,u,v for --cor57/--cor58 (default: grid 0..4)");
    add_output(binomial, out);

    auto *counter = app.add_subcommand("counterexample", "non-terminating failure of LIU1/LIU2");
    std::string which = "liu1";
    long a_exp = 2;
    counter->add_option("--which", which, "liu1 or liu2")->check(CLI::IsMember({"liu1", "liu2"}));
    counter->add_option("--a-exp", a_exp, "a = q^j");
    counter->add_option("--trunc", trunc_opt, "truncation order T");
    add_output(counter, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        check_format(out);
        Json config = Json::object();

        if (list->parsed()) {
            for (const auto &rec : registry()) {
                std::cout << rec.id << "  " << rec.citation << "\n";
                if (grids) {
                    std::cout << "    ";
                    for (std::size_t i = 0; i < rec.params.size(); ++i) {
                        const auto &d = rec.params[i];
                        std::cout << (i ? "," : "") << d.name << "=" << d.grid_lo << ".." << d.grid_hi;
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed() || verify_all->parsed()) {
            const int trunc = trunc_opt.value_or(default_trunc());
            check_trunc(trunc);
            const auto mut = parse_mutation(mutate);
            const RecordMutation *mp = mut ? &*mut : nullptr;
            config["trunc"] = trunc;
            config["jobs"] = jobs;
            std::vector<VerificationReport> rs;
            if (verify->parsed()) {
                const IdentityRecord &rec = find_identity(id);
                ParamGrid g;
                g.ranges = parse_ranges(range);
                g.trunc = trunc;
                expand_grid(rec, g.ranges); // reject bad ranges before any work
                config["id"] = id;
                config["range"] = range;
                rs = verify_grid(rec, g, jobs, mp);
                return emit("verify", config, rs, out);
            }
            for (const auto &rec : registry()) {
                const auto part = verify_grid(rec, default_grid(rec, trunc), jobs, mp);
                rs.insert(rs.end(), part.begin(), part.end());
            }
            return emit("verify-all", config, rs, out);
        }

        if (bailey->parsed()) {
            const int trunc = trunc_opt.value_or(std::min(default_trunc(), 40));
            check_trunc(trunc);
            config["trunc"] = trunc;
            config["n_max"] = n_max;
            std::vector<VerificationReport> rs;
            for (const BaileyPair &p : {unit_pair_x1_bilateral(), unit_pair_x1(), unit_pair_xq_bilateral(),
                                        unit_pair_xq(), lattice_seed()}) {
                rs.push_back(verify_pair(p, n_max, trunc));
            }
            const Param r1 = Param::tilted(-1, 1);
            const Param r2 = Param::tilted(0, 3);
            rs.push_back(verify_pair(bailey_step(unit_pair_x1(), r1, r2), n_max, trunc));
            rs.push_back(verify_pair(lattice_step(lattice_seed(), r1, r2), n_max, trunc));
            rs.push_back(symmetrized_identity(unit_pair_x1_bilateral(), r1, r2, 3, trunc, SymMode::x1));
            rs.push_back(symmetrized_identity(unit_pair_xq_bilateral(), r1, r2, 3, trunc, SymMode::xq));
            std::vector<ParamRange> ranges = parse_ranges(range);
            if (ranges.empty()) {
                ranges = {{"l", 0, 1}, {"m", 0, 1}, {"n", 0, 2}, {"u", 0, 1}, {"v", 0, 1}};
            }
            config["range"] = range;
            for (auto t : {ChainTarget::abcde1, ChainTarget::abcde2, ChainTarget::abcde3}) {
                for (const Params &p : expand_grid(find_identity(to_string(t)), ranges)) {
                    rs.push_back(chain_reproduce(t, p, trunc));
                }
            }
            return emit("bailey", config, rs, out);
        }

        if (telescope->parsed()) {
            const int trunc = trunc_opt.value_or(std::min(default_trunc(), 40));
            check_trunc(trunc);
            std::vector<Lmnuv> pts;
            if (tgrid) {
                for (long l = 0; l <= 3; ++l)
                    for (long m = 0; m <= 3; ++m)
                        for (long n = 0; n <= 3; ++n)
                            for (long u = 1; u <= 3; ++u)
                                for (long v = 1; v <= 3; ++v)
                                    pts.push_back({l, m, n, u, v});
            } else {
                const auto parts = split(tparams.empty() ? std::string("1,1,1,1,1") : tparams, ',');
                if (parts.size() != 5) {
                    throw ConfigError("--params needs five values l,m,n,u,v");
                }
                pts.push_back({parse_long(parts[0]), parse_long(parts[1]), parse_long(parts[2]),
                               parse_long(parts[3]), parse_long(parts[4])});
                require_uv(pts.back());
            }
            config["trunc"] = trunc;
            config["params"] = tgrid ? std::string("grid") : tparams;
            std::vector<VerificationReport> rs;
            for (const auto &x : pts) {
                rs.push_back(as_report(verify_telescoping(x, trunc)));
                rs.push_back(verify_sk_tk(x, trunc));
            }
            rs.push_back(verify_quartic_identity());
            return emit("telescope", config, rs, out);
        }

        if (binomial->parsed()) {
            const bool any = b5 || b4 || c57 || c58 || div || !general.empty();
            std::vector<long> ns;
            if (bn) {
                if (*bn < 0) {
                    throw ConfigError("--n must be >= 0");
                }
                ns.push_back(*bn);
            } else {
                for (long n = 0; n <= 20; ++n) {
                    ns.push_back(n);
                }
            }
            std::vector<std::array<long, 5>> grid;
            if (!bparams.empty()) {
                const auto parts = split(bparams, ',');
                if (parts.size() != 5) {
                    throw ConfigError("--params needs five values l,m,n,u,v");
                }
                std::array<long, 5> a{};
                for (int i = 0; i < 5; ++i) {
                    a[i] = parse_long(parts[i]);
                    if (a[i] < 0) {
                        throw ConfigError("--params values must be >= 0");
                    }
                }
                grid.push_back(a);
            } else {
                for (long l = 0; l <= 4; ++l)
                    for (long m = 0; m <= 4; ++m)
                        for (long n = 0; n <= 4; ++n)
                            for (long u = 0; u <= 4; ++u)
                                for (long v = 0; v <= 4; ++v)
                                    grid.push_back({l, m, n, u, v});
            }
            std::vector<VerificationReport> rs;
            if (!any || b5) {
                for (long n : ns) rs.push_back(as_report(bino5_check(n)));
            }
            if (!any || b4) {
                for (long n : ns) rs.push_back(as_report(bino4_check(n)));
            }
            if (!any || div) {
                for (long n : ns) {
                    rs.push_back(as_report(divisibility_check(n, 4)));
                    rs.push_back(as_report(divisibility_check(n, 5)));
                }
            }
            if (!any || c57) {
                for (const auto &a : grid) rs.push_back(as_report(cor57_check(a[0], a[1], a[2], a[3], a[4])));
            }
            if (!any || c58) {
                for (const auto &a : grid) {
                    for (const auto &c : cor58_checks(a[0], a[1], a[2], a[3], a[4])) rs.push_back(as_report(c));
                }
            }
            if (!general.empty()) {
                std::vector<long> list;
                for (const auto &s : split(general, ',')) {
                    list.push_back(parse_long(s));
                    if (list.back() < 0) {
                        throw ConfigError("--general entries must be >= 0");
                    }
                }
                rs.push_back(as_report(general_alt_sum_divisibility(list)));
            }
            config["n"] = bn ? Json(*bn) : Json("0..20");
            return emit("binomial", config, rs, out);
        }

        if (counter->parsed()) {
            const int trunc = trunc_opt.value_or(std::min(default_trunc(), 20));
            check_trunc(trunc);
            if (a_exp < 1) {
                throw ConfigError("--a-exp must be >= 1");
            }
            const Counterexample c = liu_counterexample(which == "liu1" ? LiuForm::liu1 : LiuForm::liu2, a_exp, trunc);
            config["which"] = which;
            config["a_exp"] = a_exp;
            config["trunc"] = trunc;
            if (out.format == "text" && out.out.empty()) {
                std::cout << "LHS = " << c.lhs.str() << "\n";
                std::cout << "RHS = " << c.rhs.str() << "\n";
                std::cout << "direct summation " << (c.direct_agrees ? "agrees with" : "differs from")
                          << " the closed form\n";
            }
            emit("counterexample", config, {c.report}, out);
            return c.reproduced() ? 0 : 1;
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownIdentity &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleParams &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolated &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
