// Command-line interface: exact Calogero-Sutherland eigenfunction machinery
// for the simply-laced families, with persistent caching and text / JSON /
// Mathematica output.
//
// Exit codes: 0 success, 1 internal error, 2 usage or input parse error,
// 3 pole at the requested coupling, 4 verification failure.
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cstrig/cache.hpp"
#include "cstrig/cstrig.hpp"
#include "cstrig/verify.hpp"

namespace {

using namespace cstrig;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPole = 3;
constexpr int kExitVerify = 4;

enum class OutputFormat { text, json, mathematica };

struct RunConfig {
    std::string algebra = "E7";
    OutputFormat format = OutputFormat::text;
    std::string cache_dir;  // empty disables the persistent cache
    int threads = 1;
    bool verbose = false;
};

Style style_of(const RunConfig& cfg) {
    return cfg.format == OutputFormat::mathematica ? Style::mathematica : Style::plain;
}

std::unique_ptr<Session> make_session(const RunConfig& cfg) {
    AlgebraId id = AlgebraId::parse(cfg.algebra);
    std::shared_ptr<RecordStore> store;
    if (!cfg.cache_dir.empty()) store = std::make_shared<DiskCache>(cfg.cache_dir, id);
    return std::make_unique<Session>(id, std::move(store));
}

BigRational parse_kappa(const std::string& s) {
    try {
        return BigRational::from_string(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad coupling '" + s + "', expected p or p/q");
    }
}

json poly_json(const ZPolyK& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (int i = 0; i < e.rank(); ++i) exps.push_back(e[i]);
        terms.push_back(json{{"exponents", exps}, {"coefficient", cache_detail::kr_to_json(c)}});
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}, {"text", p.to_string(Style::plain)}};
}

void emit_poly(const RunConfig& cfg, const std::string& name, const ZPolyK& p, std::ostream& out) {
    if (cfg.format == OutputFormat::json) {
        json j{{"algebra", cfg.algebra}, {"name", name}, {"value", poly_json(p)}};
        out << j.dump(1) << "\n";
    } else {
        out << p.to_string(style_of(cfg)) << "\n";
    }
}

// table-mode weight rendering: concatenated digits when possible
std::string wkey(const Weight& w) { return w.compact_string(); }

int cmd_algebra_info(const RunConfig& cfg, std::ostream& out) {
    auto session = make_session(cfg);
    const RootSystem& rs = session->rs();
    const int r = rs.rank();
    if (cfg.format == OutputFormat::json) {
        json dims = json::array();
        for (int i = 0; i < r; ++i)
            dims.push_back(rs.weyl_dimension(Weight::fundamental(r, i)).to_string());
        json j{{"algebra", cfg.algebra},
               {"rank", r},
               {"positive_roots", rs.positive_roots().size()},
               {"weyl_order", rs.weyl_order()},
               {"fundamental_dimensions", dims}};
        out << j.dump(1) << "\n";
        return kExitOk;
    }
    out << "algebra: " << rs.algebra().to_string() << "\n";
    out << "rank: " << r << "\n";
    out << "positive roots: " << rs.positive_roots().size() << "\n";
    out << "weyl order: " << rs.weyl_order() << "\n";
    out << "fundamental dimensions:";
    for (int i = 0; i < r; ++i) out << " " << rs.weyl_dimension(Weight::fundamental(r, i)).to_string();
    out << "\n";
    return kExitOk;
}

int cmd_orbit(const RunConfig& cfg, const std::string& wstr, bool elements, std::ostream& out) {
    auto session = make_session(cfg);
    Weight w = Weight::parse(wstr, session->rank());
    if (!w.is_dominant()) throw std::invalid_argument("orbit: weight must be dominant");
    std::uint64_t size = session->rs().orbit_size(w);
    if (cfg.format == OutputFormat::json) {
        json j{{"algebra", cfg.algebra}, {"weight", w.to_string()}, {"size", size}};
        if (elements) {
            json els = json::array();
            for (const Weight& u : session->orbit(w)) els.push_back(u.to_string());
            j["elements"] = els;
        }
        out << j.dump(1) << "\n";
        return kExitOk;
    }
    out << "orbit size: " << size << "\n";
    if (elements)
        for (const Weight& u : session->orbit(w)) out << u.to_string() << "\n";
    return kExitOk;
}

int cmd_mult(const RunConfig& cfg, const std::string& wstr, std::ostream& out) {
    auto session = make_session(cfg);
    Weight w = Weight::parse(wstr, session->rank());
    const DominantCharacter& chi = session->freudenthal(w);
    if (cfg.format == OutputFormat::json) {
        json terms = json::array();
        for (const Weight& mu : session->weights_below(w)) {
            BigInt m = chi.mult.coefficient(mu);
            if (!m.is_zero())
                terms.push_back(json{{"weight", mu.to_string()}, {"mult", m.to_string()}});
        }
        json j{{"algebra", cfg.algebra}, {"highest", w.to_string()}, {"multiplicities", terms}};
        out << j.dump(1) << "\n";
        return kExitOk;
    }
    bool first = true;
    for (const Weight& mu : session->weights_below(w)) {
        BigInt m = chi.mult.coefficient(mu);
        if (m.is_zero()) continue;
        if (cfg.format == OutputFormat::mathematica) {
            if (!first) out << " + ";
            out << m.to_string() << "*M[" << mu.to_string() << "]";
        } else {
            if (!first) out << "  ";
            out << "M(" << wkey(mu) << "):" << m.to_string();
        }
        first = false;
    }
    out << "\n";
    return kExitOk;
}

int cmd_to_z(const RunConfig& cfg, const std::string& wstr, bool character, std::ostream& out) {
    auto session = make_session(cfg);
    Weight w = Weight::parse(wstr, session->rank());
    const ZPolyQ& p = character ? session->char_to_z(w) : session->monomial_to_z(w);
    emit_poly(cfg, (character ? "char_z " : "monomial_z ") + w.to_string(), promote(p), out);
    return kExitOk;
}

int cmd_operator(const RunConfig& cfg, const std::string& part, std::ostream& out) {
    auto session = make_session(cfg);
    const CSOperator& op = session->cs_operator();
    const int r = op.rank;
    Style st = style_of(cfg);
    if (cfg.format == OutputFormat::json) {
        json j{{"algebra", cfg.algebra}};
        if (part.empty() || part == "a") {
            json a = json::array();
            for (int i = 0; i < r; ++i)
                for (int k = i; k < r; ++k)
                    a.push_back(json{{"j", i + 1}, {"k", k + 1},
                                     {"value", poly_json(promote(op.a_at(i, k)))}});
            j["a"] = a;
        }
        auto bpart = [&](const std::vector<ZPolyQ>& b) {
            json arr = json::array();
            for (int i = 0; i < r; ++i)
                arr.push_back(json{{"j", i + 1}, {"value", poly_json(promote(b[static_cast<std::size_t>(i)]))}});
            return arr;
        };
        if (part.empty() || part == "b0") j["b0"] = bpart(op.b0);
        if (part.empty() || part == "b1") j["b1"] = bpart(op.b1);
        out << j.dump(1) << "\n";
        return kExitOk;
    }
    if (part.empty() || part == "a") {
        for (int i = 0; i < r; ++i)
            for (int k = i; k < r; ++k)
                out << "a[" << i + 1 << "][" << k + 1 << "] = " << op.a_at(i, k).to_string(st) << "\n";
    }
    if (part == "b0") {
        for (int i = 0; i < r; ++i) out << "b0[" << i + 1 << "] = " << op.b0[static_cast<std::size_t>(i)].to_string(st) << "\n";
    } else if (part == "b1") {
        for (int i = 0; i < r; ++i) out << "b1[" << i + 1 << "] = " << op.b1[static_cast<std::size_t>(i)].to_string(st) << "\n";
    } else if (part.empty()) {
        // combined coupling-split display
        const KappaRational kappa = KappaRational::variable();
        for (int i = 0; i < r; ++i) {
            ZPolyK combined = promote(op.b0[static_cast<std::size_t>(i)]) +
                              promote(op.b1[static_cast<std::size_t>(i)]).scaled(kappa);
            out << "b[" << i + 1 << "] = " << combined.to_string(st) << "\n";
        }
    }
    return kExitOk;
}

int cmd_jacobi(const RunConfig& cfg, const std::string& wstr, const std::string& kappa,
               std::ostream& out) {
    auto session = make_session(cfg);
    Weight w = Weight::parse(wstr, session->rank());
    const JacobiPolynomial& p = session->jacobi(w);
    if (kappa.empty()) {
        emit_poly(cfg, "jacobi " + w.to_string(), p.zform, out);
    } else {
        ZPolyQ sp = specialize(p, parse_kappa(kappa));
        emit_poly(cfg, "jacobi " + w.to_string() + " at " + kappa, promote(sp), out);
    }
    return kExitOk;
}

int cmd_cg(const RunConfig& cfg, const std::string& astr, const std::string& bstr,
           const std::string& kappa, bool classical, std::ostream& out) {
    auto session = make_session(cfg);
    Weight a = Weight::parse(astr, session->rank());
    Weight b = Weight::parse(bstr, session->rank());
    Style st = style_of(cfg);

    if (classical) {
        const DecompositionSeries& series = session->clebsch_gordan(a, b);
        if (cfg.format == OutputFormat::json) {
            json terms = json::array();
            for (const auto& [w, n] : series.terms)
                terms.push_back(json{{"weight", w.to_string()}, {"mult", n.to_string()}});
            out << json{{"algebra", cfg.algebra}, {"a", a.to_string()}, {"b", b.to_string()},
                        {"series", terms}}
                       .dump(1)
                << "\n";
        } else {
            for (const Weight& nu : session->weights_below(a + b)) {
                auto it = series.terms.find(nu);
                if (it == series.terms.end()) continue;
                out << "chi(" << wkey(nu) << "): " << it->second.to_string() << "\n";
            }
        }
        return kExitOk;
    }

    GeneralizedCGSeries series = session->generalized_cg(a, b);
    std::optional<BigRational> at;
    if (!kappa.empty()) at = parse_kappa(kappa);
    if (cfg.format == OutputFormat::json) {
        json terms = json::array();
        for (const auto& [w, c] : series.terms) {
            json t{{"weight", w.to_string()}};
            if (at) t["coefficient"] = c.evaluate(*at).to_string();
            else t["coefficient"] = cache_detail::kr_to_json(c);
            terms.push_back(std::move(t));
        }
        out << json{{"algebra", cfg.algebra}, {"a", a.to_string()}, {"b", b.to_string()},
                    {"series", terms}}
                   .dump(1)
            << "\n";
        return kExitOk;
    }
    for (const Weight& nu : session->weights_below(a + b)) {
        auto it = series.terms.find(nu);
        if (it == series.terms.end()) continue;
        out << "P(" << wkey(nu) << "): ";
        if (at) out << it->second.evaluate(*at).to_string();
        else out << it->second.to_string("k", st);
        out << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    // the reference tables are E7 data; the low-rank parts build their own sessions
    RunConfig e7 = cfg;
    e7.algebra = "E7";
    auto session = make_session(e7);
    std::vector<verify::CriterionResult> results =
        verify::run_all(*session, out, cfg.verbose ? &out : nullptr);
    for (const auto& r : results)
        if (!r.pass) return kExitVerify;
    out << "all criteria passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("CSTRIG_CACHE_DIR")) cfg.cache_dir = env;

    CLI::App app{"exact Calogero-Sutherland eigenfunctions for simply-laced root systems"};
    app.require_subcommand(1);
    app.add_option("-a,--algebra", cfg.algebra, "algebra, e.g. E7, A2, D4 (default E7)");
    std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text},
                                                {"json", OutputFormat::json},
                                                {"mathematica", OutputFormat::mathematica}};
    app.add_option("-f,--format", cfg.format, "output format: text | json | mathematica")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--cache-dir", cfg.cache_dir,
                   "persistent cache directory (env CSTRIG_CACHE_DIR; empty disables)");
    app.add_option("--threads", cfg.threads, "thread budget (>= 1)")->check(CLI::PositiveNumber);
    app.add_flag("-v,--verbose", cfg.verbose, "trace individual checks in verify-paper");

    std::string weight_arg, weight_b_arg, kappa_arg, part_arg;
    bool elements = false, classical = false;

    CLI::App* algebra_cmd = app.add_subcommand("algebra", "rank, root count, fundamental dimensions");
    algebra_cmd->require_subcommand(1);
    algebra_cmd->add_subcommand("info", "print algebra summary");

    CLI::App* orbit = app.add_subcommand("orbit", "Weyl orbit of a dominant weight");
    orbit->add_option("weight", weight_arg, "comma-separated Dynkin labels")->required();
    orbit->add_flag("--elements", elements, "list the orbit elements");

    CLI::App* mult = app.add_subcommand("mult", "dominant weight multiplicities of an irrep");
    mult->add_option("weight", weight_arg)->required();

    CLI::App* m2z = app.add_subcommand("m2z", "orbit sum in z coordinates");
    m2z->add_option("weight", weight_arg)->required();

    CLI::App* char2z = app.add_subcommand("char2z", "character in z coordinates");
    char2z->add_option("weight", weight_arg)->required();

    CLI::App* op = app.add_subcommand("operator", "second-order operator coefficient tables");
    op->add_option("--part", part_arg, "a | b0 | b1 (default: all)")
        ->check(CLI::IsMember({"a", "b0", "b1"}));

    CLI::App* jac = app.add_subcommand("jacobi", "eigenpolynomial for a dominant weight");
    jac->add_option("weight", weight_arg)->required();
    jac->add_option("--kappa", kappa_arg, "specialize the coupling to p or p/q");

    CLI::App* cg = app.add_subcommand("cg", "product decomposition series");
    cg->add_option("weight_a", weight_arg)->required();
    cg->add_option("weight_b", weight_b_arg)->required();
    cg->add_option("--kappa", kappa_arg, "evaluate coefficients at p or p/q");
    cg->add_flag("--classical", classical, "integer character series instead");

    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (algebra_cmd->parsed()) return cmd_algebra_info(cfg, std::cout);
        if (orbit->parsed()) return cmd_orbit(cfg, weight_arg, elements, std::cout);
        if (mult->parsed()) return cmd_mult(cfg, weight_arg, std::cout);
        if (m2z->parsed()) return cmd_to_z(cfg, weight_arg, false, std::cout);
        if (char2z->parsed()) return cmd_to_z(cfg, weight_arg, true, std::cout);
        if (op->parsed()) return cmd_operator(cfg, part_arg, std::cout);
        if (jac->parsed()) return cmd_jacobi(cfg, weight_arg, kappa_arg, std::cout);
        if (cg->parsed()) return cmd_cg(cfg, weight_arg, weight_b_arg, kappa_arg, classical, std::cout);
        if (verify_cmd->parsed()) return cmd_verify(cfg, std::cout);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
