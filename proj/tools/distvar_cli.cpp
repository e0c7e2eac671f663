// distvar: command-line front end.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
// error, 3 numerical failure. Errors go to stderr as a JSON object.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "distvar/canonical.hpp"
#include "distvar/errors.hpp"
#include "distvar/io.hpp"
#include "distvar/polydisc.hpp"
#include "distvar/symm.hpp"

using namespace distvar;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kNumericalError = 3;

int report_error(std::string_view code, const std::string& message, int exit_code) {
    std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
    return exit_code;
}

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what);
        }
    }
    if (out.size() != count)
        throw Error(ErrorCode::InvalidInput,
                    std::string(what) + " needs " + std::to_string(count) + " comma-separated numbers");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + out_path);
    f << text;
}

int verdict_code(Verdict v) { return v == Verdict::Distinguished ? kOk : kNegative; }

// Accepts a colligation or a triple file.
RationalInnerFn load_inner(const json& j) {
    if (j.contains("dim_e")) return RationalInnerFn::create(io::colligation_from_json(j));
    return RationalInnerFn::from_triple(io::triple_from_json(j));
}

struct GridOpts {
    double radius = 0.95;
    std::size_t radii = 8;
    std::size_t angles = 24;
    double tol = 1e-8;
    double eps = kEpsTorus;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;

    void attach(CLI::App* app) {
        app->add_option("--grid-radius", radius, "radius of the fiber-parameter grid")
            ->check(CLI::Range(0.0, 1e6));
        app->add_option("--radii", radii, "number of concentric circles");
        app->add_option("--angles", angles, "points per circle")->check(CLI::PositiveNumber);
        app->add_option("--tol", tol, "joint triangularization tolerance")->check(CLI::PositiveNumber);
        app->add_option("--eps", eps, "torus band half-width")->check(CLI::NonNegativeNumber);
        app->add_option("--seed", seed, "random seed");
        app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        app->add_option("--out", out, "output path (default stdout)");
    }

    GridSpec grid() const {
        GridSpec g;
        g.radius = radius;
        g.radii = radii;
        g.angles = angles;
        return g;
    }

    SampleOptions options() const {
        SampleOptions o;
        o.tol = tol;
        o.eps_t = eps;
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinguished varieties from model triples"};
    app.require_subcommand(1);

    std::string file, file2;
    GridOpts g;

    auto* validate = app.add_subcommand("validate", "check triple, tuple or colligation invariants");
    validate->add_option("file", file)->required();
    double vtol = 1e-10;
    validate->add_option("--tol", vtol)->check(CLI::PositiveNumber);

    auto* sample_cmd = app.add_subcommand("sample", "sample W_{P,U} over a fiber grid");
    sample_cmd->add_option("file", file)->required();
    g.attach(sample_cmd);

    auto* member = app.add_subcommand("member", "membership of a point in W_{P,U}");
    member->add_option("file", file)->required();
    std::string point;
    double mtol = 1e-6;
    member->add_option("--point", point, "z1_re,z1_im,z2_re,z2_im")->required();
    member->add_option("--tol", mtol)->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "certificates and verdict");
    check->add_option("file", file)->required();
    std::uint64_t cseed = 0;
    check->add_option("--seed", cseed);

    auto* realize_cmd = app.add_subcommand("realize", "evaluate Psi_{P,U}");
    realize_cmd->add_option("file", file)->required();
    std::string at;
    realize_cmd->add_option("--at", at, "re,im")->required();

    auto* xi = app.add_subcommand("xi", "defining polynomial of W_Psi");
    xi->add_option("file", file)->required();
    double xtol = 1e-8;
    xi->add_option("--tol", xtol)->check(CLI::PositiveNumber);

    auto* canon = app.add_subcommand("canonical", "canonical model triple of a colligation");
    canon->add_option("file", file)->required();
    std::size_t nodes = 24;
    std::uint64_t nseed = 0;
    canon->add_option("--nodes", nodes)->check(CLI::PositiveNumber);
    canon->add_option("--seed", nseed);

    auto* equiv = app.add_subcommand("equiv", "unitary equivalence of two triples");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();
    double etol = 1e-8;
    std::uint64_t eseed = 0;
    equiv->add_option("--tol", etol)->check(CLI::PositiveNumber);
    equiv->add_option("--seed", eseed);

    auto* symm = app.add_subcommand("symm", "W_F over the symmetrized bidisc");
    symm->add_option("file", file)->required();
    SymmGrid sg;
    double seps = kEpsTorus;
    std::string sformat = "json", sout;
    symm->add_option("--radius", sg.radius, "radius of the p grid")->check(CLI::PositiveNumber);
    symm->add_option("--radii", sg.radii);
    symm->add_option("--angles", sg.angles)->check(CLI::PositiveNumber);
    symm->add_option("--eps", seps)->check(CLI::NonNegativeNumber);
    symm->add_option("--format", sformat)->check(CLI::IsMember({"json", "csv"}));
    symm->add_option("--out", sout);

    auto* poly = app.add_subcommand("poly", "pure model tuple certificates and fibers");
    poly->add_option("file", file)->required();
    GridOpts pg;
    pg.attach(poly);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("InvalidInput", e.what(), kInputError);
    }

    try {
        if (*validate) {
            const json j = io::read_json_file(file);
            ValidationReport r;
            if (j.contains("P_list")) r = validate_tuple(io::tuple_from_json(j), vtol);
            else if (j.contains("dim_e")) {
                const Colligation c = io::colligation_from_json(j);
                r.add("unitary", unitary_defect(c.assembled()), vtol);
            } else r = validate_triple(io::triple_from_json(j), vtol);
            std::cout << io::to_json(r).dump(2) << '\n';
            return r.ok ? kOk : kNegative;
        }
        if (*sample_cmd) {
            const ModelTriple t = io::triple_from_json(io::read_json_file(file));
            const VarietySample s = sample(t, g.grid(), g.seed, g.options());
            emit(g.format == "csv" ? io::points_to_csv(s.points) : io::to_json(s).dump(2) + "\n", g.out);
            return s.verdict == Verdict::NotDistinguished ? kNegative : kOk;
        }
        if (*member) {
            const ModelTriple t = io::triple_from_json(io::read_json_file(file));
            const auto v = parse_numbers(point, 4, "--point");
            const Membership m = is_member(t, {v[0], v[1]}, {v[2], v[3]}, mtol);
            std::cout << json{{"member", m.member}, {"defect", m.defect}}.dump(2) << '\n';
            return m.member ? kOk : kNegative;
        }
        if (*check) {
            const ModelTriple t = io::triple_from_json(io::read_json_file(file));
            const ValidationReport r = validate_triple(t, 1e-8);
            if (!r.ok) {
                std::cout << io::to_json(r).dump(2) << '\n';
                return report_error("InvalidInput", "not a model triple", kInputError);
            }
            const CertificateBundle b = certify(t, cseed);
            std::cout << io::to_json(b).dump(2) << '\n';
            return verdict_code(b.verdict);
        }
        if (*realize_cmd) {
            const ModelTriple t = io::triple_from_json(io::read_json_file(file));
            const auto v = parse_numbers(at, 2, "--at");
            std::cout << json{{"z", io::to_json(cplx(v[0], v[1]))},
                              {"psi", io::to_json(realize(t, {v[0], v[1]}))}}.dump(2)
                      << '\n';
            return kOk;
        }
        if (*xi) {
            const RationalInnerFn psi = load_inner(io::read_json_file(file));
            std::cout << io::to_json(xi_extract(psi, xtol)).dump(2) << '\n';
            return kOk;
        }
        if (*canon) {
            const RationalInnerFn psi = load_inner(io::read_json_file(file));
            const CanonicalModel m = canonical_triple(psi, nodes, nseed);
            json out = io::to_json(m.triple);
            out["holdout_residual"] = m.holdout_residual;
            out["rank"] = m.frame.rank;
            std::cout << out.dump(2) << '\n';
            return m.holdout_residual <= 1e-6 ? kOk : kNumericalError;
        }
        if (*equiv) {
            const ModelTriple a = io::triple_from_json(io::read_json_file(file));
            const ModelTriple b = io::triple_from_json(io::read_json_file(file2));
            const EquivalenceResult r = unitary_equivalence(a, b, etol, eseed);
            json out{{"verdict", std::string(to_string(r.verdict))}, {"kernel_dim", r.kernel_dim}};
            if (r.witness) out["witness"] = io::to_json(*r.witness);
            std::cout << out.dump(2) << '\n';
            return r.verdict == Equivalence::Equivalent ? kOk : kNegative;
        }
        if (*symm) {
            const ModelTriple t = io::triple_from_json(io::read_json_file(file));
            const SymmSample s = sample_symm(t, sg, seps);
            if (sformat == "csv") {
                emit(io::symm_to_csv(s.points), sout);
            } else {
                const NuCertificate nc = nu_certificate(t);
                json out = io::to_json(s);
                out["nu"] = nc.nu;
                out["nu_strict"] = nc.strict;
                emit(out.dump(2) + "\n", sout);
            }
            return verdict_code(s.verdict);
        }
        if (*poly) {
            const ModelTuple t = io::tuple_from_json(io::read_json_file(file));
            const ValidationReport r = validate_tuple(t, 1e-8);
            if (!r.ok) {
                std::cout << io::to_json(r).dump(2) << '\n';
                return report_error("InvalidInput", "not a pure model tuple", kInputError);
            }
            const TupleCertificate c = certify_poly(t, pg.grid(), pg.seed, pg.options());
            emit(pg.format == "csv" ? io::points_to_csv(c.points) : io::to_json(c).dump(2) + "\n",
                 pg.out);
            return verdict_code(c.verdict);
        }
    } catch (const Error& e) {
        return report_error(to_string(e.code()), e.what(),
                            is_input_error(e.code()) ? kInputError : kNumericalError);
    } catch (const std::exception& e) {
        return report_error("InvalidInput", e.what(), kInputError);
    }
    return kOk;
}
