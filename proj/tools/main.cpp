// Command-line front end: parses expressions against one session
// (field + generator alphabet + ring mode) and binds every library
// operation to a subcommand.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank2/cancellation.hpp"
#include "rank2/centralizer.hpp"
#include "rank2/dependence.hpp"
#include "rank2/errors.hpp"
#include "rank2/textio.hpp"

namespace {

using nlohmann::json;
using namespace rank2;

struct Options {
    std::string gens = "x,y";
    std::string field = "q";
    std::string ring = "free";
    bool as_json = false;
};

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Session make_session(const Options& o) {
    FieldSpec field = FieldSpec::rationals();
    if (o.field != "q") {
        if (o.field.rfind("gf:", 0) != 0)
            throw ParseError(1, 1, "--field expects q or gf:P");
        field = FieldSpec::prime_field(std::stoull(o.field.substr(3)));
    }
    RingMode mode;
    if (o.ring == "free")
        mode = RingMode::Free;
    else if (o.ring == "comm")
        mode = RingMode::Commutative;
    else
        throw ParseError(1, 1, "--ring expects free or comm");
    return Session{field, Alphabet(split_names(o.gens)), mode};
}

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError(1, 1, "expected two comma-separated values");
    return {std::stoull(s.substr(0, comma)), std::stoull(s.substr(comma + 1))};
}

std::string coeff_list_text(const Decomposition& d) {
    std::string out = "[";
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
        if (i) out += ", ";
        out += d.coefficients[i].to_string();
    }
    return out + "]";
}

json coeff_list_json(const Decomposition& d) {
    json out = json::array();
    for (const Scalar& c : d.coefficients) out.push_back(c.to_string());
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Cli {
    Session session;
    bool as_json;

    bool free_mode() const { return session.mode == RingMode::Free; }
    NcPoly nc(const std::string& src) const {
        return parse_ncpoly(src, session.field, session.alphabet);
    }
    CPoly cp(const std::string& src) const {
        return parse_cpoly(src, session.field, session.alphabet);
    }

    void expand(const std::string& expr) const {
        if (free_mode()) {
            NcPoly f = nc(expr);
            as_json ? emit(poly_to_json(f)) : void(std::cout << print_poly(f) << "\n");
        } else {
            CPoly f = cp(expr);
            as_json ? emit(poly_to_json(f)) : void(std::cout << print_poly(f) << "\n");
        }
    }

    void commutator_cmd(const std::string& fs, const std::string& gs) const {
        if (!free_mode()) {
            // commutators vanish identically in the commutative ring
            CPoly c = cp(fs) * cp(gs) - cp(gs) * cp(fs);
            as_json ? emit(poly_to_json(c)) : void(std::cout << print_poly(c) << "\n");
            return;
        }
        NcPoly c = commutator(nc(fs), nc(gs));
        as_json ? emit(poly_to_json(c)) : void(std::cout << print_poly(c) << "\n");
    }

    void dep(const std::string& fs, const std::string& gs) const {
        if (free_mode()) {
            FreeDependenceVerdict v = dep_free(nc(fs), nc(gs));
            if (as_json) {
                emit(json{{"dependent", v.dependent}, {"witness", {poly_to_json(v.witness)}}});
            } else {
                std::cout << (v.dependent ? "dependent" : "independent") << "\n";
                std::cout << "witness: " << print_poly(v.witness) << "\n";
            }
        } else {
            CommDependenceVerdict v = dep_comm(cp(fs), cp(gs));
            if (as_json) {
                json ws = json::array();
                for (const CPoly& w : v.witnesses) ws.push_back(poly_to_json(w));
                emit(json{{"dependent", v.dependent}, {"witness", std::move(ws)}});
            } else {
                std::cout << (v.dependent ? "dependent" : "independent") << "\n";
                std::size_t k = 0;
                const std::size_t n = session.alphabet.size();
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        std::cout << "witness[" << i + 1 << "," << j + 1
                                  << "]: " << print_poly(v.witnesses[k++]) << "\n";
            }
        }
    }

    void jacobian(const std::string& fs, const std::string& gs, const std::string& pair) const {
        if (free_mode())
            throw ParseError(1, 1, "jacobian requires --ring comm");
        auto [i, j] = parse_index_pair(pair);
        if (i == 0 || j == 0) throw BadIndexPair("--pair indices are 1-based");
        CPoly det = jacobian_det(cp(fs), cp(gs), i - 1, j - 1);
        as_json ? emit(poly_to_json(det)) : void(std::cout << print_poly(det) << "\n");
    }

    void root(const std::string& fs) const {
        if (free_mode()) {
            FreeRootResult r = centralizer_root_free(nc(fs));
            print_root(poly_to_json(r.u), print_poly(r.u), r.kernel_dimension);
        } else {
            CommRootResult r = centralizer_root_comm(cp(fs));
            print_root(poly_to_json(r.u), print_poly(r.u), r.kernel_dimension);
        }
    }

    void print_root(json uj, const std::string& ut, std::size_t dim) const {
        if (as_json) {
            emit(json{{"u", std::move(uj)},
                      {"kernel_dimension", dim},
                      {"normalization",
                       {{"monic_deglex", true}, {"zero_constant_term", true}}}});
        } else {
            std::cout << "u = " << ut << "\n";
            std::cout << "kernel_dimension = " << dim << "\n";
        }
    }

    void decompose_cmd(const std::string& fs, const std::string& us) const {
        std::optional<Decomposition> d;
        if (free_mode())
            d = decompose(nc(fs), nc(us));
        else
            d = decompose(cp(fs), cp(us));
        if (as_json) {
            emit(json{{"coefficients", d ? coeff_list_json(*d) : json(nullptr)}});
        } else if (d) {
            std::cout << "coefficients = " << coeff_list_text(*d) << "\n";
        } else {
            std::cout << "not in K[u]\n";
        }
    }

    void annihilator(const std::string& fs, const std::string& gs,
                     const std::string& bidegree) const {
        auto [a, b] = parse_index_pair(bidegree);
        std::optional<Annihilator> ann;
        if (free_mode())
            ann = annihilator_oracle(nc(fs), nc(gs), a, b);
        else
            ann = annihilator_oracle(cp(fs), cp(gs), a, b);
        if (as_json) {
            emit(json{{"annihilator", ann ? poly_to_json(ann->p) : json(nullptr)},
                      {"bidegree", {a, b}}});
        } else if (ann) {
            std::cout << "P = " << print_poly(ann->p) << "\n";
        } else {
            std::cout << "no annihilator found at bidegree (" << a << "," << b << ")\n";
        }
    }

    void cancel(const std::string& vs, const std::string& ws, const std::string& zname) const {
        std::size_t z = session.alphabet.require_index(zname);
        if (free_mode()) {
            FreeCancellationResult r = cancel_extract_free(nc(vs), nc(ws), z);
            print_cancel(poly_to_json(r.u), poly_to_json(r.u0), poly_to_json(r.u1),
                         print_poly(r.u), print_poly(r.u0), print_poly(r.u1), r.h_v, r.h_w);
        } else {
            CommCancellationResult r = cancel_extract_comm(cp(vs), cp(ws), z);
            print_cancel(poly_to_json(r.u), poly_to_json(r.u0), poly_to_json(r.u1),
                         print_poly(r.u), print_poly(r.u0), print_poly(r.u1), r.h_v, r.h_w);
        }
    }

    void print_cancel(json uj, json u0j, json u1j, const std::string& ut, const std::string& u0t,
                      const std::string& u1t, const Decomposition& hv,
                      const Decomposition& hw) const {
        if (as_json) {
            emit(json{{"u", std::move(uj)},
                      {"u0", std::move(u0j)},
                      {"u1", std::move(u1j)},
                      {"h_v", coeff_list_json(hv)},
                      {"h_w", coeff_list_json(hw)},
                      {"verified", true}});
        } else {
            std::cout << "u = " << ut << "\n";
            std::cout << "u0 = " << u0t << "\n";
            std::cout << "u1 = " << u1t << "\n";
            std::cout << "h_v = " << coeff_list_text(hv) << "\n";
            std::cout << "h_w = " << coeff_list_text(hw) << "\n";
            std::cout << "verified = true\n";
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact free-algebra and polynomial-ring calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--gens", opt.gens, "comma-separated generators; order fixes deglex");
    app.add_option("--field", opt.field, "coefficient field: q or gf:P");
    app.add_option("--ring", opt.ring, "free or comm");
    app.add_flag("--json", opt.as_json, "emit JSON");

    std::string arg1, arg2, pair_arg, bidegree_arg, z_arg;

    CLI::App* c_expand = app.add_subcommand("expand", "parse and print in canonical form");
    c_expand->add_option("EXPR", arg1)->required();

    CLI::App* c_comm = app.add_subcommand("commutator", "print [F,G] = F*G - G*F");
    c_comm->add_option("F", arg1)->required();
    c_comm->add_option("G", arg2)->required();

    CLI::App* c_dep = app.add_subcommand("dep", "algebraic-dependence verdict for F, G");
    c_dep->add_option("F", arg1)->required();
    c_dep->add_option("G", arg2)->required();

    CLI::App* c_jac = app.add_subcommand("jacobian", "Jacobian determinant of F, G");
    c_jac->add_option("F", arg1)->required();
    c_jac->add_option("G", arg2)->required();
    c_jac->add_option("--pair", pair_arg, "1-based variable pair i,j")->required();

    CLI::App* c_root = app.add_subcommand("root", "centralizer root u with C(F) = K[u]");
    c_root->add_option("F", arg1)->required();

    CLI::App* c_dec = app.add_subcommand("decompose", "coefficients of F as a polynomial in U");
    c_dec->add_option("F", arg1)->required();
    c_dec->add_option("U", arg2)->required();

    CLI::App* c_ann = app.add_subcommand("annihilator", "search for P with P(F,G) = 0");
    c_ann->add_option("F", arg1)->required();
    c_ann->add_option("G", arg2)->required();
    c_ann->add_option("--bidegree", bidegree_arg, "bounds a,b for s and t degrees")->required();

    CLI::App* c_cancel = app.add_subcommand("cancel", "extract the z-free generator from V, W");
    c_cancel->add_option("V", arg1)->required();
    c_cancel->add_option("W", arg2)->required();
    c_cancel->add_option("--z", z_arg, "designated generator name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Cli cli{make_session(opt), opt.as_json};
        if (c_expand->parsed()) cli.expand(arg1);
        if (c_comm->parsed()) cli.commutator_cmd(arg1, arg2);
        if (c_dep->parsed()) cli.dep(arg1, arg2);
        if (c_jac->parsed()) cli.jacobian(arg1, arg2, pair_arg);
        if (c_root->parsed()) cli.root(arg1);
        if (c_dec->parsed()) cli.decompose_cmd(arg1, arg2);
        if (c_ann->parsed()) cli.annihilator(arg1, arg2, bidegree_arg);
        if (c_cancel->parsed()) cli.cancel(arg1, arg2, z_arg);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorClass::Internal);
    }
}
