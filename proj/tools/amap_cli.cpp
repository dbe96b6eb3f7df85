// amap: command-line front end over the C API.
//
// Exit codes: 0 success, 1 verification or check failed, 2 bad input
// (parse error, invalid value, size limit), 3 internal error.

#include "amap/amap.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int exit_code(amap_status s)
{
    switch (s) {
    case AMAP_OK: return 0;
    case AMAP_ERR_INTERNAL: return 3;
    default: return 2;
    }
}

int fail(amap_status s)
{
    std::cerr << "error (" << amap_status_name(s) << "): " << amap_last_error() << "\n";
    return exit_code(s);
}

bool read_file(std::string const & path, std::string & out)
{
    std::ifstream in(path);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

std::vector<long long> split_ints(std::string const & s)
{
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (tok.find_first_not_of(' ', used) != std::string::npos)
            throw std::invalid_argument(tok);
        out.push_back(v);
    }
    return out;
}

struct InstanceArgs
{
    std::string domain = "Z";
    std::string a, n, n_gens, instance_file;
};

void add_instance_options(CLI::App * cmd, InstanceArgs & ia)
{
    cmd->add_option("--domain", ia.domain, "Z | poly:p[:k] | quad:d")->capture_default_str();
    cmd->add_option("--a", ia.a, "multiplier: integer, coefficient list, or \"x,y\"");
    cmd->add_option("--n", ia.n, "modulus: integer or coefficient list (constant first)");
    cmd->add_option("--n-gens", ia.n_gens, "quadratic ideal generators \"x,y;x,y\"");
    cmd->add_option("--instance", ia.instance_file, "JSON instance file");
}

amap_status load_instance(InstanceArgs const & ia, amap_instance ** inst)
{
    if (!ia.instance_file.empty()) {
        std::string text;
        if (!read_file(ia.instance_file, text)) {
            std::cerr << "error: cannot read " << ia.instance_file << "\n";
            return AMAP_ERR_PARSE;
        }
        return amap_instance_from_json(text.c_str(), inst);
    }
    return amap_instance_from_args(ia.domain.c_str(), ia.a.c_str(), ia.n.c_str(), ia.n_gens.c_str(), inst);
}

// r is taken by reference: it is filled by the call producing s.
int emit(amap_status s, amap_report * const & r, bool dot_only, std::string const & dot_file)
{
    if (s != AMAP_OK)
        return fail(s);
    int code = amap_report_ok(r) ? 0 : 1;
    if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        if (!out) {
            std::cerr << "error: cannot write " << dot_file << "\n";
            code = 2;
        } else {
            out << amap_report_dot(r);
        }
    }
    if (dot_only)
        std::cout << amap_report_dot(r);
    else
        std::cout << amap_report_json(r) << "\n";
    amap_report_free(r);
    return code;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Functional graphs of multiplication maps on quotient rings"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t max_nodes = AMAP_DEFAULT_MAX_NODES;
    app.add_option("--max-nodes", max_nodes, "cap on enumerated graph size")->capture_default_str();

    InstanceArgs pa, ba, va;
    bool dot = false, corrupt = false;
    std::string dot_file;

    auto * predict = app.add_subcommand("predict", "predicted graph from the factorization of n");
    add_instance_options(predict, pa);
    auto * brute = app.add_subcommand("brute", "brute-force graph of x -> a*x");
    add_instance_options(brute, ba);
    for (auto * c : {predict, brute}) {
        c->add_flag("--dot", dot, "print DOT instead of JSON");
        c->add_option("--dot-file", dot_file, "also write DOT to this file");
    }
    auto * verify = app.add_subcommand("verify", "compare prediction with brute force");
    add_instance_options(verify, va);
    verify->add_flag("--corrupt", corrupt, "perturb the prediction (negative control)");

    std::uint64_t q = 0, deg = 0, ra = 0;
    auto * redei = app.add_subcommand("redei", "Redei function R_n(x, a) over F_q");
    redei->add_option("--q", q, "odd prime power")->required();
    redei->add_option("--n", deg, "degree")->required();
    redei->add_option("--a", ra, "parameter in F_q^*")->required();

    auto * cheb = app.add_subcommand("chebyshev", "generic trees of Chebyshev T_n over F_q");
    cheb->add_option("--q", q, "odd prime power")->required();
    cheb->add_option("--n", deg, "degree")->required();

    std::string fcoeffs;
    auto * lin = app.add_subcommand("linpoly", "linearized polynomial L_f over F_{q^n}");
    lin->add_option("--q", q, "prime power")->required();
    lin->add_option("--n", deg, "extension degree")->required();
    lin->add_option("--f", fcoeffs, "coefficients of f, constant first")->required();

    std::int64_t d = 0;
    std::string ea, epi, ec_file;
    unsigned en = 1;
    auto * ec = app.add_subcommand("ectrees", "generic trees of an elliptic-curve endomorphism map");
    ec->add_option("--d", d, "squarefree negative d of Q(sqrt(d))");
    ec->add_option("--a", ea, "endomorphism as \"x,y\"");
    ec->add_option("--pi", epi, "Frobenius as \"x,y\"");
    ec->add_option("--n", en, "extension degree")->capture_default_str();
    ec->add_option("--instance", ec_file, "JSON file {\"d\", \"a\", \"pi\", \"n\"}");

    std::string nu_text;
    auto * tree = app.add_subcommand("tree", "elementary tree of a nu-series");
    tree->add_option("nu", nu_text, "non-increasing list, e.g. 6,2")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        amap_report * r = nullptr;
        if (predict->parsed() || brute->parsed() || verify->parsed()) {
            auto const & ia = predict->parsed() ? pa : brute->parsed() ? ba : va;
            amap_instance * inst = nullptr;
            if (auto s = load_instance(ia, &inst); s != AMAP_OK)
                return fail(s);
            amap_status s;
            bool want_dot = dot || !dot_file.empty();
            if (predict->parsed())
                s = amap_predict(inst, max_nodes, want_dot, &r);
            else if (brute->parsed())
                s = amap_brute(inst, max_nodes, want_dot, &r);
            else
                s = amap_verify(inst, max_nodes, corrupt, &r);
            amap_instance_free(inst);
            return emit(s, r, dot, dot_file);
        }
        if (redei->parsed())
            return emit(amap_redei(q, deg, ra, max_nodes, &r), r, false, "");
        if (cheb->parsed())
            return emit(amap_chebyshev(q, deg, max_nodes, &r), r, false, "");
        if (lin->parsed()) {
            std::vector<int64_t> c;
            for (auto v : split_ints(fcoeffs))
                c.push_back(v);
            return emit(amap_linearized(q, deg, c.data(), c.size(), max_nodes, &r), r, false, "");
        }
        if (ec->parsed()) {
            std::vector<long long> av, pv;
            if (!ec_file.empty()) {
                std::string text;
                if (!read_file(ec_file, text)) {
                    std::cerr << "error: cannot read " << ec_file << "\n";
                    return 2;
                }
                auto j = nlohmann::json::parse(text);
                d = j.at("d").get<std::int64_t>();
                av = j.at("a").get<std::vector<long long>>();
                pv = j.at("pi").get<std::vector<long long>>();
                en = j.value("n", 1u);
            } else {
                av = split_ints(ea);
                pv = split_ints(epi);
            }
            if (av.size() != 2 || pv.size() != 2 || d == 0) {
                std::cerr << "error: ectrees needs --d, --a \"x,y\" and --pi \"x,y\"\n";
                return 2;
            }
            return emit(amap_ec_trees(d, av[0], av[1], pv[0], pv[1], en, &r), r, false, "");
        }
        if (tree->parsed()) {
            std::vector<std::uint64_t> nu;
            for (auto v : split_ints(nu_text)) {
                if (v < 0) {
                    std::cerr << "error: nu-series entries must be positive\n";
                    return 2;
                }
                nu.push_back(static_cast<std::uint64_t>(v));
            }
            return emit(amap_tree(nu.data(), nu.size(), &r), r, false, "");
        }
    } catch (nlohmann::json::exception const & e) {
        std::cerr << "error (parse error): " << e.what() << "\n";
        return 2;
    } catch (std::invalid_argument const & e) {
        std::cerr << "error (parse error): bad integer \"" << e.what() << "\"\n";
        return 2;
    } catch (std::out_of_range const &) {
        std::cerr << "error (parse error): integer out of range\n";
        return 2;
    }
    return 2;
}
