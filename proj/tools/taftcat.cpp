// Command-line interface: theorem verification pipelines, module checks,
// functor computations, and the module/morphism file formats.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "taftcat/functors.hpp"
#include "taftcat/k0.hpp"
#include "taftcat/module_io.hpp"
#include "taftcat/theorem.hpp"

namespace {

constexpr int kOk = 0;           // all requested checks pass
constexpr int kCheckFailed = 1;  // a mathematical check failed
constexpr int kInputError = 2;   // unusable input

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw taftcat::ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw taftcat::ParseError("cannot write file: " + path);
    out << content;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_verify_theorem(long n, long m, const std::string& report_path) {
    taftcat::TheoremReport r;
    try {
        r = taftcat::verify_cyclotomic_theorem(n, m);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    std::cout << r.to_text();
    if (!report_path.empty())
        write_file(report_path, r.to_json().dump(2) + "\n");
    return r.all() ? kOk : kCheckFailed;
}

int run_module(const std::string& action, const std::string& in_path) {
    taftcat::GradedModule m = taftcat::parse_module(read_file(in_path));
    const taftcat::GradingScheme& s = m.scheme();

    if (action == "check") {
        std::cout << "scheme: " << s.to_string() << "\n"
                  << "total dim: " << m.total_dim() << "\n"
                  << "components: " << m.dims().size() << "\n"
                  << "valid: yes\n";
        return kOk;
    }
    if (action == "decompose") {
        auto d1 = taftcat::decompose_intervals(taftcat::restrict_p0(m));
        auto d0 = taftcat::decompose_intervals(taftcat::restrict_p1(m));
        std::cout << "d1 intervals: " << d1.to_string() << "\n"
                  << "d0 intervals: " << d0.to_string() << "\n";
        return kOk;
    }
    if (action == "class") {
        if (s.kind != taftcat::SchemeKind::Z2) {
            std::cerr << "error: cyclic grading carries no Z x Z graded class\n";
            return kInputError;
        }
        taftcat::K0Class c = taftcat::class_of(m);
        taftcat::QuotientImage img = taftcat::quotient_class(c);
        std::cout << "class: " << c.to_string() << "\n"
                  << "normal form in Z[x,y]/([" << s.n << "]_x,[" << s.m
                  << "]_y): " << img.xy.to_string() << "\n"
                  << "image in Z[q]/Phi_" << s.nm() << ": " << img.cyclo.to_string() << "\n";
        return kOk;
    }
    if (action == "kernels") {
        bool k0 = taftcat::in_kernel_p0(m);
        bool k1 = taftcat::in_kernel_p1(m);
        bool proj = taftcat::is_projective(m);
        std::cout << "ker P0: " << yesno(k0) << "\n"
                  << "ker P1: " << yesno(k1) << "\n"
                  << "projective: " << yesno(proj) << "\n";
        return kOk;
    }
    std::cerr << "error: unknown module action '" << action << "'\n";
    return kInputError;
}

int run_r0(const std::string& in_path, const std::string& out_path) {
    taftcat::GradedModule x = taftcat::parse_module(read_file(in_path));
    taftcat::GradedModule r = taftcat::r0(taftcat::restrict_p0(x));
    bool valid = r.validate().empty();
    write_file(out_path, taftcat::serialize_module(r));
    std::cout << "input dim: " << x.total_dim() << "\n"
              << "output dim: " << r.total_dim() << "\n"
              << "valid: " << yesno(valid) << "\n";
    return valid ? kOk : kCheckFailed;
}

int run_eta(const std::string& in_path) {
    taftcat::GradedModule x = taftcat::parse_module(read_file(in_path));
    taftcat::ModuleMorphism e = taftcat::eta(x);
    bool injective = true;
    for (const auto& [g, d] : x.dims())
        injective = injective && taftcat::rank(e.block(g)) == static_cast<size_t>(d);
    bool commutes = e.validate().empty();
    std::cout << "injective: " << yesno(injective) << "\n"
              << "commutes: " << yesno(commutes) << "\n";
    return injective && commutes ? kOk : kCheckFailed;
}

int run_factorize(const std::string& f_path) {
    taftcat::ModuleMorphism f = taftcat::parse_morphism(read_file(f_path));
    if (f.source().scheme().kind != taftcat::SchemeKind::Z2) {
        std::cerr << "error: factor_through_eta requires the homological bigrading\n";
        return kInputError;
    }
    if (!taftcat::in_kernel_p1(f.target())) {
        std::cerr << "error: factor_through_eta precondition failed: target is not in ker P1\n";
        return kInputError;
    }
    taftcat::ModuleMorphism g = taftcat::factor_through_eta(f);
    bool exact = taftcat::compose(g, taftcat::eta(f.source())) == f && g.validate().empty();
    std::cout << "g found, g after eta = f: " << (exact ? "exact" : "MISMATCH") << "\n";
    return exact ? kOk : kCheckFailed;
}

int run_counterexample(long n, long m, const std::string& out_path) {
    if (n != 3 || m != 5) {
        std::cerr << "error: only the (3,5) instance is available\n";
        return kInputError;
    }
    taftcat::GradedModule c = taftcat::counterexample_module(n, m);
    write_file(out_path, taftcat::serialize_module(c));
    bool valid = c.validate().empty();
    bool k0 = taftcat::in_kernel_p0(c);
    bool k1 = taftcat::in_kernel_p1(c);
    bool proj = taftcat::is_projective(c);
    std::cout << "valid: " << yesno(valid) << "\n"
              << "ker P0: " << yesno(k0) << "\n"
              << "ker P1: " << yesno(k1) << "\n"
              << "projective: " << yesno(proj) << "\n";
    return (valid && k0 && k1 && !proj) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "taftcat: exact computations in stable categories of bigraded Taft algebra modules"};
    app.require_subcommand(1);

    long n = 0, m = 0;
    std::string report_path, in_path, out_path, f_path, action;

    CLI::App* verify = app.add_subcommand("verify-theorem",
                                          "run the four-step Grothendieck ring verification");
    verify->add_option("--n", n, "first odd prime")->required();
    verify->add_option("--m", m, "second odd prime")->required();
    verify->add_option("--report", report_path, "write a JSON report to this path");

    CLI::App* module_cmd = app.add_subcommand("module", "inspect a module file");
    module_cmd->add_option("action", action, "one of check, decompose, class, kernels")
        ->required()
        ->check(CLI::IsMember({"check", "decompose", "class", "kernels"}));
    module_cmd->add_option("--in", in_path, "module file")->required();

    CLI::App* r0_cmd = app.add_subcommand("r0", "extend the d0-forgetful restriction");
    r0_cmd->add_option("--in", in_path, "module file")->required();
    r0_cmd->add_option("--out", out_path, "output module file")->required();

    CLI::App* eta_cmd = app.add_subcommand("eta", "check the unit X -> R0 P0 X");
    eta_cmd->add_option("--in", in_path, "module file")->required();

    CLI::App* fac_cmd = app.add_subcommand("factorize", "factor a morphism through the unit");
    fac_cmd->add_option("--f", f_path, "morphism file")->required();

    CLI::App* ce_cmd = app.add_subcommand("counterexample",
                                          "emit the 15-dimensional cyclic module that lies in "
                                          "both kernels without being projective");
    ce_cmd->add_option("--n", n, "first index (must be 3)")->required();
    ce_cmd->add_option("--m", m, "second index (must be 5)")->required();
    ce_cmd->add_option("--out", out_path, "output module file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (verify->parsed())
            return run_verify_theorem(n, m, report_path);
        if (module_cmd->parsed())
            return run_module(action, in_path);
        if (r0_cmd->parsed())
            return run_r0(in_path, out_path);
        if (eta_cmd->parsed())
            return run_eta(in_path);
        if (fac_cmd->parsed())
            return run_factorize(f_path);
        if (ce_cmd->parsed())
            return run_counterexample(n, m, out_path);
    } catch (const taftcat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kInputError;
}
