#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "finegrad/cliffordlab.hpp"
#include "finegrad/scalar.hpp"

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

int emit(const finegrad::cli::Report& r, const std::string& format, const std::string& out) {
    std::string body = format == "json" ? r.json().dump(2) + "\n" : r.text();
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out);
        if (!(f << body)) {
            std::cerr << "finegrad: cannot write " << out << "\n";
            return kIo;
        }
    }
    return r.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of fine gradings on D(2,1;alpha), G(3) and F(4)"};
    app.set_version_flag("--version", finegrad::cli::version());
    app.require_subcommand(1);

    std::string format = "text", out, model, target, config;
    std::optional<std::string> alpha;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "write the report to this file");
    };

    auto* build = app.add_subcommand("build", "serialize an algebra (k10, g3, f4, d21a)");
    build->add_option("target", target)->required();
    build->add_option("--model", model, "F(4) model: cayley, tkk or quaternion");
    build->add_option("--alpha", alpha, "scalar literal for d21a");
    build->add_option("--out", out, "output file for the serialized algebra (default stdout)");
    build->add_option("--format", format, "report format on stderr")->check(CLI::IsMember({"text", "json"}));

    auto* thm = app.add_subcommand("theorem-check", "verify the grading catalog and supporting checks (f4, g3, d21a)");
    thm->add_option("target", target)->required();
    thm->add_option("--alpha", alpha, "scalar literal for d21a, default symbolic");
    add_common(thm);

    auto* cls = app.add_subcommand("clifford-class", "classify Cl0(U,q) for a graded quadratic space config");
    cls->add_option("config", config)->required();
    add_common(cls);

    auto* rep = app.add_subcommand("grading-report", "list components of every catalog grading (k10, g3, f4, d21a)");
    rep->add_option("target", target)->required();
    rep->add_option("--alpha", alpha, "scalar literal for d21a");
    add_common(rep);

    CLI11_PARSE(app, argc, argv);

    using namespace finegrad;
    try {
        if (*build) {
            auto b = cli::build(target, model, alpha);
            if (out.empty()) {
                std::cout << b.serialized;
            } else {
                std::ofstream f(out);
                if (!(f << b.serialized)) {
                    std::cerr << "finegrad: cannot write " << out << "\n";
                    return kIo;
                }
            }
            std::cerr << (format == "json" ? b.report.json().dump(2) + "\n" : b.report.text());
            return b.report.all_pass() ? kOk : kFail;
        }
        if (*thm) return emit(cli::theorem_check(target, alpha), format, out);
        if (*cls) return emit(cli::clifford_class(config), format, out);
        if (*rep) return emit(cli::grading_report(target, alpha), format, out);
    } catch (const cli::UsageError& e) {
        std::cerr << "finegrad: usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "finegrad: parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CliffordError& e) {
        std::cerr << "finegrad: " << e.what() << "\n";
        return kUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "finegrad: I/O error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
