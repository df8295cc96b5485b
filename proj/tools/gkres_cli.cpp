// gkres: command-line front-end for residue sums over sparse Laurent systems.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <gkres/coefficients.hpp>
#include <gkres/engine.hpp>
#include <gkres/errors.hpp>
#include <gkres/expansion.hpp>
#include <gkres/geometry.hpp>
#include <gkres/linalg.hpp>
#include <gkres/oracle.hpp>
#include <gkres/system_file.hpp>

namespace
{

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_precondition = 1;
constexpr int exit_input = 2;

std::vector<gkres::LatticePolytope> polytopes_of(const gkres::SystemFile &file)
{
    std::vector<gkres::LatticePolytope> polys;
    for (const auto &f : file.polynomials) {
        polys.push_back(gkres::newton_polytope(f));
    }
    return polys;
}

gkres::LaurentPoly query_polynomial(const std::string &text, std::size_t nvars)
{
    if (text.empty()) {
        return gkres::LaurentPoly::constant(nvars, gkres::Rational(1));
    }
    return gkres::parse_polynomial(text, nvars);
}

gkres::ExponentVector parse_vertex(const std::string &text, std::size_t nvars)
{
    gkres::ExponentVector v;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(part, &used));
            if (part.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(part);
            }
        } catch (const std::logic_error &) {
            throw gkres::ParseError("malformed vertex '" + text + "'");
        }
    }
    if (v.size() != nvars) {
        throw gkres::ParseError("vertex '" + text + "' needs " + std::to_string(nvars) + " coordinates");
    }
    return v;
}

int cmd_check(const gkres::SystemFile &file)
{
    const auto report = gkres::is_generic_position(polytopes_of(file));
    if (report.generic) {
        std::cout << "GENERIC\n";
        return exit_ok;
    }
    std::cout << "NOT_GENERIC witness " << gkres::to_string(*report.witness) << "\n";
    return exit_precondition;
}

int cmd_coefficients(const gkres::SystemFile &file)
{
    const auto complex = gkres::minkowski_sum(polytopes_of(file));
    const auto table = gkres::coefficient_table(complex);
    json rows = json::array();
    for (const auto &[v, c] : table.entries) {
        const auto parts = complex.vertex_summands(v);
        rows.push_back({{"vertex", v},
                        {"summands", parts},
                        {"coefficient", c},
                        {"det", gkres::determinant(parts).str()}});
    }
    std::cout << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::cout << "  " << rows[i].dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
    return exit_ok;
}

int cmd_mixed_volume(const gkres::SystemFile &file, bool verify)
{
    const auto polys = polytopes_of(file);
    const auto v = gkres::mixed_volume(polys);
    gkres::BigInt factorial = 1;
    for (std::size_t k = 2; k <= polys.size(); ++k) {
        factorial *= k;
    }
    std::cout << "V = " << gkres::format_rational(v) << "\n";
    std::cout << "n!V = " << gkres::format_rational(v * gkres::Rational(factorial)) << "\n";
    if (verify) {
        const auto oracle = gkres::mixed_volume_oracle(polys);
        std::cout << "oracle V = " << gkres::format_rational(oracle) << "\n";
        std::cout << (oracle == v ? "AGREE" : "DISAGREE") << "\n";
        return oracle == v ? exit_ok : exit_precondition;
    }
    return exit_ok;
}

int cmd_sum(const gkres::SystemFile &file, const std::string &q_text, bool trace, unsigned jobs)
{
    const gkres::SystemInstance system(file.polynomials);
    const auto q = query_polynomial(q_text, system.nvars());
    if (trace) {
        for (const auto &row : gkres::residue_breakdown(q, system, jobs)) {
            std::cout << "vertex " << gkres::to_string(row.vertex) << " c = " << row.coefficient
                      << " res = " << gkres::format_rational(row.residue) << "\n";
        }
    }
    std::cout << gkres::format_rational(gkres::solution_sum(q, system, jobs)) << "\n";
    return exit_ok;
}

int cmd_count(const gkres::SystemFile &file, unsigned jobs)
{
    const gkres::SystemInstance system(file.polynomials);
    std::cout << gkres::count_solutions(system, jobs) << "\n";
    return exit_ok;
}

int cmd_eliminate(const gkres::SystemFile &file, const std::string &var, const std::string &out, unsigned jobs)
{
    const auto index = file.variable_index(var);
    const gkres::SystemInstance system(file.polynomials);
    const auto e = gkres::eliminant(system, index, jobs);
    if (e.degree == 0) {
        std::cerr << "warning: the system has no solutions in the torus; eliminant is the constant 1\n";
    }
    std::cout << e.format(var) << "\n";
    if (!out.empty()) {
        json doc;
        doc["variable"] = var;
        doc["degree"] = e.degree;
        doc["coefficients"] = json::array();
        for (const auto &c : e.coefficients) {
            doc["coefficients"].push_back(gkres::format_rational(c));
        }
        std::ofstream os(out);
        if (!os) {
            throw gkres::InputError("cannot write '" + out + "'");
        }
        os << doc.dump(2) << "\n";
    }
    return exit_ok;
}

int cmd_residue(const gkres::SystemFile &file, const std::string &vertex, const std::string &q_text)
{
    const std::size_t n = file.variables.size();
    const auto a = parse_vertex(vertex, n);
    const auto q = query_polynomial(q_text, n);
    std::cout << gkres::format_rational(gkres::residue_at_vertex(q, file.polynomials, a)) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Residue sums, mixed volumes and eliminants for Laurent systems in generic position"};
    app.require_subcommand(1);
    unsigned jobs = 1;
    app.add_option("-j,--jobs", jobs, "Worker threads for per-vertex residues")->check(CLI::PositiveNumber);

    std::string path;
    auto add_file = [&path](CLI::App *cmd) { cmd->add_option("file", path, "System file (JSON)")->required(); };

    auto *check = app.add_subcommand("check", "Test generic relative position of the Newton polytopes");
    add_file(check);
    auto *coefficients = app.add_subcommand("coefficients", "Combinatorial coefficients at the vertices");
    add_file(coefficients);
    bool verify = false;
    auto *mvol = app.add_subcommand("mixed-volume", "Mixed volume via the vertex formula");
    add_file(mvol);
    mvol->add_flag("--verify", verify, "Cross-check against the polarization oracle");
    std::string q_text;
    bool trace = false;
    auto *sum = app.add_subcommand("sum", "Sum of q over all solutions");
    add_file(sum);
    sum->add_option("--q", q_text, "Query polynomial as a JSON term list (default 1)");
    sum->add_flag("--trace", trace, "Print the per-vertex residues");
    auto *count = app.add_subcommand("count", "Number of solutions with multiplicity");
    add_file(count);
    std::string var;
    std::string out;
    auto *elim = app.add_subcommand("eliminate", "Univariate eliminant for one coordinate");
    add_file(elim);
    elim->add_option("--var", var, "Variable name")->required();
    elim->add_option("--out", out, "Write the eliminant as JSON");
    std::string vertex;
    auto *residue = app.add_subcommand("residue", "Residue at one vertex of the Minkowski sum");
    add_file(residue);
    residue->add_option("--vertex", vertex, "Vertex as comma-separated integers")->required();
    residue->add_option("--q", q_text, "Query polynomial as a JSON term list (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        const auto file = gkres::read_system_file(path);
        if (check->parsed()) {
            return cmd_check(file);
        }
        if (coefficients->parsed()) {
            return cmd_coefficients(file);
        }
        if (mvol->parsed()) {
            return cmd_mixed_volume(file, verify);
        }
        if (sum->parsed()) {
            return cmd_sum(file, q_text, trace, jobs);
        }
        if (count->parsed()) {
            return cmd_count(file, jobs);
        }
        if (elim->parsed()) {
            return cmd_eliminate(file, var, out, jobs);
        }
        return cmd_residue(file, vertex, q_text);
    } catch (const gkres::NotGeneric &e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << "NOT_GENERIC";
        if (e.witness()) {
            std::cout << " witness " << gkres::to_string(*e.witness());
        }
        std::cout << "\n";
        return exit_precondition;
    } catch (const gkres::InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const gkres::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    }
}
