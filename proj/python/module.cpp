#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gkres/coefficients.hpp>
#include <gkres/engine.hpp>
#include <gkres/errors.hpp>
#include <gkres/expansion.hpp>
#include <gkres/geometry.hpp>
#include <gkres/linalg.hpp>
#include <gkres/oracle.hpp>
#include <gkres/system_file.hpp>

namespace py = pybind11;

namespace
{

using Term = std::pair<py::object, gkres::ExponentVector>;

py::object to_fraction(const gkres::Rational &r)
{
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(gkres::format_rational(r));
}

gkres::Rational from_python(const py::object &value)
{
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return gkres::parse_rational(py::str(fraction(value)).cast<std::string>());
}

gkres::LaurentPoly to_poly(const std::vector<Term> &terms, std::size_t nvars)
{
    gkres::LaurentPoly p(nvars);
    for (const auto &[c, e] : terms) {
        if (e.size() != nvars) {
            throw gkres::DimensionMismatch("exponent of length " + std::to_string(e.size()) + ", expected "
                                           + std::to_string(nvars));
        }
        p.add_term(e, from_python(c));
    }
    return p;
}

std::vector<Term> from_poly(const gkres::LaurentPoly &p)
{
    std::vector<Term> terms;
    for (const auto &[e, c] : p.terms()) {
        terms.emplace_back(to_fraction(c), e);
    }
    return terms;
}

std::vector<gkres::LatticePolytope> to_polytopes(const std::vector<std::vector<gkres::ExponentVector>> &point_sets)
{
    std::vector<gkres::LatticePolytope> polys;
    for (const auto &pts : point_sets) {
        polys.push_back(gkres::LatticePolytope::from_points(pts));
    }
    return polys;
}

class System
{
public:
    System(std::vector<std::vector<Term>> polynomials, std::optional<std::vector<std::string>> variables)
    {
        const std::size_t n = polynomials.size();
        if (variables) {
            variables_ = *variables;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                variables_.push_back("x" + std::to_string(i + 1));
            }
        }
        if (variables_.size() != n) {
            throw gkres::DimensionMismatch("number of variables differs from number of polynomials");
        }
        for (const auto &terms : polynomials) {
            fs_.push_back(to_poly(terms, n));
        }
    }

    explicit System(gkres::SystemFile file) : variables_(std::move(file.variables)), fs_(std::move(file.polynomials)) {}

    const std::vector<std::string> &variables() const { return variables_; }

    std::vector<std::vector<Term>> polynomials() const
    {
        std::vector<std::vector<Term>> out;
        for (const auto &f : fs_) {
            out.push_back(from_poly(f));
        }
        return out;
    }

    std::string to_json() const { return gkres::write_system({variables_, fs_}); }

    py::tuple check() const
    {
        std::vector<gkres::LatticePolytope> polys;
        for (const auto &f : fs_) {
            polys.push_back(gkres::newton_polytope(f));
        }
        const auto report = gkres::is_generic_position(polys);
        return py::make_tuple(report.generic, report.witness ? py::cast(*report.witness) : py::none());
    }

    py::list coefficients()
    {
        const auto &sys = instance();
        py::list rows;
        for (const auto &[v, c] : sys.coefficients().entries) {
            const auto parts = sys.complex().vertex_summands(v);
            py::dict row;
            row["vertex"] = v;
            row["summands"] = parts;
            row["coefficient"] = c;
            row["det"] = py::int_(py::str(gkres::determinant(parts).str()));
            rows.append(row);
        }
        return rows;
    }

    gkres::Exponent count(unsigned jobs) { return gkres::count_solutions(instance(), jobs); }

    py::object solution_sum(const std::optional<std::vector<Term>> &q, unsigned jobs)
    {
        return to_fraction(gkres::solution_sum(query(q), instance(), jobs));
    }

    py::object residue(const gkres::ExponentVector &vertex, const std::optional<std::vector<Term>> &q) const
    {
        return to_fraction(gkres::residue_at_vertex(query(q), fs_, vertex));
    }

    py::list residue_breakdown(const std::optional<std::vector<Term>> &q, unsigned jobs)
    {
        py::list rows;
        for (const auto &r : gkres::residue_breakdown(query(q), instance(), jobs)) {
            py::dict row;
            row["vertex"] = r.vertex;
            row["coefficient"] = r.coefficient;
            row["residue"] = to_fraction(r.residue);
            rows.append(row);
        }
        return rows;
    }

    py::list eliminant(const py::object &variable, unsigned jobs)
    {
        std::size_t index = 0;
        if (py::isinstance<py::str>(variable)) {
            index = gkres::SystemFile{variables_, fs_}.variable_index(variable.cast<std::string>());
        } else {
            index = variable.cast<std::size_t>();
        }
        py::list out;
        for (const auto &c : gkres::eliminant(instance(), index, jobs).coefficients) {
            out.append(to_fraction(c));
        }
        return out;
    }

    py::object mixed_volume() { return to_fraction(gkres::mixed_volume(instance().complex(), instance().coefficients())); }

private:
    const gkres::SystemInstance &instance()
    {
        if (!instance_) {
            instance_.emplace(fs_);
        }
        return *instance_;
    }

    gkres::LaurentPoly query(const std::optional<std::vector<Term>> &q) const
    {
        if (!q) {
            return gkres::LaurentPoly::constant(fs_.size(), gkres::Rational(1));
        }
        return to_poly(*q, fs_.size());
    }

    std::vector<std::string> variables_;
    std::vector<gkres::LaurentPoly> fs_;
    std::optional<gkres::SystemInstance> instance_;
};

} // namespace

PYBIND11_MODULE(gkres, m)
{
    m.doc() = "Exact residue sums, mixed volumes and eliminants for Laurent systems";

    auto error = py::register_exception<gkres::Error>(m, "Error", PyExc_RuntimeError);
    auto input = py::register_exception<gkres::InputError>(m, "InputError", error.ptr());
    auto precondition = py::register_exception<gkres::PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<gkres::ConsistencyError>(m, "ConsistencyError", error.ptr());
    py::register_exception<gkres::ParseError>(m, "ParseError", input.ptr());
    py::register_exception<gkres::DimensionMismatch>(m, "DimensionMismatch", input.ptr());
    py::register_exception<gkres::UnknownVariable>(m, "UnknownVariable", input.ptr());
    py::register_exception<gkres::ZeroPolynomial>(m, "ZeroPolynomial", input.ptr());
    py::register_exception<gkres::OverflowError>(m, "OverflowError", input.ptr());
    py::register_exception<gkres::DegenerateSum>(m, "DegenerateSum", precondition.ptr());
    py::register_exception<gkres::NotGeneric>(m, "NotGeneric", precondition.ptr());
    py::register_exception<gkres::NotCritical>(m, "NotCritical", precondition.ptr());
    py::register_exception<gkres::NoFlags>(m, "NoFlags", precondition.ptr());
    py::register_exception<gkres::NotVertex>(m, "NotVertex", precondition.ptr());
    py::register_exception<gkres::NotPointed>(m, "NotPointed", precondition.ptr());

    py::class_<System>(m, "System")
        .def(py::init<std::vector<std::vector<Term>>, std::optional<std::vector<std::string>>>(), py::arg("polynomials"),
             py::arg("variables") = py::none())
        .def_property_readonly("variables", &System::variables)
        .def_property_readonly("polynomials", &System::polynomials)
        .def("to_json", &System::to_json)
        .def("check", &System::check)
        .def("coefficients", &System::coefficients)
        .def("count", &System::count, py::arg("jobs") = 1)
        .def("solution_sum", &System::solution_sum, py::arg("q") = py::none(), py::arg("jobs") = 1)
        .def("residue", &System::residue, py::arg("vertex"), py::arg("q") = py::none())
        .def("residue_breakdown", &System::residue_breakdown, py::arg("q") = py::none(), py::arg("jobs") = 1)
        .def("eliminant", &System::eliminant, py::arg("variable"), py::arg("jobs") = 1)
        .def("mixed_volume", &System::mixed_volume);

    m.def("load_system", [](const std::string &path) { return System(gkres::read_system_file(path)); }, py::arg("path"));
    m.def("parse_system", [](const std::string &text) { return System(gkres::parse_system(text)); }, py::arg("text"));

    m.def("newton_polytope",
          [](const std::vector<gkres::ExponentVector> &points) { return gkres::extreme_points(points); },
          py::arg("points"));
    m.def("volume", [](const std::vector<gkres::ExponentVector> &points) {
        return to_fraction(gkres::volume(gkres::LatticePolytope::from_points(points)));
    }, py::arg("points"));
    m.def("mixed_volume", [](const std::vector<std::vector<gkres::ExponentVector>> &point_sets) {
        return to_fraction(gkres::mixed_volume(to_polytopes(point_sets)));
    }, py::arg("point_sets"));
    m.def("mixed_volume_oracle", [](const std::vector<std::vector<gkres::ExponentVector>> &point_sets) {
        return to_fraction(gkres::mixed_volume_oracle(to_polytopes(point_sets)));
    }, py::arg("point_sets"));
    m.def("newton_to_elementary", [](const std::vector<py::object> &power_sums) {
        std::vector<gkres::Rational> s;
        for (const auto &x : power_sums) {
            s.push_back(from_python(x));
        }
        py::list out;
        for (const auto &sigma : gkres::newton_to_elementary(s)) {
            out.append(to_fraction(sigma));
        }
        return out;
    }, py::arg("power_sums"));
}
