#include <gkres/engine.hpp>

#include <algorithm>
#include <limits>
#include <thread>

#include <gkres/errors.hpp>
#include <gkres/expansion.hpp>
#include <gkres/linalg.hpp>

namespace gkres
{

namespace
{

std::vector<LatticePolytope> newton_polytopes(const std::vector<LaurentPoly> &fs)
{
    const std::size_t n = fs.size();
    if (n == 0) {
        throw DimensionMismatch("empty system");
    }
    std::vector<LatticePolytope> polys;
    for (const auto &f : fs) {
        if (f.nvars() != n) {
            throw DimensionMismatch("a system of " + std::to_string(n) + " equations needs " + std::to_string(n)
                                    + " variables");
        }
        polys.push_back(newton_polytope(f));
    }
    return polys;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) {
                    body(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

Rational sign_power(std::size_t n)
{
    return n % 2 == 0 ? Rational(1) : Rational(-1);
}

// Residues of every g in gs at one vertex, sharing a single truncated expansion.
std::vector<Rational> vertex_residues(std::span<const LaurentPoly> gs, const SystemInstance &system,
                                      const ExponentVector &vertex)
{
    const ExponentVector target(system.nvars(), -1);
    VertexExpansion expansion(system.product(), vertex);
    Exponent level = 0;
    for (const auto &g : gs) {
        level = std::max(level, expansion.required_level(g, target));
    }
    expansion.ensure_level(level);
    std::vector<Rational> out;
    out.reserve(gs.size());
    for (const auto &g : gs) {
        out.push_back(expansion.coefficient(g, target));
    }
    return out;
}

} // namespace

SystemInstance::SystemInstance(std::vector<LaurentPoly> fs)
    : fs_(std::move(fs)), complex_(minkowski_sum(newton_polytopes(fs_))), coefficients_(coefficient_table(complex_)),
      product_(gkres::product(fs_)), jacobian_(gkres::jacobian(fs_))
{
}

std::vector<VertexResidue> residue_breakdown(const LaurentPoly &q, const SystemInstance &system, unsigned jobs)
{
    const auto &vertices = system.complex().vertices();
    const std::vector<LaurentPoly> gs{q * system.jacobian()};
    std::vector<VertexResidue> rows(vertices.size());
    parallel_for(vertices.size(), jobs, [&](std::size_t i) {
        rows[i].vertex = vertices[i];
        rows[i].summands = system.complex().vertex_summands(vertices[i]);
        rows[i].coefficient = system.coefficients().at(vertices[i]);
        rows[i].residue = vertex_residues(gs, system, vertices[i]).front();
    });
    return rows;
}

std::vector<Rational> solution_sums(std::span<const LaurentPoly> qs, const SystemInstance &system, unsigned jobs)
{
    std::vector<LaurentPoly> gs;
    gs.reserve(qs.size());
    for (const auto &q : qs) {
        if (q.nvars() != system.nvars()) {
            throw DimensionMismatch("query polynomial has the wrong number of variables");
        }
        gs.push_back(q * system.jacobian());
    }
    std::vector<ExponentVector> active;
    for (const auto &[v, c] : system.coefficients().entries) {
        if (c != 0) {
            active.push_back(v);
        }
    }
    std::vector<std::vector<Rational>> per_vertex(active.size());
    parallel_for(active.size(), jobs,
                 [&](std::size_t i) { per_vertex[i] = vertex_residues(gs, system, active[i]); });

    std::vector<Rational> sums(qs.size(), Rational(0));
    for (std::size_t i = 0; i < active.size(); ++i) {
        const int c = system.coefficients().at(active[i]);
        for (std::size_t k = 0; k < qs.size(); ++k) {
            sums[k] += c * per_vertex[i][k];
        }
    }
    const Rational sign = sign_power(system.nvars());
    for (auto &s : sums) {
        s *= sign;
    }
    return sums;
}

Rational solution_sum(const LaurentPoly &q, const SystemInstance &system, unsigned jobs)
{
    return solution_sums(std::span<const LaurentPoly>(&q, 1), system, jobs).front();
}

Exponent count_solutions(const SystemInstance &system, unsigned jobs)
{
    const Rational n = solution_sum(LaurentPoly::constant(system.nvars(), Rational(1)), system, jobs);
    if (!is_integer(n) || n < 0) {
        throw ConsistencyError("solution count " + format_rational(n) + " is not a non-negative integer");
    }
    const BigInt count = numerator(n);
    if (count > std::numeric_limits<Exponent>::max()) {
        throw OverflowError("solution count does not fit in 64 bits");
    }
    return static_cast<Exponent>(count);
}

Rational mixed_volume(const SumComplex &complex, const CoefficientTable &table)
{
    const std::size_t n = complex.ambient_dim();
    BigInt total = 0;
    for (const auto &[v, c] : table.entries) {
        if (c != 0) {
            total += c * determinant(complex.vertex_summands(v));
        }
    }
    BigInt factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        factorial *= k;
    }
    return sign_power(n) * Rational(total, factorial);
}

Rational mixed_volume(std::vector<LatticePolytope> polys)
{
    const auto complex = minkowski_sum(std::move(polys));
    return mixed_volume(complex, coefficient_table(complex));
}

std::vector<Rational> power_sums(const SystemInstance &system, std::size_t variable, std::size_t count, unsigned jobs)
{
    if (variable >= system.nvars()) {
        throw UnknownVariable("variable index " + std::to_string(variable) + " out of range");
    }
    const auto t = LaurentPoly::variable(system.nvars(), variable);
    std::vector<LaurentPoly> qs;
    qs.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        qs.push_back(t.pow(static_cast<unsigned>(k)));
    }
    return solution_sums(qs, system, jobs);
}

std::vector<Rational> newton_to_elementary(std::span<const Rational> s)
{
    // k sigma_k = sum_{j=1..k} (-1)^{j-1} sigma_{k-j} s_j, sigma_0 = 1
    std::vector<Rational> sigma(s.size() + 1);
    sigma[0] = 1;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            const Rational term = sigma[k - j] * s[j - 1];
            acc += (j % 2 == 1) ? term : Rational(-term);
        }
        sigma[k] = acc / k;
    }
    sigma.erase(sigma.begin());
    return sigma;
}

std::string EliminantPoly::format(const std::string &name) const
{
    LaurentPoly p(1);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        p.add_term(ExponentVector{static_cast<Exponent>(degree - k)}, coefficients[k]);
    }
    const std::string names[] = {name};
    return p.format(names);
}

EliminantPoly eliminant(const SystemInstance &system, std::size_t variable, unsigned jobs)
{
    if (variable >= system.nvars()) {
        throw UnknownVariable("variable index " + std::to_string(variable) + " out of range");
    }
    const auto n = static_cast<std::size_t>(count_solutions(system, jobs));
    EliminantPoly e;
    e.variable = variable;
    e.degree = n;
    e.coefficients.push_back(Rational(1));
    if (n == 0) {
        return e;
    }
    const auto sigma = newton_to_elementary(power_sums(system, variable, n, jobs));
    for (std::size_t k = 0; k < n; ++k) {
        e.coefficients.push_back(k % 2 == 0 ? Rational(-sigma[k]) : sigma[k]);
    }
    if (e.coefficients.back() == 0) {
        throw ConsistencyError("eliminant has a zero constant term although all solutions lie in the torus");
    }
    return e;
}

} // namespace gkres
