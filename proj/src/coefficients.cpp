#include <gkres/coefficients.hpp>

#include <gkres/errors.hpp>
#include <gkres/linalg.hpp>

namespace gkres
{

namespace
{

// Faces usable at level i of an admissible flag.
bool admissible_at(const SumFace &face, std::size_t level)
{
    for (std::size_t k = 0; k < face.summands.size(); ++k) {
        const bool positive = face.summands[k].dim > 0;
        if (positive != (k < level)) {
            return false;
        }
    }
    return true;
}

void extend(const SumComplex &complex, std::vector<std::size_t> &chain, std::vector<Flag> &out)
{
    const std::size_t n = complex.ambient_dim();
    if (chain.size() == n + 1) {
        out.push_back({chain, flag_sign(complex, chain)});
        return;
    }
    const std::size_t level = chain.size();
    for (auto next : complex.faces()[chain.back()].up) {
        if (admissible_at(complex.faces()[next], level)) {
            chain.push_back(next);
            extend(complex, chain, out);
            chain.pop_back();
        }
    }
}

} // namespace

int flag_sign(const SumComplex &complex, std::span<const std::size_t> chain)
{
    const std::size_t n = complex.ambient_dim();
    if (chain.size() != n + 1) {
        throw InputError("a complete flag has n + 1 faces");
    }
    const auto &faces = complex.faces();
    const auto &verts = complex.vertices();
    const auto &origin = verts[faces[chain[0]].vertices.front()];
    // |G^i| * (barycenter - A) is an integer vector with the same direction.
    std::vector<ExponentVector> frame;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto &members = faces[chain[i]].vertices;
        ExponentVector v = scaled(origin, -static_cast<Exponent>(members.size()));
        for (auto idx : members) {
            v = v + verts[idx];
        }
        frame.push_back(std::move(v));
    }
    const BigInt det = determinant(frame);
    if (det == 0) {
        throw ConsistencyError("degenerate flag frame");
    }
    return det > 0 ? 1 : -1;
}

std::vector<Flag> admissible_flags(const SumComplex &complex, const ExponentVector &a)
{
    const auto index = complex.vertex_index(a);
    if (!is_critical(complex, index)) {
        throw NotCritical(to_string(a) + " is not a critical vertex");
    }
    std::vector<Flag> flags;
    std::vector<std::size_t> chain{index};
    extend(complex, chain, flags);
    return flags;
}

int combinatorial_coefficient(const SumComplex &complex, const ExponentVector &a)
{
    int c = 0;
    for (const auto &f : admissible_flags(complex, a)) {
        c += f.sign;
    }
    return c;
}

int CoefficientTable::at(const ExponentVector &a) const
{
    auto it = entries.find(a);
    if (it == entries.end()) {
        throw NotVertex(to_string(a) + " is not a vertex of the Minkowski sum");
    }
    return it->second;
}

CoefficientTable coefficient_table(const SumComplex &complex)
{
    const auto report = is_generic_position(complex);
    if (!report.generic) {
        throw NotGeneric("polytopes are not in generic relative position; witness " + to_string(*report.witness),
                         report.witness);
    }
    for (std::size_t i = 0; i < complex.summands().size(); ++i) {
        if (complex.summands()[i].dim() == 0) {
            throw NoFlags("summand " + std::to_string(i + 1) + " is a single point; no admissible flag exists");
        }
    }
    CoefficientTable table;
    table.polytope_order = complex.summands();
    for (const auto &v : complex.vertices()) {
        table.entries.emplace(v, combinatorial_coefficient(complex, v));
    }
    return table;
}

} // namespace gkres
