#include "toric_ic/ic_stalks.hpp"

#include "toric_ic/error.hpp"

#include <algorithm>

namespace toric {

namespace {

void require_supported(const FaceLattice& lattice) {
    if (lattice.shape() == Shape::other)
        throw Error(Errc::unsupported_shape,
                    "IC stalks need a compact polytope or a cone with a vertex");
}

void require_cone(const FaceLattice& lattice) {
    if (lattice.shape() != Shape::cone_with_vertex || lattice.apex() < 0)
        throw Error(Errc::unsupported_shape, "expected a cone with a vertex");
}

}  // namespace

std::vector<TatePoly> local_ic_polynomials(const FaceLattice& lattice) {
    require_supported(lattice);
    const auto& faces = lattice.faces();
    const int top_dim = lattice.face(FaceLattice::top()).dim;

    // Every face above σ has larger dim, so descending dim order suffices.
    std::vector<int> order(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return faces[a].dim > faces[b].dim; });

    std::vector<TatePoly> m(faces.size());
    const TatePoly one_minus_t = TatePoly(std::vector<Integer>{1, -1});
    for (int s : order) {
        const Face& sigma = faces[s];
        if (s == FaceLattice::top()) {
            m[s] = 1;
            continue;
        }
        TatePoly sum;
        for (const auto& tau : faces)
            if (tau.id != s && lattice.leq(s, tau.id))
                sum += TatePoly::t_minus_one_pow(tau.dim - sigma.dim - 1) * m[tau.id];
        const int c = top_dim - sigma.dim;
        m[s] = truncate_below(one_minus_t * sum, Rat(c, 2));

        const TatePoly& r = m[s];
        if (r.coeff(0) != 1 || !r.has_nonnegative_coeffs() || 2 * r.degree() >= c)
            throw Error(Errc::invariant_violation,
                        "stalk polynomial " + r.to_string() + " at face " + std::to_string(s) +
                            " violates m(0)=1, positivity or deg < c/2");
    }
    return m;
}

TatePoly local_ic_polynomial(const FaceLattice& lattice, int face) {
    if (face < 0 || face >= static_cast<int>(lattice.size()))
        throw Error(Errc::not_a_face, "face id " + std::to_string(face) + " is not in the lattice");
    return local_ic_polynomials(lattice)[face];
}

std::vector<StalkEntry> stalk_table(const FaceLattice& lattice) {
    const auto m = local_ic_polynomials(lattice);
    std::vector<StalkEntry> out;
    for (int id : lattice.report_order())
        for (int k = 0; k <= m[id].degree(); ++k)
            if (m[id].coeff(k) != 0) out.push_back({id, 2 * k, m[id].coeff(k), -k});
    return out;
}

TatePoly global_ih_class(const FaceLattice& lattice) {
    if (lattice.shape() != Shape::compact)
        throw Error(Errc::unbounded, "global IH class needs a compact polytope");
    const auto m = local_ic_polynomials(lattice);
    TatePoly h;
    for (const auto& f : lattice.faces()) h += TatePoly::t_minus_one_pow(f.dim) * m[f.id];
    const int d = lattice.face(FaceLattice::top()).dim;
    if (!h.is_palindromic(d) || !h.has_nonnegative_coeffs() || !h.is_unimodal(d))
        throw Error(Errc::invariant_violation,
                    "IH class " + h.to_string() + " is not a nonnegative unimodal palindrome");
    return h;
}

std::vector<Integer> ih_betti_numbers(const FaceLattice& lattice) {
    const TatePoly h = global_ih_class(lattice);
    const int d = lattice.face(FaceLattice::top()).dim;
    std::vector<Integer> b(2 * d + 1, Integer(0));
    for (int k = 0; k <= d; ++k) b[2 * k] = h.coeff(k);
    return b;
}

PuncturedConeClasses punctured_cone_classes(const FaceLattice& lattice) {
    require_cone(lattice);
    const auto m = local_ic_polynomials(lattice);
    const int apex = lattice.apex();
    PuncturedConeClasses out;
    TatePoly sum;
    for (const auto& f : lattice.faces()) {
        if (f.id == apex) continue;
        sum += TatePoly::t_minus_one_pow(f.dim - 1) * m[f.id];
        out.ihc += TatePoly::t_minus_one_pow(f.dim) * m[f.id];
    }
    out.ih = TatePoly(std::vector<Integer>{1, -1}) * sum;
    if (!(out.ih + out.ihc).is_zero())
        throw Error(Errc::invariant_violation, "punctured cone classes do not cancel");
    return out;
}

TatePoly exceptional_divisor_class(const FaceLattice& cone_lattice) {
    require_cone(cone_lattice);
    const auto m = local_ic_polynomials(cone_lattice);
    const int apex = cone_lattice.apex();
    TatePoly h;
    for (const auto& f : cone_lattice.faces())
        if (f.id != apex) h += TatePoly::t_minus_one_pow(f.dim - 1) * m[f.id];
    return h;
}

TatePoly primitive_parts(const TatePoly& h, int d) {
    if (d < 0) throw Error(Errc::invalid_argument, "negative dimension");
    if (!h.is_palindromic(d) || !h.has_nonnegative_coeffs())
        throw Error(Errc::not_palindromic,
                    h.to_string() + " violates Poincare duality in degree " + std::to_string(d));
    return truncate_below(TatePoly(std::vector<Integer>{1, -1}) * h, Rat(d + 1, 2));
}

SummandTable decomposition_summands(const TatePoly& figure_ih, int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "cone dimension must be positive");
    const TatePoly g = primitive_parts(figure_ih, n - 1);
    SummandTable table;
    for (int k = 0; k <= n - 1; ++k) {
        const Integer r = figure_ih.coeff(k) - g.coeff(k);
        if (r < 0) throw Error(Errc::invariant_violation, "negative summand rank");
        if (r != 0) table.push_back({2 * k, r, -k});
    }
    // Hard Lefschetz: rank M_0^{n-j} == rank M_0^{n+j}.
    auto rank_at = [&](int j) -> Integer {
        for (const auto& e : table)
            if (e.degree == j) return e.rank;
        return 0;
    };
    for (int j = 1; j <= n; ++j)
        if (rank_at(n - j) != rank_at(n + j))
            throw Error(Errc::invariant_violation, "summand ranks are not Lefschetz-symmetric");
    return table;
}

SummandTable decomposition_summands(const FaceLattice& cone_lattice) {
    return decomposition_summands(exceptional_divisor_class(cone_lattice), cone_lattice.ambient_dim());
}

}  // namespace toric
