#include "toric_ic/lattice.hpp"

#include "toric_ic/error.hpp"

#include <algorithm>
#include <utility>

namespace toric {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(Errc::dimension_mismatch,
                    "vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<int> rref(RatMatrix& m, int ncols) {
    std::vector<int> pivots;
    int row = 0;
    const int nrows = static_cast<int>(m.size());
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int sel = -1;
        for (int r = row; r < nrows; ++r)
            if (m[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        const Rat inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

struct ExtGcd {
    Integer g, x, y;  // x*a + y*b = g >= 0
};

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

void normalize_sign(LatticeVector& v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

}  // namespace

RatVector to_rat(const LatticeVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

LatticeVector make_lattice_vector(std::initializer_list<long> coords) {
    LatticeVector v;
    for (long c : coords) v.emplace_back(c);
    return v;
}

RatVector make_rat_vector(std::initializer_list<long> coords) {
    RatVector v;
    for (long c : coords) v.emplace_back(c);
    return v;
}

Rat pairing(const RatVector& u, const LatticeVector& v) {
    require_same_length(u.size(), v.size());
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
    require_same_length(a.size(), b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
    require_same_length(a.size(), b.size());
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    require_same_length(a.size(), b.size());
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVector scale(const Rat& s, const RatVector& a) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

bool is_integral(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integral(x); });
}

LatticeVector to_lattice(const RatVector& v) {
    LatticeVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!is_integral(x)) throw Error(Errc::non_lattice, "coordinate " + to_string(x) + " is not integral");
        out.push_back(boost::multiprecision::numerator(x));
    }
    return out;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

LatticeVector primitive_vector(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v;
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

LatticeVector primitive_vector(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, Integer(boost::multiprecision::denominator(x)));
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    return primitive_vector(out);
}

int rank(RatMatrix rows) {
    if (rows.empty()) return 0;
    const int ncols = static_cast<int>(rows.front().size());
    return static_cast<int>(rref(rows, ncols).size());
}

std::vector<RatVector> nullspace(const RatMatrix& rows, int ncols) {
    RatMatrix m = rows;
    const auto pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(ncols, Rat(0));
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& rows, const RatVector& rhs, int ncols) {
    require_same_length(rows.size(), rhs.size());
    RatMatrix m = rows;
    for (std::size_t r = 0; r < m.size(); ++r) {
        require_same_length(m[r].size(), static_cast<std::size_t>(ncols));
        m[r].push_back(rhs[r]);
    }
    const auto pivots = rref(m, ncols + 1);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    RatVector x(ncols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][ncols];
    return x;
}

Integer determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a;
    for (const auto& row : m) {
        require_same_length(row.size(), n);
        a.push_back(to_rat(row));
    }
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t r = c; r < n; ++r)
            if (a[r][c] != 0) { sel = r; break; }
        if (sel == n) return 0;
        if (sel != c) { std::swap(a[sel], a[c]); det = -det; }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return boost::multiprecision::numerator(det);
}

ColumnHermite column_hermite(const IntMatrix& a, int ncols) {
    ColumnHermite out;
    out.h = a;
    out.u = identity_matrix(ncols);
    auto& h = out.h;
    auto& u = out.u;
    // Replaces columns (p, c) by (x·p + y·c, -b/g·p + a/g·c); determinant 1.
    auto combine = [&](int p, int c, const Integer& x, const Integer& y, const Integer& s, const Integer& t) {
        auto apply_to = [&](IntMatrix& m) {
            for (auto& row : m) {
                Integer cp = row[p], cc = row[c];
                row[p] = x * cp + y * cc;
                row[c] = s * cp + t * cc;
            }
        };
        apply_to(h);
        apply_to(u);
    };
    int p = 0;
    for (int i = 0; i < static_cast<int>(h.size()) && p < ncols; ++i) {
        require_same_length(h[i].size(), static_cast<std::size_t>(ncols));
        for (int c = p + 1; c < ncols; ++c) {
            if (h[i][c] == 0) continue;
            const Integer av = h[i][p], bv = h[i][c];
            const auto e = ext_gcd(av, bv);
            combine(p, c, e.x, e.y, Integer(-bv / e.g), Integer(av / e.g));
        }
        if (h[i][p] == 0) continue;
        if (h[i][p] < 0) {
            for (auto& row : h) row[p] = -row[p];
            for (auto& row : u) row[p] = -row[p];
        }
        out.pivot_rows.push_back(i);
        ++p;
    }
    out.rank = p;
    return out;
}

std::vector<LatticeVector> integer_kernel(const IntMatrix& a, int ncols) {
    const auto ch = column_hermite(a, ncols);
    std::vector<LatticeVector> basis;
    for (int j = ch.rank; j < ncols; ++j) {
        LatticeVector v(ncols);
        for (int i = 0; i < ncols; ++i) v[i] = ch.u[i][j];
        normalize_sign(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Integer rows spanning the orthogonal complement of span(directions).
IntMatrix complement_rows(std::span<const RatVector> directions, int n) {
    RatMatrix d(directions.begin(), directions.end());
    IntMatrix rows;
    if (d.empty()) {
        for (int i = 0; i < n; ++i) {
            LatticeVector e(n, Integer(0));
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        return rows;
    }
    for (const auto& v : nullspace(d, n)) rows.push_back(primitive_vector(v));
    return rows;
}

}  // namespace

std::vector<LatticeVector> saturated_basis(std::span<const RatVector> directions, int n) {
    for (const auto& d : directions) require_same_length(d.size(), static_cast<std::size_t>(n));
    return integer_kernel(complement_rows(directions, n), n);
}

LatticeVector AffineLatticeFrame::point(const std::vector<Integer>& coeffs) const {
    require_same_length(coeffs.size(), basis.size());
    LatticeVector p = base;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += coeffs[j] * basis[j][i];
    return p;
}

std::optional<RatVector> AffineLatticeFrame::coordinates(const RatVector& point) const {
    const int n = ambient_dim();
    require_same_length(point.size(), static_cast<std::size_t>(n));
    RatMatrix rows(n, RatVector(basis.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) rows[i][j] = basis[j][i];
    return solve(rows, sub(point, to_rat(base)), dim());
}

AffineLatticeFrame affine_frame(std::span<const RatVector> points) {
    if (points.empty()) throw Error(Errc::invalid_argument, "affine_frame needs at least one point");
    const int n = static_cast<int>(points.front().size());
    std::vector<RatVector> dirs;
    for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], points.front()));

    const IntMatrix comp = complement_rows(dirs, n);
    const auto ch = column_hermite(comp, n);

    AffineLatticeFrame frame;
    for (int j = ch.rank; j < n; ++j) {
        LatticeVector v(n);
        for (int i = 0; i < n; ++i) v[i] = ch.u[i][j];
        normalize_sign(v);
        frame.basis.push_back(std::move(v));
    }

    if (is_integral(points.front())) {
        frame.base = to_lattice(points.front());
        return frame;
    }
    // Solve comp · x = comp · p0 over Z through x = U y, H y = b.
    RatVector b(comp.size());
    for (std::size_t r = 0; r < comp.size(); ++r) b[r] = pairing(points.front(), comp[r]);
    std::vector<Integer> y(ch.rank);
    for (int j = 0; j < ch.rank; ++j) {
        const int row = ch.pivot_rows[j];
        Rat acc = b[row];
        for (int k = 0; k < j; ++k) acc -= ch.h[row][k] * y[k];
        acc /= Rat(ch.h[row][j]);
        if (!is_integral(acc))
            throw Error(Errc::non_integral_span, "affine span contains no lattice point");
        y[j] = boost::multiprecision::numerator(acc);
    }
    frame.base.assign(n, Integer(0));
    for (int j = 0; j < ch.rank; ++j)
        for (int i = 0; i < n; ++i) frame.base[i] += ch.u[i][j] * y[j];
    return frame;
}

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, LatticeVector(n, Integer(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool is_unimodular(const IntMatrix& u) {
    for (const auto& row : u)
        if (row.size() != u.size()) return false;
    const Integer d = determinant(u);
    return d == 1 || d == -1;
}

RatVector apply(const IntMatrix& u, const RatVector& x) {
    RatVector out(u.size(), Rat(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        require_same_length(u[i].size(), x.size());
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += u[i][j] * x[j];
    }
    return out;
}

LatticeVector apply(const IntMatrix& u, const LatticeVector& x) {
    LatticeVector out(u.size(), Integer(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        require_same_length(u[i].size(), x.size());
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += u[i][j] * x[j];
    }
    return out;
}

}  // namespace toric
