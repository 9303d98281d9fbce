#include <rsumset/nullstellensatz.hpp>

#include <algorithm>
#include <vector>

namespace rsumset {

namespace {

void require_grids(const BiPoly& f, const FpSet& sx, const FpSet& sy) {
    if (!(f.modulus() == sx.modulus()) || !(f.modulus() == sy.modulus()))
        throw Error(ErrorCode::ModulusMismatch, "polynomial and grid sets use different moduli");
    if (sx.empty() || sy.empty()) throw Error(ErrorCode::EmptySet, "grid sets must be nonempty");
}

// Dense scratch table sized to the input; entries never grow past it since
// reduction only lowers exponents.
struct Table {
    std::size_t nx, ny;
    std::vector<u32> v;

    Table(std::size_t nx_, std::size_t ny_) : nx(nx_), ny(ny_), v(nx_ * ny_, 0) {}
    u32& at(std::size_t i, std::size_t j) { return v[i * ny + j]; }

    BiPoly to_poly(const Prime& p) const {
        BiPoly out(p);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j)
                if (v[i * ny + j]) out.set(i, j, v[i * ny + j]);
        return out;
    }
};

} // namespace

std::optional<std::pair<u32, u32>> find_nonvanishing_point(const BiPoly& f, const FpSet& sx, const FpSet& sy) {
    require_grids(f, sx, sy);
    for (u32 a : sx)
        for (u32 b : sy)
            if (f.evaluate(a, b) != 0) return std::pair{a, b};
    return std::nullopt;
}

bool vanishes_on_grid(const BiPoly& f, const FpSet& sx, const FpSet& sy) {
    return !find_nonvanishing_point(f, sx, sy).has_value();
}

CnWitness cn_decompose(const BiPoly& f, const FpSet& sx, const FpSet& sy) {
    require_grids(f, sx, sy);
    const Prime& prime = f.modulus();
    const u32 p = prime.value();
    UniPoly g_a = vanishing_polynomial(sx);
    UniPoly g_b = vanishing_polynomial(sy);
    const std::size_t m = sx.size(), n = sy.size();
    const int deg_f = f.total_degree();

    const std::size_t nx = static_cast<std::size_t>(std::max(f.x_degree(), 0)) + 1;
    const std::size_t ny = static_cast<std::size_t>(std::max(f.y_degree(), 0)) + 1;
    Table rem(nx, ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) rem.at(i, j) = f.coeff(i, j);

    Table ha(nx > m ? nx - m : 0, ny);
    // Replace x^a (a >= m) by x^(a-m) * (x^m - g_a(x)), highest exponent first.
    for (std::size_t a = nx; a-- > m;) {
        for (std::size_t b = 0; b < ny; ++b) {
            const u32 c = rem.at(a, b);
            if (c == 0) continue;
            ha.at(a - m, b) = add_mod(ha.at(a - m, b), c, p);
            for (std::size_t t = 0; t <= m; ++t)
                rem.at(a - m + t, b) = sub_mod(rem.at(a - m + t, b), mul_mod(c, g_a.coeff(t), p), p);
        }
    }

    const std::size_t rx = std::min(nx, m);
    Table hb(rx, ny > n ? ny - n : 0);
    for (std::size_t b = ny; b-- > n;) {
        for (std::size_t a = 0; a < rx; ++a) {
            const u32 c = rem.at(a, b);
            if (c == 0) continue;
            hb.at(a, b - n) = add_mod(hb.at(a, b - n), c, p);
            for (std::size_t t = 0; t <= n; ++t)
                rem.at(a, b - n + t) = sub_mod(rem.at(a, b - n + t), mul_mod(c, g_b.coeff(t), p), p);
        }
    }

    // A remainder with x-degree < |Sx| and y-degree < |Sy| that vanishes on
    // the whole grid is identically zero.
    for (std::size_t a = 0; a < nx; ++a)
        for (std::size_t b = 0; b < ny; ++b)
            if (rem.at(a, b) != 0) {
                std::string where;
                if (auto pt = find_nonvanishing_point(f, sx, sy))
                    where = "; f(" + std::to_string(pt->first) + ", " + std::to_string(pt->second) + ") != 0";
                throw Error(ErrorCode::NotVanishing, "nonzero remainder at x^" + std::to_string(a) + " y^" +
                                                         std::to_string(b) + where);
            }

    return CnWitness{ha.to_poly(prime),
                     hb.to_poly(prime),
                     std::move(g_a),
                     std::move(g_b),
                     deg_f - static_cast<int>(m),
                     deg_f - static_cast<int>(n)};
}

WitnessVerdict verify_witness(const BiPoly& f, const CnWitness& w) {
    const BiPoly rebuilt = w.h_a * BiPoly::in_x(w.g_a) + w.h_b * BiPoly::in_y(w.g_b);
    const int deg_f = f.total_degree();
    const std::size_t nx = static_cast<std::size_t>(std::max({f.x_degree(), rebuilt.x_degree(), 0})) + 1;
    const std::size_t ny = static_cast<std::size_t>(std::max({f.y_degree(), rebuilt.y_degree(), 0})) + 1;
    for (std::size_t d = 0; d < nx + ny; ++d)
        for (std::size_t i = 0; i <= d && i < nx; ++i) {
            const std::size_t j = d - i;
            if (j >= ny) continue;
            if (f.coeff(i, j) != rebuilt.coeff(i, j))
                return {false, "coefficient of x^" + std::to_string(i) + " y^" + std::to_string(j) + ": f has " +
                                   std::to_string(f.coeff(i, j)) + ", h_A*g_A + h_B*g_B has " +
                                   std::to_string(rebuilt.coeff(i, j))};
        }
    const int bound_a = deg_f - w.g_a.degree();
    const int bound_b = deg_f - w.g_b.degree();
    if (!w.h_a.is_zero() && w.h_a.total_degree() > bound_a)
        return {false, "deg h_A = " + std::to_string(w.h_a.total_degree()) + " exceeds deg f - deg g_A = " +
                           std::to_string(bound_a)};
    if (!w.h_b.is_zero() && w.h_b.total_degree() > bound_b)
        return {false, "deg h_B = " + std::to_string(w.h_b.total_degree()) + " exceeds deg f - deg g_B = " +
                           std::to_string(bound_b)};
    return {true, {}};
}

} // namespace rsumset
